#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forge/dynamics.hpp"
#include "forge/errors.hpp"
#include "forge/frobenius.hpp"
#include "reports.hpp"
#include "spec_file.hpp"

namespace py = pybind11;
using namespace forge;

namespace {

std::vector<std::vector<std::string>> to_strings(const IntMatrix& m) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : m) {
        auto& r = out.emplace_back();
        for (const auto& x : row) r.push_back(x.get_str());
    }
    return out;
}

IntMatrix from_ints(const std::vector<std::vector<py::int_>>& rows) {
    IntMatrix m;
    for (const auto& row : rows) {
        auto& r = m.emplace_back();
        for (const auto& x : row) r.emplace_back(py::str(x).cast<std::string>());
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_forge, m) {
    static py::object error_type;
    error_type = py::module_::import("frobenius_forge.errors").attr("ForgeError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetObject(error_type.ptr(), py::make_tuple(to_string(e.kind()), e.detail(),
                                                              cli::exit_code_for(e.kind())).ptr());
        }
    });

    m.def("run",
          [](const std::string& command, const std::string& spec_text, const std::string& path, unsigned e,
             unsigned budget, std::optional<std::int64_t> q_max, const std::string& tolerance,
             std::optional<std::string> cache_dir, std::optional<std::vector<std::int64_t>> c) {
              auto spec = cli::parse_spec(spec_text, path);
              cli::Options opt;
              opt.e = e;
              opt.budget = budget;
              opt.q_max = q_max;
              opt.tolerance = parse_rational(tolerance);
              opt.cache_dir = cache_dir;
              if (c) opt.c = Exponent(c->begin(), c->end());
              auto report = cli::run_command(command, spec, opt);
              return py::make_tuple(cli::render_machine(report.data), report.exit_code);
          },
          py::arg("command"), py::arg("spec_text"), py::arg("path") = "<string>", py::arg("e") = 1,
          py::arg("budget") = 16, py::arg("q_max") = py::none(), py::arg("tolerance") = "1/1000000000",
          py::arg("cache_dir") = py::none(), py::arg("c") = py::none());

    m.def("digest", &cli::sha256_hex, py::arg("text"));

    m.def("multiplicity_matrix", [](const std::string& spec_text) {
        auto spec = cli::parse_spec(spec_text, "<string>");
        if (!spec.diagonal) fail(ErrorKind::Input, "multiplicity_matrix needs a diagonal spec");
        auto cm = multiplicity_matrix(*spec.diagonal);
        std::vector<std::string> labels;
        for (const auto& c : cm.classes) labels.push_back(describe_character(c.degree));
        return py::make_tuple(labels, to_strings(cm.matrix.entries));
    });

    m.def("primitivity", [](const std::vector<std::vector<py::int_>>& rows) { return primitivity(from_ints(rows)); });
    m.def("wielandt_bound", &wielandt_bound);
    m.def("matrix_power", [](const std::vector<std::vector<py::int_>>& rows, unsigned e) {
        return to_strings(power(from_ints(rows), e));
    });
}
