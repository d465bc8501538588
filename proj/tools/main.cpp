#include <CLI11.hpp>

#include <iostream>

#include "forge/errors.hpp"
#include "reports.hpp"

int main(int argc, char** argv) {
    using namespace forge;
    CLI::App app{"Frobenius pushforward decompositions, multiplicity dynamics and differential-operator checks"};
    app.require_subcommand(1, 1);

    std::string spec_path, format = "human", tolerance = "1e-9", c_text;
    cli::Options options;
    std::int64_t q_max = 0, e = 1, budget = 16;
    std::string cache;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"decompose", "multiplicities of covariant classes in the e-th Frobenius pushforward of R"},
        {"closure", "fixed point of one-step pushforwards (FFRT detection)"},
        {"ematrix", "the multiplicity matrix E with its column-sum check"},
        {"certify", "primitivity, Perron data, positivity certificate and block report"},
        {"discriminant", "trace-form discriminant of a free extension"},
        {"order", "order of a truncated differential operator and R^q-linearity checks"},
        {"witness", "search for an R^q-linear map sending c^2 to 1"}};
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--spec", spec_path, "ring specification file")->required()->check(CLI::ExistingFile);
        sub->add_option("--e", e, "Frobenius exponent")->check(CLI::Range(1, 12));
        sub->add_option("--budget", budget, "closure rounds")->check(CLI::Range(1, 1000));
        sub->add_option("--q-max", q_max, "largest q tried by the witness search")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"human", "machine"}));
        sub->add_option("--cache", cache, "directory for cached closure classes");
        sub->add_option("--tolerance", tolerance, "limit-matrix tolerance, rational or decimal");
        sub->add_option("--c", c_text, "exponent of the monomial c, e.g. \"1 1\"");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        options.e = static_cast<unsigned>(e);
        options.budget = static_cast<unsigned>(budget);
        if (q_max > 0) options.q_max = q_max;
        if (!cache.empty()) options.cache_dir = cache;
        options.tolerance = parse_rational(tolerance);
        if (options.tolerance <= 0) fail(ErrorKind::Input, "--tolerance must be positive");
        if (!c_text.empty()) {
            Exponent c;
            std::istringstream in(c_text);
            std::string token;
            while (in >> token) {
                try {
                    std::size_t used = 0;
                    c.push_back(std::stoll(token, &used));
                    if (used != token.size()) throw std::invalid_argument(token);
                } catch (const std::exception&) {
                    fail(ErrorKind::Input, "--c expects integers, found '" + token + "'");
                }
            }
            options.c = c;
        }
        auto spec = cli::parse_spec_file(spec_path);
        auto report = cli::run_command(command, spec, options);
        std::cout << (format == "machine" ? cli::render_machine(report.data) : cli::render_human(report.data));
        std::cout.flush();
        if (report.exit_code == 2) std::cerr << "inconclusive\n";
        if (report.exit_code == 3) std::cerr << "invariant violation\n";
        return report.exit_code;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return cli::exit_code_for(err.kind());
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << '\n';
        return 3;
    }
}
