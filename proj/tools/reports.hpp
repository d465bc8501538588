#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "forge/errors.hpp"
#include "spec_file.hpp"

namespace forge::cli {

using Json = nlohmann::ordered_json;

struct Options {
    unsigned e = 1;
    unsigned budget = 16;
    std::optional<std::int64_t> q_max;
    Rational tolerance = Rational(1, 1000000000);
    std::optional<std::string> cache_dir;
    std::optional<Exponent> c;
};

struct Report {
    Json data;
    int exit_code = 0;
};

/// Runs one of decompose, closure, ematrix, certify, discriminant, order, witness.
Report run_command(const std::string& command, const RingSpec& spec, const Options& options);

/// 0 success, 1 input, 2 inconclusive or budget, 3 invariant violation.
int exit_code_for(ErrorKind kind);

std::string render_machine(const Json& data);
std::string render_human(const Json& data);

}  // namespace forge::cli
