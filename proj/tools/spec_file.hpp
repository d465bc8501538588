#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/diffop.hpp"
#include "forge/group.hpp"
#include "forge/lattice.hpp"

namespace forge::cli {

struct OperatorTerm {
    enum class Type { Derivative, Projection };
    Type type = Type::Derivative;
    Polynomial coefficient;
    /// Derivative order a, or the residue v of a projection.
    Exponent exponent;
    std::int64_t q = 1;
};

struct OperatorSpec {
    std::vector<std::string> variables;
    std::int64_t characteristic = 2;
    std::int64_t window = 10;
    std::int64_t max_order = 4;
    std::vector<std::int64_t> q_checks;
    std::vector<OperatorTerm> terms;

    TruncatedOperator build() const;
};

struct RingSpec {
    enum class Kind { Diagonal, Group, Extension, Operator };
    Kind kind = Kind::Diagonal;
    std::string path;
    std::string digest;

    std::optional<WeightSystem> diagonal;
    std::optional<GroupData> group;
    std::optional<RingExtensionPresentation> extension;
    std::optional<OperatorSpec> op;

    std::vector<Integer> division_dims;
    unsigned e_max = 3;
    std::optional<Exponent> witness_c;

    std::int64_t prime() const;
};

const char* to_string(RingSpec::Kind kind);

/// Reads and validates a spec file; errors are Input errors naming the line.
RingSpec parse_spec_file(const std::string& path);
RingSpec parse_spec(const std::string& text, const std::string& path);

/// Hex SHA-256 of the text with CRLF line endings normalised.
std::string sha256_hex(const std::string& text);

}  // namespace forge::cli
