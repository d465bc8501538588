#pragma once

#include <vector>

#include "forge/arith.hpp"

namespace forge {

/// Dense exact linear program: maximize objective·x subject to the rows and x >= 0.
struct LinearProgram {
    enum class Relation { LessEqual, Equal, GreaterEqual };

    struct Row {
        std::vector<Rational> coefficients;
        Relation relation = Relation::Equal;
        Rational rhs;
    };

    std::size_t variables = 0;
    std::vector<Rational> objective;
    std::vector<Row> rows;

    void add_row(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> solution;
};

/// Two-phase tableau simplex with Bland's rule; terminates on every input.
LpResult solve(const LinearProgram& lp);

}  // namespace forge
