#include "forge/lp.hpp"

#include "forge/errors.hpp"

namespace forge {

void LinearProgram::add_row(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    if (coefficients.size() != variables) {
        fail(ErrorKind::Input, "LP row width does not match the variable count");
    }
    rows.push_back({std::move(coefficients), relation, std::move(rhs)});
}

namespace {

// Tableau with m constraint rows followed by one objective row; the last column is the rhs.
// The objective row stores reduced costs of a maximization in the form z - c·x = value.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), cells_((m + 1) * (n + 1)), basis_(m) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r * (n_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, n_); }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = 1 / at(row, col);
        for (std::size_t c = 0; c <= n_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rational f = at(r, col);
            for (std::size_t c = 0; c <= n_; ++c) {
                if (at(row, c) != 0) at(r, c) -= f * at(row, c);
            }
        }
        basis_[row] = col;
    }

    // Runs simplex iterations on the objective row restricted to allowed columns.
    // Returns false when unbounded.
    bool optimize(const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t entering = n_;
            for (std::size_t c = 0; c < n_; ++c) {
                if (allowed[c] && at(m_, c) < 0) {
                    entering = c;
                    break;
                }
            }
            if (entering == n_) return true;
            std::size_t leaving = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (at(r, entering) <= 0) continue;
                Rational ratio = rhs(r) / at(r, entering);
                if (leaving == m_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = ratio;
                }
            }
            if (leaving == m_) return false;
            pivot(leaving, entering);
        }
    }

private:
    std::size_t m_, n_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
    const std::size_t m = lp.rows.size();
    const std::size_t n = lp.variables;

    // columns: structural | slack per inequality | artificial per row
    std::size_t slack_count = 0;
    for (const auto& row : lp.rows) {
        if (row.relation != LinearProgram::Relation::Equal) ++slack_count;
    }
    const std::size_t first_slack = n;
    const std::size_t first_art = n + slack_count;
    const std::size_t width = first_art + m;

    Tableau t(m, width);
    std::size_t slack = first_slack;
    for (std::size_t r = 0; r < m; ++r) {
        const auto& row = lp.rows[r];
        Rational sign = row.rhs < 0 ? -1 : 1;
        for (std::size_t c = 0; c < n; ++c) t.at(r, c) = sign * row.coefficients[c];
        if (row.relation == LinearProgram::Relation::LessEqual) {
            t.at(r, slack++) = sign;
        } else if (row.relation == LinearProgram::Relation::GreaterEqual) {
            t.at(r, slack++) = -sign;
        }
        t.at(r, first_art + r) = 1;
        t.rhs(r) = sign * row.rhs;
        t.basis()[r] = first_art + r;
    }

    // phase one: minimize the sum of artificials, i.e. maximize its negation
    for (std::size_t c = 0; c <= width; ++c) {
        if (c >= first_art && c < width) continue;
        Rational sum = 0;
        for (std::size_t r = 0; r < m; ++r) sum += t.at(r, c);
        t.at(m, c) = -sum;
    }
    std::vector<bool> allowed(width, true);
    t.optimize(allowed);
    LpResult result;
    if (t.rhs(m) != 0) {
        result.status = LpResult::Status::Infeasible;
        return result;
    }
    // drive remaining artificials out of the basis where possible
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis()[r] < first_art) continue;
        for (std::size_t c = 0; c < first_art; ++c) {
            if (t.at(r, c) != 0) {
                t.pivot(r, c);
                break;
            }
        }
    }
    for (std::size_t c = first_art; c < width; ++c) allowed[c] = false;

    // phase two objective row
    for (std::size_t c = 0; c <= width; ++c) t.at(m, c) = 0;
    for (std::size_t c = 0; c < n; ++c) t.at(m, c) = -lp.objective[c];
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t b = t.basis()[r];
        Rational f = t.at(m, b);
        if (f == 0) continue;
        for (std::size_t c = 0; c <= width; ++c) t.at(m, c) -= f * t.at(r, c);
    }
    if (!t.optimize(allowed)) {
        result.status = LpResult::Status::Unbounded;
        return result;
    }
    result.status = LpResult::Status::Optimal;
    result.value = t.rhs(m);
    result.solution.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis()[r] < n) result.solution[t.basis()[r]] = t.rhs(r);
    }
    return result;
}

}  // namespace forge
