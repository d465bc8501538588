#include "forge/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "forge/errors.hpp"
#include "forge/lp.hpp"
#include "forge/detail/enumerate.hpp"

namespace forge {

void GradingGroup::validate() const {
    for (auto m : torsion_orders) {
        if (m < 2) fail(ErrorKind::Input, "torsion order " + std::to_string(m) + " must be >= 2");
    }
}

Character Character::zero(const GradingGroup& g) {
    return {std::vector<std::int64_t>(g.free_rank, 0),
            std::vector<std::int64_t>(g.torsion_orders.size(), 0)};
}

bool Character::is_zero() const {
    auto nz = [](std::int64_t v) { return v != 0; };
    return std::none_of(free_part.begin(), free_part.end(), nz) &&
           std::none_of(torsion_part.begin(), torsion_part.end(), nz);
}

bool RationalCharacter::is_integral() const {
    return std::all_of(free_part.begin(), free_part.end(),
                       [](const Rational& r) { return r.get_den() == 1; });
}

Character RationalCharacter::to_character() const {
    Character c;
    for (const auto& r : free_part) c.free_part.push_back(r.get_num().get_si());
    c.torsion_part = torsion_part;
    return c;
}

RationalCharacter RationalCharacter::from(const Character& c) {
    RationalCharacter r;
    for (auto v : c.free_part) r.free_part.emplace_back(static_cast<long>(v));
    r.torsion_part = c.torsion_part;
    return r;
}

Character add(const GradingGroup& g, const Character& a, const Character& b) {
    Character out = a;
    for (std::size_t k = 0; k < out.free_part.size(); ++k) out.free_part[k] += b.free_part[k];
    for (std::size_t j = 0; j < out.torsion_part.size(); ++j) {
        out.torsion_part[j] = mod(out.torsion_part[j] + b.torsion_part[j], g.torsion_orders[j]);
    }
    return out;
}

Character scale(const GradingGroup& g, const Character& a, std::int64_t k) {
    Character out = a;
    for (auto& v : out.free_part) v *= k;
    for (std::size_t j = 0; j < out.torsion_part.size(); ++j) {
        out.torsion_part[j] = mod(out.torsion_part[j] * mod(k, g.torsion_orders[j]), g.torsion_orders[j]);
    }
    return out;
}

Character negate(const GradingGroup& g, const Character& a) { return scale(g, a, -1); }

Character multiply_character(const GradingGroup& g, const Character& c, std::int64_t q) {
    return scale(g, c, q);
}

RationalCharacter divide_character(const GradingGroup& g, const Character& c, std::int64_t q) {
    if (q == 0) fail(ErrorKind::Input, "division of a character by zero");
    RationalCharacter out;
    for (auto v : c.free_part) out.free_part.emplace_back(Rational(static_cast<long>(v), static_cast<long>(q)));
    for (auto& r : out.free_part) r.canonicalize();
    for (std::size_t j = 0; j < c.torsion_part.size(); ++j) {
        const auto m = g.torsion_orders[j];
        if (gcd(q, m) != 1) {
            fail(ErrorKind::Input, "q = " + std::to_string(q) + " is not coprime to torsion order " +
                                       std::to_string(m));
        }
        out.torsion_part.push_back(mod(c.torsion_part[j] * inverse_mod(q, m), m));
    }
    return out;
}

WeightSystem::WeightSystem(GradingGroup g, std::vector<Character> w, std::int64_t p,
                           std::vector<std::int64_t> pos)
    : grading(std::move(g)), weights(std::move(w)), prime(p), positivity(std::move(pos)) {
    if (positivity.empty()) positivity.assign(weights.size(), 1);
    for (auto& a : weights) {
        for (std::size_t j = 0; j < a.torsion_part.size() && j < grading.torsion_orders.size(); ++j) {
            a.torsion_part[j] = mod(a.torsion_part[j], grading.torsion_orders[j]);
        }
    }
    validate();
}

void WeightSystem::validate() const {
    grading.validate();
    if (!is_prime(prime)) fail(ErrorKind::Input, "p = " + std::to_string(prime) + " is not prime");
    for (auto m : grading.torsion_orders) {
        if (gcd(prime, m) != 1) {
            fail(ErrorKind::Input, "p = " + std::to_string(prime) + " divides torsion order " +
                                       std::to_string(m) + " (need gcd(p, m_j) = 1)");
        }
    }
    if (positivity.size() != weights.size()) {
        fail(ErrorKind::Input, "positivity needs one degree per variable");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto& a = weights[i];
        if (a.free_part.size() != grading.free_rank ||
            a.torsion_part.size() != grading.torsion_orders.size()) {
            fail(ErrorKind::Input, "weight " + std::to_string(i + 1) + " does not match the grading group");
        }
        if (positivity[i] <= 0) {
            fail(ErrorKind::Input, "positivity degree of variable " + std::to_string(i + 1) + " must be > 0");
        }
    }
}

Character WeightSystem::degree_of(const Exponent& a) const {
    Character out = Character::zero(grading);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out = add(grading, out, scale(grading, weights[i], a[i]));
    }
    return out;
}

std::int64_t WeightSystem::graded_degree(const Exponent& a) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += positivity[i] * a[i];
    return d;
}

namespace {

std::int64_t order_of(const WeightSystem& ws, const Character& a) {
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < a.torsion_part.size(); ++j) {
        const auto m = ws.grading.torsion_orders[j];
        ord = lcm(ord, m / gcd(a.torsion_part[j], m));
    }
    return ord;
}

bool pure_torsion(const Character& a) {
    return std::all_of(a.free_part.begin(), a.free_part.end(), [](auto v) { return v == 0; });
}

// Pottier: Hilbert basis elements of {z ≥ 0 : Bz = 0} satisfy ||z||_1 <= (1 + max_i ||B_i||_1)^rows.
std::int64_t pottier_bound(const WeightSystem& ws, const Character& chi) {
    const auto& g = ws.grading;
    std::int64_t widest = 0;
    for (std::size_t k = 0; k < g.free_rank; ++k) {
        std::int64_t row = std::llabs(chi.free_part[k]);
        for (const auto& a : ws.weights) row += std::llabs(a.free_part[k]);
        widest = std::max(widest, row);
    }
    for (std::size_t j = 0; j < g.torsion_orders.size(); ++j) {
        std::int64_t row = g.torsion_orders[j] + chi.torsion_part[j];
        for (const auto& a : ws.weights) row += a.torsion_part[j];
        widest = std::max(widest, row);
    }
    const std::size_t rows = g.free_rank + g.torsion_orders.size();
    std::int64_t bound = 1;
    for (std::size_t r = 0; r < rows; ++r) {
        bound *= (1 + widest);
        if (bound > (std::int64_t{1} << 40)) return bound;
    }
    return bound;
}

}  // namespace

namespace detail {

std::vector<std::int64_t> coordinate_caps(const WeightSystem& ws, bool allow_generator) {
    std::vector<std::int64_t> caps(ws.variables(), -1);
    for (std::size_t i = 0; i < ws.variables(); ++i) {
        if (pure_torsion(ws.weights[i])) {
            caps[i] = order_of(ws, ws.weights[i]) - (allow_generator ? 0 : 1);
        }
    }
    return caps;
}

std::vector<Exponent> minimal_solutions(const WeightSystem& ws, const Character& chi,
                                        std::int64_t l1_bound, std::int64_t degree_cutoff,
                                        bool exclude_zero, std::int64_t* last_degree) {
    auto caps = coordinate_caps(ws, exclude_zero);
    std::vector<Exponent> hits;
    for_each_exponent(ws, l1_bound, degree_cutoff, caps, [&](const Exponent& m, const Character& deg) {
        if (deg != chi) return;
        if (exclude_zero && std::all_of(m.begin(), m.end(), [](auto v) { return v == 0; })) return;
        hits.push_back(m);
    });
    std::stable_sort(hits.begin(), hits.end(), [&](const Exponent& a, const Exponent& b) {
        auto da = ws.graded_degree(a), db = ws.graded_degree(b);
        return da != db ? da < db : a < b;
    });
    std::vector<Exponent> minimal;
    for (const auto& m : hits) {
        bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Exponent& g) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (g[i] > m[i]) return false;
            }
            return true;
        });
        if (!dominated) minimal.push_back(m);
    }
    if (last_degree) *last_degree = minimal.empty() ? -1 : ws.graded_degree(minimal.back());
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

void for_each_exponent(const WeightSystem& ws, std::int64_t l1_bound, std::int64_t degree_cutoff,
                       const std::vector<std::int64_t>& caps,
                       const std::function<void(const Exponent&, const Character&)>& visit) {
    const std::size_t d = ws.variables();
    Exponent m(d, 0);
    std::vector<Character> partial(d + 1, Character::zero(ws.grading));
    std::function<void(std::size_t, std::int64_t, std::int64_t)> rec =
        [&](std::size_t i, std::int64_t l1_left, std::int64_t deg_left) {
            if (i == d) {
                visit(m, partial[d]);
                return;
            }
            std::int64_t top = std::min(l1_left, deg_left / ws.positivity[i]);
            if (caps[i] >= 0) top = std::min(top, caps[i]);
            for (std::int64_t v = 0; v <= top; ++v) {
                m[i] = v;
                partial[i + 1] = add(ws.grading, partial[i], scale(ws.grading, ws.weights[i], v));
                rec(i + 1, l1_left - v, deg_left - v * ws.positivity[i]);
            }
            m[i] = 0;
        };
    rec(0, l1_bound, degree_cutoff);
}

}  // namespace detail

std::int64_t minimal_solution_bound(const WeightSystem& ws, const Character& chi) {
    std::int64_t bound = pottier_bound(ws, chi) - 1;
    auto caps = detail::coordinate_caps(ws, false);
    if (std::all_of(caps.begin(), caps.end(), [](auto c) { return c >= 0; })) {
        std::int64_t sum = 0;
        for (auto c : caps) sum += c;
        bound = std::min(bound, sum);
    }
    return std::max<std::int64_t>(bound, 0);
}

bool in_supp(const WeightSystem& ws, const Character& chi) {
    if (chi.is_zero()) return true;
    const std::int64_t depth = minimal_solution_bound(ws, chi);
    std::set<Character> seen{Character::zero(ws.grading)};
    std::vector<Character> frontier{Character::zero(ws.grading)};
    for (std::int64_t level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<Character> next;
        for (const auto& c : frontier) {
            for (const auto& a : ws.weights) {
                Character n = add(ws.grading, c, a);
                if (n == chi) return true;
                if (seen.insert(n).second) next.push_back(std::move(n));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

bool is_strongly_critical(const WeightSystem& ws, const Character& chi) {
    const std::size_t r = ws.grading.free_rank;
    if (r == 0) return true;
    const std::size_t d = ws.variables();
    // variables s_1..s_d (u_i = -s_i) and the slack eps
    LinearProgram lp;
    lp.variables = d + 1;
    lp.objective.assign(d + 1, Rational(0));
    lp.objective[d] = 1;
    using Rel = LinearProgram::Relation;
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<Rational> row(d + 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) row[i] = -static_cast<long>(ws.weights[i].free_part[k]);
        lp.add_row(std::move(row), Rel::Equal, Rational(static_cast<long>(chi.free_part[k])));
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> row(d + 1, Rational(0));
        row[i] = 1;
        row[d] = 1;
        lp.add_row(std::move(row), Rel::LessEqual, Rational(1));
    }
    std::vector<Rational> cap(d + 1, Rational(0));
    cap[d] = 1;
    lp.add_row(std::move(cap), Rel::LessEqual, Rational(1));
    auto result = solve(lp);
    return result.status == LpResult::Status::Optimal && result.value > 0;
}

std::vector<Exponent> invariant_generators(const WeightSystem& ws) {
    const auto zero = Character::zero(ws.grading);
    std::int64_t bound = pottier_bound(ws, zero);
    auto caps = detail::coordinate_caps(ws, true);
    if (std::all_of(caps.begin(), caps.end(), [](auto c) { return c >= 0; })) {
        std::int64_t sum = 0;
        for (auto c : caps) sum += c;
        bound = std::min(bound, sum);
    }
    std::int64_t maxh = 1;
    for (auto h : ws.positivity) maxh = std::max(maxh, h);
    return detail::minimal_solutions(ws, zero, bound, bound * maxh, true, nullptr);
}

std::size_t krull_dim(const WeightSystem& ws) {
    auto gens = invariant_generators(ws);
    return rank(gens);
}

}  // namespace forge
