#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "forge/frobenius.hpp"
#include "forge/lattice.hpp"
#include "forge/monomial.hpp"

namespace fixtures {

using forge::Character;
using forge::Exponent;
using forge::GradingGroup;
using forge::WeightSystem;

inline WeightSystem polynomial_ring(std::size_t d, std::int64_t p) {
    return WeightSystem(GradingGroup{0, {}}, std::vector<Character>(d, Character{{}, {}}), p);
}

inline WeightSystem torsion_ring(std::int64_t m, const std::vector<std::int64_t>& exps, std::int64_t p) {
    std::vector<Character> w;
    for (auto a : exps) w.push_back(Character{{}, {a}});
    return WeightSystem(GradingGroup{0, {m}}, w, p);
}

inline WeightSystem quadric_cone(std::int64_t p = 3) { return torsion_ring(2, {1, 1}, p); }

inline WeightSystem free_ring(const std::vector<std::int64_t>& weights, std::int64_t p) {
    std::vector<Character> w;
    for (auto a : weights) w.push_back(Character{{a}, {}});
    return WeightSystem(GradingGroup{1, {}}, w, p);
}

inline WeightSystem segre(std::int64_t p) { return free_ring({1, 1, -1, -1}, p); }

inline forge::CovariantClass class_of(const WeightSystem& ws, const Character& chi) {
    auto beta = forge::RationalCharacter::from(chi);
    return forge::CovariantClass::make(beta, forge::minimal_generators(ws, beta));
}

}  // namespace fixtures

namespace oracle {

using forge::Character;
using forge::Exponent;
using forge::WeightSystem;

inline void box(std::size_t d, std::int64_t bound, const std::function<void(const Exponent&)>& visit) {
    Exponent e(d, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == d) {
            visit(e);
            return;
        }
        for (std::int64_t x = 0; x <= bound; ++x) {
            e[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
}

inline bool in_supp(const WeightSystem& ws, const Character& chi, std::int64_t bound) {
    bool found = false;
    box(ws.variables(), bound, [&](const Exponent& a) {
        if (!found && ws.degree_of(a) == chi) found = true;
    });
    return found;
}

inline std::vector<Exponent> minimal_elements(std::vector<Exponent> pts) {
    std::vector<Exponent> out;
    for (const auto& a : pts) {
        bool dominated = false;
        for (const auto& b : pts) {
            if (a == b) continue;
            bool le = true;
            for (std::size_t i = 0; i < a.size(); ++i) le = le && b[i] <= a[i];
            if (le) dominated = true;
        }
        if (!dominated) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Exponent> translate_to_origin(std::vector<Exponent> gens) {
    if (gens.empty()) return gens;
    for (std::size_t i = 0; i < gens[0].size(); ++i) {
        std::int64_t lo = gens[0][i];
        for (const auto& g : gens) lo = std::min(lo, g[i]);
        for (auto& g : gens) g[i] -= lo;
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

/// Decomposition of ᵉS_β by direct enumeration: each residue v collects the monomials
/// m' in a box with q m' + v of degree β, takes minimal elements and translates them.
struct Decomposition {
    std::map<std::vector<Exponent>, std::uint64_t> multiplicities;
    std::uint64_t zero_pieces = 0;
};

inline Decomposition decompose(const WeightSystem& ws, const Character& beta, unsigned e, std::int64_t bound) {
    const std::size_t d = ws.variables();
    const std::int64_t q = forge::ipow(ws.prime, e);
    Decomposition out;
    box(d, q - 1, [&](const Exponent& v) {
        std::vector<Exponent> piece;
        box(d, bound, [&](const Exponent& mp) {
            Exponent m(d);
            for (std::size_t i = 0; i < d; ++i) m[i] = q * mp[i] + v[i];
            if (ws.degree_of(m) == beta) piece.push_back(mp);
        });
        if (piece.empty()) {
            ++out.zero_pieces;
        } else {
            ++out.multiplicities[translate_to_origin(minimal_elements(piece))];
        }
    });
    return out;
}

}  // namespace oracle
