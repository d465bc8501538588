#include "forge/monomial.hpp"

#include <algorithm>

#include "forge/detail/enumerate.hpp"
#include "forge/errors.hpp"

namespace forge {

CanonicalKey canonical_key(std::vector<Exponent> generators) {
    if (generators.empty()) return {};
    const std::size_t d = generators.front().size();
    for (std::size_t i = 0; i < d; ++i) {
        std::int64_t low = generators.front()[i];
        for (const auto& g : generators) low = std::min(low, g[i]);
        for (auto& g : generators) g[i] -= low;
    }
    std::sort(generators.begin(), generators.end());
    return generators;
}

CovariantClass CovariantClass::make(RationalCharacter degree, std::vector<Exponent> generators) {
    std::sort(generators.begin(), generators.end());
    CovariantClass c{std::move(degree), std::move(generators), {}};
    c.key = canonical_key(c.generators);
    return c;
}

CovariantClass CovariantClass::base_ring(const WeightSystem& ws) {
    return make(RationalCharacter::from(Character::zero(ws.grading)), {Exponent(ws.variables(), 0)});
}

std::int64_t certified_degree_cutoff(const WeightSystem& ws, const Character& beta) {
    std::int64_t maxh = 1;
    for (auto h : ws.positivity) maxh = std::max(maxh, h);
    return maxh * minimal_solution_bound(ws, beta);
}

std::vector<Exponent> minimal_generators(const WeightSystem& ws, const RationalCharacter& beta,
                                         std::optional<std::int64_t> degree_cutoff) {
    if (!beta.is_integral()) return {};
    const Character chi = beta.to_character();
    const std::int64_t l1 = minimal_solution_bound(ws, chi);
    const std::int64_t certified = certified_degree_cutoff(ws, chi);
    if (!degree_cutoff || *degree_cutoff >= certified) {
        return detail::minimal_solutions(ws, chi, l1, certified, false, nullptr);
    }
    std::int64_t last = -1;
    auto gens = detail::minimal_solutions(ws, chi, l1, *degree_cutoff, false, &last);
    std::int64_t layer = 0;
    for (auto h : ws.positivity) layer += h;
    if (gens.empty() || *degree_cutoff < last + layer) {
        fail(ErrorKind::FrontierInconclusive,
             "generator search up to degree " + std::to_string(*degree_cutoff) +
                 " did not close one full layer beyond the last generator");
    }
    return gens;
}

RationalCharacter residue_degree(const WeightSystem& ws, const Character& beta, const Exponent& v,
                                 std::int64_t q) {
    Character shifted = add(ws.grading, beta, negate(ws.grading, ws.degree_of(v)));
    return divide_character(ws.grading, shifted, q);
}

std::optional<CovariantClass> class_of_residue(const WeightSystem& ws, const CovariantClass& base,
                                               const Exponent& v, unsigned e) {
    if (!base.degree.is_integral()) {
        fail(ErrorKind::Input, "base class has a non-integral degree");
    }
    const std::int64_t q = ipow(ws.prime, e);
    if (v.size() != ws.variables()) fail(ErrorKind::Input, "residue has the wrong length");
    for (auto x : v) {
        if (x < 0 || x >= q) fail(ErrorKind::Input, "residue entry outside [0, q)");
    }
    auto degree = residue_degree(ws, base.degree.to_character(), v, q);
    if (!degree.is_integral()) return std::nullopt;
    auto gens = minimal_generators(ws, degree);
    if (gens.empty()) return std::nullopt;
    return CovariantClass::make(std::move(degree), std::move(gens));
}

bool iso_test(const CovariantClass& a, const CovariantClass& b) { return a.key == b.key; }

std::uint64_t DecompositionReport::multiplicity(const CanonicalKey& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? 0 : it->second.multiplicity;
}

std::uint64_t DecompositionReport::total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, entry] : entries) sum += entry.multiplicity;
    return sum;
}

bool DecompositionReport::conserves() const {
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < variables; ++i) expected *= static_cast<std::uint64_t>(q);
    return total() + zero_piece_count == expected;
}

}  // namespace forge
