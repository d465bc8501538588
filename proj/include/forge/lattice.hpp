#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/arith.hpp"

namespace forge {

/// Z^r ⊕ Z/m_1 ⊕ ... ⊕ Z/m_s.
struct GradingGroup {
    std::size_t free_rank = 0;
    std::vector<std::int64_t> torsion_orders;

    void validate() const;
    bool operator==(const GradingGroup&) const = default;
};

/// Element of a grading group; torsion components are kept reduced.
struct Character {
    std::vector<std::int64_t> free_part;
    std::vector<std::int64_t> torsion_part;

    static Character zero(const GradingGroup& g);
    bool is_zero() const;

    auto operator<=>(const Character&) const = default;
};

/// Element of X(G)_Q ⊕ torsion, the target of division by a power of p.
struct RationalCharacter {
    std::vector<Rational> free_part;
    std::vector<std::int64_t> torsion_part;

    bool is_integral() const;
    /// Integral representative; only valid when is_integral().
    Character to_character() const;
    static RationalCharacter from(const Character& c);

    bool operator==(const RationalCharacter&) const = default;
};

Character add(const GradingGroup& g, const Character& a, const Character& b);
Character negate(const GradingGroup& g, const Character& a);
Character scale(const GradingGroup& g, const Character& a, std::int64_t k);
Character multiply_character(const GradingGroup& g, const Character& c, std::int64_t q);
/// Exact division by q; torsion is multiplied by q^{-1} mod m_j.
RationalCharacter divide_character(const GradingGroup& g, const Character& c, std::int64_t q);

/// Weights of a diagonal action on k[x_1..x_d] together with the prime.
struct WeightSystem {
    GradingGroup grading;
    std::vector<Character> weights;
    std::int64_t prime = 2;
    /// Positive degree of each variable; orders generator enumeration.
    std::vector<std::int64_t> positivity;

    WeightSystem() = default;
    WeightSystem(GradingGroup grading, std::vector<Character> weights, std::int64_t prime,
                 std::vector<std::int64_t> positivity = {});

    std::size_t variables() const { return weights.size(); }
    void validate() const;

    /// Σ a_i α_i.
    Character degree_of(const Exponent& a) const;
    std::int64_t graded_degree(const Exponent& a) const;
};

/// Certified ℓ1 bound on minimal solutions a ∈ N^d of Σ a_i α_i = χ.
std::int64_t minimal_solution_bound(const WeightSystem& ws, const Character& chi);

/// χ ∈ Supp S, i.e. χ = Σ a_i α_i with a_i ∈ N.
bool in_supp(const WeightSystem& ws, const Character& chi);

/// χ̄ = Σ u_i ᾱ_i with u_i ∈ (-1, 0] ∩ Q; decided by an exact LP maximizing the slack.
bool is_strongly_critical(const WeightSystem& ws, const Character& chi);

/// Minimal nonzero elements of Λ_0 = {m ∈ N^d : Σ m_i α_i = 0}: the algebra generators of R.
std::vector<Exponent> invariant_generators(const WeightSystem& ws);

/// Krull dimension of R = S^G, the rank of the lattice generated by Λ_0.
std::size_t krull_dim(const WeightSystem& ws);

}  // namespace forge
