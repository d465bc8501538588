#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/dynamics.hpp"
#include "forge/monomial.hpp"

namespace forge {

struct EnumerationBudget {
    /// Cap on q^d for a single pushforward.
    std::uint64_t max_pieces = std::uint64_t{1} << 40;
};

/// Decomposes ᵉ(class) into covariant classes by residue.
DecompositionReport pushforward_decompose(const WeightSystem& ws, const CovariantClass& c, unsigned e,
                                          const EnumerationBudget& budget = {});

struct ClosureResult {
    /// Canonical-key order.
    std::vector<CovariantClass> classes;
    bool ffrt = false;
    unsigned rounds = 0;
};

/// Fixed point of one-step pushforwards starting from R; Inconclusive (ffrt = false) on budget.
ClosureResult closure_classes(const WeightSystem& ws, unsigned budget,
                              const EnumerationBudget& limits = {});

/// Classes S_χ for lattice χ in the half-open zonotope Σ(-1,0]α_i that lie in Supp S.
std::vector<CovariantClass> strongly_critical_classes(const WeightSystem& ws);

struct RankIdentity {
    enum class Status { Verified, Unchecked, Violated };
    Status status = Status::Unchecked;
    /// Torsion invariant factors of Z^d / <Λ_0>.
    std::vector<Integer> torsion_factors;
    std::string diagnostic;
};

struct ClassMatrix {
    MultiplicityMatrix matrix;
    std::vector<CovariantClass> classes;
    RankIdentity rank_identity;
};

/// E over the closure classes; throws NotFFRT when the closure is inconclusive.
ClassMatrix multiplicity_matrix(const WeightSystem& ws, unsigned closure_budget = 16,
                                const EnumerationBudget& limits = {});

/// E over a given class set; throws InvariantViolation unless the set is closed and contains R.
ClassMatrix matrix_over_classes(const WeightSystem& ws, std::vector<CovariantClass> classes,
                                const EnumerationBudget& limits = {});

/// m(e, M_i, M_j) by a direct e-step pushforward.
std::uint64_t multiplicity_direct(const WeightSystem& ws, unsigned e, const CovariantClass& mi,
                                  const CovariantClass& mj, const EnumerationBudget& limits = {});

/// Column sums against p^dim, asserted only when p is coprime to the torsion of Z^d/<Λ_0>.
RankIdentity check_rank_identity(const WeightSystem& ws, const MultiplicityMatrix& m);

std::string describe_key(const CanonicalKey& key);
std::string describe_character(const Character& c);
std::string describe_character(const RationalCharacter& c);

}  // namespace forge
