#pragma once

#include <string>
#include <vector>

#include "forge/cyclotomic.hpp"
#include "forge/dynamics.hpp"
#include "forge/lattice.hpp"

namespace forge {

/// Eigenvalues ζ_m^{a_j} of one conjugacy class acting on W.
struct ConjugacyClassData {
    std::int64_t class_size = 1;
    std::vector<std::int64_t> eigenvalue_exponents;
};

struct ClassFunction {
    std::vector<Cyclotomic> values;
};

struct CharacterTable {
    /// Rows are irreducible characters, columns follow the class list. Row 0 is trivial.
    std::vector<std::vector<Cyclotomic>> irreducibles;
    std::vector<std::string> labels;
};

/// Finite group G acting on W, |G| prime to p. Class 0 must be the identity.
struct GroupData {
    std::int64_t m = 1;
    std::int64_t prime = 2;
    std::size_t dim = 0;
    std::vector<ConjugacyClassData> classes;
    CharacterTable table;

    std::int64_t order() const;
    /// Degrees dim U_i read off the identity column.
    std::vector<Integer> degrees() const;
    /// Checks coprimality, class data and row orthogonality of the table.
    void validate() const;
};

/// Character of S/S_+^{[q]}: Π_j Σ_{t<q} ζ^{a_j t} at each class.
ClassFunction truncation_character(const std::vector<ConjugacyClassData>& classes, std::int64_t q,
                                   std::int64_t m);

/// Applies ζ ↦ ζ^t with t·p^e ≡ 1 (mod m) to every value.
ClassFunction frobenius_twist(const ClassFunction& cf, unsigned e, std::int64_t p, std::int64_t m);

ClassFunction product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicity of each irreducible; throws NonIntegralMultiplicity unless all are in N.
std::vector<Integer> decompose_into_irreducibles(const ClassFunction& cf, const CharacterTable& table,
                                                 const std::vector<ConjugacyClassData>& classes);

struct GroupPushforwardReport {
    unsigned e = 0;
    std::int64_t q = 1;
    /// Multiplicity of R(U_i) in ᵉR, indexed like the character table.
    std::vector<Integer> multiplicities;
    std::vector<std::string> labels;
};

GroupPushforwardReport pushforward_multiplicities(const GroupData& g, unsigned e);

struct GroupMatrix {
    MultiplicityMatrix matrix;
    /// Character-table row of each matrix index.
    std::vector<std::size_t> irreducible_index;
};

/// E over the irreducibles reachable from the trivial one, ranks = dim U_i.
GroupMatrix group_multiplicity_matrix(const GroupData& g);

/// Encodes a torsion-only diagonal action as class data with one class per group element.
/// Irreducible U_c (c in the torsion group) has character g ↦ ζ^{<c, g>}; R(U_c) ≅ S_{-c}.
GroupData abelian_group_data(const WeightSystem& ws);

/// Torsion label c of row i in abelian_group_data.
Character abelian_label(const WeightSystem& ws, std::size_t row);

}  // namespace forge
