#pragma once

#include <map>
#include <optional>
#include <vector>

#include "forge/lattice.hpp"

namespace forge {

/// Generator set translated so every coordinate minimum is 0, sorted lexicographically.
using CanonicalKey = std::vector<Exponent>;

CanonicalKey canonical_key(std::vector<Exponent> generators);

/// Rank-one monomial module S_β, the class of a covariant summand.
struct CovariantClass {
    RationalCharacter degree;
    std::vector<Exponent> generators;
    CanonicalKey key;

    static CovariantClass make(RationalCharacter degree, std::vector<Exponent> generators);
    /// The class of R itself (degree 0, generated by 1).
    static CovariantClass base_ring(const WeightSystem& ws);
};

/// Generator search with the certified bound by default; a smaller cutoff falls back to
/// frontier closure and throws FrontierInconclusive when the frontier is not closed.
std::vector<Exponent> minimal_generators(const WeightSystem& ws, const RationalCharacter& beta,
                                         std::optional<std::int64_t> degree_cutoff = std::nullopt);

/// Certified graded-degree cutoff for the generator search at β.
std::int64_t certified_degree_cutoff(const WeightSystem& ws, const Character& beta);

/// Degree of the residue-v piece of ᵉS_β: (β - Σ v_i α_i) / q.
RationalCharacter residue_degree(const WeightSystem& ws, const Character& beta, const Exponent& v,
                                 std::int64_t q);

/// The class of the residue-v summand of ᵉ(base); empty when that piece is zero.
std::optional<CovariantClass> class_of_residue(const WeightSystem& ws, const CovariantClass& base,
                                               const Exponent& v, unsigned e);

/// Translation equivalence of generator sets.
bool iso_test(const CovariantClass& a, const CovariantClass& b);

/// ᵉM = ⊕ classes with multiplicity, plus the number of zero residue pieces.
struct DecompositionReport {
    struct Entry {
        CovariantClass representative;
        std::uint64_t multiplicity = 0;
        /// Breakdown of the multiplicity by the degree of the piece.
        std::map<Character, std::uint64_t> by_degree;
    };

    unsigned e = 0;
    std::int64_t q = 1;
    std::size_t variables = 0;
    std::map<CanonicalKey, Entry> entries;
    std::uint64_t zero_piece_count = 0;

    std::uint64_t multiplicity(const CanonicalKey& key) const;
    std::uint64_t total() const;
    /// Σ multiplicities + zero pieces = q^d.
    bool conserves() const;
};

}  // namespace forge
