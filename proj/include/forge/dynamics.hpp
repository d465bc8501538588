#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/arith.hpp"

namespace forge {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// E with e_ij = m(1, M_i, M_j): column j is the one-step pushforward of class j.
struct MultiplicityMatrix {
    IntMatrix entries;
    std::vector<std::string> labels;
    std::vector<Integer> ranks;
    std::int64_t p = 2;
    std::size_t dim = 0;
    /// Position of the class of R.
    std::size_t base_index = 0;

    std::size_t size() const { return entries.size(); }
    void validate() const;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity(std::size_t n);
IntMatrix power(const IntMatrix& a, unsigned e);

/// (n-1)^2 + 1.
unsigned wielandt_bound(std::size_t n);

/// Smallest u within the Wielandt bound with E^u > 0 entrywise.
std::optional<unsigned> primitivity(const IntMatrix& e);

struct PerronData {
    Integer lambda;
    bool verified = false;
    std::vector<Integer> left_eigenvector;
    /// Last exact iterate of (E/λ)^(2^k).
    RatMatrix limit_matrix;
    unsigned squarings = 0;
    unsigned primitivity_exponent = 0;
};

/// Certifies w·E = p^dim·w exactly, then squares E/λ until successive iterates differ by
/// less than the tolerance in max norm. Throws EigenCheckFailed or NotPrimitive.
PerronData perron(const MultiplicityMatrix& m, const Rational& tolerance = Rational(1, 1000000000));

struct SfrCertificate {
    bool certified = false;
    /// Exponent where the row and column of R first become positive, or the bound searched.
    unsigned exponent = 0;
};

/// Necessary-condition check: some E^u within the Wielandt bound has a positive row and column at R.
SfrCertificate sfr_positivity_certificate(const IntMatrix& e, std::size_t index_of_r);

struct MinFindimResult {
    std::vector<Integer> sequence;
    std::vector<Integer> running_sup;
    /// true: no finite-dimensional representations (primitive E forces u_e -> ∞).
    bool no_finite_dimensional_reps = false;
};

/// u_e = min over classes with m(e,M,R) != 0 of d(M)·m(e,M,R); rows of multiplicities are
/// indexed by e = 1..E_max, columns by class.
MinFindimResult min_findim_sequence(const std::vector<std::vector<Integer>>& multiplicities_at_r,
                                    const std::vector<Integer>& division_dims, bool primitive);

struct BlockReport {
    struct Block {
        std::string label;
        Integer multiplicity;
        Integer division_dim;
        Integer simple_dim;
        std::string maximal_ideal;
    };
    std::vector<Block> blocks;
    std::string render() const;
};

/// End_R(M)/rad ≅ Π M(a_i, D_i).
BlockReport semisimple_block_report(const std::vector<Integer>& multiplicities,
                                    const std::vector<Integer>& division_dims,
                                    const std::vector<std::string>& labels);

/// Decimal rendering of a rational with the given number of digits.
std::string to_decimal(const Rational& r, int digits);

}  // namespace forge
