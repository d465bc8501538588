#pragma once

#include <functional>
#include <vector>

#include "forge/lattice.hpp"

namespace forge::detail {

/// Per-variable exponent caps (-1 = uncapped); pure-torsion weights are capped by their order.
std::vector<std::int64_t> coordinate_caps(const WeightSystem& ws, bool allow_generator);

/// Visits every m ∈ N^d with ||m||_1 <= l1_bound, graded degree <= degree_cutoff and within caps.
void for_each_exponent(const WeightSystem& ws, std::int64_t l1_bound, std::int64_t degree_cutoff,
                       const std::vector<std::int64_t>& caps,
                       const std::function<void(const Exponent&, const Character&)>& visit);

/// Componentwise-minimal elements of {m : Σ m_i α_i = χ} inside the enumeration box,
/// sorted lexicographically. last_degree receives the largest graded degree found.
std::vector<Exponent> minimal_solutions(const WeightSystem& ws, const Character& chi,
                                        std::int64_t l1_bound, std::int64_t degree_cutoff,
                                        bool exclude_zero, std::int64_t* last_degree);

}  // namespace forge::detail
