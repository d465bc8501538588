#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace forge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a monomial in k[x_1..x_d].
using Exponent = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// Inverse of a modulo m; throws InputError when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
std::int64_t ipow(std::int64_t base, unsigned exponent);
bool is_prime(std::int64_t n);

/// Parses "a", "-a/b"; throws InputError on malformed text.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
std::string to_string(const Exponent& e);

/// Rank of an integer matrix over Q (rows are vectors).
std::size_t rank(const std::vector<std::vector<std::int64_t>>& rows);

/// Invariant factors of the lattice spanned by the rows, in Smith normal form order.
std::vector<Integer> invariant_factors(const std::vector<std::vector<std::int64_t>>& rows);

}  // namespace forge
