#pragma once

#include <string>
#include <vector>

#include "forge/arith.hpp"

namespace forge {

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(std::int64_t m);
std::int64_t euler_phi(std::int64_t m);

/// Exact element of Q(ζ_m) in the power basis 1, ζ, ..., ζ^{φ(m)-1}.
class Cyclotomic {
public:
    explicit Cyclotomic(std::int64_t modulus = 1);
    Cyclotomic(std::int64_t modulus, const Rational& value);

    /// ζ^k.
    static Cyclotomic root_power(std::int64_t modulus, std::int64_t k);
    /// Σ c_k ζ^k for arbitrary k (reduced on construction).
    static Cyclotomic from_powers(std::int64_t modulus, const std::vector<Rational>& by_power);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_rational() const;
    /// Only valid when is_rational().
    Rational rational_value() const;
    bool is_zero() const;

    /// ζ ↦ ζ^t for gcd(t, m) = 1.
    Cyclotomic galois(std::int64_t t) const;
    Cyclotomic conjugate() const { return galois(-1); }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    Cyclotomic operator*(const Rational& r) const;
    bool operator==(const Cyclotomic& o) const = default;

    /// e.g. "1 + 2*z - 1/2*z^3".
    std::string to_string() const;
    /// Parses sums of terms [c][*]z[^k]; throws InputError.
    static Cyclotomic parse(std::int64_t modulus, const std::string& text);

private:
    void check_same(const Cyclotomic& o) const;

    std::int64_t modulus_;
    std::vector<Rational> coeffs_;
};

}  // namespace forge
