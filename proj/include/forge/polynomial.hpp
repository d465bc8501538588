#pragma once

#include <map>
#include <string>
#include <vector>

#include "forge/arith.hpp"

namespace forge {

/// Multivariate polynomial over Z (characteristic 0) or F_p.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::size_t variables, std::int64_t characteristic);

    static Polynomial constant(std::size_t variables, std::int64_t characteristic, const Integer& c);
    static Polynomial monomial(std::size_t variables, std::int64_t characteristic, const Exponent& e,
                               const Integer& c = 1);
    /// Parses sums of products like "4*x^2*y - 3*x + 1" over the named variables.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& names,
                            std::int64_t characteristic);

    std::size_t variables() const { return variables_; }
    std::int64_t characteristic() const { return characteristic_; }
    const std::map<Exponent, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t total_degree() const;

    void add_term(const Exponent& e, const Integer& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const = default;

    /// Value at a rational point (coefficients read as integers).
    Rational evaluate(const std::vector<Rational>& point) const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void check(const Polynomial& o) const;
    void normalize(Integer& c) const;

    std::size_t variables_ = 0;
    std::int64_t characteristic_ = 0;
    std::map<Exponent, Integer> terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Division-free determinant (cofactor expansion over column subsets).
Polynomial determinant(const PolyMatrix& m);

}  // namespace forge
