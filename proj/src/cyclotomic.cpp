#include "forge/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

namespace {

// Divides a by the monic b over Z; a must be divisible.
std::vector<Integer> exact_divide(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    std::vector<Integer> quotient(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        quotient[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return quotient;
}

// Remainder of a polynomial with rational coefficients modulo the monic integer polynomial phi.
std::vector<Rational> reduce(std::vector<Rational> a, const std::vector<Integer>& phi) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
        Rational c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
    }
    a.resize(deg, Rational(0));
    return a;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) fail(ErrorKind::Input, "cyclotomic modulus must be >= 1");
    static std::mutex guard;
    static std::map<std::int64_t, std::vector<Integer>> cache;
    {
        std::lock_guard lock(guard);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    std::vector<Integer> poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d == 0) poly = exact_divide(poly, cyclotomic_polynomial(d));
    }
    std::lock_guard lock(guard);
    cache.emplace(m, poly);
    return poly;
}

std::int64_t euler_phi(std::int64_t m) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= m; ++k) count += gcd(k, m) == 1;
    return count;
}

Cyclotomic::Cyclotomic(std::int64_t modulus) : Cyclotomic(modulus, Rational(0)) {}

Cyclotomic::Cyclotomic(std::int64_t modulus, const Rational& value)
    : modulus_(modulus), coeffs_(static_cast<std::size_t>(euler_phi(modulus)), Rational(0)) {
    if (modulus < 1) fail(ErrorKind::Input, "cyclotomic modulus must be >= 1");
    coeffs_[0] = value;
}

Cyclotomic Cyclotomic::from_powers(std::int64_t modulus, const std::vector<Rational>& by_power) {
    std::vector<Rational> folded(static_cast<std::size_t>(modulus), Rational(0));
    for (std::size_t k = 0; k < by_power.size(); ++k) folded[k % static_cast<std::size_t>(modulus)] += by_power[k];
    Cyclotomic out(modulus);
    out.coeffs_ = reduce(std::move(folded), cyclotomic_polynomial(modulus));
    return out;
}

Cyclotomic Cyclotomic::root_power(std::int64_t modulus, std::int64_t k) {
    std::vector<Rational> powers(static_cast<std::size_t>(modulus), Rational(0));
    powers[static_cast<std::size_t>(mod(k, modulus))] = 1;
    return from_powers(modulus, powers);
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

Rational Cyclotomic::rational_value() const { return coeffs_[0]; }

bool Cyclotomic::is_zero() const { return is_rational() && coeffs_[0] == 0; }

Cyclotomic Cyclotomic::galois(std::int64_t t) const {
    if (gcd(t, modulus_) != 1) {
        fail(ErrorKind::Input, "Galois exponent " + std::to_string(t) + " is not a unit mod " +
                                   std::to_string(modulus_));
    }
    std::vector<Rational> powers(static_cast<std::size_t>(modulus_), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        powers[static_cast<std::size_t>(mod(static_cast<std::int64_t>(k) * t, modulus_))] += coeffs_[k];
    }
    return from_powers(modulus_, powers);
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (modulus_ != o.modulus_) fail(ErrorKind::Input, "mixing cyclotomic fields of different moduli");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same(o);
    std::vector<Rational> product(2 * coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = reduce(std::move(product), cyclotomic_polynomial(modulus_));
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << 'z';
        if (k > 1) out << '^' << k;
    }
    return first ? "0" : out.str();
}

Cyclotomic Cyclotomic::parse(std::int64_t modulus, const std::string& text) {
    std::vector<Rational> powers(static_cast<std::size_t>(modulus), Rational(0));
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto bad = [&](const std::string& why) -> void {
        fail(ErrorKind::Input, "cannot parse cyclotomic '" + text + "': " + why);
    };
    auto read_int = [&](std::string& digits) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    };
    bool any = false;
    skip();
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (any) {
            bad("expected + or - between terms");
        }
        Rational coeff = 1;
        bool has_coeff = false, has_z = false;
        std::string num;
        read_int(num);
        if (!num.empty()) {
            has_coeff = true;
            std::string den;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                read_int(den);
                if (den.empty()) bad("missing denominator");
            }
            coeff = parse_rational(den.empty() ? num : num + "/" + den);
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                if (pos >= text.size() || text[pos] != 'z') bad("expected z after *");
            }
        }
        std::int64_t power = 0;
        if (pos < text.size() && text[pos] == 'z') {
            has_z = true;
            power = 1;
            ++pos;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                bool negative = false;
                if (pos < text.size() && text[pos] == '-') {
                    negative = true;
                    ++pos;
                }
                std::string digits;
                read_int(digits);
                if (digits.empty()) bad("missing exponent");
                power = std::stoll(digits) * (negative ? -1 : 1);
            }
        }
        if (!has_coeff && !has_z) bad("empty term");
        powers[static_cast<std::size_t>(mod(power, modulus))] += coeff * sign;
        any = true;
        skip();
    }
    if (!any) bad("empty expression");
    return from_powers(modulus, powers);
}

}  // namespace forge
