#include "forge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "forge/errors.hpp"

namespace forge {

Polynomial::Polynomial(std::size_t variables, std::int64_t characteristic)
    : variables_(variables), characteristic_(characteristic) {
    if (characteristic < 0 || (characteristic > 0 && !is_prime(characteristic))) {
        fail(ErrorKind::Input, "characteristic must be 0 or a prime");
    }
}

Polynomial Polynomial::constant(std::size_t variables, std::int64_t characteristic, const Integer& c) {
    return monomial(variables, characteristic, Exponent(variables, 0), c);
}

Polynomial Polynomial::monomial(std::size_t variables, std::int64_t characteristic, const Exponent& e,
                                const Integer& c) {
    Polynomial p(variables, characteristic);
    p.add_term(e, c);
    return p;
}

void Polynomial::normalize(Integer& c) const {
    if (characteristic_ > 0) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(characteristic_));
        c = r;
    }
}

void Polynomial::add_term(const Exponent& e, const Integer& c) {
    if (e.size() != variables_) fail(ErrorKind::Input, "exponent length does not match the ring");
    Integer v = c;
    normalize(v);
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(e, v);
    if (!inserted) {
        it->second += v;
        normalize(it->second);
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check(const Polynomial& o) const {
    if (variables_ != o.variables_ || characteristic_ != o.characteristic_) {
        fail(ErrorKind::Input, "polynomials over different rings");
    }
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t best = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check(o);
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check(o);
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check(o);
    Polynomial out(variables_, characteristic_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e(variables_);
            for (std::size_t i = 0; i < variables_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < variables_; ++i) {
            for (std::int64_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest total degree first, then lexicographically descending exponents
    std::vector<std::pair<Exponent, Integer>> ordered(terms_.rbegin(), terms_.rend());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        std::int64_t da = 0, db = 0;
        for (auto x : a.first) da += x;
        for (auto x : b.first) db += x;
        return da > db;
    });
    for (const auto& [e, c] : ordered) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        bool wrote = false;
        if (mag != 1 || constant) {
            out << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) out << '*';
            out << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (e[i] > 1) out << '^' << e[i];
            wrote = true;
        }
    }
    return out.str();
}

Polynomial Polynomial::parse(const std::string& text, const std::vector<std::string>& names,
                             std::int64_t characteristic) {
    Polynomial out(names.size(), characteristic);
    std::size_t pos = 0;
    auto bad = [&](const std::string& why) {
        fail(ErrorKind::Input, "cannot parse polynomial '" + text + "': " + why);
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&] {
        std::string d;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) d += text[pos++];
        return d;
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
        Integer coeff = sign;
        Exponent e(names.size(), 0);
        bool factor = false;
        for (;;) {
            skip();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff *= Integer(read_digits());
            } else if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                std::string name;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                    name += text[pos++];
                }
                auto it = std::find(names.begin(), names.end(), name);
                if (it == names.end()) bad("unknown variable '" + name + "'");
                std::int64_t power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    auto d = read_digits();
                    if (d.empty()) bad("missing exponent");
                    power = std::stoll(d);
                }
                e[static_cast<std::size_t>(it - names.begin())] += power;
            } else {
                bad("expected a number or variable");
            }
            factor = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!factor) bad("empty term");
        out.add_term(e, coeff);
        any = true;
        skip();
    }
    if (!any) bad("empty expression");
    return out;
}

Polynomial determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) fail(ErrorKind::Input, "determinant of an empty matrix");
    for (const auto& row : m) {
        if (row.size() != n) fail(ErrorKind::Input, "determinant needs a square matrix");
    }
    if (n > 20) fail(ErrorKind::BudgetExceeded, "determinant size too large for cofactor expansion");
    const std::size_t vars = m[0][0].variables();
    const std::int64_t ch = m[0][0].characteristic();
    // minors[mask] = det of rows [n - popcount(mask), n) restricted to columns in mask
    std::unordered_map<std::uint32_t, Polynomial> minors;
    minors.emplace(0u, Polynomial::constant(vars, ch, 1));
    for (std::size_t size = 1; size <= n; ++size) {
        const std::size_t row = n - size;
        std::unordered_map<std::uint32_t, Polynomial> next;
        for (const auto& [mask, sub] : minors) {
            for (std::size_t col = 0; col < n; ++col) {
                const std::uint32_t bit = 1u << col;
                if (mask & bit) continue;
                // sign of the cofactor: columns of the minor that precede col
                const int before = __builtin_popcount(mask & (bit - 1u));
                Polynomial term = m[row][col] * sub;
                if (before % 2) term = Polynomial(vars, ch) - term;
                auto [it, inserted] = next.emplace(mask | bit, term);
                if (!inserted) it->second = it->second + term;
            }
        }
        minors = std::move(next);
    }
    return minors.at((n == 32 ? 0u : (1u << n)) - 1u);
}

}  // namespace forge
