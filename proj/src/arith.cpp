#include "forge/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return std::llabs(a / gcd(a, b) * b);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_s - quot * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        fail(ErrorKind::Input, std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    return mod(old_s, m);
}

std::int64_t ipow(std::int64_t base, unsigned exponent) {
    std::int64_t result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

namespace {

Rational parse_decimal(const std::string& original, const std::string& text) {
    auto bad = [&] { fail(ErrorKind::Input, "malformed rational '" + original + "'"); };
    std::size_t epos = text.find_first_of("eE");
    std::string mantissa = text.substr(0, epos);
    std::int64_t exponent = 0;
    if (epos != std::string::npos) {
        std::string tail = text.substr(epos + 1);
        if (tail.empty()) bad();
        std::size_t used = 0;
        try {
            exponent = std::stoll(tail, &used);
        } catch (const std::exception&) {
            bad();
        }
        if (used != tail.size() || exponent > 1000 || exponent < -1000) bad();
    }
    bool negative = !mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+');
    if (negative && mantissa[0] == '+') negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) mantissa.erase(0, 1);
    std::size_t dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<std::int64_t>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) bad();
    Integer n(digits, 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent < 0 ? Rational(n, scale) : Rational(n * scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    Rational r;
    std::string trimmed = text;
    trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), ::isspace), trimmed.end());
    if (trimmed.find_first_of(".eE") != std::string::npos && trimmed.find('/') == std::string::npos) {
        return parse_decimal(text, trimmed);
    }
    if (trimmed.empty() || r.set_str(trimmed, 10) != 0) {
        fail(ErrorKind::Input, "malformed rational '" + text + "'");
    }
    if (r.get_den() == 0) fail(ErrorKind::Input, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Exponent& e) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out << ',';
        out << e[i];
    }
    out << ')';
    return out.str();
}

std::size_t rank(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& row : rows) {
        m.emplace_back(row.begin(), row.end());
    }
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<Integer> invariant_factors(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return {};
    std::vector<std::vector<Integer>> a;
    for (const auto& row : rows) a.emplace_back(row.begin(), row.end());
    const std::size_t n_rows = a.size(), n_cols = a.front().size();
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(n_rows, n_cols); ++t) {
        // pick the smallest nonzero entry in the trailing block as pivot
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t i = t; i < n_rows; ++i) {
            for (std::size_t j = t; j < n_cols; ++j) {
                if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n_rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer qt;
                mpz_fdiv_q(qt.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < n_cols; ++j) a[i][j] -= qt * a[t][j];
                if (a[i][t] != 0) {
                    clean = false;
                    std::swap(a[t], a[i]);
                }
            }
            for (std::size_t j = t + 1; j < n_cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer qt;
                mpz_fdiv_q(qt.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < n_rows; ++i) a[i][j] -= qt * a[i][t];
                if (a[t][j] != 0) {
                    clean = false;
                    for (auto& row : a) std::swap(row[t], row[j]);
                }
            }
            if (!clean) continue;
            // divisibility condition: pivot must divide the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < n_rows && divides; ++i) {
                for (std::size_t j = t + 1; j < n_cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < n_cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

}  // namespace forge
