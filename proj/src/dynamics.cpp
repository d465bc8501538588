#include "forge/dynamics.hpp"

#include <algorithm>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

void MultiplicityMatrix::validate() const {
    const std::size_t n = entries.size();
    for (const auto& row : entries) {
        if (row.size() != n) fail(ErrorKind::Input, "multiplicity matrix must be square");
        for (const auto& x : row) {
            if (x < 0) fail(ErrorKind::Input, "multiplicity matrix entries must be nonnegative");
        }
    }
    if (!labels.empty() && labels.size() != n) fail(ErrorKind::Input, "one label per class required");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        fail(ErrorKind::Input, "class labels must be distinct");
    }
    if (ranks.size() != n) fail(ErrorKind::Input, "one rank per class required");
    for (const auto& r : ranks) {
        if (r <= 0) fail(ErrorKind::Input, "ranks must be positive");
    }
    if (n > 0 && base_index >= n) fail(ErrorKind::Input, "base index out of range");
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
    IntMatrix out(n, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

IntMatrix identity(std::size_t n) {
    IntMatrix out(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

IntMatrix power(const IntMatrix& a, unsigned e) {
    IntMatrix result = identity(a.size());
    IntMatrix base = a;
    while (e) {
        if (e & 1u) result = multiply(result, base);
        e >>= 1u;
        if (e) base = multiply(base, base);
    }
    return result;
}

unsigned wielandt_bound(std::size_t n) {
    return n == 0 ? 1 : static_cast<unsigned>((n - 1) * (n - 1) + 1);
}

namespace {

using Pattern = std::vector<std::vector<bool>>;

Pattern pattern_of(const IntMatrix& e) {
    Pattern p(e.size(), std::vector<bool>(e.size(), false));
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) p[i][j] = e[i][j] > 0;
    }
    return p;
}

Pattern multiply(const Pattern& a, const Pattern& b) {
    const std::size_t n = a.size();
    Pattern out(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (!a[i][l]) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] = out[i][j] || b[l][j];
        }
    }
    return out;
}

bool all_positive(const Pattern& p) {
    return std::all_of(p.begin(), p.end(),
                       [](const auto& row) { return std::all_of(row.begin(), row.end(), [](bool b) { return b; }); });
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size();
    RatMatrix out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

}  // namespace

std::optional<unsigned> primitivity(const IntMatrix& e) {
    if (e.empty()) return std::nullopt;
    const Pattern base = pattern_of(e);
    Pattern current = base;
    const unsigned bound = wielandt_bound(e.size());
    for (unsigned u = 1; u <= bound; ++u) {
        if (all_positive(current)) return u;
        current = multiply(current, base);
    }
    return std::nullopt;
}

PerronData perron(const MultiplicityMatrix& m, const Rational& tolerance) {
    m.validate();
    if (tolerance <= 0) fail(ErrorKind::Input, "tolerance must be positive");
    const std::size_t n = m.size();
    auto u = primitivity(m.entries);
    if (!u) fail(ErrorKind::NotPrimitive, "no power of E within the Wielandt bound is positive");

    PerronData out;
    out.primitivity_exponent = *u;
    mpz_ui_pow_ui(out.lambda.get_mpz_t(), static_cast<unsigned long>(m.p), m.dim);
    out.left_eigenvector = m.ranks;
    for (std::size_t j = 0; j < n; ++j) {
        Integer sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += m.ranks[i] * m.entries[i][j];
        if (sum != out.lambda * m.ranks[j]) {
            fail(ErrorKind::EigenCheckFailed,
                 "w·E differs from p^dim·w in column " + (m.labels.empty() ? std::to_string(j) : m.labels[j]) +
                     ": " + sum.get_str() + " vs " + Integer(out.lambda * m.ranks[j]).get_str());
        }
    }
    out.verified = true;

    RatMatrix current(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            current[i][j] = Rational(m.entries[i][j], out.lambda);
            current[i][j].canonicalize();
        }
    }
    constexpr unsigned max_squarings = 30;
    for (;;) {
        RatMatrix next = multiply(current, current);
        ++out.squarings;
        Rational gap = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) gap = std::max<Rational>(gap, abs(next[i][j] - current[i][j]));
        }
        current = std::move(next);
        if (gap < tolerance) break;
        if (out.squarings >= max_squarings) {
            fail(ErrorKind::BudgetExceeded, "limit iteration did not reach the tolerance");
        }
    }
    for (const auto& row : current) {
        for (const auto& x : row) {
            if (x <= 0) fail(ErrorKind::InvariantViolation, "limit matrix has a non-positive entry");
        }
    }
    out.limit_matrix = std::move(current);
    return out;
}

SfrCertificate sfr_positivity_certificate(const IntMatrix& e, std::size_t index_of_r) {
    SfrCertificate out;
    const std::size_t n = e.size();
    if (index_of_r >= n) fail(ErrorKind::Input, "index of R out of range");
    const Pattern base = pattern_of(e);
    Pattern current = base;
    const unsigned bound = wielandt_bound(n);
    for (unsigned u = 1; u <= bound; ++u) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) ok = current[index_of_r][k] && current[k][index_of_r];
        if (ok) {
            out.certified = true;
            out.exponent = u;
            return out;
        }
        current = multiply(current, base);
    }
    out.exponent = bound;
    return out;
}

MinFindimResult min_findim_sequence(const std::vector<std::vector<Integer>>& multiplicities_at_r,
                                    const std::vector<Integer>& division_dims, bool primitive) {
    MinFindimResult out;
    Integer sup = 0;
    for (const auto& row : multiplicities_at_r) {
        if (row.size() != division_dims.size()) {
            fail(ErrorKind::Input, "one division-algebra dimension per class required");
        }
        std::optional<Integer> best;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            Integer v = division_dims[j] * row[j];
            if (!best || v < *best) best = v;
        }
        Integer u = best.value_or(Integer(0));
        out.sequence.push_back(u);
        sup = std::max(sup, u);
        out.running_sup.push_back(sup);
    }
    out.no_finite_dimensional_reps = primitive;
    return out;
}

BlockReport semisimple_block_report(const std::vector<Integer>& multiplicities,
                                    const std::vector<Integer>& division_dims,
                                    const std::vector<std::string>& labels) {
    if (multiplicities.size() != division_dims.size() || multiplicities.size() != labels.size()) {
        fail(ErrorKind::Input, "block report inputs must have equal length");
    }
    BlockReport out;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (multiplicities[i] < 1) fail(ErrorKind::Input, "block multiplicities must be >= 1");
        BlockReport::Block b;
        b.label = labels[i];
        b.multiplicity = multiplicities[i];
        b.division_dim = division_dims[i];
        b.simple_dim = multiplicities[i] * division_dims[i];
        b.maximal_ideal = "P_" + std::to_string(i + 1) + " = {phi : phi_" + std::to_string(i + 1) +
                          std::to_string(i + 1) + " contains only non-invertible entries}";
        out.blocks.push_back(std::move(b));
    }
    return out;
}

std::string BlockReport::render() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        if (i) out << " x ";
        out << "M(" << b.multiplicity.get_str() << ", " << (b.division_dim == 1 ? "k" : "D_" + std::to_string(i + 1))
            << ")";
    }
    return out.str();
}

std::string to_decimal(const Rational& r, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(r) * scale + Rational(1, 2);
    Integer whole;
    mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    std::string s = whole.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    bool zero = whole == 0;
    return (r < 0 && !zero ? "-" : "") + s;
}

}  // namespace forge
