#include "forge/group.hpp"

#include <algorithm>
#include <map>

#include "forge/errors.hpp"

namespace forge {

namespace {

std::int64_t pow_mod(std::int64_t base, unsigned e, std::int64_t m) {
    std::int64_t result = 1 % m;
    base = mod(base, m);
    for (unsigned i = 0; i < e; ++i) result = result * base % m;
    return result;
}

}  // namespace

std::int64_t GroupData::order() const {
    std::int64_t n = 0;
    for (const auto& c : classes) n += c.class_size;
    return n;
}

std::vector<Integer> GroupData::degrees() const {
    std::vector<Integer> out;
    for (const auto& row : table.irreducibles) out.push_back(row.front().rational_value().get_num());
    return out;
}

void GroupData::validate() const {
    if (m < 1) fail(ErrorKind::Input, "m must be >= 1");
    if (!is_prime(prime)) fail(ErrorKind::Input, "p = " + std::to_string(prime) + " is not prime");
    if (gcd(prime, m) != 1) fail(ErrorKind::Input, "p must be coprime to m");
    if (classes.empty()) fail(ErrorKind::Input, "at least one conjugacy class required");
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        if (cls.class_size < 1) fail(ErrorKind::Input, "class sizes must be positive");
        if (cls.eigenvalue_exponents.size() != dim) {
            fail(ErrorKind::Input, "class " + std::to_string(c + 1) + " needs dim W eigenvalue exponents");
        }
        for (auto a : cls.eigenvalue_exponents) {
            if (a < 0 || a >= m) fail(ErrorKind::Input, "eigenvalue exponents must lie in [0, m)");
        }
    }
    const auto& first = classes.front();
    if (first.class_size != 1 ||
        std::any_of(first.eigenvalue_exponents.begin(), first.eigenvalue_exponents.end(), [](auto a) { return a != 0; })) {
        fail(ErrorKind::Input, "class 1 must be the identity");
    }
    const std::int64_t n = order();
    if (n % prime == 0) fail(ErrorKind::Input, "p divides |G| = " + std::to_string(n));
    const auto& rows = table.irreducibles;
    if (rows.size() != classes.size()) fail(ErrorKind::Input, "character table must be square");
    for (const auto& row : rows) {
        if (row.size() != classes.size()) fail(ErrorKind::Input, "character table must be square");
        for (const auto& v : row) {
            if (v.modulus() != m) fail(ErrorKind::Input, "character values must lie in Q(zeta_m)");
        }
        if (!row.front().is_rational() || row.front().rational_value() <= 0 ||
            row.front().rational_value().get_den() != 1) {
            fail(ErrorKind::Input, "character degrees must be positive integers");
        }
    }
    for (const auto& v : rows.front()) {
        if (!(v == Cyclotomic(m, Rational(1)))) fail(ErrorKind::Input, "first character must be trivial");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            Cyclotomic sum(m);
            for (std::size_t c = 0; c < classes.size(); ++c) {
                sum += rows[i][c] * rows[j][c].conjugate() * Rational(classes[c].class_size);
            }
            if (!(sum == Cyclotomic(m, Rational(i == j ? n : 0)))) {
                fail(ErrorKind::Input, "character table rows " + std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1) + " are not orthonormal");
            }
        }
    }
    if (!table.labels.empty() && table.labels.size() != rows.size()) {
        fail(ErrorKind::Input, "one label per irreducible character");
    }
}

ClassFunction truncation_character(const std::vector<ConjugacyClassData>& classes, std::int64_t q,
                                   std::int64_t m) {
    ClassFunction out;
    for (const auto& cls : classes) {
        Cyclotomic value(m, Rational(1));
        for (auto a : cls.eigenvalue_exponents) {
            std::vector<Rational> powers(static_cast<std::size_t>(m), Rational(0));
            std::int64_t exponent = 0;
            for (std::int64_t t = 0; t < q; ++t) {
                powers[static_cast<std::size_t>(exponent)] += 1;
                exponent = mod(exponent + a, m);
            }
            value *= Cyclotomic::from_powers(m, powers);
        }
        out.values.push_back(std::move(value));
    }
    return out;
}

ClassFunction frobenius_twist(const ClassFunction& cf, unsigned e, std::int64_t p, std::int64_t m) {
    if (gcd(p, m) != 1) fail(ErrorKind::Input, "p and m must be coprime for a Frobenius twist");
    const std::int64_t t = inverse_mod(pow_mod(p, e, m), m);
    ClassFunction out;
    for (const auto& v : cf.values) out.values.push_back(v.galois(t));
    return out;
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != b.values.size()) fail(ErrorKind::Input, "class functions of different length");
    ClassFunction out;
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
    return out;
}

std::vector<Integer> decompose_into_irreducibles(const ClassFunction& cf, const CharacterTable& table,
                                                 const std::vector<ConjugacyClassData>& classes) {
    if (cf.values.size() != classes.size()) fail(ErrorKind::Input, "class function length mismatch");
    std::int64_t n = 0;
    for (const auto& c : classes) n += c.class_size;
    const std::int64_t m = cf.values.front().modulus();
    std::vector<Integer> out;
    for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
        Cyclotomic sum(m);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            sum += cf.values[c] * table.irreducibles[i][c].conjugate() * Rational(classes[c].class_size);
        }
        sum = sum * Rational(1, n);
        if (!sum.is_rational() || sum.rational_value().get_den() != 1 || sum.rational_value() < 0) {
            fail(ErrorKind::NonIntegralMultiplicity,
                 "multiplicity of irreducible " + std::to_string(i + 1) + " is " + sum.to_string());
        }
        out.push_back(sum.rational_value().get_num());
    }
    return out;
}

GroupPushforwardReport pushforward_multiplicities(const GroupData& g, unsigned e) {
    g.validate();
    GroupPushforwardReport out;
    out.e = e;
    out.q = ipow(g.prime, e);
    auto twisted = frobenius_twist(truncation_character(g.classes, out.q, g.m), e, g.prime, g.m);
    out.multiplicities = decompose_into_irreducibles(twisted, g.table, g.classes);
    out.labels = g.table.labels;
    return out;
}

GroupMatrix group_multiplicity_matrix(const GroupData& g) {
    g.validate();
    const auto truncation = truncation_character(g.classes, g.prime, g.m);
    const std::size_t n_irr = g.table.irreducibles.size();
    std::map<std::size_t, std::vector<Integer>> columns;
    std::vector<std::size_t> order{0};
    std::vector<bool> reached(n_irr, false);
    reached[0] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t j = order[k];
        ClassFunction chi{g.table.irreducibles[j]};
        auto step = frobenius_twist(product(truncation, chi), 1, g.prime, g.m);
        auto column = decompose_into_irreducibles(step, g.table, g.classes);
        for (std::size_t i = 0; i < n_irr; ++i) {
            if (column[i] > 0 && !reached[i]) {
                reached[i] = true;
                order.push_back(i);
            }
        }
        columns.emplace(j, std::move(column));
    }
    GroupMatrix out;
    for (std::size_t i = 0; i < n_irr; ++i) {
        if (reached[i]) out.irreducible_index.push_back(i);
    }
    const auto degrees = g.degrees();
    auto& mat = out.matrix;
    const std::size_t n = out.irreducible_index.size();
    mat.entries.assign(n, std::vector<Integer>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t i = out.irreducible_index[a];
        mat.labels.push_back(g.table.labels.empty() ? "U" + std::to_string(i) : g.table.labels[i]);
        mat.ranks.push_back(degrees[i]);
        for (std::size_t b = 0; b < n; ++b) mat.entries[a][b] = columns.at(out.irreducible_index[b])[i];
    }
    mat.p = g.prime;
    mat.dim = g.dim;
    mat.base_index = 0;
    return out;
}

namespace {

std::vector<std::int64_t> element_digits(const GradingGroup& grading, std::size_t index) {
    std::vector<std::int64_t> digits;
    for (auto m : grading.torsion_orders) {
        digits.push_back(static_cast<std::int64_t>(index % static_cast<std::size_t>(m)));
        index /= static_cast<std::size_t>(m);
    }
    return digits;
}

}  // namespace

Character abelian_label(const WeightSystem& ws, std::size_t row) {
    return Character{{}, element_digits(ws.grading, row)};
}

GroupData abelian_group_data(const WeightSystem& ws) {
    if (ws.grading.free_rank != 0) fail(ErrorKind::Input, "abelian encoding needs a torsion-only grading");
    GroupData g;
    g.prime = ws.prime;
    g.dim = ws.variables();
    g.m = 1;
    std::size_t order = 1;
    for (auto m : ws.grading.torsion_orders) {
        g.m = lcm(g.m, m);
        order *= static_cast<std::size_t>(m);
    }
    auto pairing = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j] * (g.m / ws.grading.torsion_orders[j]);
        return mod(s, g.m);
    };
    for (std::size_t x = 0; x < order; ++x) {
        auto elem = element_digits(ws.grading, x);
        ConjugacyClassData cls;
        for (const auto& alpha : ws.weights) cls.eigenvalue_exponents.push_back(pairing(alpha.torsion_part, elem));
        g.classes.push_back(std::move(cls));
    }
    for (std::size_t c = 0; c < order; ++c) {
        auto label = element_digits(ws.grading, c);
        std::vector<Cyclotomic> row;
        for (std::size_t x = 0; x < order; ++x) {
            row.push_back(Cyclotomic::root_power(g.m, pairing(label, element_digits(ws.grading, x))));
        }
        g.table.irreducibles.push_back(std::move(row));
        g.table.labels.push_back("U" + to_string(label));
    }
    return g;
}

}  // namespace forge
