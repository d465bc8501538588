#include "forge/frobenius.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

namespace {

std::uint64_t checked_pieces(std::int64_t q, std::size_t d, const EnumerationBudget& budget) {
    std::uint64_t pieces = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (pieces > budget.max_pieces / static_cast<std::uint64_t>(q)) {
            fail(ErrorKind::BudgetExceeded, "q^d = " + std::to_string(q) + "^" + std::to_string(d) +
                                                " exceeds the enumeration cap " +
                                                std::to_string(budget.max_pieces));
        }
        pieces *= static_cast<std::uint64_t>(q);
    }
    return pieces;
}

// Number of residues v ∈ [0,q)^d for each value of Σ v_i α_i.
std::map<Character, std::uint64_t> residue_sum_distribution(const WeightSystem& ws, std::int64_t q) {
    std::map<Character, std::uint64_t> dist{{Character::zero(ws.grading), 1}};
    for (const auto& alpha : ws.weights) {
        std::map<Character, std::uint64_t> next;
        for (const auto& [sum, count] : dist) {
            Character s = sum;
            for (std::int64_t t = 0; t < q; ++t) {
                next[s] += count;
                s = add(ws.grading, s, alpha);
            }
        }
        dist = std::move(next);
    }
    return dist;
}

}  // namespace

DecompositionReport pushforward_decompose(const WeightSystem& ws, const CovariantClass& c, unsigned e,
                                          const EnumerationBudget& budget) {
    if (!c.degree.is_integral()) fail(ErrorKind::Input, "class degree must be integral");
    const std::int64_t q = ipow(ws.prime, e);
    const std::uint64_t pieces = checked_pieces(q, ws.variables(), budget);
    const Character beta = c.degree.to_character();

    DecompositionReport report;
    report.e = e;
    report.q = q;
    report.variables = ws.variables();

    std::map<Character, std::optional<CovariantClass>> memo;
    std::uint64_t seen = 0;
    for (const auto& [sum, count] : residue_sum_distribution(ws, q)) {
        seen += count;
        Character shifted = add(ws.grading, beta, negate(ws.grading, sum));
        RationalCharacter degree = divide_character(ws.grading, shifted, q);
        if (!degree.is_integral()) {
            report.zero_piece_count += count;
            continue;
        }
        const Character target = degree.to_character();
        auto it = memo.find(target);
        if (it == memo.end()) {
            auto gens = minimal_generators(ws, degree);
            std::optional<CovariantClass> cls;
            if (!gens.empty()) cls = CovariantClass::make(degree, std::move(gens));
            it = memo.emplace(target, std::move(cls)).first;
        }
        if (!it->second) {
            report.zero_piece_count += count;
            continue;
        }
        auto& entry = report.entries[it->second->key];
        if (entry.multiplicity == 0) entry.representative = *it->second;
        entry.multiplicity += count;
        entry.by_degree[target] += count;
    }
    if (seen != pieces || !report.conserves()) {
        fail(ErrorKind::InvariantViolation, "residue pieces do not add up to q^d");
    }
    return report;
}

ClosureResult closure_classes(const WeightSystem& ws, unsigned budget, const EnumerationBudget& limits) {
    std::map<CanonicalKey, CovariantClass> known;
    auto base = CovariantClass::base_ring(ws);
    known.emplace(base.key, base);
    std::vector<CovariantClass> pending{base};
    ClosureResult result;
    while (result.rounds < budget) {
        ++result.rounds;
        std::vector<CovariantClass> added;
        for (const auto& c : pending) {
            auto report = pushforward_decompose(ws, c, 1, limits);
            for (const auto& [key, entry] : report.entries) {
                if (known.emplace(key, entry.representative).second) added.push_back(entry.representative);
            }
        }
        if (added.empty()) {
            result.ffrt = true;
            break;
        }
        pending = std::move(added);
    }
    for (auto& [key, c] : known) result.classes.push_back(c);
    return result;
}

std::vector<CovariantClass> strongly_critical_classes(const WeightSystem& ws) {
    const auto& g = ws.grading;
    const std::size_t r = g.free_rank;
    std::vector<std::int64_t> lo(r, 0), hi(r, 0);
    for (const auto& a : ws.weights) {
        for (std::size_t k = 0; k < r; ++k) {
            lo[k] += std::min<std::int64_t>(0, -a.free_part[k]);
            hi[k] += std::max<std::int64_t>(0, -a.free_part[k]);
        }
    }
    std::uint64_t box = 1;
    for (std::size_t k = 0; k < r; ++k) box *= static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
    for (auto m : g.torsion_orders) box *= static_cast<std::uint64_t>(m);
    if (box > 5'000'000) fail(ErrorKind::BudgetExceeded, "zonotope box too large to enumerate");

    std::map<CanonicalKey, CovariantClass> found;
    Character chi = Character::zero(g);
    chi.free_part = lo;
    for (std::uint64_t n = 0; n < box; ++n) {
        // chi runs over the box in mixed radix: torsion digits fastest, then free coordinates
        std::uint64_t rest = n;
        for (std::size_t j = 0; j < g.torsion_orders.size(); ++j) {
            chi.torsion_part[j] = static_cast<std::int64_t>(rest % g.torsion_orders[j]);
            rest /= g.torsion_orders[j];
        }
        for (std::size_t k = 0; k < r; ++k) {
            const auto span = static_cast<std::uint64_t>(hi[k] - lo[k] + 1);
            chi.free_part[k] = lo[k] + static_cast<std::int64_t>(rest % span);
            rest /= span;
        }
        if (!is_strongly_critical(ws, chi) || !in_supp(ws, chi)) continue;
        auto degree = RationalCharacter::from(chi);
        auto cls = CovariantClass::make(degree, minimal_generators(ws, degree));
        found.emplace(cls.key, std::move(cls));
    }
    std::vector<CovariantClass> out;
    for (auto& [key, c] : found) out.push_back(std::move(c));
    return out;
}

RankIdentity check_rank_identity(const WeightSystem& ws, const MultiplicityMatrix& m) {
    RankIdentity out;
    for (const auto& f : invariant_factors(invariant_generators(ws))) {
        if (f > 1) out.torsion_factors.push_back(f);
    }
    bool coprime = std::all_of(out.torsion_factors.begin(), out.torsion_factors.end(),
                               [&](const Integer& f) { return gcd(f, Integer(ws.prime)) == 1; });
    Integer target;
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(ws.prime), m.dim);
    std::ostringstream bad;
    for (std::size_t j = 0; j < m.size(); ++j) {
        Integer sum = 0;
        for (std::size_t i = 0; i < m.size(); ++i) sum += m.entries[i][j] * m.ranks[i];
        if (sum != target * m.ranks[j]) {
            bad << " column " << m.labels[j] << " sums to " << sum.get_str() << " (expected "
                << Integer(target * m.ranks[j]).get_str() << ")";
        }
    }
    if (!coprime) {
        out.status = RankIdentity::Status::Unchecked;
        out.diagnostic = "p shares a factor with the torsion of Z^d/<invariant exponents>; rank identity not asserted";
        if (!bad.str().empty()) out.diagnostic += ";" + bad.str();
        return out;
    }
    if (bad.str().empty()) {
        out.status = RankIdentity::Status::Verified;
        out.diagnostic = "w·E = p^dim·w holds exactly";
    } else {
        out.status = RankIdentity::Status::Violated;
        out.diagnostic = "rank identity violated:" + bad.str() +
                         "; suspect an interaction between the torsion of the grading and p";
    }
    return out;
}

ClassMatrix multiplicity_matrix(const WeightSystem& ws, unsigned closure_budget,
                                const EnumerationBudget& limits) {
    auto closure = closure_classes(ws, closure_budget, limits);
    if (!closure.ffrt) {
        fail(ErrorKind::NotFFRT, "closure did not stabilise within " + std::to_string(closure_budget) +
                                     " rounds");
    }
    return matrix_over_classes(ws, closure.classes, limits);
}

ClassMatrix matrix_over_classes(const WeightSystem& ws, std::vector<CovariantClass> classes,
                                const EnumerationBudget& limits) {
    std::sort(classes.begin(), classes.end(),
              [](const CovariantClass& a, const CovariantClass& b) { return a.key < b.key; });
    ClassMatrix out;
    out.classes = std::move(classes);
    const std::size_t n = out.classes.size();
    auto& m = out.matrix;
    m.entries.assign(n, std::vector<Integer>(n, 0));
    m.ranks.assign(n, Integer(1));
    m.p = ws.prime;
    m.dim = krull_dim(ws);
    const auto base_key = CovariantClass::base_ring(ws).key;
    bool has_base = false;
    for (std::size_t j = 0; j < n; ++j) {
        m.labels.push_back(describe_key(out.classes[j].key));
        if (out.classes[j].key == base_key) {
            m.base_index = j;
            has_base = true;
        }
        auto report = pushforward_decompose(ws, out.classes[j], 1, limits);
        std::uint64_t covered = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto k = report.multiplicity(out.classes[i].key);
            covered += k;
            m.entries[i][j] = Integer(static_cast<unsigned long>(k));
        }
        if (covered != report.total()) {
            fail(ErrorKind::InvariantViolation, "pushforward of " + m.labels[j] + " leaves the class set");
        }
    }
    if (!has_base) fail(ErrorKind::InvariantViolation, "class set does not contain R");
    out.rank_identity = check_rank_identity(ws, m);
    return out;
}

std::uint64_t multiplicity_direct(const WeightSystem& ws, unsigned e, const CovariantClass& mi,
                                  const CovariantClass& mj, const EnumerationBudget& limits) {
    return pushforward_decompose(ws, mj, e, limits).multiplicity(mi.key);
}

std::string describe_key(const CanonicalKey& key) {
    std::string out = "{";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += ' ';
        out += to_string(key[i]);
    }
    return out + "}";
}

std::string describe_character(const Character& c) {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < c.free_part.size(); ++k) out << (k ? " " : "") << c.free_part[k];
    if (!c.torsion_part.empty()) {
        out << " |";
        for (auto t : c.torsion_part) out << ' ' << t;
    }
    out << ']';
    return out.str();
}

std::string describe_character(const RationalCharacter& c) {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < c.free_part.size(); ++k) out << (k ? " " : "") << c.free_part[k].get_str();
    if (!c.torsion_part.empty()) {
        out << " |";
        for (auto t : c.torsion_part) out << ' ' << t;
    }
    out << ']';
    return out.str();
}

}  // namespace forge
