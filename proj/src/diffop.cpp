#include "forge/diffop.hpp"

#include <algorithm>
#include <set>

#include "forge/detail/enumerate.hpp"
#include "forge/errors.hpp"
#include "forge/monomial.hpp"

namespace forge {

MonomialWindow::MonomialWindow(std::size_t variables, std::int64_t window)
    : variables_(variables), window_(window) {
    if (variables == 0) fail(ErrorKind::Input, "operators need at least one variable");
    if (window < 1) fail(ErrorKind::Input, "window must be >= 1");
    Exponent e(variables, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == variables) {
            monomials_.push_back(e);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            e[i] = v;
            rec(i + 1, left - v);
        }
        e[i] = 0;
    };
    rec(0, window - 1);
    auto degree_of = [](const Exponent& m) {
        std::int64_t d = 0;
        for (auto x : m) d += x;
        return d;
    };
    std::sort(monomials_.begin(), monomials_.end(), [&](const Exponent& a, const Exponent& b) {
        auto da = degree_of(a), db = degree_of(b);
        return da != db ? da < db : a < b;
    });
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
        degrees_.push_back(degree_of(monomials_[k]));
        index_.emplace(monomials_[k], k);
    }
}

std::optional<std::size_t> MonomialWindow::find(const Exponent& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TruncatedOperator::TruncatedOperator(std::shared_ptr<const MonomialWindow> window, std::int64_t characteristic,
                                     std::int64_t shift)
    : window_(std::move(window)), characteristic_(characteristic), shift_(shift) {
    if (!is_prime(characteristic)) fail(ErrorKind::Input, "operators need a prime characteristic");
    const std::int64_t top = window_->window() - 1;
    safe_degree_ = std::min(top, top - shift);
    columns_.resize(window_->size());
}

TruncatedOperator TruncatedOperator::from_rule(std::size_t variables, std::int64_t characteristic,
                                               std::int64_t window, std::int64_t shift,
                                               const std::function<MonomialImage(const Exponent&)>& rule) {
    TruncatedOperator op(std::make_shared<MonomialWindow>(variables, window), characteristic, shift);
    const auto& w = *op.window_;
    for (std::size_t k = 0; k < w.size() && w.degree(k) <= op.safe_degree_; ++k) {
        for (const auto& [e, c] : rule(w.monomial(k))) {
            std::int64_t value = mod(c, characteristic);
            if (value == 0) continue;
            auto idx = w.find(e);
            if (!idx) {
                fail(ErrorKind::InvariantViolation, "image of " + to_string(w.monomial(k)) +
                                                        " exceeds the declared degree shift");
            }
            auto& slot = op.columns_[k][*idx];
            slot = mod(slot + value, characteristic);
            if (slot == 0) op.columns_[k].erase(*idx);
        }
    }
    return op;
}

namespace {

void accumulate(SparseVector& target, std::size_t index, std::int64_t value, std::int64_t p) {
    auto& slot = target[index];
    slot = mod(slot + value, p);
    if (slot == 0) target.erase(index);
}

Exponent shifted(const Exponent& e, std::size_t variable, std::int64_t by) {
    Exponent out = e;
    out[variable] += by;
    return out;
}

}  // namespace

TruncatedOperator TruncatedOperator::commutator(std::size_t variable) const {
    if (variable >= window_->variables()) fail(ErrorKind::Input, "commutator variable out of range");
    TruncatedOperator out(window_, characteristic_, shift_ + 1);
    out.safe_degree_ = safe_degree_ - 1;
    const auto& w = *window_;
    for (std::size_t k = 0; k < w.size() && w.degree(k) <= out.safe_degree_; ++k) {
        SparseVector result;
        for (const auto& [idx, c] : columns_[k]) {
            auto target = w.find(shifted(w.monomial(idx), variable, 1));
            if (!target) fail(ErrorKind::InvariantViolation, "commutator left the window");
            accumulate(result, *target, c, characteristic_);
        }
        auto moved = w.find(shifted(w.monomial(k), variable, 1));
        for (const auto& [idx, c] : columns_[*moved]) accumulate(result, idx, -c, characteristic_);
        out.columns_[k] = std::move(result);
    }
    return out;
}

TruncatedOperator TruncatedOperator::compose_multiplication(const Polynomial& f) const {
    if (f.characteristic() != characteristic_ || f.variables() != window_->variables()) {
        fail(ErrorKind::Input, "multiplier lives in a different ring");
    }
    const std::int64_t fdeg = std::max<std::int64_t>(f.total_degree(), 0);
    TruncatedOperator out(window_, characteristic_, shift_ + fdeg);
    out.safe_degree_ = std::min(safe_degree_, out.safe_degree_);
    const auto& w = *window_;
    for (std::size_t k = 0; k < w.size() && w.degree(k) <= out.safe_degree_; ++k) {
        SparseVector result;
        for (const auto& [idx, c] : columns_[k]) {
            for (const auto& [fe, fc] : f.terms()) {
                Exponent e = w.monomial(idx);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += fe[i];
                auto target = w.find(e);
                if (!target) fail(ErrorKind::InvariantViolation, "product left the window");
                accumulate(result, *target, c * mod(fc.get_si(), characteristic_), characteristic_);
            }
        }
        out.columns_[k] = std::move(result);
    }
    return out;
}

TruncatedOperator TruncatedOperator::operator+(const TruncatedOperator& o) const {
    if (o.window_->window() != window_->window() || o.window_->variables() != window_->variables() ||
        o.characteristic_ != characteristic_) {
        fail(ErrorKind::Input, "operators on different windows");
    }
    TruncatedOperator out(window_, characteristic_, std::max(shift_, o.shift_));
    out.safe_degree_ = std::min(safe_degree_, o.safe_degree_);
    const auto& w = *window_;
    for (std::size_t k = 0; k < w.size() && w.degree(k) <= out.safe_degree_; ++k) {
        SparseVector result = columns_[k];
        for (const auto& [idx, c] : o.columns_[k]) accumulate(result, idx, c, characteristic_);
        out.columns_[k] = std::move(result);
    }
    return out;
}

bool TruncatedOperator::vanishes_on_safe_window() const {
    const auto& w = *window_;
    for (std::size_t k = 0; k < w.size() && w.degree(k) <= safe_degree_; ++k) {
        if (!columns_[k].empty()) return false;
    }
    return true;
}

SparseVector TruncatedOperator::apply(const Exponent& e) const {
    auto idx = window_->find(e);
    if (!idx || window_->degree(*idx) > safe_degree_) {
        fail(ErrorKind::WindowTooSmall, "monomial " + to_string(e) + " is outside the safe window");
    }
    return columns_[*idx];
}

namespace operators {

namespace {

std::int64_t binomial_mod(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

Polynomial random_polynomial(std::size_t variables, std::int64_t p, std::int64_t degree, std::mt19937_64& rng) {
    Polynomial f(variables, p);
    MonomialWindow support(variables, degree + 1);
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    std::bernoulli_distribution keep(0.5);
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (keep(rng)) f.add_term(support.monomial(k), coeff(rng));
    }
    return f;
}

}  // namespace

TruncatedOperator multiplication(const Polynomial& f, std::int64_t window) {
    const std::int64_t shift = std::max<std::int64_t>(f.total_degree(), 0);
    return TruncatedOperator::from_rule(f.variables(), f.characteristic(), window, shift, [&](const Exponent& m) {
        MonomialImage out;
        for (const auto& [e, c] : f.terms()) {
            Exponent t = m;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += e[i];
            out[t] += c.get_si();
        }
        return out;
    });
}

TruncatedOperator hasse_derivative(std::size_t variables, std::int64_t characteristic, const Exponent& a,
                                   std::int64_t window) {
    std::int64_t order = 0;
    for (auto x : a) order += x;
    return TruncatedOperator::from_rule(variables, characteristic, window, -order, [&](const Exponent& m) {
        MonomialImage out;
        std::int64_t c = 1;
        Exponent t = m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            c = c * binomial_mod(m[i], a[i], characteristic) % characteristic;
            t[i] -= a[i];
        }
        if (c != 0) out[t] = c;
        return out;
    });
}

TruncatedOperator residue_projection(std::size_t variables, std::int64_t characteristic, std::int64_t q,
                                     const Exponent& v, std::int64_t window) {
    return TruncatedOperator::from_rule(variables, characteristic, window, 0, [&](const Exponent& m) {
        MonomialImage out;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (mod(m[i], q) != mod(v[i], q)) return out;
        }
        out[m] = 1;
        return out;
    });
}

TruncatedOperator random_rq_linear(std::size_t variables, std::int64_t characteristic, std::int64_t q,
                                   std::int64_t image_degree, std::int64_t window, std::mt19937_64& rng) {
    std::map<Exponent, Polynomial> images;
    Exponent v(variables, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == variables) {
            images.emplace(v, random_polynomial(variables, characteristic, image_degree, rng));
            return;
        }
        for (std::int64_t x = 0; x < q; ++x) {
            v[i] = x;
            rec(i + 1);
        }
        v[i] = 0;
    };
    rec(0);
    return TruncatedOperator::from_rule(variables, characteristic, window, image_degree, [&](const Exponent& m) {
        Exponent base(m.size()), rest(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            rest[i] = m[i] % q;
            base[i] = m[i] - rest[i];
        }
        MonomialImage out;
        for (const auto& [e, c] : images.at(rest).terms()) {
            Exponent t = e;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += base[i];
            out[t] += c.get_si();
        }
        return out;
    });
}

TruncatedOperator random_bounded_order(std::size_t variables, std::int64_t characteristic, std::int64_t order,
                                       std::int64_t coefficient_degree, std::int64_t window,
                                       std::mt19937_64& rng) {
    MonomialWindow orders(variables, order + 1);
    std::vector<std::pair<Exponent, Polynomial>> terms;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        terms.emplace_back(orders.monomial(k), random_polynomial(variables, characteristic, coefficient_degree, rng));
    }
    return TruncatedOperator::from_rule(
        variables, characteristic, window, coefficient_degree, [&](const Exponent& m) {
            MonomialImage out;
            for (const auto& [a, f] : terms) {
                std::int64_t c = 1;
                Exponent t = m;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    c = c * binomial_mod(m[i], a[i], characteristic) % characteristic;
                    t[i] -= a[i];
                }
                if (c == 0) continue;
                for (const auto& [e, fc] : f.terms()) {
                    Exponent s = t;
                    for (std::size_t i = 0; i < s.size(); ++i) s[i] += e[i];
                    out[s] += c * fc.get_si();
                }
            }
            return out;
        });
}

}  // namespace operators

std::optional<std::int64_t> operator_order(const TruncatedOperator& op, std::int64_t max_order) {
    const std::size_t n = op.window().variables();
    // nested commutators indexed by non-decreasing variable sequences
    std::vector<std::pair<TruncatedOperator, std::size_t>> level{{op, 0}};
    for (std::int64_t order = 0; order <= max_order; ++order) {
        std::vector<std::pair<TruncatedOperator, std::size_t>> next;
        for (const auto& [c, first] : level) {
            for (std::size_t i = first; i < n; ++i) next.emplace_back(c.commutator(i), i);
        }
        if (next.front().first.safe_degree() < 0) {
            fail(ErrorKind::WindowTooSmall, "window exhausted after " + std::to_string(order + 1) +
                                                " nested commutators");
        }
        bool all_vanish = std::all_of(next.begin(), next.end(),
                                      [](const auto& entry) { return entry.first.vanishes_on_safe_window(); });
        if (all_vanish) return order;
        level = std::move(next);
    }
    return std::nullopt;
}

bool is_rq_linear(const TruncatedOperator& op, std::int64_t q) {
    const auto& w = op.window();
    bool checked = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w.degree(k) + q > op.safe_degree()) break;
        const SparseVector plain = op.image(k);
        for (std::size_t i = 0; i < w.variables(); ++i) {
            checked = true;
            SparseVector lhs = op.apply(shifted(w.monomial(k), i, q));
            SparseVector rhs;
            for (const auto& [idx, c] : plain) {
                auto target = w.find(shifted(w.monomial(idx), i, q));
                if (!target) fail(ErrorKind::InvariantViolation, "x^q multiplication left the window");
                rhs[*target] = c;
            }
            if (lhs != rhs) return false;
        }
    }
    if (!checked) fail(ErrorKind::WindowTooSmall, "no monomial leaves room for a degree-q multiplication");
    return true;
}

void RingExtensionPresentation::validate() const {
    const std::size_t n = size();
    if (n == 0) fail(ErrorKind::Input, "extension needs at least the basis element 1");
    if (structure.size() != n) fail(ErrorKind::Input, "structure constants have the wrong shape");
    const std::size_t vars = base_variables.size();
    const Polynomial zero(vars, characteristic);
    const Polynomial one = Polynomial::constant(vars, characteristic, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (structure[i].size() != n) fail(ErrorKind::Input, "structure constants have the wrong shape");
        for (std::size_t j = 0; j < n; ++j) {
            if (structure[i][j].size() != n) fail(ErrorKind::Input, "structure constants have the wrong shape");
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            const Polynomial& expect = j == l ? one : zero;
            if (!(structure[0][j][l] == expect) || !(structure[j][0][l] == expect)) {
                fail(ErrorKind::Input, "basis element 1 must be the unit (check products with " + basis[j] + ")");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = 0; l < n; ++l) {
                if (!(structure[i][j][l] == structure[j][i][l])) {
                    fail(ErrorKind::Input, "multiplication is not commutative on " + basis[i] + "*" + basis[j]);
                }
            }
        }
    }
    // (r_i r_j) r_k = r_i (r_j r_k)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t t = 0; t < n; ++t) {
                    Polynomial left = zero, right = zero;
                    for (std::size_t l = 0; l < n; ++l) {
                        left = left + structure[i][j][l] * structure[l][k][t];
                        right = right + structure[j][k][l] * structure[i][l][t];
                    }
                    if (!(left == right)) {
                        fail(ErrorKind::Input, "multiplication is not associative on " + basis[i] + "," +
                                                   basis[j] + "," + basis[k]);
                    }
                }
            }
        }
    }
}

PolyMatrix trace_form(const RingExtensionPresentation& ext) {
    ext.validate();
    const std::size_t n = ext.size();
    const std::size_t vars = ext.base_variables.size();
    // trace of multiplication by r_l: Σ_j coefficient of r_j in r_l r_j
    std::vector<Polynomial> traces;
    for (std::size_t l = 0; l < n; ++l) {
        Polynomial t(vars, ext.characteristic);
        for (std::size_t j = 0; j < n; ++j) t = t + ext.structure[l][j][j];
        traces.push_back(std::move(t));
    }
    PolyMatrix form(n, std::vector<Polynomial>(n, Polynomial(vars, ext.characteristic)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t l = 0; l < n; ++l) form[i][j] = form[i][j] + ext.structure[i][j][l] * traces[l];
        }
    }
    return form;
}

Polynomial discriminant(const RingExtensionPresentation& ext) {
    Polynomial d = determinant(trace_form(ext));
    if (d.is_zero()) {
        fail(ErrorKind::ZeroDiscriminant, "discriminant vanishes: extension not generically separable");
    }
    return d;
}

namespace {

bool dominates(const Exponent& big, const Exponent& small) {
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (big[i] < small[i]) return false;
    }
    return true;
}

// Solves A κ = b over F_p; returns nullopt when inconsistent. Free unknowns are set to 0.
std::optional<std::vector<std::int64_t>> solve_mod_p(std::vector<std::vector<std::int64_t>> a,
                                                     std::vector<std::int64_t> b, std::size_t unknowns,
                                                     std::int64_t p) {
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < a.size(); ++col) {
        std::size_t pick = row;
        while (pick < a.size() && mod(a[pick][col], p) == 0) ++pick;
        if (pick == a.size()) continue;
        std::swap(a[pick], a[row]);
        std::swap(b[pick], b[row]);
        const std::int64_t inv = inverse_mod(a[row][col], p);
        for (auto& x : a[row]) x = mod(x * inv, p);
        b[row] = mod(b[row] * inv, p);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || mod(a[r][col], p) == 0) continue;
            const std::int64_t f = a[r][col];
            for (std::size_t c = 0; c < unknowns; ++c) a[r][c] = mod(a[r][c] - f * a[row][c], p);
            b[r] = mod(b[r] - f * b[row], p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < a.size(); ++r) {
        if (mod(b[r], p) != 0) return std::nullopt;
    }
    std::vector<std::int64_t> x(unknowns, 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

std::optional<Exponent> image_exponent(const Exponent& g, const Exponent& v, const Exponent& two_c, std::int64_t q) {
    Exponent out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i] = q * g[i] + v[i] - two_c[i];
        if (out[i] < 0) return std::nullopt;
    }
    return out;
}

}  // namespace

std::optional<DsimplicityWitness> dsimplicity_witness_search(const WeightSystem& ws, const Exponent& c_exponent,
                                                             std::int64_t q_max) {
    const std::size_t d = ws.variables();
    if (c_exponent.size() != d) fail(ErrorKind::Input, "c exponent has the wrong length");
    for (auto x : c_exponent) {
        if (x < 0) fail(ErrorKind::Input, "c exponent must be nonnegative");
    }
    if (!ws.degree_of(c_exponent).is_zero()) {
        fail(ErrorKind::Input, "c = x^" + to_string(c_exponent) + " is not an invariant monomial");
    }
    Exponent two_c(d);
    for (std::size_t i = 0; i < d; ++i) two_c[i] = 2 * c_exponent[i];
    const Character zero = Character::zero(ws.grading);

    for (std::int64_t q = ws.prime; q <= q_max; q *= ws.prime) {
        Exponent v(d), a(d);
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = two_c[i] % q;
            a[i] = two_c[i] / q;
        }
        auto degree = residue_degree(ws, zero, v, q);
        if (!degree.is_integral()) fail(ErrorKind::InvariantViolation, "invariant residue has a fractional degree");
        std::vector<Exponent> gens;
        try {
            gens = minimal_generators(ws, degree);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::FrontierInconclusive) fail(ErrorKind::PresentationIncomplete, err.detail());
            throw;
        }
        DsimplicityWitness w;
        w.q = q;
        w.residue = v;
        w.summand_degree = degree.to_character();

        // fine-graded projection: valid exactly when x^{2c} generates the summand freely
        if (gens.size() == 1 && gens.front() == a) {
            w.method = "fine-graded projection";
            w.table.push_back({two_c, 1, Exponent(d, 0)});
            return w;
        }

        // linear system for κ_g: θ(x^{qg+v}) = κ_g x^{qg+v-2c}
        const std::size_t k = gens.size();
        std::vector<std::vector<std::int64_t>> rows;
        std::vector<std::int64_t> rhs;
        auto unit_row = [&](std::size_t idx) {
            std::vector<std::int64_t> r(k, 0);
            r[idx] = 1;
            return r;
        };
        for (std::size_t g = 0; g < k; ++g) {
            if (!image_exponent(gens[g], v, two_c, q)) {
                rows.push_back(unit_row(g));
                rhs.push_back(0);
            }
            if (dominates(a, gens[g])) {
                rows.push_back(unit_row(g));
                rhs.push_back(1);
            }
        }
        for (std::size_t g = 0; g < k; ++g) {
            for (std::size_t h = g + 1; h < k; ++h) {
                Exponent join(d);
                for (std::size_t i = 0; i < d; ++i) join[i] = std::max(gens[g][i], gens[h][i]);
                Character rest = add(ws.grading, w.summand_degree, negate(ws.grading, ws.degree_of(join)));
                if (!in_supp(ws, rest)) continue;
                auto r = unit_row(g);
                r[h] = -1;
                rows.push_back(std::move(r));
                rhs.push_back(0);
            }
        }
        auto solution = solve_mod_p(rows, rhs, k, ws.prime);
        if (!solution) continue;
        w.method = "linear solve";
        for (std::size_t g = 0; g < k; ++g) {
            Exponent generator(d);
            for (std::size_t i = 0; i < d; ++i) generator[i] = q * gens[g][i] + v[i];
            const std::int64_t kappa = (*solution)[g];
            w.table.push_back({generator, kappa, kappa ? image_exponent(gens[g], v, two_c, q) : std::nullopt});
        }
        return w;
    }
    return std::nullopt;
}

bool verify_witness(const WeightSystem& ws, const Exponent& c_exponent, const DsimplicityWitness& w,
                    std::int64_t window) {
    const std::size_t d = ws.variables();
    const std::int64_t q = w.q, p = ws.prime;
    Exponent two_c(d);
    for (std::size_t i = 0; i < d; ++i) two_c[i] = 2 * c_exponent[i];

    // θ(x^m) as (exponent, coefficient); nullopt signals an inconsistent definition
    using Value = std::map<Exponent, std::int64_t>;
    auto theta = [&](const Exponent& m) -> std::optional<Value> {
        Value out;
        for (std::size_t i = 0; i < d; ++i) {
            if (m[i] < w.residue[i] || (m[i] - w.residue[i]) % q != 0) return out;
        }
        std::optional<std::int64_t> kappa;
        for (const auto& row : w.table) {
            if (!dominates(m, row.generator)) continue;
            bool aligned = true;
            for (std::size_t i = 0; i < d; ++i) aligned = aligned && (m[i] - row.generator[i]) % q == 0;
            if (!aligned) continue;
            const std::int64_t value = mod(row.coefficient, p);
            if (kappa && *kappa != value) return std::nullopt;
            kappa = value;
        }
        if (!kappa) return std::nullopt;
        if (*kappa == 0) return out;
        Exponent target(d);
        for (std::size_t i = 0; i < d; ++i) {
            target[i] = m[i] - two_c[i];
            if (target[i] < 0) return std::nullopt;
        }
        out[target] = *kappa;
        return out;
    };

    auto at_c2 = theta(two_c);
    if (!at_c2 || *at_c2 != Value{{Exponent(d, 0), 1}}) return false;

    const auto lambdas = invariant_generators(ws);
    std::vector<Exponent> window_monomials;
    auto caps = std::vector<std::int64_t>(d, -1);
    detail::for_each_exponent(ws, window - 1, (window - 1) * *std::max_element(ws.positivity.begin(), ws.positivity.end()),
                              caps, [&](const Exponent& m, const Character& deg) {
                                  if (deg.is_zero()) window_monomials.push_back(m);
                              });
    for (const auto& m : window_monomials) {
        auto base = theta(m);
        if (!base) return false;
        for (const auto& lambda : lambdas) {
            Exponent moved(d);
            std::int64_t size = 0;
            for (std::size_t i = 0; i < d; ++i) {
                moved[i] = m[i] + q * lambda[i];
                size += moved[i];
            }
            if (size >= window) continue;
            auto lhs = theta(moved);
            if (!lhs) return false;
            Value rhs;
            for (const auto& [e, c] : *base) {
                Exponent t(d);
                for (std::size_t i = 0; i < d; ++i) t[i] = e[i] + q * lambda[i];
                rhs[t] = c;
            }
            if (*lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace forge
