#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "forge/lattice.hpp"
#include "forge/polynomial.hpp"

namespace forge {

/// Monomials of k[x_1..x_n] with total degree below the window, graded-lex indexed.
class MonomialWindow {
public:
    MonomialWindow(std::size_t variables, std::int64_t window);

    std::size_t variables() const { return variables_; }
    std::int64_t window() const { return window_; }
    std::size_t size() const { return monomials_.size(); }
    const Exponent& monomial(std::size_t index) const { return monomials_[index]; }
    std::int64_t degree(std::size_t index) const { return degrees_[index]; }
    /// Index of e, or nullopt when e falls outside the window.
    std::optional<std::size_t> find(const Exponent& e) const;

private:
    std::size_t variables_;
    std::int64_t window_;
    std::vector<Exponent> monomials_;
    std::vector<std::int64_t> degrees_;
    std::map<Exponent, std::size_t> index_;
};

/// Sparse image of one basis monomial, coefficients in F_p.
using SparseVector = std::map<std::size_t, std::int64_t>;
/// Exact image of a monomial, before truncation.
using MonomialImage = std::map<Exponent, std::int64_t>;

/// A k-linear map on S truncated below total degree N. Images of inputs with degree at most
/// safe_degree are exact; shift bounds how far an operator raises degree.
class TruncatedOperator {
public:
    TruncatedOperator(std::shared_ptr<const MonomialWindow> window, std::int64_t characteristic,
                      std::int64_t shift);

    /// Builds the operator from an exact monomial rule; safe_degree = N - 1 - shift.
    static TruncatedOperator from_rule(std::size_t variables, std::int64_t characteristic,
                                       std::int64_t window, std::int64_t shift,
                                       const std::function<MonomialImage(const Exponent&)>& rule);

    const MonomialWindow& window() const { return *window_; }
    std::int64_t characteristic() const { return characteristic_; }
    std::int64_t shift() const { return shift_; }
    std::int64_t safe_degree() const { return safe_degree_; }
    const SparseVector& image(std::size_t index) const { return columns_[index]; }

    /// [x_i, θ] = x_i θ - θ x_i; safe degree drops by one.
    TruncatedOperator commutator(std::size_t variable) const;
    /// Multiplication by a polynomial after θ.
    TruncatedOperator compose_multiplication(const Polynomial& f) const;
    TruncatedOperator operator+(const TruncatedOperator& o) const;
    /// True when θ vanishes on every monomial of degree <= safe_degree.
    bool vanishes_on_safe_window() const;

    /// Applies θ to a window monomial; the result lives on the same window.
    SparseVector apply(const Exponent& e) const;

private:
    std::shared_ptr<const MonomialWindow> window_;
    std::int64_t characteristic_;
    std::int64_t shift_;
    std::int64_t safe_degree_;
    std::vector<SparseVector> columns_;
};

/// Operator factories used by the CLI and the property suites.
namespace operators {

TruncatedOperator multiplication(const Polynomial& f, std::int64_t window);
/// Divided-power derivative D^{(a)} x^m = Π C(m_i, a_i) x^{m-a}.
TruncatedOperator hasse_derivative(std::size_t variables, std::int64_t characteristic, const Exponent& a,
                                   std::int64_t window);
/// Keeps x^m when m ≡ v (mod q) componentwise, otherwise 0.
TruncatedOperator residue_projection(std::size_t variables, std::int64_t characteristic, std::int64_t q,
                                     const Exponent& v, std::int64_t window);
/// Random S^q-linear operator: arbitrary images of the basis x^v, v ∈ [0,q)^n.
TruncatedOperator random_rq_linear(std::size_t variables, std::int64_t characteristic, std::int64_t q,
                                   std::int64_t image_degree, std::int64_t window, std::mt19937_64& rng);
/// Random Σ_{|a| <= order} f_a D^{(a)} with deg f_a <= coefficient_degree.
TruncatedOperator random_bounded_order(std::size_t variables, std::int64_t characteristic, std::int64_t order,
                                       std::int64_t coefficient_degree, std::int64_t window,
                                       std::mt19937_64& rng);

}  // namespace operators

/// Smallest n with every (n+1)-fold nested commutator vanishing on its safe window; nullopt
/// when none within max_order. Throws WindowTooSmall when the window runs out first.
std::optional<std::int64_t> operator_order(const TruncatedOperator& op, std::int64_t max_order);

/// θ(x_i^q m) = x_i^q θ(m) for all variables and safe monomials. Throws WindowTooSmall.
bool is_rq_linear(const TruncatedOperator& op, std::int64_t q);

/// R free over a polynomial ring T with basis r_1 = 1, r_2, ..., r_n.
struct RingExtensionPresentation {
    std::vector<std::string> base_variables;
    std::int64_t characteristic = 0;
    std::vector<std::string> basis;
    /// structure[i][j][l]: coefficient of r_l in r_i r_j.
    std::vector<std::vector<std::vector<Polynomial>>> structure;

    std::size_t size() const { return basis.size(); }
    /// Unit, commutativity and associativity checks.
    void validate() const;
};

/// (trace(r_i r_j)) in the regular representation over T.
PolyMatrix trace_form(const RingExtensionPresentation& ext);

/// det(trace(r_i r_j)); throws ZeroDiscriminant when it vanishes.
Polynomial discriminant(const RingExtensionPresentation& ext);

struct DsimplicityWitness {
    struct GeneratorImage {
        /// Generator x^{q g + v} of the residue summand.
        Exponent generator;
        /// κ_g; the image is κ_g x^{q g + v - 2c}.
        std::int64_t coefficient = 0;
        std::optional<Exponent> image;
    };

    std::int64_t q = 1;
    Exponent residue;
    Character summand_degree;
    std::string method;
    std::vector<GeneratorImage> table;
};

/// Searches q = p, p^2, ... <= q_max for an R^q-linear θ: R -> R with θ(c^2) = 1, c = x^{c_exponent}.
std::optional<DsimplicityWitness> dsimplicity_witness_search(const WeightSystem& ws, const Exponent& c_exponent,
                                                             std::int64_t q_max);

/// Replays a witness on all invariant monomials of degree < window: checks θ(c^2) = 1 and
/// θ(x^{qλ} m) = x^{qλ} θ(m) for every algebra generator λ of R.
bool verify_witness(const WeightSystem& ws, const Exponent& c_exponent, const DsimplicityWitness& w,
                    std::int64_t window);

}  // namespace forge
