#include <doctest.h>

#include <random>

#include "forge/diffop.hpp"
#include "forge/errors.hpp"
#include "support.hpp"

using namespace forge;

namespace {

Polynomial poly(const std::string& text, const std::vector<std::string>& names, std::int64_t ch) {
    return Polynomial::parse(text, names, ch);
}

RingExtensionPresentation quadratic(std::int64_t ch) {
    RingExtensionPresentation ext;
    ext.base_variables = {"x"};
    ext.characteristic = ch;
    ext.basis = {"1", "y"};
    auto p = [&](const std::string& t) { return poly(t, {"x"}, ch); };
    ext.structure = {{{p("1"), p("0")}, {p("0"), p("1")}}, {{p("0"), p("1")}, {p("x"), p("0")}}};
    return ext;
}

}  // namespace

TEST_CASE("polynomials") {
    std::vector<std::string> names{"x", "y"};
    auto f = poly("4*x^2*y - 3*x + 1", names, 0);
    CHECK(f.total_degree() == 3);
    CHECK(f.to_string(names) == "4*x^2*y - 3*x + 1");
    CHECK(f.evaluate({Rational(1, 2), 2}) == Rational(3, 2));
    auto g = poly("x + y", names, 2);
    CHECK((g * g).to_string(names) == "x^2 + y^2");
    CHECK(poly("3*x", names, 3).is_zero());
    CHECK_THROWS_AS(poly("x + z", names, 0), Error);
    PolyMatrix m{{poly("x", names, 0), poly("1", names, 0)}, {poly("y", names, 0), poly("2", names, 0)}};
    CHECK(determinant(m).to_string(names) == "2*x - y");
    PolyMatrix three{{poly("1", names, 0), poly("2", names, 0), poly("3", names, 0)},
                     {poly("0", names, 0), poly("x", names, 0), poly("1", names, 0)},
                     {poly("y", names, 0), poly("0", names, 0), poly("1", names, 0)}};
    CHECK(determinant(three).to_string(names) == "-3*x*y + x + 2*y");
}

TEST_CASE("operator order") {
    auto x1 = operators::multiplication(poly("x", {"x", "y"}, 3), 8);
    CHECK(operator_order(x1, 3) == 0);
    auto d1 = operators::hasse_derivative(2, 3, {1, 0}, 8);
    CHECK(operator_order(d1, 3) == 1);
    auto proj = operators::residue_projection(1, 2, 2, {0}, 10);
    CHECK(operator_order(proj, 3) == 1);
    auto d2 = operators::hasse_derivative(1, 5, {3}, 12);
    CHECK(operator_order(d2, 5) == 3);
    CHECK_THROWS_AS(operator_order(operators::hasse_derivative(1, 5, {3}, 4), 5), Error);
    auto frob = operators::residue_projection(1, 3, 9, {0}, 14);
    CHECK_FALSE(operator_order(frob, 2));
}

TEST_CASE("commutator of a derivative") {
    auto d = operators::hasse_derivative(1, 5, {1}, 6);
    auto c = d.commutator(0);
    for (std::int64_t k = 0; k <= c.safe_degree(); ++k) {
        auto out = c.apply({k});
        REQUIRE(out.size() == 1);
        CHECK(c.window().monomial(out.begin()->first) == Exponent{k});
        CHECK(out.begin()->second == 4);
    }
}

TEST_CASE("R^q-linearity") {
    CHECK(is_rq_linear(operators::hasse_derivative(1, 2, {1}, 8), 2));
    CHECK_FALSE(is_rq_linear(operators::hasse_derivative(1, 3, {1}, 8), 2));
    CHECK(is_rq_linear(operators::multiplication(poly("x*y + 1", {"x", "y"}, 5), 9), 3));
    CHECK_THROWS_AS(is_rq_linear(operators::hasse_derivative(1, 2, {1}, 2), 2), Error);
}

TEST_CASE("randomized order and R^q-linearity equivalence") {
    std::mt19937_64 rng(20240917);
    int linear_cases = 0, order_cases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t d = 1 + trial % 2;
        std::int64_t p = trial % 3 == 0 ? 3 : 2;
        std::int64_t q = (trial / 2) % 2 == 0 ? p : p * p;
        if (q > 4) q = p;
        std::int64_t window = d == 1 ? 3 * q + 6 : 2 * q + 5;
        auto op = operators::random_rq_linear(d, p, q, 1, window, rng);
        REQUIRE(is_rq_linear(op, q));
        auto order = operator_order(op, static_cast<std::int64_t>(d) * q);
        REQUIRE(order);
        CHECK(*order < static_cast<std::int64_t>(d) * q);
        ++linear_cases;
    }
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t d = 1 + trial % 2;
        std::int64_t p = trial % 3 == 0 ? 3 : 2;
        std::int64_t n = trial % 3;
        std::int64_t window = 14;
        auto op = operators::random_bounded_order(d, p, n, 1, window, rng);
        auto order = operator_order(op, n + 1);
        REQUIRE(order);
        CHECK(*order <= n);
        for (std::int64_t q = p; q <= 4; q *= p) {
            if (q > n) CHECK(is_rq_linear(op, q));
        }
        ++order_cases;
    }
    CHECK(linear_cases == 100);
    CHECK(order_cases == 100);
}

TEST_CASE("composing with a multiplication never raises the order") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto op = operators::random_bounded_order(2, 3, trial % 3, 1, 12, rng);
        auto f = poly(trial % 2 ? "x + 2*y^2" : "y", {"x", "y"}, 3);
        auto base = operator_order(op, 4);
        auto composed = operator_order(op.compose_multiplication(f), 4);
        REQUIRE(base);
        REQUIRE(composed);
        CHECK(*composed <= *base);
    }
}

TEST_CASE("discriminants") {
    RingExtensionPresentation trivial;
    trivial.base_variables = {"x"};
    trivial.characteristic = 0;
    trivial.basis = {"1"};
    trivial.structure = {{{poly("1", {"x"}, 0)}}};
    CHECK(discriminant(trivial).to_string({"x"}) == "1");
    CHECK(discriminant(quadratic(0)).to_string({"x"}) == "4*x");
    CHECK(discriminant(quadratic(3)).to_string({"x"}) == "x");
    CHECK_THROWS_AS(discriminant(quadratic(2)), Error);
    auto broken = quadratic(0);
    broken.structure[1][0][0] = poly("2*x", {"x"}, 0);
    CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("discriminant changes by a square under a base change") {
    // basis (1, y) -> (1, y + a) for a in T; det P = 1, so the determinant is unchanged;
    // scaling y by b multiplies it by b^2.
    auto ext = quadratic(0);
    auto form = trace_form(ext);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Rational x = Rational(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5);
        x.canonicalize();
        Rational a = static_cast<long>(rng() % 7) - 3, b = 1 + static_cast<long>(rng() % 4);
        Rational t[2][2];
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) t[i][j] = form[i][j].evaluate({x});
        }
        Rational pm[2][2] = {{1, 0}, {a, b}};
        Rational c[2][2];
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                c[i][j] = 0;
                for (int k = 0; k < 2; ++k) {
                    for (int l = 0; l < 2; ++l) c[i][j] += pm[i][k] * t[k][l] * pm[j][l];
                }
            }
        }
        Rational det_t = t[0][0] * t[1][1] - t[0][1] * t[1][0];
        Rational det_c = c[0][0] * c[1][1] - c[0][1] * c[1][0];
        CHECK(det_c == b * b * det_t);
        CHECK(det_t == discriminant(ext).evaluate({x}));
    }
}

TEST_CASE("D-simplicity witnesses") {
    auto cone = fixtures::quadric_cone();
    auto w = dsimplicity_witness_search(cone, {2, 0}, 9);
    REQUIRE(w);
    CHECK(w->q == 9);
    CHECK(verify_witness(cone, {2, 0}, *w, 24));
    CHECK_FALSE(dsimplicity_witness_search(cone, {2, 0}, 8));
    auto mixed = dsimplicity_witness_search(cone, {1, 1}, 9);
    REQUIRE(mixed);
    CHECK(mixed->q == 3);
    CHECK(mixed->method == "fine-graded projection");
    CHECK(verify_witness(cone, {1, 1}, *mixed, 16));

    auto unit = dsimplicity_witness_search(cone, {0, 0}, 9);
    REQUIRE(unit);
    CHECK(unit->q == 3);
    CHECK(verify_witness(cone, {0, 0}, *unit, 12));

    CHECK_THROWS_AS(dsimplicity_witness_search(cone, {1, 0}, 9), Error);

    auto segre = fixtures::segre(2);
    auto sw = dsimplicity_witness_search(segre, {1, 0, 1, 0}, 16);
    REQUIRE(sw);
    CHECK(verify_witness(segre, {1, 0, 1, 0}, *sw, 2 * sw->q + 6));
    auto z3 = fixtures::torsion_ring(3, {1, 2}, 7);
    auto zw = dsimplicity_witness_search(z3, {1, 1}, 49);
    REQUIRE(zw);
    CHECK(verify_witness(z3, {1, 1}, *zw, 2 * zw->q + 4));
}

TEST_CASE("a corrupted witness fails replay") {
    auto cone = fixtures::quadric_cone();
    auto w = *dsimplicity_witness_search(cone, {1, 1}, 9);
    for (auto& row : w.table) row.coefficient = 0;
    CHECK_FALSE(verify_witness(cone, {1, 1}, w, 24));
}
