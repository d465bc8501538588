#include <doctest.h>

#include "forge/errors.hpp"
#include "support.hpp"

using namespace forge;

namespace {

MultiplicityMatrix make(IntMatrix e, std::int64_t p, std::size_t dim) {
    MultiplicityMatrix m;
    m.entries = std::move(e);
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        m.labels.push_back("M" + std::to_string(i));
        m.ranks.push_back(1);
    }
    m.p = p;
    m.dim = dim;
    return m;
}

}  // namespace

TEST_CASE("primitivity") {
    CHECK(primitivity({{5, 4}, {4, 5}}) == 1u);
    CHECK_FALSE(primitivity({{0, 1}, {1, 0}}));
    CHECK(primitivity({{1, 1}, {1, 0}}) == 2u);
    CHECK(wielandt_bound(3) == 5u);
    // the Wielandt matrix attains the bound
    CHECK(primitivity({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}) == 5u);
    CHECK_FALSE(primitivity({{1, 0}, {0, 1}}));
}

TEST_CASE("matrix powers compose") {
    IntMatrix e{{6, 4, 4}, {1, 4, 0}, {1, 0, 4}};
    for (unsigned a = 0; a <= 3; ++a) {
        for (unsigned b = 0; b <= 3; ++b) CHECK(power(e, a + b) == multiply(power(e, a), power(e, b)));
    }
}

TEST_CASE("perron data for the quadric cone") {
    auto data = perron(make({{5, 4}, {4, 5}}, 3, 2));
    CHECK(data.verified);
    CHECK(data.lambda == 9);
    CHECK(data.primitivity_exponent == 1u);
    for (const auto& row : data.limit_matrix) {
        for (const auto& x : row) CHECK(abs(x - Rational(1, 2)) < Rational(1, 1000000000));
    }
    // closed form: (E/9)^k = ((9^k+1)/2, (9^k-1)/2) / 9^k
    IntMatrix e10 = power({{5, 4}, {4, 5}}, 10);
    Integer n10;
    mpz_ui_pow_ui(n10.get_mpz_t(), 9, 10);
    CHECK(e10[0][0] == (n10 + 1) / 2);
    CHECK(e10[0][1] == (n10 - 1) / 2);
}

TEST_CASE("perron edge cases") {
    auto one = perron(make({{8}}, 2, 3));
    CHECK(one.verified);
    CHECK(one.limit_matrix[0][0] == 1);
    auto segre = perron(make({{6, 4, 4}, {1, 4, 0}, {1, 0, 4}}, 2, 3));
    CHECK(segre.lambda == 8);
    for (const auto& row : segre.limit_matrix) {
        for (const auto& x : row) CHECK(x > 0);
    }
    // E^k w / λ^k converges to a positive multiple of the Perron vector
    Rational a = segre.limit_matrix[0][0];
    CHECK(abs(a - Rational(2, 3)) < Rational(1, 1000000));
    CHECK(abs(segre.limit_matrix[1][2] - Rational(1, 6)) < Rational(1, 1000000));
    CHECK_THROWS_AS(perron(make({{5, 4}, {4, 6}}, 3, 2)), Error);
    CHECK_THROWS_AS(perron(make({{1, 0}, {0, 1}}, 2, 0)), Error);
}

TEST_CASE("perron iterates contract monotonically after burn-in") {
    IntMatrix e{{6, 4, 4}, {1, 4, 0}, {1, 0, 4}};
    Rational previous = -1;
    for (unsigned k = 2; k <= 8; ++k) {
        auto a = power(e, k), b = power(e, k + 1);
        Integer lk, lk1;
        mpz_ui_pow_ui(lk.get_mpz_t(), 8, k);
        mpz_ui_pow_ui(lk1.get_mpz_t(), 8, k + 1);
        Rational diff = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                Rational d = Rational(a[i][j], lk) - Rational(b[i][j], lk1);
                d.canonicalize();
                diff = std::max(diff, Rational(abs(d)));
            }
        }
        if (previous >= 0) CHECK(diff < previous);
        previous = diff;
    }
}

TEST_CASE("sfr certificate") {
    auto cone = sfr_positivity_certificate({{5, 4}, {4, 5}}, 0);
    CHECK(cone.certified);
    CHECK(cone.exponent == 1u);
    CHECK_FALSE(sfr_positivity_certificate({{1, 0}, {0, 1}}, 0).certified);
    CHECK(sfr_positivity_certificate({{27}}, 0).certified);
    CHECK_FALSE(sfr_positivity_certificate({{4, 0, 0}, {0, 2, 2}, {0, 2, 2}}, 0).certified);
    CHECK(sfr_positivity_certificate({{6, 4, 4}, {1, 4, 0}, {1, 0, 4}}, 0).certified);
}

TEST_CASE("minimal finite-dimensional representation sequence") {
    IntMatrix e{{5, 4}, {4, 5}};
    std::vector<std::vector<Integer>> at_r;
    for (unsigned k = 1; k <= 3; ++k) {
        auto ek = power(e, k);
        at_r.push_back({ek[0][0], ek[1][0]});
    }
    auto res = min_findim_sequence(at_r, {1, 1}, true);
    CHECK(res.sequence[0] == 4);
    CHECK(res.sequence[1] == 40);
    CHECK(res.running_sup.back() == res.sequence.back());
    CHECK(res.no_finite_dimensional_reps);

    auto flat = min_findim_sequence({{1}, {1}, {1}}, {1}, false);
    CHECK(flat.sequence == std::vector<Integer>{1, 1, 1});
    CHECK_FALSE(flat.no_finite_dimensional_reps);

    auto segre = min_findim_sequence({{6, 1, 1}}, {1, 1, 1}, true);
    CHECK(segre.sequence[0] == 1);
    auto skip = min_findim_sequence({{3, 0}}, {1, 1}, false);
    CHECK(skip.sequence[0] == 3);
}

TEST_CASE("block report") {
    auto r = semisimple_block_report({5, 4}, {1, 1}, {"R", "M"});
    CHECK(r.render() == "M(5, k) x M(4, k)");
    CHECK(r.blocks[1].simple_dim == 4);
    CHECK(semisimple_block_report({81}, {1}, {"R"}).render() == "M(81, k)");
    CHECK(semisimple_block_report({17, 16, 16}, {1, 1, 1}, {"a", "b", "c"}).render() ==
          "M(17, k) x M(16, k) x M(16, k)");
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(Rational(1, 2), 3) == "0.500");
    CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
}
