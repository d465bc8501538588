#include <doctest.h>

#include <random>

#include "forge/errors.hpp"
#include "forge/lp.hpp"
#include "support.hpp"

using namespace forge;
using fixtures::free_ring;

TEST_CASE("arithmetic helpers") {
    CHECK(mod(-7, 3) == 2);
    CHECK(inverse_mod(7, 3) == 1);
    CHECK(inverse_mod(2, 5) == 3);
    CHECK_THROWS_AS(inverse_mod(3, 3), Error);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("1e-9") == Rational(1, 1000000000));
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(to_string(Exponent{1, 0, 2}) == "(1,0,2)");
    CHECK(rank({{1, 1, -1, -1}, {2, 2, -2, -2}}) == 1);
    auto factors = invariant_factors({{2, 0}, {0, 4}});
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == 2);
    CHECK(factors[1] == 4);
    auto mixed = invariant_factors({{2, 4}, {6, 8}});
    CHECK(mixed[0] == 2);
    CHECK(mixed[1] == 4);
}

TEST_CASE("exact simplex") {
    LinearProgram lp;
    lp.variables = 2;
    lp.objective = {1, 1};
    lp.add_row({1, 2}, LinearProgram::Relation::LessEqual, 4);
    lp.add_row({3, 1}, LinearProgram::Relation::LessEqual, 6);
    auto r = solve(lp);
    REQUIRE(r.status == LpResult::Status::Optimal);
    CHECK(r.value == Rational(14, 5));

    LinearProgram bad;
    bad.variables = 1;
    bad.objective = {1};
    bad.add_row({1}, LinearProgram::Relation::GreaterEqual, 2);
    bad.add_row({1}, LinearProgram::Relation::LessEqual, 1);
    CHECK(solve(bad).status == LpResult::Status::Infeasible);

    LinearProgram open;
    open.variables = 1;
    open.objective = {1};
    open.add_row({-1}, LinearProgram::Relation::LessEqual, 3);
    CHECK(solve(open).status == LpResult::Status::Unbounded);
}

TEST_CASE("grading validation") {
    CHECK_THROWS_AS((GradingGroup{0, {1}}.validate()), Error);
    CHECK_THROWS_AS(fixtures::torsion_ring(3, {1, 2}, 3), Error);
    CHECK_THROWS_AS(free_ring({1}, 4), Error);
    CHECK_THROWS_AS(WeightSystem(GradingGroup{1, {}}, {Character{{1}, {}}}, 2, {0}), Error);
    auto ws = fixtures::torsion_ring(3, {4, -1}, 2);
    CHECK(ws.weights[0].torsion_part[0] == 1);
    CHECK(ws.weights[1].torsion_part[0] == 2);
}

TEST_CASE("in_supp") {
    auto segre = fixtures::segre(2);
    CHECK(in_supp(segre, Character{{0}, {}}));
    CHECK(in_supp(segre, Character{{1}, {}}));
    auto gap = free_ring({2, 3}, 5);
    CHECK_FALSE(in_supp(gap, Character{{1}, {}}));
    CHECK(in_supp(gap, Character{{5}, {}}));
    CHECK_FALSE(in_supp(gap, Character{{-1}, {}}));
    for (std::int64_t x = -3; x <= 12; ++x) {
        CHECK(in_supp(gap, Character{{x}, {}}) == oracle::in_supp(gap, Character{{x}, {}}, 8));
    }
}

TEST_CASE("in_supp with mixed torsion matches bounded enumeration") {
    WeightSystem ws(GradingGroup{1, {3}}, {Character{{2}, {1}}, Character{{3}, {0}}, Character{{0}, {2}}}, 5);
    for (std::int64_t x = 0; x <= 9; ++x) {
        for (std::int64_t t = 0; t < 3; ++t) {
            Character chi{{x}, {t}};
            CHECK(in_supp(ws, chi) == oracle::in_supp(ws, chi, 6));
        }
    }
}

TEST_CASE("in_supp is monotone under addition") {
    WeightSystem ws(GradingGroup{1, {4}}, {Character{{2}, {1}}, Character{{-1}, {3}}, Character{{1}, {0}}}, 3);
    std::vector<Character> members;
    for (std::int64_t x = -4; x <= 4; ++x) {
        for (std::int64_t t = 0; t < 4; ++t) {
            Character c{{x}, {t}};
            if (in_supp(ws, c)) members.push_back(c);
        }
    }
    REQUIRE(members.size() > 4);
    for (const auto& a : members) {
        for (const auto& b : members) CHECK(in_supp(ws, add(ws.grading, a, b)));
    }
}

TEST_CASE("strongly critical characters") {
    auto segre = fixtures::segre(2);
    CHECK(is_strongly_critical(segre, Character{{0}, {}}));
    CHECK(is_strongly_critical(segre, Character{{1}, {}}));
    CHECK(is_strongly_critical(segre, Character{{-1}, {}}));
    CHECK_FALSE(is_strongly_critical(segre, Character{{2}, {}}));
    CHECK_FALSE(is_strongly_critical(segre, Character{{-2}, {}}));
    auto single = free_ring({1}, 2);
    CHECK_FALSE(is_strongly_critical(single, Character{{-1}, {}}));
    CHECK(is_strongly_critical(single, Character{{0}, {}}));
    auto cone = fixtures::quadric_cone();
    CHECK(is_strongly_critical(cone, Character{{}, {1}}));
}

TEST_CASE("strongly critical matches the interval oracle in rank one") {
    std::vector<std::vector<std::int64_t>> systems = {{1, 1, -1, -1}, {2, -3}, {1, 2, 3}, {-1, -2}, {3, -1, 2}};
    for (const auto& w : systems) {
        auto ws = free_ring(w, 5);
        std::int64_t pos = 0, neg = 0;
        for (auto a : w) (a > 0 ? pos : neg) += std::abs(a);
        for (std::int64_t x = -8; x <= 8; ++x) {
            bool lower_ok = pos > 0 ? x > -pos : x >= 0;
            bool upper_ok = neg > 0 ? x < neg : x <= 0;
            CHECK(is_strongly_critical(ws, Character{{x}, {}}) == (lower_ok && upper_ok));
        }
    }
}

TEST_CASE("strong criticality ignores torsion") {
    WeightSystem ws(GradingGroup{1, {5}}, {Character{{1}, {1}}, Character{{-2}, {3}}, Character{{1}, {0}}}, 3);
    std::mt19937 rng(7);
    for (std::int64_t x = -4; x <= 4; ++x) {
        bool base = is_strongly_critical(ws, Character{{x}, {0}});
        for (int k = 0; k < 5; ++k) {
            CHECK(is_strongly_critical(ws, Character{{x}, {std::int64_t(rng() % 5)}}) == base);
        }
    }
}

TEST_CASE("strongly critical lattice points lie in the zonotope box") {
    std::vector<std::vector<std::vector<std::int64_t>>> systems = {
        {{2, 0}, {0, 1}, {-1, -1}}, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 1}, {1, -1}, {-1, 0}, {0, -2}}};
    std::vector<int> expected = {2, 1, -1};
    for (std::size_t s = 0; s < systems.size(); ++s) {
        std::vector<Character> w;
        for (const auto& a : systems[s]) w.push_back(Character{a, {}});
        WeightSystem ws(GradingGroup{2, {}}, w, 2, std::vector<std::int64_t>(w.size(), 1));
        int count = 0;
        for (std::int64_t a = -5; a <= 5; ++a) {
            for (std::int64_t b = -5; b <= 5; ++b) {
                if (!is_strongly_critical(ws, Character{{a, b}, {}})) continue;
                ++count;
                Exponent chi{a, b};
                for (std::size_t j = 0; j < 2; ++j) {
                    std::int64_t lo = 0, hi = 0;
                    for (const auto& alpha : systems[s]) (alpha[j] > 0 ? lo : hi) += std::abs(alpha[j]);
                    CHECK(chi[j] >= (lo ? -lo + 1 : 0));
                    CHECK(chi[j] <= (hi ? hi - 1 : 0));
                }
            }
        }
        if (expected[s] >= 0) CHECK(count == expected[s]);
    }
}

TEST_CASE("divide and multiply characters") {
    GradingGroup free1{1, {}};
    auto r = divide_character(free1, Character{{3}, {}}, 3);
    CHECK(r.free_part[0] == 1);
    GradingGroup z3{0, {3}};
    CHECK(divide_character(z3, Character{{}, {1}}, 7).torsion_part[0] == 1);
    CHECK(divide_character(z3, Character{{}, {1}}, 2).torsion_part[0] == 2);
    CHECK_THROWS_AS(divide_character(z3, Character{{}, {1}}, 3), Error);
    auto half = divide_character(free1, Character{{-1}, {}}, 2);
    CHECK_FALSE(half.is_integral());
    CHECK(half.free_part[0] == Rational(-1, 2));

    GradingGroup g{2, {3, 5}};
    for (std::int64_t q : {2, 4, 7, 8}) {
        for (std::int64_t a = -3; a <= 3; ++a) {
            Character c{{a, 2 * a + 1}, {mod(a, 3), mod(3 * a, 5)}};
            auto back = divide_character(g, multiply_character(g, c, q), q);
            REQUIRE(back.is_integral());
            CHECK(back.to_character() == c);
        }
    }
}

TEST_CASE("invariant generators and krull dimension") {
    auto cone = fixtures::quadric_cone();
    auto gens = invariant_generators(cone);
    CHECK(gens == std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(krull_dim(cone) == 2);
    auto segre = fixtures::segre(2);
    CHECK(invariant_generators(segre).size() == 4);
    CHECK(krull_dim(segre) == 3);
    CHECK(krull_dim(fixtures::polynomial_ring(3, 2)) == 3);
    CHECK(krull_dim(free_ring({1, 2}, 3)) == 0);
}
