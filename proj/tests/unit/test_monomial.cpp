#include <doctest.h>

#include "forge/errors.hpp"
#include "support.hpp"

using namespace forge;

TEST_CASE("minimal generators") {
    auto cone = fixtures::quadric_cone();
    CHECK(minimal_generators(cone, RationalCharacter::from(Character{{}, {0}})) == std::vector<Exponent>{{0, 0}});
    CHECK(minimal_generators(cone, RationalCharacter::from(Character{{}, {1}})) ==
          std::vector<Exponent>{{0, 1}, {1, 0}});
    auto segre = fixtures::segre(2);
    CHECK(minimal_generators(segre, RationalCharacter::from(Character{{1}, {}})) ==
          std::vector<Exponent>{{0, 1, 0, 0}, {1, 0, 0, 0}});
    CHECK(minimal_generators(segre, RationalCharacter::from(Character{{2}, {}})).size() == 3);
    auto gap = fixtures::free_ring({2, 3}, 5);
    CHECK(minimal_generators(gap, RationalCharacter::from(Character{{1}, {}})).empty());
    CHECK(minimal_generators(gap, RationalCharacter::from(Character{{6}, {}})) ==
          std::vector<Exponent>{{0, 2}, {3, 0}});
}

TEST_CASE("minimal generators agree with box enumeration") {
    std::vector<WeightSystem> systems = {fixtures::segre(3), fixtures::torsion_ring(3, {1, 2}, 2),
                                         fixtures::free_ring({1, 2, -3}, 5),
                                         WeightSystem(GradingGroup{1, {2}},
                                                      {Character{{1}, {1}}, Character{{1}, {0}}, Character{{-1}, {0}}},
                                                      3)};
    for (const auto& ws : systems) {
        for (std::int64_t x = -2; x <= 2; ++x) {
            for (std::int64_t t = 0; t < (ws.grading.torsion_orders.empty() ? 1 : ws.grading.torsion_orders[0]); ++t) {
                Character chi{std::vector<std::int64_t>(ws.grading.free_rank, x),
                              ws.grading.torsion_orders.empty() ? std::vector<std::int64_t>{}
                                                                 : std::vector<std::int64_t>{t}};
                std::vector<Exponent> pts;
                oracle::box(ws.variables(), 6, [&](const Exponent& m) {
                    if (ws.degree_of(m) == chi) pts.push_back(m);
                });
                CHECK(minimal_generators(ws, RationalCharacter::from(chi)) == oracle::minimal_elements(pts));
            }
        }
    }
}

TEST_CASE("small cutoff needs a closed frontier") {
    auto segre = fixtures::segre(2);
    CHECK_THROWS_AS(minimal_generators(segre, RationalCharacter::from(Character{{1}, {}}), 0), Error);
    CHECK(minimal_generators(segre, RationalCharacter::from(Character{{1}, {}}), 10).size() == 2);
}

TEST_CASE("canonical key") {
    std::vector<Exponent> gens{{3, 2, 5}, {2, 4, 5}};
    auto key = canonical_key(gens);
    CHECK(key == std::vector<Exponent>{{0, 2, 0}, {1, 0, 0}});
    for (std::int64_t t = -3; t <= 3; ++t) {
        auto moved = gens;
        for (auto& g : moved) {
            g[0] += t;
            g[1] -= 2 * t;
            g[2] += 7;
        }
        CHECK(canonical_key(moved) == key);
    }
}

TEST_CASE("class_of_residue") {
    auto cone = fixtures::quadric_cone();
    auto base = CovariantClass::base_ring(cone);
    auto same = class_of_residue(cone, base, {0, 0}, 1);
    REQUIRE(same);
    CHECK(same->generators == std::vector<Exponent>{{0, 0}});
    auto odd = class_of_residue(cone, base, {1, 0}, 1);
    REQUIRE(odd);
    CHECK(odd->generators == std::vector<Exponent>{{0, 1}, {1, 0}});
    auto identity = class_of_residue(cone, *odd, {0, 0}, 0);
    REQUIRE(identity);
    CHECK(identity->key == odd->key);
    CHECK(identity->degree == odd->degree);

    auto segre = fixtures::segre(2);
    CHECK_FALSE(class_of_residue(segre, CovariantClass::base_ring(segre), {1, 0, 0, 0}, 1));
}

TEST_CASE("iso_test") {
    auto cone = fixtures::quadric_cone();
    auto base = CovariantClass::base_ring(cone);
    auto a = *class_of_residue(cone, base, {1, 0}, 1);
    auto b = *class_of_residue(cone, base, {0, 1}, 1);
    CHECK(iso_test(a, a));
    CHECK(iso_test(a, b));
    CHECK_FALSE(iso_test(base, a));
}

TEST_CASE("generator degrees of pushforward summands stay below the degree bound") {
    std::vector<WeightSystem> systems = {fixtures::quadric_cone(), fixtures::segre(2), fixtures::segre(3),
                                         fixtures::torsion_ring(3, {1, 2}, 2), fixtures::polynomial_ring(2, 3)};
    for (const auto& ws : systems) {
        std::int64_t bound = 0;
        for (const auto& lambda : invariant_generators(ws)) bound += ws.graded_degree(lambda);
        for (unsigned e = 1; e <= 3; ++e) {
            auto report = pushforward_decompose(ws, CovariantClass::base_ring(ws), e);
            for (const auto& [key, entry] : report.entries) {
                for (const auto& g : entry.representative.generators) {
                    CHECK(ws.graded_degree(g) >= 0);
                    CHECK(ws.graded_degree(g) < std::max<std::int64_t>(bound, 1));
                }
            }
        }
    }
}
