#include <doctest.h>

#include "forge/errors.hpp"
#include "support.hpp"

using namespace forge;

namespace {

void check_against_oracle(const WeightSystem& ws, const Character& beta, unsigned e, std::int64_t box) {
    auto cls = fixtures::class_of(ws, beta);
    auto report = pushforward_decompose(ws, cls, e);
    auto expected = oracle::decompose(ws, beta, e, box);
    CHECK(report.zero_piece_count == expected.zero_pieces);
    REQUIRE(report.entries.size() == expected.multiplicities.size());
    for (const auto& [key, count] : expected.multiplicities) CHECK(report.multiplicity(key) == count);
    CHECK(report.conserves());
}

}  // namespace

TEST_CASE("regular ring pushforward is free") {
    for (std::int64_t p : {2, 3, 5}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            auto ws = fixtures::polynomial_ring(d, p);
            for (unsigned e = 1; e <= 2; ++e) {
                auto report = pushforward_decompose(ws, CovariantClass::base_ring(ws), e);
                REQUIRE(report.entries.size() == 1);
                CHECK(report.entries.begin()->first == CanonicalKey{Exponent(d, 0)});
                CHECK(report.total() == static_cast<std::uint64_t>(ipow(p, e * d)));
                CHECK(report.zero_piece_count == 0);
            }
        }
    }
}

TEST_CASE("quadric cone pushforward") {
    auto ws = fixtures::quadric_cone();
    auto report = pushforward_decompose(ws, CovariantClass::base_ring(ws), 1);
    CHECK(report.multiplicity({{0, 0}}) == 5);
    CHECK(report.multiplicity({{0, 1}, {1, 0}}) == 4);
    CHECK(report.zero_piece_count == 0);
}

TEST_CASE("segre pushforward at p = 2") {
    auto ws = fixtures::segre(2);
    auto report = pushforward_decompose(ws, CovariantClass::base_ring(ws), 1);
    CHECK(report.multiplicity({{0, 0, 0, 0}}) == 6);
    CHECK(report.multiplicity({{0, 1, 0, 0}, {1, 0, 0, 0}}) == 1);
    CHECK(report.multiplicity({{0, 0, 0, 1}, {0, 0, 1, 0}}) == 1);
    CHECK(report.zero_piece_count == 8);
}

TEST_CASE("pushforward reports match the monomial oracle") {
    check_against_oracle(fixtures::quadric_cone(), Character{{}, {0}}, 1, 4);
    check_against_oracle(fixtures::quadric_cone(), Character{{}, {1}}, 2, 4);
    check_against_oracle(fixtures::segre(2), Character{{0}, {}}, 2, 3);
    check_against_oracle(fixtures::segre(2), Character{{1}, {}}, 1, 3);
    check_against_oracle(fixtures::segre(3), Character{{-1}, {}}, 1, 3);
    check_against_oracle(fixtures::segre(3), Character{{0}, {}}, 2, 3);
    check_against_oracle(fixtures::torsion_ring(3, {1, 2}, 2), Character{{}, {1}}, 2, 4);
    check_against_oracle(fixtures::torsion_ring(5, {1, 2}, 3), Character{{}, {0}}, 2, 6);
    check_against_oracle(fixtures::free_ring({1, 2, -1}, 2), Character{{0}, {}}, 2, 4);
}

TEST_CASE("budget") {
    auto ws = fixtures::segre(3);
    EnumerationBudget tiny{10};
    CHECK_THROWS_AS(pushforward_decompose(ws, CovariantClass::base_ring(ws), 1, tiny), Error);
}

TEST_CASE("closure") {
    auto trivial = closure_classes(fixtures::polynomial_ring(2, 3), 4);
    CHECK(trivial.ffrt);
    CHECK(trivial.classes.size() == 1);
    auto cone = closure_classes(fixtures::quadric_cone(), 4);
    CHECK(cone.ffrt);
    CHECK(cone.classes.size() == 2);
    for (std::int64_t p : {2, 3}) {
        auto ws = fixtures::segre(p);
        auto closure = closure_classes(ws, 4);
        CHECK(closure.ffrt);
        REQUIRE(closure.classes.size() == 3);
        auto critical = strongly_critical_classes(ws);
        REQUIRE(critical.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK(critical[i].key == closure.classes[i].key);
    }
    auto stop = closure_classes(fixtures::segre(2), 0);
    CHECK_FALSE(stop.ffrt);
}

TEST_CASE("strongly critical classes") {
    auto trivial = strongly_critical_classes(fixtures::polynomial_ring(2, 2));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].key == CanonicalKey{{0, 0}});
    CHECK(strongly_critical_classes(fixtures::quadric_cone()).size() == 2);
    auto segre = strongly_critical_classes(fixtures::segre(2));
    std::set<Rational> degrees;
    for (const auto& c : segre) degrees.insert(c.degree.free_part[0]);
    CHECK(degrees == std::set<Rational>{-1, 0, 1});
}

TEST_CASE("multiplicity matrices") {
    auto cone = multiplicity_matrix(fixtures::quadric_cone());
    CHECK(cone.matrix.entries == IntMatrix{{5, 4}, {4, 5}});
    CHECK(cone.matrix.base_index == 0);
    CHECK(cone.rank_identity.status == RankIdentity::Status::Verified);

    for (std::int64_t p : {2, 3, 5}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            auto m = multiplicity_matrix(fixtures::polynomial_ring(d, p));
            CHECK(m.matrix.entries == IntMatrix{{Integer(ipow(p, d))}});
        }
    }

    auto segre = multiplicity_matrix(fixtures::segre(2));
    CHECK(segre.matrix.entries == IntMatrix{{6, 4, 4}, {1, 4, 0}, {1, 0, 4}});
    CHECK(segre.rank_identity.status == RankIdentity::Status::Verified);
    auto segre3 = multiplicity_matrix(fixtures::segre(3));
    for (std::size_t j = 0; j < 3; ++j) {
        Integer sum = 0;
        for (std::size_t i = 0; i < 3; ++i) sum += segre3.matrix.entries[i][j];
        CHECK(sum == 27);
    }
}

TEST_CASE("rank identity reports the lattice torsion") {
    auto cone = multiplicity_matrix(fixtures::quadric_cone());
    REQUIRE_FALSE(cone.rank_identity.torsion_factors.empty());
    CHECK(cone.rank_identity.torsion_factors.back() == 2);
    auto positive = multiplicity_matrix(fixtures::free_ring({1, 2}, 3));
    CHECK(positive.matrix.entries == IntMatrix{{1}});
    CHECK(positive.matrix.dim == 0);
    CHECK(positive.rank_identity.status == RankIdentity::Status::Verified);
    auto broken = cone.matrix;
    broken.entries[0][0] += 1;
    CHECK(check_rank_identity(fixtures::quadric_cone(), broken).status == RankIdentity::Status::Violated);
}

TEST_CASE("F-split witness and direct multiplicities") {
    auto ws = fixtures::quadric_cone();
    auto m = multiplicity_matrix(ws);
    const auto& r = m.classes[0];
    const auto& odd = m.classes[1];
    CHECK(multiplicity_direct(ws, 2, r, r) == 41);
    CHECK(multiplicity_direct(ws, 1, odd, r) == 4);
    for (unsigned e = 1; e <= 3; ++e) CHECK(multiplicity_direct(ws, e, r, r) >= 1);
}

TEST_CASE("composition law") {
    for (const auto& ws : {fixtures::quadric_cone(), fixtures::segre(2), fixtures::segre(3)}) {
        auto cm = multiplicity_matrix(ws);
        for (unsigned e = 1; e <= 2; ++e) {
            for (unsigned f = 1; f <= 2; ++f) {
                auto product = multiply(power(cm.matrix.entries, e), power(cm.matrix.entries, f));
                for (std::size_t i = 0; i < cm.classes.size(); ++i) {
                    for (std::size_t j = 0; j < cm.classes.size(); ++j) {
                        CHECK(Integer(multiplicity_direct(ws, e + f, cm.classes[i], cm.classes[j])) ==
                              product[i][j]);
                    }
                }
            }
        }
    }
}

TEST_CASE("labels") {
    CHECK(describe_key({{0, 1}, {1, 0}}) == "{(0,1) (1,0)}");
    CHECK(describe_character(Character{{1, -2}, {3}}) == "[1 -2 | 3]");
}
