#include <catch_amalgamated.hpp>

#include <algorithm>

#include "intform/surface.hpp"

using namespace intform;

namespace {

SurfaceInvariants projective_plane() {
    return {.b1 = 0, .b2 = 1, .q = 0, .pg = 0, .c1sq = 9, .c2 = 3,
            .kahler = Kahler::yes, .minimal = true, .kodaira = KodairaDim::minus_infinity};
}

SurfaceInvariants k3() {
    return {.b1 = 0, .b2 = 22, .q = 0, .pg = 1, .c1sq = 0, .c2 = 24,
            .kahler = Kahler::yes, .minimal = true, .kodaira = KodairaDim::zero};
}

SurfaceInvariants secondary_kodaira() {
    return {.b1 = 1, .b2 = 0, .q = 1, .pg = 0, .c1sq = 0, .c2 = 0,
            .kahler = Kahler::no, .minimal = true, .kodaira = KodairaDim::zero};
}

bool has(const std::vector<Violation>& vs, Violation v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

TEST_CASE("euler_check") {
    CHECK(euler_check(projective_plane()));
    SurfaceInvariants pk{.b1 = 3, .b2 = 4, .q = 2, .pg = 1, .c1sq = 0, .c2 = 0,
                         .kahler = Kahler::no, .minimal = true, .kodaira = KodairaDim::zero};
    CHECK(euler_check(pk));
    SurfaceInvariants bad{.b1 = 0, .b2 = 0, .q = 0, .pg = 0, .c1sq = 0, .c2 = 5};
    CHECK_FALSE(euler_check(bad));
}

TEST_CASE("index_from_chern") {
    CHECK(index_from_chern(9, 3) == Rat(1));
    CHECK(index_from_chern(0, 24) == Rat(-16));
    CHECK(index_from_chern(0, 0) == Rat(0));
    CHECK(index_from_chern(1, 0) == Rat(1, 3));  // non-integral values survive as rationals
}

TEST_CASE("noether_residual") {
    CHECK(noether_residual(k3()) == Rat(0));
    SurfaceInvariants enriques{.b1 = 0, .b2 = 10, .q = 0, .pg = 0, .c1sq = 0, .c2 = 12,
                               .kahler = Kahler::yes, .minimal = true,
                               .kodaira = KodairaDim::zero};
    CHECK(noether_residual(enriques) == Rat(0));
    SurfaceInvariants off{.b1 = 0, .b2 = 0, .q = 0, .pg = 0, .c1sq = 1, .c2 = 0};
    CHECK(noether_residual(off) == Rat(11, 12));
    off.q = 1;
    CHECK(noether_residual(off) == Rat(-1, 12));
}

TEST_CASE("expected_b1") {
    CHECK(expected_b1(0, Kahler::yes) == 0);
    CHECK(expected_b1(1, Kahler::no) == 1);
    CHECK(expected_b1(2, Kahler::no) == 3);
    CHECK_THROWS_AS(expected_b1(0, Kahler::no), std::invalid_argument);
    CHECK_THROWS_AS(expected_b1(1, Kahler::unknown), std::invalid_argument);
}

TEST_CASE("signature_pair") {
    CHECK(signature_pair(k3()) == std::pair<std::int64_t, std::int64_t>{3, 19});
    SurfaceInvariants pk{.b1 = 3, .b2 = 4, .q = 2, .pg = 1, .c1sq = 0, .c2 = 0,
                         .kahler = Kahler::no, .minimal = true, .kodaira = KodairaDim::zero};
    CHECK(signature_pair(pk) == std::pair<std::int64_t, std::int64_t>{2, 2});
    SurfaceInvariants fake = projective_plane();
    fake.kodaira = KodairaDim::two;
    CHECK(signature_pair(fake) == std::pair<std::int64_t, std::int64_t>{1, 0});

    SurfaceInvariants negative{.b1 = 0, .b2 = 1, .q = 0, .pg = 1, .c1sq = 0, .c2 = 0,
                               .kahler = Kahler::yes};
    CHECK_THROWS_AS(signature_pair(negative), std::invalid_argument);
    SurfaceInvariants unknown = k3();
    unknown.kahler = Kahler::unknown;
    CHECK_THROWS_AS(signature_pair(unknown), std::invalid_argument);
}

TEST_CASE("chern_from_pg_q") {
    CHECK(chern_from_pg_q(0, 0) == std::pair<std::int64_t, std::int64_t>{9, 3});
    CHECK(chern_from_pg_q(1, 0) == std::pair<std::int64_t, std::int64_t>{19, 5});
    CHECK(chern_from_pg_q(0, 1) == std::pair<std::int64_t, std::int64_t>{1, -1});
}

TEST_CASE("bmy_margin") {
    CHECK(bmy_margin(9, 3) == 0);
    CHECK(bmy_margin(0, 24) == -72);
    const auto [c1sq, c2] = chern_from_pg_q(1, 1);
    CHECK(bmy_margin(c1sq, c2) == 8);  // 4(pg + q)
}

TEST_CASE("the margin identity holds on a grid") {
    for (std::int64_t pg = 0; pg <= 50; ++pg)
        for (std::int64_t q = 0; q <= 50; ++q) {
            const auto [c1sq, c2] = chern_from_pg_q(pg, q);
            CHECK(bmy_margin(c1sq, c2) == 4 * (pg + q));
        }
}

TEST_CASE("consistency_report accepts the classical tuples") {
    CHECK(consistency_report(projective_plane()).empty());
    CHECK(consistency_report(k3()).empty());
    CHECK(consistency_report(secondary_kodaira()).empty());
}

TEST_CASE("consistency_report names what broke") {
    SurfaceInvariants perturbed = projective_plane();
    perturbed.c2 = 4;
    const auto report = consistency_report(perturbed);
    CHECK(has(report, Violation::euler));
    CHECK(has(report, Violation::noether));
    CHECK(has(report, Violation::index_integrality));

    SurfaceInvariants wrong_b1 = k3();
    wrong_b1.b1 = 1;
    wrong_b1.b2 = 24;  // keep Euler satisfied
    CHECK(has(consistency_report(wrong_b1), Violation::b1_mismatch));

    SurfaceInvariants negative{.b1 = 0, .b2 = 1, .q = 0, .pg = 1, .c1sq = 19, .c2 = 5,
                               .kahler = Kahler::yes, .minimal = true,
                               .kodaira = KodairaDim::unknown};
    CHECK(has(consistency_report(negative), Violation::negative_signature));

    SurfaceInvariants nonkahler_q0 = secondary_kodaira();
    nonkahler_q0.q = 0;
    CHECK(has(consistency_report(nonkahler_q0), Violation::b1_mismatch));
}

TEST_CASE("kahler-unknown tuples skip the branch-dependent checks") {
    SurfaceInvariants s = k3();
    s.kahler = Kahler::unknown;
    s.b1 = 5;   // would fail the b1 check on either branch
    s.b2 = 32;  // keep Euler: c2 = 2 - 2 b1 + b2
    const auto report = consistency_report(s);
    CHECK_FALSE(has(report, Violation::b1_mismatch));
    CHECK_FALSE(has(report, Violation::index_signature));
}

TEST_CASE("consistent tuples satisfy the index theorem against the signature") {
    // Quantified over the classical examples above.
    for (const auto& s : {projective_plane(), k3(), secondary_kodaira()}) {
        const auto [pos, neg] = signature_pair(s);
        CHECK(index_from_chern(s.c1sq, s.c2) == Rat(pos - neg));
        CHECK(pos + neg == s.b2);
    }
}

TEST_CASE("consistent Kahler tuples are never negative definite") {
    for (const auto& s : {projective_plane(), k3()}) {
        const auto [pos, neg] = signature_pair(s);
        CHECK(pos >= 1);  // pos = 2 pg + 1 is odd and positive
        (void)neg;
    }
}
