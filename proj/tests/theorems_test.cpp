#include <catch_amalgamated.hpp>

#include <algorithm>

#include "intform/theorems.hpp"

using namespace intform;

namespace {

SurfaceInvariants tuple(std::int64_t q, std::int64_t pg, std::int64_t b1, std::int64_t b2,
                        std::int64_t c1sq, std::int64_t c2, Kahler k, KodairaDim kd,
                        bool minimal = true) {
    return {.b1 = b1, .b2 = b2, .q = q, .pg = pg, .c1sq = c1sq, .c2 = c2,
            .kahler = k, .minimal = minimal, .kodaira = kd};
}

bool allows(const Verdict& v, SurfaceClass cls, std::int64_t k) {
    return std::find(v.allowed.begin(), v.allowed.end(), ClassMatch{cls, k}) != v.allowed.end();
}

}  // namespace

TEST_CASE("definiteness_from_invariants") {
    const auto fake = tuple(0, 0, 0, 1, 9, 3, Kahler::yes, KodairaDim::two);
    CHECK(definiteness_from_invariants(fake) == Definiteness::positive_definite);

    const auto vii1 = tuple(1, 0, 1, 1, -1, 1, Kahler::no, KodairaDim::minus_infinity);
    CHECK(definiteness_from_invariants(vii1) == Definiteness::negative_definite);

    const auto k3 = tuple(0, 1, 0, 22, 0, 24, Kahler::yes, KodairaDim::zero);
    CHECK(definiteness_from_invariants(k3) == Definiteness::indefinite);

    const auto hopf = tuple(1, 0, 1, 0, 0, 0, Kahler::no, KodairaDim::minus_infinity);
    CHECK(definiteness_from_invariants(hopf) == Definiteness::zero_rank);

    auto bad = fake;
    bad.c2 = 4;
    CHECK_THROWS_AS(definiteness_from_invariants(bad), std::invalid_argument);
}

TEST_CASE("verdict for the plane-like tuple") {
    // kappa unknown: the numbers cannot separate the plane from a fake plane.
    const auto s = tuple(0, 0, 0, 1, 9, 3, Kahler::yes, KodairaDim::unknown);
    const Verdict v = definite_verdict(s);
    CHECK(v.definiteness == Definiteness::positive_definite);
    REQUIRE(v.allowed.size() == 2);
    CHECK(allows(v, SurfaceClass::rational, 0));
    CHECK(allows(v, SurfaceClass::general_type, 0));
    CHECK(v.lattice == LatticeClass{.plus1 = 1});
}

TEST_CASE("verdict for the twice blown-up flat non-Kahler tuple") {
    const auto s = tuple(1, 0, 1, 2, -2, 2, Kahler::no, KodairaDim::unknown, false);
    const Verdict v = definite_verdict(s);
    CHECK(v.definiteness == Definiteness::negative_definite);
    CHECK(allows(v, SurfaceClass::class_vii, 0));
    CHECK(allows(v, SurfaceClass::secondary_kodaira, 2));
    CHECK(allows(v, SurfaceClass::properly_elliptic, 2));
    CHECK(v.lattice == LatticeClass{.minus1 = 2});
}

TEST_CASE("verdict for K3") {
    const auto s = tuple(0, 1, 0, 22, 0, 24, Kahler::yes, KodairaDim::zero);
    const Verdict v = definite_verdict(s);
    CHECK(v.definiteness == Definiteness::indefinite);
    REQUIRE(v.allowed.size() == 1);
    CHECK(allows(v, SurfaceClass::k3, 0));
    CHECK(v.lattice == (LatticeClass{.u = 3, .e8neg = 2}));
}

TEST_CASE("verdict for K3 numbers with unknown kappa stays undetermined") {
    // Both K3 and a properly elliptic reading fit; they disagree about the
    // form, so no class is reported.
    const auto s = tuple(0, 1, 0, 22, 0, 24, Kahler::yes, KodairaDim::unknown);
    const Verdict v = definite_verdict(s);
    CHECK(allows(v, SurfaceClass::k3, 0));
    CHECK(allows(v, SurfaceClass::properly_elliptic, 0));
    CHECK_FALSE(v.lattice.has_value());
}

TEST_CASE("a consistent positive definite non-Kahler tuple matches no class at all") {
    // b2 = 2pg != 0 with q = 1, pg = 1: the formulas all balance, but no row
    // of the classification accepts it at any blow-down level.
    const auto s = tuple(1, 1, 1, 2, 10, 2, Kahler::no, KodairaDim::unknown);
    REQUIRE(is_consistent(s));
    const Verdict v = definite_verdict(s);
    CHECK(v.definiteness == Definiteness::positive_definite);
    CHECK(v.allowed.empty());
    CHECK_FALSE(v.lattice.has_value());
}

TEST_CASE("verdict rejects inconsistent input") {
    auto s = tuple(0, 0, 0, 1, 9, 4, Kahler::yes, KodairaDim::unknown);
    CHECK_THROWS_AS(definite_verdict(s), std::invalid_argument);
}

TEST_CASE("verify_main_theorems at default bounds finds no counterexample") {
    const VerifyReport report = verify_main_theorems(VerifyBounds{});
    CAPTURE(report.counterexamples.size());
    CHECK(report.ok());
    CHECK(report.checked > 0);
    CHECK_FALSE(report.definite_kahler.empty());
    CHECK_FALSE(report.definite_nonkahler.empty());

    for (const auto& c : report.definite_kahler) {
        CHECK(c.s.pg == 0);
        CHECK(c.s.q == 0);
        CHECK(c.s.b2 == 1);
        CHECK(c.verdict.lattice == LatticeClass{.plus1 = 1});
    }
    for (const auto& c : report.definite_nonkahler) {
        CHECK(c.verdict.definiteness == Definiteness::negative_definite);
        CHECK(c.verdict.lattice == LatticeClass{.minus1 = c.s.b2});
    }
}

TEST_CASE("no counterexamples on a grid strictly larger than the defaults") {
    const VerifyBounds wide{.q_max = 9, .pg_max = 9, .b2_max = 48, .k_max = 14};
    const VerifyReport report = verify_main_theorems(wide);
    CHECK(report.ok());
    CHECK(report.checked > 3000);
    CHECK(report.definite_kahler.size() == 2);  // the plane numbers at kappa -infty and 2
}

TEST_CASE("with k_max = 0 only class VII readings survive on the definite non-Kahler side") {
    VerifyBounds bounds;
    bounds.k_max = 0;
    const VerifyReport report = verify_main_theorems(bounds);
    CHECK(report.ok());
    CHECK_FALSE(report.definite_nonkahler.empty());
    for (const auto& c : report.definite_nonkahler)
        for (const auto& m : c.verdict.allowed)
            CHECK(m.cls == SurfaceClass::class_vii);
}

TEST_CASE("the Kahler-only branch only ever produces the rank-1 form") {
    const VerifyReport report = verify_main_theorems(VerifyBounds{}, VerifyScope::kahler_only);
    CHECK(report.ok());
    CHECK(report.definite_nonkahler.empty());
    REQUIRE_FALSE(report.definite_kahler.empty());
    for (const auto& c : report.definite_kahler)
        CHECK(c.verdict.lattice == LatticeClass{.plus1 = 1});
}

TEST_CASE("definite Kahler tuples sit exactly on the BMY boundary") {
    const VerifyReport report = verify_main_theorems(VerifyBounds{}, VerifyScope::kahler_only);
    for (const auto& c : report.definite_kahler) {
        const auto [c1sq, c2] = chern_from_pg_q(c.s.pg, c.s.q);
        CHECK(c.s.c1sq == c1sq);
        CHECK(c.s.c2 == c2);
        CHECK(bmy_margin(c.s.c1sq, c.s.c2) == 4 * (c.s.pg + c.s.q));
    }
}

TEST_CASE("positive definite tuples satisfy the definiteness criteria") {
    const VerifyReport report = verify_main_theorems(VerifyBounds{});
    for (const auto& c : report.definite_kahler) {
        REQUIRE(c.verdict.definiteness == Definiteness::positive_definite);
        CHECK(c.s.b2 == 2 * c.s.pg + 1);
    }
    for (const auto& c : report.definite_nonkahler) {
        CHECK(c.s.pg == 0);
        CHECK(c.s.b2 != 0);
    }
}
