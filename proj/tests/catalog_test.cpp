#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "intform/enumeration.hpp"
#include "intform/json_io.hpp"

using namespace intform;

namespace {

const Catalog& shipped_catalog() {
    static const Catalog cat = load_catalog(INTFORM_CATALOG_PATH);
    return cat;
}

}  // namespace

TEST_CASE("catalog loads and contains the expected entries") {
    const Catalog& cat = shipped_catalog();
    CHECK(cat.schema == 1);
    const std::set<std::string> required = {
        "projective_plane", "fake_plane", "ruled_genus2", "k3", "enriques", "torus",
        "bielliptic", "primary_kodaira", "secondary_kodaira", "secondary_kodaira_blown_up",
        "hopf", "inoue_b2", "properly_elliptic_q1", "properly_elliptic_q1_blown_up",
        "general_type_bmy_boundary"};
    for (const auto& name : required) {
        CAPTURE(name);
        CHECK(cat.find(name) != nullptr);
    }
    std::set<std::string> names;
    for (const auto& e : cat.entries) CHECK(names.insert(e.name).second);
}

TEST_CASE("every catalog entry is consistent") {
    for (const auto& e : shipped_catalog().entries) {
        CAPTURE(e.name);
        CHECK(consistency_report(e.invariants).empty());
        CHECK(e.invariants.minimal == (e.blowups == 0));
    }
}

TEST_CASE("every entry is accepted by its own class row") {
    for (const auto& e : shipped_catalog().entries) {
        CAPTURE(e.name);
        const SurfaceInvariants m = blow_down(e.invariants, e.blowups);
        const auto classes = classes_consistent_with(m);
        CHECK(std::find(classes.begin(), classes.end(), e.class_label) != classes.end());
        // With the Kodaira dimension pinned, the "exactly one" clause holds.
        REQUIRE(classes.size() == 1);
        CHECK(classes[0] == e.class_label);
    }
}

TEST_CASE("golden verdicts match the recorded lattices") {
    for (const auto& e : shipped_catalog().entries) {
        CAPTURE(e.name);
        const Verdict v = definite_verdict(e.invariants);
        CHECK(std::find(v.allowed.begin(), v.allowed.end(),
                        ClassMatch{e.class_label, e.blowups}) != v.allowed.end());
        CHECK(v.lattice == e.known_lattice);
        if (v.lattice) {
            const auto [pos, neg] = signature_pair(e.invariants);
            CHECK(v.lattice->formal_signature() == Signature{pos, neg, 0});
        }
    }
}

TEST_CASE("recorded even_form metadata agrees with the recorded lattice") {
    for (const auto& e : shipped_catalog().entries) {
        CAPTURE(e.name);
        if (!e.known_lattice || e.known_lattice->rank() == 0) continue;
        REQUIRE(e.even_form.has_value());
        CHECK(*e.even_form == (e.known_lattice->formal_parity() == Parity::even));
        // The recorded lattice's signature must match the invariants.
        const auto [pos, neg] = signature_pair(e.invariants);
        CHECK(e.known_lattice->formal_signature() == Signature{pos, neg, 0});
    }
}

TEST_CASE("even forms pass the characteristic-vector test on explicit grams") {
    for (const auto& e : shipped_catalog().entries) {
        if (!e.known_lattice || e.known_lattice->rank() == 0 || !e.even_form) continue;
        CAPTURE(e.name);
        const IntegralLattice l = e.known_lattice->to_lattice();
        const std::vector<Int> zero(l.rank(), Int(0));
        CHECK(is_characteristic_vector(l, zero) == *e.even_form);
    }
}

TEST_CASE("catalog JSON round-trips byte for byte") {
    const Catalog& cat = shipped_catalog();
    const std::string once = to_json(cat).dump();
    const Catalog reparsed = catalog_from_json(json::parse(once));
    CHECK(to_json(reparsed).dump() == once);
}

TEST_CASE("surface and lattice JSON round-trips") {
    for (const auto& e : shipped_catalog().entries) {
        const std::string s = to_json(e.invariants).dump();
        CHECK(to_json(surface_from_json(json::parse(s))).dump() == s);
        if (e.known_lattice) {
            const std::string c = to_json(*e.known_lattice).dump();
            CHECK(to_json(lattice_class_from_json(json::parse(c))).dump() == c);
        }
    }
}

TEST_CASE("lattice JSON rejects malformed input") {
    CHECK_THROWS(lattice_from_json(json::parse(R"({"gram": [[0,1],[1]]})")));
    CHECK_THROWS(lattice_from_json(json::parse(R"({"gram": [[0,1],[2,0]]})")));
    CHECK_THROWS(lattice_from_json(json::parse(R"({"gram": [[0.5]]})")));
    CHECK_THROWS(lattice_from_json(json::parse(R"({"gram": 3})")));
    CHECK(lattice_from_json(json::parse(R"({"gram": []})")).rank() == 0);
}

TEST_CASE("verify report serializes with the documented keys") {
    VerifyBounds small{.q_max = 2, .pg_max = 2, .b2_max = 8, .k_max = 2};
    const json j = to_json(verify_main_theorems(small));
    CHECK(j.contains("checked"));
    CHECK(j.contains("definite_kahler"));
    CHECK(j.contains("definite_nonkahler"));
    CHECK(j.contains("counterexamples"));
    CHECK(j.at("counterexamples").empty());
    const std::string once = j.dump();
    CHECK(json::parse(once).dump() == once);
}
