#ifndef INTFORM_JSON_IO_HPP
#define INTFORM_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "intform/catalog.hpp"
#include "intform/theorems.hpp"

namespace intform {

using nlohmann::json;

// Gram entries travel as plain JSON integers. Values outside 64 bits would
// not survive a round trip through standard JSON parsers, so they are
// rejected on output rather than silently truncated.
inline json to_json(const Int& x) {
    return json(to_int64(x));
}

inline Int int_from_json(const json& j) {
    if (!j.is_number_integer())
        throw std::invalid_argument("expected an exact integer");
    return Int(j.get<std::int64_t>());
}

inline json to_json(const IntegralLattice& l) {
    json rows = json::array();
    for (std::size_t i = 0; i < l.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < l.rank(); ++j) row.push_back(to_json(l.gram()(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"gram", std::move(rows)}};
}

inline IntegralLattice lattice_from_json(const json& j) {
    const json& rows = j.is_object() ? j.at("gram") : j;
    if (!rows.is_array()) throw std::invalid_argument("gram must be an array of rows");
    const std::size_t n = rows.size();
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw std::invalid_argument("gram must be square, not ragged");
        for (std::size_t jj = 0; jj < n; ++jj) g(i, jj) = int_from_json(rows[i][jj]);
    }
    return IntegralLattice(std::move(g));  // symmetry enforced by the constructor
}

inline json to_json(const Signature& s) {
    return json{{"pos", s.pos}, {"neg", s.neg}, {"null", s.zero}};
}

inline json to_json(const LatticeClass& c) {
    return json{{"plus1", c.plus1}, {"minus1", c.minus1}, {"U", c.u},
                {"E8", c.e8}, {"E8neg", c.e8neg}};
}

inline LatticeClass lattice_class_from_json(const json& j) {
    LatticeClass c;
    c.plus1 = j.at("plus1").get<std::int64_t>();
    c.minus1 = j.at("minus1").get<std::int64_t>();
    c.u = j.at("U").get<std::int64_t>();
    c.e8 = j.at("E8").get<std::int64_t>();
    c.e8neg = j.at("E8neg").get<std::int64_t>();
    if (c.plus1 < 0 || c.minus1 < 0 || c.u < 0 || c.e8 < 0 || c.e8neg < 0)
        throw std::invalid_argument("lattice class multiplicities must be >= 0");
    return c;
}

inline const char* to_string(Kahler k) {
    switch (k) {
        case Kahler::yes: return "yes";
        case Kahler::no: return "no";
        case Kahler::unknown: return "unknown";
    }
    return "?";
}

inline Kahler kahler_from_string(const std::string& s) {
    if (s == "yes") return Kahler::yes;
    if (s == "no") return Kahler::no;
    if (s == "unknown") return Kahler::unknown;
    throw std::invalid_argument("kahler must be yes|no|unknown");
}

inline const char* to_string(KodairaDim k) {
    switch (k) {
        case KodairaDim::minus_infinity: return "minus_infinity";
        case KodairaDim::zero: return "0";
        case KodairaDim::one: return "1";
        case KodairaDim::two: return "2";
        case KodairaDim::unknown: return "unknown";
    }
    return "?";
}

inline KodairaDim kodaira_from_string(const std::string& s) {
    if (s == "minus_infinity") return KodairaDim::minus_infinity;
    if (s == "0") return KodairaDim::zero;
    if (s == "1") return KodairaDim::one;
    if (s == "2") return KodairaDim::two;
    if (s == "unknown") return KodairaDim::unknown;
    throw std::invalid_argument("kodaira must be minus_infinity|0|1|2|unknown");
}

inline json to_json(const SurfaceInvariants& s) {
    return json{{"b1", s.b1},       {"b2", s.b2},
                {"q", s.q},         {"pg", s.pg},
                {"c1sq", s.c1sq},   {"c2", s.c2},
                {"kahler", to_string(s.kahler)},
                {"minimal", s.minimal},
                {"kodaira", to_string(s.kodaira)}};
}

inline SurfaceInvariants surface_from_json(const json& j) {
    SurfaceInvariants s;
    s.b1 = j.at("b1").get<std::int64_t>();
    s.b2 = j.at("b2").get<std::int64_t>();
    s.q = j.at("q").get<std::int64_t>();
    s.pg = j.at("pg").get<std::int64_t>();
    s.c1sq = j.at("c1sq").get<std::int64_t>();
    s.c2 = j.at("c2").get<std::int64_t>();
    s.kahler = kahler_from_string(j.at("kahler").get<std::string>());
    s.minimal = j.at("minimal").get<bool>();
    s.kodaira = kodaira_from_string(j.at("kodaira").get<std::string>());
    if (s.b1 < 0 || s.b2 < 0 || s.q < 0 || s.pg < 0)
        throw std::invalid_argument("b1, b2, q, pg must be >= 0");
    return s;
}

inline json to_json(const Verdict& v) {
    json classes = json::array();
    for (const auto& m : v.allowed)
        classes.push_back(json{{"class", to_string(m.cls)}, {"k", m.blowups}});
    json lattice = v.lattice ? to_json(*v.lattice) : json("undetermined");
    return json{{"definiteness", to_string(v.definiteness)},
                {"classes", std::move(classes)},
                {"lattice", std::move(lattice)}};
}

inline json to_json(const VerifyReport& r) {
    auto dump_cases = [](const std::vector<DefiniteCase>& cases) {
        json arr = json::array();
        for (const auto& c : cases)
            arr.push_back(json{{"invariants", to_json(c.s)}, {"verdict", to_json(c.verdict)}});
        return arr;
    };
    json cx = json::array();
    for (const auto& c : r.counterexamples)
        cx.push_back(json{{"invariants", to_json(c.s)}, {"reason", c.reason}});
    return json{{"checked", r.checked},
                {"definite_kahler", dump_cases(r.definite_kahler)},
                {"definite_nonkahler", dump_cases(r.definite_nonkahler)},
                {"counterexamples", std::move(cx)}};
}

inline json to_json(const CatalogEntry& e) {
    return json{{"name", e.name},
                {"invariants", to_json(e.invariants)},
                {"class_label", to_string(e.class_label)},
                {"blowups", e.blowups},
                {"known_lattice", e.known_lattice ? to_json(*e.known_lattice) : json("undetermined")},
                {"even_form", e.even_form ? json(*e.even_form) : json("unknown")},
                {"notes", e.notes}};
}

inline CatalogEntry catalog_entry_from_json(const json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.invariants = surface_from_json(j.at("invariants"));
    const auto label = surface_class_from_string(j.at("class_label").get<std::string>());
    if (!label) throw std::invalid_argument("unknown class label: " + j.at("class_label").get<std::string>());
    e.class_label = *label;
    e.blowups = j.at("blowups").get<std::int64_t>();
    if (e.blowups < 0) throw std::invalid_argument("blowups must be >= 0");
    const json& kl = j.at("known_lattice");
    if (!(kl.is_string() && kl.get<std::string>() == "undetermined"))
        e.known_lattice = lattice_class_from_json(kl);
    const json& ef = j.at("even_form");
    if (!(ef.is_string() && ef.get<std::string>() == "unknown"))
        e.even_form = ef.get<bool>();
    e.notes = j.value("notes", "");
    return e;
}

inline json to_json(const Catalog& c) {
    json entries = json::array();
    for (const auto& e : c.entries) entries.push_back(to_json(e));
    return json{{"schema", c.schema}, {"entries", std::move(entries)}};
}

inline Catalog catalog_from_json(const json& j) {
    Catalog c;
    c.schema = j.at("schema").get<int>();
    if (c.schema != 1) throw std::invalid_argument("unsupported catalog schema");
    for (const json& e : j.at("entries")) c.entries.push_back(catalog_entry_from_json(e));
    return c;
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog: " + path);
    json j;
    in >> j;
    return catalog_from_json(j);
}

/// Classification table as data, for documentation tooling.
inline json classification_table_json() {
    json rows = json::array();
    for (const auto& row : classification_table()) {
        const char* kahler = "";
        switch (row.kahler) {
            case KahlerRequirement::kahler: kahler = "kahler"; break;
            case KahlerRequirement::non_kahler: kahler = "non_kahler"; break;
            case KahlerRequirement::algebraic: kahler = "algebraic"; break;
            case KahlerRequirement::any: kahler = "any"; break;
        }
        rows.push_back(json{{"name", to_string(row.name)},
                            {"kodaira", to_string(row.kodaira)},
                            {"kahler", kahler},
                            {"q", row.q_text},
                            {"c1sq", row.c1sq_text},
                            {"c2", row.c2_text}});
    }
    return json{{"classes", std::move(rows)}};
}

}  // namespace intform

#endif
