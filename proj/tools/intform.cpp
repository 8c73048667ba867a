// intform: exact arithmetic on integral unimodular lattices and the
// invariant bookkeeping of compact complex surfaces.
//
// Exit codes: 0 = computed (including "inconsistent" / "NotDiagonalizable"
// style verdicts), 1 = verification found a counterexample, 2 = input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intform/enumeration.hpp"
#include "intform/json_io.hpp"

using namespace intform;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

json read_stdin_json(const char* what) {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return parse_json_text(buf.str(), what);
}

json read_file_json(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), what);
}

// Shared lattice-source flags. Commands that take one lattice insist on a
// single source; `sum` accepts any number and falls back to stdin when none
// are given. --gram takes the whole matrix as one JSON argument, so it is a
// plain string option (a vector target would make the parser split the
// bracketed list).
struct LatticeSources {
    std::vector<std::string> named;
    std::string gram;
    std::vector<std::string> files;

    void attach(CLI::App* cmd) {
        cmd->add_option("--named", named, "named lattice: U, E8, E8(-1), <1>, <-1>");
        cmd->add_option("--gram", gram, "Gram matrix as a JSON array of rows");
        cmd->add_option("--file", files, "path to a lattice JSON file");
    }

    std::vector<IntegralLattice> read_all() const {
        std::vector<IntegralLattice> out;
        try {
            for (const auto& n : named) {
                auto l = named_lattice(n);
                if (!l) throw InputError("unknown lattice name: " + n);
                out.push_back(std::move(*l));
            }
            if (!gram.empty())
                out.push_back(lattice_from_json(parse_json_text(gram, "gram matrix")));
            for (const auto& f : files)
                out.push_back(lattice_from_json(read_file_json(f, "lattice")));
            if (out.empty())
                out.push_back(lattice_from_json(read_stdin_json("lattice")));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        return out;
    }

    IntegralLattice read_one() const {
        auto all = read_all();
        if (all.size() != 1) throw InputError("expected exactly one lattice input");
        return std::move(all.front());
    }
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string signature_text(const Signature& s) {
    return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," +
           std::to_string(s.zero) + ")";
}

int run_lattice_signature(const LatticeSources& src, bool as_json) {
    const Signature s = signature(src.read_one());
    if (as_json) emit(to_json(s));
    else std::cout << signature_text(s) << "\n";
    return 0;
}

int run_lattice_parity(const LatticeSources& src, bool as_json) {
    const IntegralLattice l = src.read_one();
    if (l.rank() == 0) throw InputError("parity undefined for zero lattice");
    const Parity p = parity(l);
    if (as_json) emit(json{{"parity", to_string(p)}});
    else std::cout << to_string(p) << "\n";
    return 0;
}

int run_lattice_det(const LatticeSources& src, bool as_json) {
    const IntegralLattice l = src.read_one();
    if (as_json) emit(json{{"det", to_json(l.determinant())}});
    else std::cout << l.determinant() << "\n";
    return 0;
}

int run_lattice_sum(const LatticeSources& src) {
    IntegralLattice acc;
    for (const auto& l : src.read_all()) acc = direct_sum(acc, l);
    emit(to_json(acc));  // data out: always JSON, so sums pipe into other commands
    return 0;
}

int run_lattice_classify(const LatticeSources& src, bool as_json) {
    const IntegralLattice l = src.read_one();
    const Signature sig = signature(l);

    std::string status;
    std::optional<LatticeClass> cls;
    if (sig.zero > 0) {
        status = "degenerate";
    } else if (!is_unimodular(l)) {
        status = "not_unimodular";
    } else if (l.rank() == 0) {
        status = "classified";
        cls = LatticeClass{};
    } else if (sig.is_indefinite()) {
        status = "classified";
        cls = canonical_indefinite(sig, parity(l));
    } else {
        cls = diagonalize_odd_definite(l);
        status = cls ? "classified" : "not_diagonalizable";
    }

    if (as_json) {
        json out{{"status", status}, {"signature", to_json(sig)}};
        if (cls) out["class"] = to_json(*cls);
        emit(out);
    } else if (status == "degenerate") {
        std::cout << "degenerate: signature " << signature_text(sig) << "\n";
    } else if (status == "not_unimodular") {
        std::cout << "not unimodular (det = " << l.determinant() << ")\n";
    } else if (status == "not_diagonalizable") {
        std::cout << "NotDiagonalizable\n";
    } else {
        std::cout << cls->to_string() << "\n";
    }
    return 0;
}

int run_lattice_vectors(const LatticeSources& src, long long norm, bool as_json) {
    const auto vectors = enumerate_vectors_of_norm(src.read_one(), Int(norm));
    json arr = json::array();
    for (const auto& v : vectors) {
        json jv = json::array();
        for (const Int& c : v) jv.push_back(to_json(c));
        arr.push_back(std::move(jv));
    }
    if (as_json) {
        emit(json{{"count", vectors.size()}, {"vectors", std::move(arr)}});
    } else {
        for (const auto& jv : arr) std::cout << jv.dump() << "\n";
    }
    return 0;
}

int run_lattice_characteristic(const LatticeSources& src, const std::string& vec_text,
                               bool as_json) {
    const IntegralLattice l = src.read_one();
    const json jv = parse_json_text(vec_text, "vector");
    if (!jv.is_array()) throw InputError("vector must be a JSON array");
    std::vector<Int> w;
    for (const auto& c : jv) w.push_back(int_from_json(c));
    if (w.size() != l.rank()) throw InputError("vector length does not match rank");
    const bool ch = is_characteristic_vector(l, w);
    if (as_json) emit(json{{"characteristic", ch}});
    else std::cout << (ch ? "characteristic" : "not characteristic") << "\n";
    return 0;
}

// Surface-side input plumbing.
struct SurfaceSources {
    std::string named;
    std::string inline_json;
    std::string file;
    std::string catalog_path = INTFORM_DEFAULT_CATALOG;

    void attach(CLI::App* cmd) {
        cmd->add_option("--named", named, "catalog entry name");
        cmd->add_option("--invariants", inline_json, "SurfaceInvariants as inline JSON");
        cmd->add_option("--file", file, "path to a SurfaceInvariants JSON file");
        cmd->add_option("--catalog", catalog_path, "catalog file (for --named)");
    }

    Catalog load() const {
        try {
            return load_catalog(catalog_path);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }

    SurfaceInvariants read() const {
        try {
            if (!named.empty()) {
                const Catalog cat = load();
                const CatalogEntry* e = cat.find(named);
                if (!e) throw InputError("unknown catalog entry: " + named);
                return e->invariants;
            }
            if (!inline_json.empty())
                return surface_from_json(parse_json_text(inline_json, "invariants"));
            if (!file.empty()) return surface_from_json(read_file_json(file, "invariants"));
            return surface_from_json(read_stdin_json("invariants"));
        } catch (const json::exception& e) {
            throw InputError(std::string("malformed invariants: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
};

int run_surface_check(const SurfaceSources& src, bool as_json) {
    const auto violations = consistency_report(src.read());
    if (as_json) {
        json arr = json::array();
        for (auto v : violations) arr.push_back(to_string(v));
        emit(json{{"consistent", violations.empty()}, {"violations", std::move(arr)}});
    } else if (violations.empty()) {
        std::cout << "consistent\n";
    } else {
        for (auto v : violations) std::cout << "violated: " << to_string(v) << "\n";
    }
    return 0;
}

int run_surface_classify(const SurfaceSources& src, bool as_json) {
    const SurfaceInvariants s = src.read();
    const auto violations = consistency_report(s);
    if (!violations.empty()) {
        if (as_json) {
            json arr = json::array();
            for (auto v : violations) arr.push_back(to_string(v));
            emit(json{{"status", "inconsistent"}, {"violations", std::move(arr)}});
        } else {
            std::cout << "inconsistent invariants:\n";
            for (auto v : violations) std::cout << "  violated: " << to_string(v) << "\n";
        }
        return 0;
    }
    if (s.kahler == Kahler::unknown)
        throw InputError("classification needs kahler: yes or no");

    const Verdict v = definite_verdict(s);
    if (as_json) {
        emit(to_json(v));
        return 0;
    }
    std::cout << "definiteness: " << to_string(v.definiteness) << "\n";
    std::cout << "classes:";
    if (v.allowed.empty()) std::cout << " none (no surface has these invariants)";
    for (const auto& m : v.allowed)
        std::cout << " " << to_string(m.cls) << "(k=" << m.blowups << ")";
    std::cout << "\n";
    std::cout << "lattice: " << (v.lattice ? v.lattice->to_string() : "Undetermined") << "\n";
    return 0;
}

int run_surface_blowup(const SurfaceSources& src, long long k) {
    emit(to_json(blow_up(src.read(), k)));  // data out: always JSON
    return 0;
}

int run_surface_table(bool as_json) {
    if (as_json) {
        emit(classification_table_json());
        return 0;
    }
    std::printf("%-9s %-18s %-11s %-7s %-8s %s\n", "kappa", "class", "kahler", "q", "c1sq", "c2");
    for (const auto& row : classification_table()) {
        const char* kd = to_string(row.kodaira);
        const char* kh = "";
        switch (row.kahler) {
            case KahlerRequirement::kahler: kh = "kahler"; break;
            case KahlerRequirement::non_kahler: kh = "non-kahler"; break;
            case KahlerRequirement::algebraic: kh = "algebraic"; break;
            case KahlerRequirement::any: kh = "-"; break;
        }
        std::printf("%-9s %-18s %-11s %-7s %-8s %s\n",
                    std::string(kd) == "minus_infinity" ? "-infty" : kd,
                    to_string(row.name), kh,
                    *row.q_text ? row.q_text : "-", row.c1sq_text, row.c2_text);
    }
    return 0;
}

int run_surface_catalog(const SurfaceSources& src, bool as_json) {
    const Catalog cat = src.load();
    if (as_json) {
        emit(to_json(cat));
        return 0;
    }
    for (const auto& e : cat.entries) {
        std::cout << e.name << ": " << to_string(e.class_label) << " (k=" << e.blowups
                  << "), lattice "
                  << (e.known_lattice ? e.known_lattice->to_string() : "Undetermined") << "\n";
    }
    return 0;
}

int run_verify(const VerifyBounds& bounds, VerifyScope scope, const std::string& out_path,
               bool as_json) {
    const VerifyReport report = verify_main_theorems(bounds, scope);
    const json j = to_json(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write report: " + out_path);
        out << j.dump(2) << "\n";
    }
    if (as_json) {
        emit(j);
    } else {
        std::cout << "checked " << report.checked << " consistent invariant tuples\n";
        std::cout << "definite kahler tuples: " << report.definite_kahler.size() << "\n";
        std::cout << "definite non-kahler tuples: " << report.definite_nonkahler.size() << "\n";
        std::cout << "counterexamples: " << report.counterexamples.size() << "\n";
        for (const auto& c : report.counterexamples)
            std::cout << "  " << to_json(c.s).dump() << " -- " << c.reason << "\n";
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-form arithmetic for compact complex surfaces"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // ---- lattice ----
    auto* lat = app.add_subcommand("lattice", "integral symmetric bilinear forms");
    lat->require_subcommand(1);
    lat->fallthrough();
    LatticeSources lat_src;
    long long norm = 0;
    std::string char_vector;

    auto* lat_sig = lat->add_subcommand("signature", "exact inertia (pos,neg,null)");
    auto* lat_parity = lat->add_subcommand("parity", "even or odd");
    auto* lat_det = lat->add_subcommand("det", "exact determinant");
    auto* lat_sum = lat->add_subcommand("sum", "orthogonal direct sum of the inputs");
    auto* lat_classify = lat->add_subcommand("classify", "isometry class of a unimodular form");
    auto* lat_vectors = lat->add_subcommand("vectors", "all vectors of a given norm (definite only)");
    lat_vectors->add_option("--norm", norm, "target norm")->required();
    auto* lat_char = lat->add_subcommand("characteristic", "test a characteristic vector");
    lat_char->add_option("--vector", char_vector, "vector as a JSON array")->required();
    for (auto* cmd : {lat_sig, lat_parity, lat_det, lat_sum, lat_classify, lat_vectors, lat_char}) {
        cmd->fallthrough();
        lat_src.attach(cmd);
    }

    // ---- surface ----
    auto* surf = app.add_subcommand("surface", "compact complex surface invariants");
    surf->require_subcommand(1);
    surf->fallthrough();
    SurfaceSources surf_src;
    long long blowups = 0;

    auto* surf_check = surf->add_subcommand("check", "consistency report");
    auto* surf_classify = surf->add_subcommand("classify", "definiteness, classes and form");
    auto* surf_blowup = surf->add_subcommand("blowup", "blow up k points");
    surf_blowup->add_option("-k,--count", blowups, "number of blow-ups")->required();
    auto* surf_table = surf->add_subcommand("table", "the classification table");
    auto* surf_catalog = surf->add_subcommand("catalog", "list catalog entries");
    for (auto* cmd : {surf_check, surf_classify, surf_blowup, surf_catalog})
        surf_src.attach(cmd);
    for (auto* cmd : {surf_check, surf_classify, surf_blowup, surf_table, surf_catalog})
        cmd->fallthrough();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "check the definite-form theorems by enumeration");
    verify->fallthrough();
    VerifyBounds bounds;
    bool kahler_only = false, nonkahler_only = false;
    std::string out_path;
    verify->add_option("--qmax", bounds.q_max, "irregularity bound");
    verify->add_option("--pgmax", bounds.pg_max, "geometric genus bound");
    verify->add_option("--b2max", bounds.b2_max, "second Betti number bound");
    verify->add_option("--kmax", bounds.k_max, "blow-up count bound");
    verify->add_flag("--kahler-only", kahler_only, "restrict to the Kahler branch");
    verify->add_flag("--nonkahler-only", nonkahler_only, "restrict to the non-Kahler branch");
    verify->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (lat_sig->parsed()) return run_lattice_signature(lat_src, as_json);
        if (lat_parity->parsed()) return run_lattice_parity(lat_src, as_json);
        if (lat_det->parsed()) return run_lattice_det(lat_src, as_json);
        if (lat_sum->parsed()) return run_lattice_sum(lat_src);
        if (lat_classify->parsed()) return run_lattice_classify(lat_src, as_json);
        if (lat_vectors->parsed()) return run_lattice_vectors(lat_src, norm, as_json);
        if (lat_char->parsed()) return run_lattice_characteristic(lat_src, char_vector, as_json);
        if (surf_check->parsed()) return run_surface_check(surf_src, as_json);
        if (surf_classify->parsed()) return run_surface_classify(surf_src, as_json);
        if (surf_blowup->parsed()) return run_surface_blowup(surf_src, blowups);
        if (surf_table->parsed()) return run_surface_table(as_json);
        if (surf_catalog->parsed()) return run_surface_catalog(surf_src, as_json);
        if (verify->parsed()) {
            if (kahler_only && nonkahler_only)
                throw InputError("--kahler-only and --nonkahler-only are mutually exclusive");
            const VerifyScope scope = kahler_only ? VerifyScope::kahler_only
                                    : nonkahler_only ? VerifyScope::non_kahler_only
                                                     : VerifyScope::all;
            return run_verify(bounds, scope, out_path, as_json);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
