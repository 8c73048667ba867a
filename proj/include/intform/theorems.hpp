#ifndef INTFORM_THEOREMS_HPP
#define INTFORM_THEOREMS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "intform/classification.hpp"

namespace intform {

enum class Definiteness { positive_definite, negative_definite, indefinite, zero_rank };

inline const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive_definite";
        case Definiteness::negative_definite: return "negative_definite";
        case Definiteness::indefinite: return "indefinite";
        case Definiteness::zero_rank: return "zero_rank";
    }
    return "?";
}

/// Definiteness read off the signature pair. For a Kahler surface pos is
/// the odd number 2pg + 1, so the form is never negative definite; in the
/// non-Kahler case it is positive definite iff b2 = 2pg != 0 and negative
/// definite iff pg = 0 and b2 != 0.
inline Definiteness definiteness_from_invariants(const SurfaceInvariants& s) {
    if (!is_consistent(s)) throw std::invalid_argument("inconsistent invariants");
    if (s.kahler == Kahler::unknown)
        throw std::invalid_argument("definiteness needs a definite Kahler status");
    const auto [pos, neg] = signature_pair(s);
    if (pos == 0 && neg == 0) return Definiteness::zero_rank;
    if (neg == 0) return Definiteness::positive_definite;
    if (pos == 0) return Definiteness::negative_definite;
    return Definiteness::indefinite;
}

/// A (class, blow-up count) pair compatible with an invariant tuple.
struct ClassMatch {
    SurfaceClass cls;
    std::int64_t blowups = 0;
    auto operator<=>(const ClassMatch&) const = default;
};

/// What the two main theorems have to say about one invariant tuple:
/// definiteness, every (minimal class, blow-up count) pair the numbers
/// allow, and the isometry class of the intersection form when all the
/// allowed readings force the same one.
struct Verdict {
    Definiteness definiteness = Definiteness::zero_rank;
    std::vector<ClassMatch> allowed;
    std::optional<LatticeClass> lattice;  // nullopt: Undetermined

    bool operator==(const Verdict&) const = default;
};

/// Classify s against every blow-down candidate: for each k in [0, b2],
/// undoing k blow-ups must give a consistent tuple accepted by some table
/// row. The minimality flag of s is deliberately ignored here; invariants
/// alone cannot tell a minimal class VII surface from a blown-up secondary
/// Kodaira surface, and the theorem statements list such overlaps.
inline Verdict definite_verdict(const SurfaceInvariants& s) {
    if (!is_consistent(s)) throw std::invalid_argument("inconsistent invariants");
    Verdict v;
    v.definiteness = definiteness_from_invariants(s);

    for (std::int64_t k = 0; k <= s.b2; ++k) {
        const SurfaceInvariants m = blow_down(s, k);
        if (!is_consistent(m)) continue;
        for (SurfaceClass cls : classes_consistent_with(m))
            v.allowed.push_back({cls, k});
    }
    std::sort(v.allowed.begin(), v.allowed.end());

    bool first = true;
    for (const auto& match : v.allowed) {
        auto form = intersection_form_of(s, match.cls, match.blowups);
        if (first) {
            v.lattice = form;
            first = false;
        } else if (v.lattice != form) {
            v.lattice = std::nullopt;  // allowed readings disagree
            break;
        }
    }
    if (v.allowed.empty()) v.lattice = std::nullopt;
    return v;
}

struct VerifyBounds {
    std::int64_t q_max = 6;
    std::int64_t pg_max = 6;
    std::int64_t b2_max = 30;
    std::int64_t k_max = 10;
};

enum class VerifyScope { all, kahler_only, non_kahler_only };

struct Counterexample {
    SurfaceInvariants s;
    std::string reason;
    bool operator<(const Counterexample& o) const {
        return s < o.s || (s == o.s && reason < o.reason);
    }
};

struct DefiniteCase {
    SurfaceInvariants s;
    Verdict verdict;
};

struct VerifyReport {
    std::int64_t checked = 0;  // distinct consistent tuples examined
    std::vector<DefiniteCase> definite_kahler;
    std::vector<DefiniteCase> definite_nonkahler;
    std::vector<Counterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

namespace detail {

// Minimal-model candidates a table row contributes within the bounds:
// (q, c1sq, c2) ranges straight from the row, b1 from the Kahler status,
// b2 from the Euler number, pg forced by Noether. Anything inconsistent or
// out of range is dropped.
inline void generate_minimal_models(const SurfaceClassConstraint& row, Kahler kahler,
                                    const VerifyBounds& bounds,
                                    std::vector<SurfaceInvariants>& out) {
    if (!row.accepts_kahler(kahler)) return;

    std::vector<std::int64_t> qs;
    if (row.q_fixed) {
        if (*row.q_fixed <= bounds.q_max) qs.push_back(*row.q_fixed);
    } else {
        const std::int64_t q_lo = (row.name == SurfaceClass::ruled_genus_g) ? 1 : 0;
        for (std::int64_t q = q_lo; q <= bounds.q_max; ++q) qs.push_back(q);
    }

    const std::int64_t c2_max = bounds.b2_max + 2;
    for (std::int64_t q : qs) {
        if (kahler == Kahler::no && q < 1) continue;

        std::vector<std::pair<std::int64_t, std::int64_t>> cherns;
        switch (row.name) {
            case SurfaceClass::rational:
                cherns = {{9, 3}, {8, 4}};
                break;
            case SurfaceClass::ruled_genus_g:
                cherns = {{8 * (1 - q), 4 * (1 - q)}};
                break;
            case SurfaceClass::class_vii:
                for (std::int64_t c2 = 0; c2 <= c2_max; ++c2) cherns.push_back({-c2, c2});
                break;
            case SurfaceClass::torus:
            case SurfaceClass::primary_kodaira:
            case SurfaceClass::secondary_kodaira:
            case SurfaceClass::bielliptic:
                cherns = {{0, 0}};
                break;
            case SurfaceClass::k3:
                cherns = {{0, 24}};
                break;
            case SurfaceClass::enriques:
                cherns = {{0, 12}};
                break;
            case SurfaceClass::properly_elliptic:
                for (std::int64_t c2 = 0; c2 <= c2_max; ++c2) cherns.push_back({0, c2});
                break;
            case SurfaceClass::general_type:
                // BMY-feasible region with Noether integrality.
                for (std::int64_t c2 = 1; c2 <= c2_max; ++c2)
                    for (std::int64_t c1sq = 1; c1sq <= 3 * c2; ++c1sq)
                        if ((c1sq + c2) % 12 == 0) cherns.push_back({c1sq, c2});
                break;
        }

        for (auto [c1sq, c2] : cherns) {
            if ((c1sq + c2) % 12 != 0) continue;
            const std::int64_t pg = (c1sq + c2) / 12 - 1 + q;  // Noether
            if (pg < 0 || pg > bounds.pg_max) continue;

            SurfaceInvariants s;
            s.q = q;
            s.pg = pg;
            s.c1sq = c1sq;
            s.c2 = c2;
            s.kahler = kahler;
            s.b1 = expected_b1(q, kahler);
            s.b2 = c2 - 2 + 2 * s.b1;
            s.minimal = true;
            s.kodaira = row.kodaira;
            if (s.b2 < 0 || s.b2 > bounds.b2_max) continue;
            if (!row.accepts(s)) continue;
            if (!is_consistent(s)) continue;
            out.push_back(s);
        }
    }
}

}  // namespace detail

/// Exhaustive finite check of the two main theorems: every consistent tuple
/// a table row can produce inside the bounds, together with its blow-ups, is
/// classified, and each definite one is tested against the statements:
///   (a) a definite Kahler tuple is positive definite with pg = q = 0,
///       b2 = 1 and form <1>;
///   (b) a definite non-Kahler tuple is negative definite, its allowed
///       readings lie in {class VII (b2 > 0), blown-up secondary Kodaira,
///       blown-up properly elliptic with minimal q = 1, b2 = c2 = 0}, and
///       its form is b2.<-1>;
///   (c) no consistent non-Kahler tuple is positive definite.
/// Violations are returned as data; an empty counterexample list is the
/// machine-checked form of the theorems on this grid.
inline VerifyReport verify_main_theorems(const VerifyBounds& bounds,
                                         VerifyScope scope = VerifyScope::all) {
    std::vector<SurfaceInvariants> minimal_models;
    for (const auto& row : classification_table()) {
        if (scope != VerifyScope::non_kahler_only)
            detail::generate_minimal_models(row, Kahler::yes, bounds, minimal_models);
        if (scope != VerifyScope::kahler_only)
            detail::generate_minimal_models(row, Kahler::no, bounds, minimal_models);
    }

    std::set<SurfaceInvariants> tuples;
    for (const auto& m : minimal_models)
        for (std::int64_t k = 0; k <= bounds.k_max; ++k) {
            const SurfaceInvariants s = blow_up(m, k);
            if (s.b2 > bounds.b2_max) break;
            tuples.insert(s);
        }

    VerifyReport report;
    report.checked = static_cast<std::int64_t>(tuples.size());

    for (const SurfaceInvariants& s : tuples) {
        if (!is_consistent(s)) {
            report.counterexamples.push_back({s, "enumerated tuple inconsistent"});
            continue;
        }
        const Verdict v = definite_verdict(s);
        const bool definite = v.definiteness == Definiteness::positive_definite ||
                              v.definiteness == Definiteness::negative_definite;
        if (!definite) continue;

        if (s.kahler == Kahler::yes) {
            report.definite_kahler.push_back({s, v});
            if (v.definiteness != Definiteness::positive_definite)
                report.counterexamples.push_back({s, "definite Kahler tuple not positive definite"});
            if (s.pg != 0 || s.q != 0 || s.b2 != 1) {
                report.counterexamples.push_back({s, "definite Kahler tuple beyond pg=q=0, b2=1"});
            } else {
                const auto [c1sq, c2] = chern_from_pg_q(s.pg, s.q);
                if (s.c1sq != c1sq || s.c2 != c2 ||
                    bmy_margin(s.c1sq, s.c2) != 4 * (s.pg + s.q))
                    report.counterexamples.push_back({s, "Kahler definite Chern numbers off the forced values"});
            }
            if (v.lattice != std::optional<LatticeClass>(LatticeClass{.plus1 = 1}))
                report.counterexamples.push_back({s, "definite Kahler form is not <1>"});
            for (const ClassMatch& match : v.allowed)
                if (match.cls != SurfaceClass::rational && match.cls != SurfaceClass::general_type)
                    report.counterexamples.push_back(
                        {s, std::string("definite Kahler reading outside plane/fake plane: ") +
                                to_string(match.cls)});
        } else {
            if (v.definiteness == Definiteness::positive_definite) {
                report.counterexamples.push_back({s, "positive definite non-Kahler tuple"});
                continue;
            }
            report.definite_nonkahler.push_back({s, v});
            for (const ClassMatch& match : v.allowed) {
                bool allowed_reading = false;
                if (match.cls == SurfaceClass::class_vii) {
                    allowed_reading = s.b2 > 0;
                } else if (match.cls == SurfaceClass::secondary_kodaira) {
                    allowed_reading = match.blowups >= 1;
                } else if (match.cls == SurfaceClass::properly_elliptic) {
                    const SurfaceInvariants m = blow_down(s, match.blowups);
                    allowed_reading = match.blowups >= 1 && m.q == 1 && m.b2 == 0 && m.c2 == 0;
                }
                if (!allowed_reading) {
                    report.counterexamples.push_back(
                        {s, std::string("negative definite reading outside the theorem: ") +
                                to_string(match.cls) + "+" + std::to_string(match.blowups)});
                }
            }
            if (v.lattice != std::optional<LatticeClass>(LatticeClass{.minus1 = s.b2}))
                report.counterexamples.push_back({s, "negative definite form is not b2.<-1>"});
        }
    }

    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    return report;
}

}  // namespace intform

#endif
