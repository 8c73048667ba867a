#ifndef INTFORM_SURFACE_HPP
#define INTFORM_SURFACE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intform/numeric.hpp"

namespace intform {

enum class Kahler { yes, no, unknown };

enum class KodairaDim { minus_infinity, zero, one, two, unknown };

/// Numerical invariants of a compact complex surface. pg and q are inputs in
/// their own right (never derived from the Betti numbers), so that each of
/// the classical formulas relating them stays an independent cross-check.
struct SurfaceInvariants {
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    std::int64_t q = 0;
    std::int64_t pg = 0;
    std::int64_t c1sq = 0;
    std::int64_t c2 = 0;
    Kahler kahler = Kahler::unknown;
    bool minimal = true;
    KodairaDim kodaira = KodairaDim::unknown;

    bool operator==(const SurfaceInvariants&) const = default;
    auto operator<=>(const SurfaceInvariants&) const = default;
};

/// c2 is the Euler number: with b0 = b4 = 1 and b3 = b1, it must equal
/// 2 - 2*b1 + b2.
inline bool euler_check(const SurfaceInvariants& s) {
    return s.c2 == 2 - 2 * s.b1 + s.b2;
}

/// Index of the intersection form predicted by the Chern numbers:
/// tau = (c1^2 - 2 c2) / 3, kept as an exact rational so that a failed
/// divisibility shows up as a value, not a crash.
inline Rat index_from_chern(std::int64_t c1sq, std::int64_t c2) {
    return Rat(Int(c1sq) - 2 * Int(c2), 3);
}

/// (1 - q + pg) - (c1^2 + c2)/12; zero exactly when Noether's formula holds.
inline Rat noether_residual(const SurfaceInvariants& s) {
    return Rat(1 - s.q + s.pg) - Rat(Int(s.c1sq) + Int(s.c2), 12);
}

/// b1 = 2q in the Kahler case and 2q - 1 otherwise.
inline std::int64_t expected_b1(std::int64_t q, Kahler k) {
    if (k == Kahler::unknown)
        throw std::invalid_argument("expected_b1 needs a definite Kahler status");
    if (k == Kahler::yes) return 2 * q;
    if (q < 1) throw std::invalid_argument("non-Kahler requires q >= 1");
    return 2 * q - 1;
}

namespace detail {

// Signature of the intersection form in terms of pg and b2; components may
// be negative here, which consistency_report turns into a named violation.
inline std::pair<std::int64_t, std::int64_t> raw_signature_pair(const SurfaceInvariants& s) {
    if (s.kahler == Kahler::yes) return {2 * s.pg + 1, s.b2 - 2 * s.pg - 1};
    return {2 * s.pg, s.b2 - 2 * s.pg};
}

}  // namespace detail

/// (pos, neg) of the intersection form: (2pg + 1, b2 - 2pg - 1) for Kahler
/// surfaces and (2pg, b2 - 2pg) otherwise.
inline std::pair<std::int64_t, std::int64_t> signature_pair(const SurfaceInvariants& s) {
    if (s.kahler == Kahler::unknown)
        throw std::invalid_argument("signature_pair needs a definite Kahler status");
    auto [pos, neg] = detail::raw_signature_pair(s);
    if (pos < 0 || neg < 0) throw std::invalid_argument("inconsistent invariants");
    return {pos, neg};
}

/// Chern numbers forced by the index theorem plus Noether under the
/// Kahler positive definite hypothesis: c1^2 = 10pg - 8q + 9 and
/// c2 = 2pg - 4q + 3.
inline std::pair<std::int64_t, std::int64_t> chern_from_pg_q(std::int64_t pg, std::int64_t q) {
    return {10 * pg - 8 * q + 9, 2 * pg - 4 * q + 3};
}

/// c1^2 - 3c2. Nonpositive on the classes with kappa >= 0 (for general type
/// this is the Bogomolov-Miyaoka-Yau inequality); under the Kahler definite
/// hypothesis it evaluates to 4(pg + q).
inline std::int64_t bmy_margin(std::int64_t c1sq, std::int64_t c2) {
    return c1sq - 3 * c2;
}

enum class Violation {
    euler,              // c2 != 2 - 2b1 + b2
    noether,            // Noether residual nonzero
    index_integrality,  // c1^2 - 2c2 not divisible by 3
    index_signature,    // (c1^2 - 2c2)/3 != pos - neg
    b1_mismatch,        // b1 != expected_b1(q, kahler)
    negative_signature, // a signature component is negative
};

inline const char* to_string(Violation v) {
    switch (v) {
        case Violation::euler: return "euler";
        case Violation::noether: return "noether";
        case Violation::index_integrality: return "index_integrality";
        case Violation::index_signature: return "index_signature";
        case Violation::b1_mismatch: return "b1";
        case Violation::negative_signature: return "negative_signature";
    }
    return "?";
}

/// Every formula the invariants must satisfy, reported as data. The Kahler
/// dependent checks (signature and b1) are skipped when the status is
/// unknown; such tuples are matched against both branches downstream.
inline std::vector<Violation> consistency_report(const SurfaceInvariants& s) {
    std::vector<Violation> out;
    if (!euler_check(s)) out.push_back(Violation::euler);
    if (noether_residual(s) != 0) out.push_back(Violation::noether);
    if ((s.c1sq - 2 * s.c2) % 3 != 0) out.push_back(Violation::index_integrality);
    if (s.kahler != Kahler::unknown) {
        auto [pos, neg] = detail::raw_signature_pair(s);
        if (index_from_chern(s.c1sq, s.c2) != Rat(pos - neg))
            out.push_back(Violation::index_signature);
        if (s.kahler == Kahler::no && s.q < 1) {
            out.push_back(Violation::b1_mismatch);
        } else if (s.b1 != expected_b1(s.q, s.kahler)) {
            out.push_back(Violation::b1_mismatch);
        }
        if (pos < 0 || neg < 0) out.push_back(Violation::negative_signature);
    }
    return out;
}

inline bool is_consistent(const SurfaceInvariants& s) {
    return consistency_report(s).empty();
}

}  // namespace intform

#endif
