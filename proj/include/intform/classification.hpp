#ifndef INTFORM_CLASSIFICATION_HPP
#define INTFORM_CLASSIFICATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intform/lattice_class.hpp"
#include "intform/surface.hpp"

namespace intform {

enum class SurfaceClass {
    rational,
    ruled_genus_g,
    class_vii,
    torus,
    k3,
    primary_kodaira,
    secondary_kodaira,
    enriques,
    bielliptic,
    properly_elliptic,
    general_type,
};

inline constexpr std::array<SurfaceClass, 11> all_surface_classes = {
    SurfaceClass::rational,       SurfaceClass::ruled_genus_g,
    SurfaceClass::class_vii,      SurfaceClass::torus,
    SurfaceClass::k3,             SurfaceClass::primary_kodaira,
    SurfaceClass::secondary_kodaira, SurfaceClass::enriques,
    SurfaceClass::bielliptic,     SurfaceClass::properly_elliptic,
    SurfaceClass::general_type,
};

inline const char* to_string(SurfaceClass c) {
    switch (c) {
        case SurfaceClass::rational: return "rational";
        case SurfaceClass::ruled_genus_g: return "ruled_genus_g";
        case SurfaceClass::class_vii: return "class_vii";
        case SurfaceClass::torus: return "torus";
        case SurfaceClass::k3: return "k3";
        case SurfaceClass::primary_kodaira: return "primary_kodaira";
        case SurfaceClass::secondary_kodaira: return "secondary_kodaira";
        case SurfaceClass::enriques: return "enriques";
        case SurfaceClass::bielliptic: return "bielliptic";
        case SurfaceClass::properly_elliptic: return "properly_elliptic";
        case SurfaceClass::general_type: return "general_type";
    }
    return "?";
}

inline std::optional<SurfaceClass> surface_class_from_string(const std::string& s) {
    for (SurfaceClass c : all_surface_classes)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

/// Kahler column of the classification table. "algebraic" implies Kahler, so
/// for constraint purposes it behaves like the Kahler requirement; the
/// distinction is kept for the printed table.
enum class KahlerRequirement { kahler, non_kahler, algebraic, any };

/// One row of the Enriques-Kodaira classification: a machine-checkable
/// constraint on (q, c1^2, c2, Kahler status, kappa) of a *minimal* surface.
struct SurfaceClassConstraint {
    SurfaceClass name;
    KodairaDim kodaira;
    KahlerRequirement kahler;
    std::optional<std::int64_t> q_fixed;  // nullopt: unconstrained (q >= 1 for ruled)
    const char* q_text;
    const char* c1sq_text;
    const char* c2_text;

    bool accepts_kahler(Kahler k) const {
        switch (kahler) {
            case KahlerRequirement::kahler:
            case KahlerRequirement::algebraic: return k != Kahler::no;
            case KahlerRequirement::non_kahler: return k != Kahler::yes;
            case KahlerRequirement::any: return true;
        }
        return false;
    }

    bool accepts_kodaira(KodairaDim k) const {
        return k == KodairaDim::unknown || k == kodaira;
    }

    bool accepts_q(std::int64_t q) const {
        if (name == SurfaceClass::ruled_genus_g) return q >= 1;
        return !q_fixed || q == *q_fixed;
    }

    bool accepts_chern(std::int64_t q, std::int64_t c1sq, std::int64_t c2) const {
        switch (name) {
            case SurfaceClass::rational:
                return (c1sq == 9 && c2 == 3) || (c1sq == 8 && c2 == 4);
            case SurfaceClass::ruled_genus_g:
                return c1sq == 8 * (1 - q) && c2 == 4 * (1 - q);
            case SurfaceClass::class_vii:
                return c1sq == -c2 && c2 >= 0;
            case SurfaceClass::torus:
            case SurfaceClass::primary_kodaira:
            case SurfaceClass::secondary_kodaira:
            case SurfaceClass::bielliptic:
                return c1sq == 0 && c2 == 0;
            case SurfaceClass::k3:
                return c1sq == 0 && c2 == 24;
            case SurfaceClass::enriques:
                return c1sq == 0 && c2 == 12;
            case SurfaceClass::properly_elliptic:
                return c1sq == 0 && c2 >= 0;
            case SurfaceClass::general_type:
                return c1sq > 0 && c2 > 0;
        }
        return false;
    }

    bool accepts(const SurfaceInvariants& s) const {
        return accepts_kodaira(s.kodaira) && accepts_kahler(s.kahler) &&
               accepts_q(s.q) && accepts_chern(s.q, s.c1sq, s.c2);
    }
};

inline const std::array<SurfaceClassConstraint, 11>& classification_table() {
    using K = KahlerRequirement;
    using D = KodairaDim;
    static const std::array<SurfaceClassConstraint, 11> table = {{
        {SurfaceClass::rational,          D::minus_infinity, K::algebraic,  0, "0", "9 or 8", "3 or 4"},
        {SurfaceClass::ruled_genus_g,     D::minus_infinity, K::algebraic,  std::nullopt, "g >= 1", "8(1-g)", "4(1-g)"},
        {SurfaceClass::class_vii,         D::minus_infinity, K::non_kahler, 1, "1", "-c2", ">= 0"},
        {SurfaceClass::torus,             D::zero,           K::kahler,     2, "2", "0", "0"},
        {SurfaceClass::k3,                D::zero,           K::kahler,     0, "0", "0", "24"},
        {SurfaceClass::primary_kodaira,   D::zero,           K::non_kahler, 2, "2", "0", "0"},
        {SurfaceClass::secondary_kodaira, D::zero,           K::non_kahler, 1, "1", "0", "0"},
        {SurfaceClass::enriques,          D::zero,           K::algebraic,  0, "0", "0", "12"},
        {SurfaceClass::bielliptic,        D::zero,           K::algebraic,  1, "1", "0", "0"},
        {SurfaceClass::properly_elliptic, D::one,            K::any,        std::nullopt, "", "0", ">= 0"},
        {SurfaceClass::general_type,      D::two,            K::algebraic,  std::nullopt, "", "> 0", "> 0"},
    }};
    return table;
}

/// All table rows whose constraints accept a minimal surface with these
/// invariants. An empty result means no compact complex surface has them.
inline std::vector<SurfaceClass> classes_consistent_with(const SurfaceInvariants& s) {
    if (!s.minimal)
        throw std::invalid_argument("the classification table constrains minimal models");
    std::vector<SurfaceClass> out;
    for (const auto& row : classification_table())
        if (row.accepts(s)) out.push_back(row.name);
    return out;
}

/// Blowing up k points: each one adds an exceptional curve, so b2 and c2 go
/// up by one and c1^2 down by one; b1, q, pg and the Kahler status are
/// untouched. Total on any input, consistent output iff the input was.
inline SurfaceInvariants blow_up(const SurfaceInvariants& s, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("blow-up count must be >= 0");
    SurfaceInvariants t = s;
    t.b2 += k;
    t.c2 += k;
    t.c1sq -= k;
    t.minimal = (k == 0) && s.minimal;
    return t;
}

/// Candidate minimal model obtained by undoing k blow-ups; by construction
/// the result is marked minimal.
inline SurfaceInvariants blow_down(const SurfaceInvariants& s, std::int64_t k) {
    if (k < 0 || k > s.b2) throw std::invalid_argument("cannot blow down that many times");
    SurfaceInvariants t = s;
    t.b2 -= k;
    t.c2 -= k;
    t.c1sq += k;
    t.minimal = true;
    return t;
}

namespace detail {

// The Kahler status under which a surface of the given class would be
// classified; rows that force a branch override an unknown input status.
inline Kahler effective_kahler(SurfaceClass cls, Kahler input) {
    for (const auto& row : classification_table()) {
        if (row.name != cls) continue;
        switch (row.kahler) {
            case KahlerRequirement::kahler:
            case KahlerRequirement::algebraic: return Kahler::yes;
            case KahlerRequirement::non_kahler: return Kahler::no;
            case KahlerRequirement::any: return input;
        }
    }
    return input;
}

// Known minimal-model intersection forms, by class. Evenness of the torus,
// K3, Enriques and primary Kodaira forms is recorded table data, not a
// consequence of the numerical machinery here; class VII with b2 > 0 is the
// one place the diagonalizability of definite forms on smooth 4-manifolds
// enters, wired in as an axiom. Classes whose form the table data does not
// pin down (minimal rational/ruled with b2 = 2, bielliptic, most elliptic
// and general type surfaces) come back as nullopt.
inline std::optional<LatticeClass> minimal_form(const SurfaceInvariants& minimal_s,
                                                SurfaceClass cls) {
    if (minimal_s.b2 == 0) return LatticeClass{};  // zero lattice

    const Kahler k = effective_kahler(cls, minimal_s.kahler);
    if (k == Kahler::unknown) return std::nullopt;
    SurfaceInvariants s = minimal_s;
    s.kahler = k;
    const auto [pos, neg] = raw_signature_pair(s);
    if (pos < 0 || neg < 0) return std::nullopt;

    // Rank 1 unimodular is <1> or <-1> outright.
    if (s.b2 == 1) {
        if (pos == 1) return LatticeClass{.plus1 = 1};
        return LatticeClass{.minus1 = 1};
    }

    switch (cls) {
        case SurfaceClass::class_vii:
            return LatticeClass{.minus1 = s.b2};
        case SurfaceClass::torus:
        case SurfaceClass::k3:
        case SurfaceClass::enriques:
        case SurfaceClass::primary_kodaira:
            // An even form needs an indefinite signature with index = 0 mod 8;
            // a tuple that slips past the row with anything else cannot be a
            // surface of this class, so no form is claimed for it.
            if (pos < 1 || neg < 1 || (pos - neg) % 8 != 0) return std::nullopt;
            return canonical_indefinite(Signature{pos, neg, 0}, Parity::even);
        default:
            return std::nullopt;
    }
}

}  // namespace detail

/// Isometry class of the intersection form of a surface with invariants s,
/// of class cls, obtained from its minimal model by k blow-ups -- when the
/// classification data forces one. Each blow-up splits off one <-1>, making
/// any non-minimal form odd; odd indefinite forms are then determined by the
/// signature. Forms the data does not force are reported as nullopt
/// (Undetermined), never guessed.
inline std::optional<LatticeClass> intersection_form_of(const SurfaceInvariants& s,
                                                        SurfaceClass cls,
                                                        std::int64_t k) {
    const SurfaceInvariants minimal_s = blow_down(s, k);
    if (!is_consistent(minimal_s))
        throw std::invalid_argument("invariants do not match the class: minimal model inconsistent");
    {
        bool found = false;
        for (SurfaceClass c : classes_consistent_with(minimal_s))
            if (c == cls) { found = true; break; }
        if (!found) throw std::invalid_argument("invariants do not match the class");
    }

    const auto base = detail::minimal_form(minimal_s, cls);
    if (k == 0) return base;

    const Kahler kah = detail::effective_kahler(cls, s.kahler);
    if (kah == Kahler::unknown) return std::nullopt;
    SurfaceInvariants t = s;
    t.kahler = kah;
    const auto [pos, neg] = detail::raw_signature_pair(t);
    if (pos < 0 || neg < 0) return std::nullopt;

    // Odd and indefinite: diagonal by the classification of indefinite forms.
    if (pos >= 1 && neg >= 1) return LatticeClass{.plus1 = pos, .minus1 = neg};

    // Negative definite total form: forced only when the minimal model
    // contributes a zero or diagonal lattice.
    if (pos == 0) {
        if (base && (*base == LatticeClass{} || *base == LatticeClass{.minus1 = base->minus1}))
            return LatticeClass{.minus1 = neg};
        return std::nullopt;
    }

    // pos >= 1 with neg == 0 cannot happen after a blow-up (each adds a <-1>).
    return std::nullopt;
}

}  // namespace intform

#endif
