#ifndef INTFORM_LATTICE_CLASS_HPP
#define INTFORM_LATTICE_CLASS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "intform/standard_lattices.hpp"

namespace intform {

/// Symbolic isometry class: a formal sum
///   a<1> + b<-1> + c.U + d.E8 + e.E8(-1).
/// Canonical classes use either the diagonal generators only (odd case) or
/// {U, E8, E8(-1)} only (even case); mixed sums are still representable,
/// e.g. as intermediate values when appending blow-up summands.
struct LatticeClass {
    std::int64_t plus1 = 0;
    std::int64_t minus1 = 0;
    std::int64_t u = 0;
    std::int64_t e8 = 0;
    std::int64_t e8neg = 0;

    bool operator==(const LatticeClass&) const = default;

    std::int64_t rank() const { return plus1 + minus1 + 2 * u + 8 * e8 + 8 * e8neg; }

    Signature formal_signature() const {
        return Signature{plus1 + u + 8 * e8, minus1 + u + 8 * e8neg, 0};
    }

    Parity formal_parity() const {
        if (rank() == 0) throw std::invalid_argument("parity undefined for zero lattice");
        return (plus1 == 0 && minus1 == 0) ? Parity::even : Parity::odd;
    }

    /// Expand to an explicit Gram matrix (block diagonal in the order
    /// <1>, <-1>, E8, E8(-1), U).
    IntegralLattice to_lattice() const {
        IntegralLattice acc;  // rank 0
        for (std::int64_t i = 0; i < plus1; ++i) acc = direct_sum(acc, IntegralLattice::diagonal({1}));
        for (std::int64_t i = 0; i < minus1; ++i) acc = direct_sum(acc, IntegralLattice::diagonal({-1}));
        for (std::int64_t i = 0; i < e8; ++i) acc = direct_sum(acc, intform::e8());
        for (std::int64_t i = 0; i < e8neg; ++i) acc = direct_sum(acc, e8_negative());
        for (std::int64_t i = 0; i < u; ++i) acc = direct_sum(acc, hyperbolic_plane());
        return acc;
    }

    std::string to_string() const {
        std::string out;
        auto term = [&out](std::int64_t n, const char* sym) {
            if (n == 0) return;
            if (!out.empty()) out += " + ";
            out += std::to_string(n);
            out += sym;
        };
        term(plus1, "<1>");
        term(minus1, "<-1>");
        term(e8, "E8");
        term(e8neg, "E8(-1)");
        term(u, "U");
        return out.empty() ? "0" : out;
    }
};

/// Isometry class of an indefinite unimodular lattice from its signature and
/// type alone. Odd forms diagonalize over Z; even forms are sums of U and of
/// E8 with a fixed orientation, which forces the index to be divisible by 8.
inline LatticeClass canonical_indefinite(const Signature& sig, Parity p) {
    if (sig.zero != 0 || sig.pos < 1 || sig.neg < 1)
        throw std::invalid_argument("not indefinite unimodular");
    if (p == Parity::odd) return LatticeClass{.plus1 = sig.pos, .minus1 = sig.neg};
    const std::int64_t tau = sig.index();
    if (tau % 8 != 0)
        throw std::invalid_argument("no such even unimodular lattice");
    if (tau >= 0) return LatticeClass{.u = sig.neg, .e8 = tau / 8};
    return LatticeClass{.u = sig.pos, .e8neg = -tau / 8};
}

}  // namespace intform

#endif
