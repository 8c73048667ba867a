#ifndef INTFORM_STANDARD_LATTICES_HPP
#define INTFORM_STANDARD_LATTICES_HPP

#include <optional>
#include <string_view>

#include "intform/lattice.hpp"

namespace intform {

/// Hyperbolic plane: basis {e, f} with e.e = f.f = 0, e.f = 1.
inline const IntegralLattice& hyperbolic_plane() {
    static const IntegralLattice u(IntMatrix{{0, 1}, {1, 0}});
    return u;
}

/// E8 in its basis of simple roots: 2 on the diagonal, -1 on edges of the
/// E8 Dynkin diagram (a chain 0-2-3-4-5-6-7 with node 1 hanging off node 3).
/// Unimodular, even, positive definite; it has no vectors of norm 1, which
/// is what makes it the standard non-diagonalizable example. The constant
/// re-checks its determinant and signature once, on first use.
inline const IntegralLattice& e8() {
    static const IntegralLattice e = [] {
        IntegralLattice l(IntMatrix{
            { 2,  0, -1,  0,  0,  0,  0,  0},
            { 0,  2,  0, -1,  0,  0,  0,  0},
            {-1,  0,  2, -1,  0,  0,  0,  0},
            { 0, -1, -1,  2, -1,  0,  0,  0},
            { 0,  0,  0, -1,  2, -1,  0,  0},
            { 0,  0,  0,  0, -1,  2, -1,  0},
            { 0,  0,  0,  0,  0, -1,  2, -1},
            { 0,  0,  0,  0,  0,  0, -1,  2}});
        if (l.determinant() != 1 || signature(l) != Signature{8, 0, 0})
            throw std::logic_error("E8 constant failed its self-check");
        return l;
    }();
    return e;
}

inline IntegralLattice negated(const IntegralLattice& l) {
    IntMatrix g(l.rank(), l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) g(i, j) = -l.gram()(i, j);
    return IntegralLattice(std::move(g));
}

/// E8 with the form negated: even, negative definite.
inline const IntegralLattice& e8_negative() {
    static const IntegralLattice e = negated(e8());
    return e;
}

inline std::optional<IntegralLattice> named_lattice(std::string_view name) {
    if (name == "U") return hyperbolic_plane();
    if (name == "E8") return e8();
    if (name == "E8(-1)" || name == "E8neg") return e8_negative();
    if (name == "<1>") return IntegralLattice::diagonal({1});
    if (name == "<-1>") return IntegralLattice::diagonal({-1});
    return std::nullopt;
}

}  // namespace intform

#endif
