#ifndef INTFORM_ENUMERATION_HPP
#define INTFORM_ENUMERATION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "intform/lattice.hpp"
#include "intform/lattice_class.hpp"

namespace intform {

namespace detail {

// Rational LDL^T data for a positive definite form: Q(x) in completed-square
// form sum_k d_k (x_k + sum_{j>k} r_kj x_j)^2 with every d_k > 0.
struct CompletedSquares {
    std::vector<Rat> d;
    RatMatrix r;
};

inline CompletedSquares complete_squares_positive(const IntegralLattice& l) {
    const std::size_t n = l.rank();
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(l.gram()(i, j));
    CompletedSquares cs{std::vector<Rat>(n), RatMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        cs.d[k] = a(k, k);
        if (cs.d[k] <= 0) throw std::invalid_argument("form is not positive definite");
        for (std::size_t j = k + 1; j < n; ++j) cs.r(k, j) = a(k, j) / cs.d[k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= a(i, k) * a(k, j) / cs.d[k];
    }
    return cs;
}

// Depth-first walk over integer points with Q(x) <= budget, coordinates
// chosen from the last to the first. At each level the coordinate value is
// walked outward from the minimum of the parabola d_k (t + c)^2, so the scan
// stops exactly when the bound is exceeded; no floating point is involved.
inline void enumerate_box(const CompletedSquares& cs, std::size_t level,
                          std::vector<Int>& x, const Rat& budget,
                          std::vector<std::vector<Int>>& out) {
    if (level == 0) return;
    const std::size_t k = level - 1;
    Rat center = 0;
    for (std::size_t j = k + 1; j < cs.d.size(); ++j) center += cs.r(k, j) * Rat(x[j]);

    auto contribution = [&](const Int& t) {
        Rat s = Rat(t) + center;
        return cs.d[k] * s * s;
    };
    auto descend = [&](const Int& t) {
        Rat c = contribution(t);
        if (c > budget) return false;
        x[k] = t;
        if (k == 0) {
            if (c == budget) out.push_back(x);  // total equals target exactly
        } else {
            enumerate_box(cs, k, x, budget - c, out);
        }
        return true;
    };

    const Int start = rat_ceil(-center);
    for (Int t = start; descend(t); ++t) {}
    for (Int t = start - 1; descend(t); --t) {}
    x[k] = 0;
}

inline bool first_nonzero_positive(const std::vector<Int>& v) {
    for (const Int& c : v) {
        if (c != 0) return c > 0;
    }
    return false;
}

}  // namespace detail

/// All x with x.x = m in a definite lattice, one representative per {x, -x}
/// pair (the one whose first nonzero coordinate is positive), sorted
/// lexicographically. m must point in the definite direction: m >= 1 for a
/// positive definite form, m <= -1 for a negative definite one.
inline std::vector<std::vector<Int>> enumerate_vectors_of_norm(const IntegralLattice& l, Int m) {
    if (m == 0) throw std::invalid_argument("enumeration requires a nonzero norm");
    if (l.rank() == 0) return {};  // the zero lattice has no nonzero vectors
    const Signature sig = signature(l);
    if (!sig.is_definite())
        throw std::invalid_argument("enumeration requires definite lattice");
    const bool positive = sig.pos > 0;
    if ((positive && m < 0) || (!positive && m > 0))
        throw std::invalid_argument("norm has the wrong sign for this definite lattice");

    const IntegralLattice working = positive ? l : negated(l);
    const Rat target = Rat(positive ? m : Int(-m));
    const auto cs = detail::complete_squares_positive(working);

    std::vector<std::vector<Int>> found;
    std::vector<Int> x(l.rank());
    detail::enumerate_box(cs, l.rank(), x, target, found);

    std::vector<std::vector<Int>> reps;
    for (auto& v : found)
        if (detail::first_nonzero_positive(v)) reps.push_back(std::move(v));
    std::sort(reps.begin(), reps.end());
    return reps;
}

/// Outcome of splitting a norm +-1 vector off orthogonally.
struct UnitSplit {
    int sign = 0;                 // the norm of the split vector
    IntegralLattice complement;   // Gram of the orthogonal complement
    std::vector<Int> unit;        // the vector that was split off
};

namespace detail {

// Integral basis of the kernel of x -> v.x, i.e. the columns 1..n-1 of a
// unimodular U with v^T U = (g, 0, ..., 0). Requires v != 0.
inline IntMatrix kernel_basis_of_form(const std::vector<Int>& v) {
    const std::size_t n = v.size();
    IntMatrix u = IntMatrix::identity(n);
    std::vector<Int> w = v;
    for (std::size_t i = 1; i < n; ++i) {
        if (w[i] == 0) continue;
        if (w[0] == 0) {
            std::swap(w[0], w[i]);
            for (std::size_t r = 0; r < n; ++r) std::swap(u(r, 0), u(r, i));
            continue;
        }
        const ExtGcd eg = ext_gcd(w[0], w[i]);
        const Int a = w[0] / eg.g, b = w[i] / eg.g;
        for (std::size_t r = 0; r < n; ++r) {
            const Int c0 = u(r, 0), ci = u(r, i);
            u(r, 0) = eg.s * c0 + eg.t * ci;
            u(r, i) = -b * c0 + a * ci;
        }
        w[0] = eg.g;
        w[i] = 0;
    }
    if (w[0] == 0) throw std::invalid_argument("kernel of the zero form is everything");
    IntMatrix basis(n, n - 1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 1; c < n; ++c) basis(r, c - 1) = u(r, c);
    return basis;
}

// Search an indefinite lattice for a vector of norm +-1 by walking sup-norm
// shells outward. Exponential in the rank; meant for small inputs. A miss is
// only "not found within the bound", never a proof of absence.
inline std::optional<std::vector<Int>> indefinite_unit_search(const IntegralLattice& l) {
    Int max_entry = 0;
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j)
            max_entry = std::max(max_entry, Int(boost::multiprecision::abs(l.gram()(i, j))));
    const Int bound = std::max(Int(10), Int(2 * max_entry));

    const std::size_t n = l.rank();
    std::vector<Int> x(n);
    std::optional<std::vector<Int>> hit;
    auto walk = [&](auto&& self, std::size_t i, const Int& shell, bool touched) -> void {
        if (hit) return;
        if (i == n) {
            if (!touched || !first_nonzero_positive(x)) return;
            const Int q = l.norm(x);
            if (q == 1 || q == -1) hit = x;
            return;
        }
        for (Int t = -shell; t <= shell; ++t) {
            x[i] = t;
            self(self, i + 1, shell, touched || boost::multiprecision::abs(t) == shell);
        }
        x[i] = 0;
    };
    for (Int shell = 1; shell <= bound && !hit; ++shell) walk(walk, 0, shell, false);
    return hit;
}

}  // namespace detail

/// Split a vector e with e.e = +-1 off orthogonally: L = <e> + e-perp, with
/// the complement returned as an integral Gram matrix of rank n-1. Returns
/// nullopt when no unit exists (definite case: proven by enumeration;
/// indefinite case: not found within the coordinate search bound).
inline std::optional<UnitSplit> split_off_unit(const IntegralLattice& l) {
    if (l.rank() == 0) throw std::invalid_argument("split_off_unit requires rank >= 1");
    if (!is_unimodular(l)) throw std::invalid_argument("split_off_unit requires a unimodular lattice");

    std::vector<Int> e;
    for (std::size_t i = 0; i < l.rank() && e.empty(); ++i) {
        const Int& d = l.gram()(i, i);
        if (d == 1 || d == -1) {
            e.assign(l.rank(), Int(0));
            e[i] = 1;
        }
    }
    if (e.empty()) {
        const Signature sig = signature(l);
        if (sig.is_definite()) {
            auto units = enumerate_vectors_of_norm(l, sig.pos > 0 ? 1 : -1);
            if (units.empty()) return std::nullopt;
            e = std::move(units.front());
        } else {
            auto found = detail::indefinite_unit_search(l);
            if (!found) return std::nullopt;
            e = std::move(*found);
        }
    }

    const Int norm_e = l.norm(e);
    std::vector<Int> ge(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) ge[i] += l.gram()(i, j) * e[j];

    IntMatrix basis = detail::kernel_basis_of_form(ge);
    IntegralLattice complement(basis.transposed() * l.gram() * basis);
    if (!is_unimodular(complement) && complement.rank() > 0)
        throw std::logic_error("orthogonal complement of a unit is not unimodular");
    return UnitSplit{norm_e > 0 ? 1 : -1, std::move(complement), std::move(e)};
}

/// Diagonalize a definite unimodular lattice over Z by repeatedly splitting
/// off unit vectors. Returns nullopt (NotDiagonalizable) when the process
/// stalls, which is exactly the even definite case (E8 and friends).
inline std::optional<LatticeClass> diagonalize_odd_definite(const IntegralLattice& l) {
    if (l.rank() == 0) throw std::invalid_argument("diagonalization requires rank >= 1");
    if (!is_unimodular(l)) throw std::invalid_argument("diagonalization requires a unimodular lattice");
    if (signature(l).is_indefinite())
        throw std::invalid_argument("use canonical_indefinite");

    LatticeClass result;
    IntegralLattice current = l;
    while (current.rank() > 0) {
        auto split = split_off_unit(current);
        if (!split) return std::nullopt;
        (split->sign > 0 ? result.plus1 : result.minus1) += 1;
        current = std::move(split->complement);
    }
    return result;
}

/// w is characteristic when x.x = x.w mod 2 for all x; on a basis this is
/// the finite condition (Gw)_i = g_ii mod 2 for every i. The zero vector is
/// characteristic exactly for even forms.
inline bool is_characteristic_vector(const IntegralLattice& l, const std::vector<Int>& w) {
    if (w.size() != l.rank())
        throw std::invalid_argument("vector length does not match rank");
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Int dot = 0;
        for (std::size_t j = 0; j < l.rank(); ++j) dot += l.gram()(i, j) * w[j];
        if ((dot - l.gram()(i, i)) % 2 != 0) return false;
    }
    return true;
}

}  // namespace intform

#endif
