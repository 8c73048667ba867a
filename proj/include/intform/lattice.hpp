#ifndef INTFORM_LATTICE_HPP
#define INTFORM_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "intform/matrix.hpp"
#include "intform/numeric.hpp"

namespace intform {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// Inertia of a symmetric bilinear form over the rationals: counts of
/// positive, negative and zero directions. pos + neg + zero = rank, and
/// zero = 0 exactly when the form is nondegenerate.
struct Signature {
    std::int64_t pos = 0;
    std::int64_t neg = 0;
    std::int64_t zero = 0;

    std::int64_t rank() const { return pos + neg + zero; }
    std::int64_t index() const { return pos - neg; }
    bool is_definite() const { return zero == 0 && (pos == 0 || neg == 0) && rank() > 0; }
    bool is_indefinite() const { return pos > 0 && neg > 0; }

    bool operator==(const Signature&) const = default;
};

/// A finitely generated free Z-module with an integer-valued symmetric
/// bilinear form, held as its Gram matrix. Rank 0 is a legal value (the
/// zero lattice). Immutable after construction; the determinant is
/// computed once, up front.
class IntegralLattice {
public:
    IntegralLattice() : det_(1) {}

    explicit IntegralLattice(IntMatrix gram) : gram_(std::move(gram)) {
        if (!gram_.is_square())
            throw std::invalid_argument("Gram matrix must be square");
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            for (std::size_t j = i + 1; j < gram_.cols(); ++j)
                if (gram_(i, j) != gram_(j, i))
                    throw std::invalid_argument("Gram matrix must be symmetric");
        det_ = intform::determinant(gram_);
    }

    static IntegralLattice diagonal(const std::vector<std::int64_t>& entries) {
        IntMatrix g(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
        return IntegralLattice(std::move(g));
    }

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const Int& determinant() const { return det_; }

    /// Form value x.y = x^T G y.
    Int inner(const std::vector<Int>& x, const std::vector<Int>& y) const {
        if (x.size() != rank() || y.size() != rank())
            throw std::invalid_argument("vector length does not match rank");
        Int acc = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            Int row = 0;
            for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
            acc += x[i] * row;
        }
        return acc;
    }

    Int norm(const std::vector<Int>& x) const { return inner(x, x); }

    bool operator==(const IntegralLattice& other) const { return gram_ == other.gram_; }

private:
    IntMatrix gram_;
    Int det_;
};

inline bool is_unimodular(const IntegralLattice& l) {
    return l.determinant() == 1 || l.determinant() == -1;
}

/// Even iff x.x is even for every lattice vector; for an integral symmetric
/// form this reduces to the diagonal of the Gram matrix, since
/// x.x = sum_i g_ii x_i^2 + 2 sum_{i<j} g_ij x_i x_j.
inline Parity parity(const IntegralLattice& l) {
    if (l.rank() == 0)
        throw std::invalid_argument("parity undefined for zero lattice");
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.gram()(i, i) % 2 != 0) return Parity::odd;
    return Parity::even;
}

namespace detail {

enum class PivotRule { first, last };

// Symmetric congruence reduction over Q. Diagonal pivots split off
// one-dimensional blocks; when every remaining diagonal entry vanishes but
// some off-diagonal g != 0 survives, the plane [[0,g],[g,0]] splits off and
// contributes one positive and one negative direction. Sylvester's law makes
// the result independent of the pivot choice; the rule parameter exists so
// tests can exercise two elimination orders.
inline Signature signature_impl(const IntegralLattice& l, PivotRule rule) {
    const std::size_t n = l.rank();
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(l.gram()(i, j));

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;
    if (rule == PivotRule::last) std::reverse(active.begin(), active.end());

    Signature sig;
    while (!active.empty()) {
        std::size_t pivot_pos = active.size();
        for (std::size_t p = 0; p < active.size(); ++p)
            if (a(active[p], active[p]) != 0) { pivot_pos = p; break; }

        if (pivot_pos < active.size()) {
            const std::size_t p = active[pivot_pos];
            const Rat d = a(p, p);
            (d > 0 ? sig.pos : sig.neg) += 1;
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
            for (std::size_t x : active)
                for (std::size_t y : active)
                    a(x, y) -= a(x, p) * a(p, y) / d;
            continue;
        }

        // All active diagonal entries are zero.
        std::size_t ii = active.size(), jj = active.size();
        for (std::size_t p = 0; p < active.size() && ii == active.size(); ++p)
            for (std::size_t q = p + 1; q < active.size(); ++q)
                if (a(active[p], active[q]) != 0) { ii = p; jj = q; break; }
        if (ii == active.size()) {
            sig.zero += static_cast<std::int64_t>(active.size());
            break;
        }
        const std::size_t i = active[ii], j = active[jj];
        const Rat g = a(i, j);
        sig.pos += 1;
        sig.neg += 1;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(jj));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(ii));
        // Schur complement of the hyperbolic block on (i, j).
        for (std::size_t x : active)
            for (std::size_t y : active)
                a(x, y) -= (a(x, i) * a(j, y) + a(x, j) * a(i, y)) / g;
    }
    return sig;
}

}  // namespace detail

inline Signature signature(const IntegralLattice& l) {
    return detail::signature_impl(l, detail::PivotRule::first);
}

/// Index (tau) of the form: positive minus negative inertia count.
inline std::int64_t index(const IntegralLattice& l) { return signature(l).index(); }

inline IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
    const std::size_t n = a.rank(), m = b.rank();
    IntMatrix g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
    return IntegralLattice(std::move(g));
}

/// Base change by a unimodular integer matrix T: Gram -> T^t Gram T.
/// Rank, determinant, signature and parity are all invariants of this.
inline IntegralLattice congruence_transform(const IntegralLattice& l, const IntMatrix& t) {
    if (!t.is_square() || t.rows() != l.rank())
        throw std::invalid_argument("not a base change: wrong shape");
    const Int d = determinant(t);
    if (d != 1 && d != -1)
        throw std::invalid_argument("not a base change: matrix is not unimodular");
    return IntegralLattice(t.transposed() * l.gram() * t);
}

}  // namespace intform

#endif
