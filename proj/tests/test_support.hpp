#ifndef INTFORM_TEST_SUPPORT_HPP
#define INTFORM_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "intform/lattice.hpp"

namespace intform::test {

// Naive cofactor expansion; exponential, test-only. Serves as the
// independent determinant oracle for the fraction-free implementation.
inline Int cofactor_determinant(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t out_j = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, out_j++) = m(i, j);
            }
        }
        const Int term = m(0, c) * cofactor_determinant(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

// Product of random elementary row/column operations: transvections with
// coefficient +-1, swaps, and sign flips. Always unimodular by construction.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = -1) {
    IntMatrix t = IntMatrix::identity(n);
    if (n < 2) return t;
    if (steps < 0) steps = static_cast<int>(3 * n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 5);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
            case 0:
            case 1:
            case 2: {  // t := t * (I + c E_ij), c = +-1
                if (i == j) break;
                const Int c = (kind(rng) % 2 == 0) ? 1 : -1;
                for (std::size_t r = 0; r < n; ++r) t(r, j) += c * t(r, i);
                break;
            }
            case 3: {  // column swap
                if (i == j) break;
                for (std::size_t r = 0; r < n; ++r) std::swap(t(r, i), t(r, j));
                break;
            }
            default: {  // column negation
                for (std::size_t r = 0; r < n; ++r) t(r, i) = -t(r, i);
                break;
            }
        }
    }
    return t;
}

inline std::vector<Int> to_int_vector(const std::vector<long long>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

}  // namespace intform::test

#endif
