#ifndef INTFORM_NUMERIC_HPP
#define INTFORM_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace intform {

// All lattice arithmetic is exact. Gram entries grow quickly under base
// changes and fraction-free elimination, so fixed-width integers are out.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int rat_floor(const Rat& x) {
    Int n = boost::multiprecision::numerator(x);
    Int d = boost::multiprecision::denominator(x);  // d > 0 by normalization
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

// gcd(a, b) >= 0 together with Bezout coefficients: a*s + b*t = g.
struct ExtGcd {
    Int g, s, t;
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b; b = r;
        Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    return {a, s0, t0};
}

inline std::int64_t to_int64(const Int& x) {
    if (x > std::int64_t(9223372036854775807LL) ||
        x < -std::int64_t(9223372036854775807LL) - 1)
        throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

}  // namespace intform

#endif
