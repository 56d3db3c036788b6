#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace stringy {

// All arithmetic in this library is exact: arbitrary-precision integers for
// polynomial coefficients and lattice pairings, arbitrary-precision rationals
// for evaluations and the flat hyperkahler models. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// base^e for e >= 0.
inline Int int_pow(const Int& base, int e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1, b = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rat r = 1, b = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

// Representative of v mod n in [0, n).
inline std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    v %= n;
    return v < 0 ? v + n : v;
}

}  // namespace stringy
