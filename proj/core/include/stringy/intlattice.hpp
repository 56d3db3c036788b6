#pragma once

#include <vector>

#include "stringy/matrix.hpp"
#include "stringy/numeric.hpp"

namespace stringy {

using IntMatrix = Matrix<Int>;

// Determinant over Z by fraction-free (Bareiss) elimination.
Int integer_determinant(IntMatrix a);

// Diagonal of the Smith normal form: nonnegative, d_i | d_{i+1}.
// Only the divisors are computed, no transform tracking; this is the
// independent cross-check route for the congruence reduction below.
std::vector<Int> smith_divisors(IntMatrix a);

// Congruence normal form of a nondegenerate alternating integer matrix:
// basis^T * input * basis = normal, with basis unimodular and
// normal = blockdiag([[0,d_1],[-d_1,0]], ..., [[0,d_k],[-d_k,0]]),
// d_1 | d_2 | ... | d_k, all positive.
struct AlternatingNormalForm {
    IntMatrix normal;
    IntMatrix basis;
    std::vector<Int> divisors;  // d_1, ..., d_k (each block once)
};

AlternatingNormalForm alternating_normal_form(const IntMatrix& pairing);

bool is_alternating(const IntMatrix& a);

}  // namespace stringy
