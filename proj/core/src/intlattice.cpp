#include "stringy/intlattice.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace stringy {

using boost::multiprecision::abs;

bool is_alternating(const IntMatrix& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != -a(j, i)) return false;
    }
    return true;
}

Int integer_determinant(IntMatrix a) {
    if (!a.is_square()) throw std::invalid_argument("integer_determinant: not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // Bareiss: exact division
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace {

// Smallest nonzero |a(i,j)| with i,j >= t; returns false if the trailing
// submatrix is zero.
bool min_nonzero(const IntMatrix& a, std::size_t t, std::size_t& bi, std::size_t& bj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                best = v;
                bi = i;
                bj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

std::vector<Int> smith_divisors(IntMatrix a) {
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> divisors;
    divisors.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t bi = 0, bj = 0;
        if (!min_nonzero(a, t, bi, bj)) break;  // trailing block is zero
        for (;;) {
            min_nonzero(a, t, bi, bj);
            a.swap_rows(t, bi);
            a.swap_cols(t, bj);
            const Int p = a(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                a.add_row(i, t, -(a(i, t) / p));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                a.add_col(j, t, -(a(t, j) / p));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the remaining submatrix for d_t | d_{t+1}
            bool divides = true;
            for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a.cols() && divides; ++j)
                    if (a(i, j) % p != 0) {
                        a.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        divisors.push_back(abs(a(t, t)));
    }
    return divisors;
}

AlternatingNormalForm alternating_normal_form(const IntMatrix& pairing) {
    if (!is_alternating(pairing))
        throw std::invalid_argument("alternating_normal_form: matrix is not alternating");
    const std::size_t n = pairing.rows();
    if (n % 2 != 0) throw std::invalid_argument("alternating_normal_form: odd rank");

    AlternatingNormalForm out;
    out.normal = pairing;
    out.basis = IntMatrix::identity(n);
    IntMatrix& a = out.normal;
    IntMatrix& p = out.basis;

    // congruence versions of the elementary operations: every column
    // operation on `a` is mirrored by the matching row operation, and only
    // the column half is recorded in the accumulated basis.
    auto sym_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        a.swap_cols(x, y);
        a.swap_rows(x, y);
        p.swap_cols(x, y);
    };
    auto sym_add = [&](std::size_t dst, std::size_t src, const Int& f) {
        a.add_col(dst, src, f);
        a.add_row(dst, src, f);
        p.add_col(dst, src, f);
    };

    for (std::size_t t = 0; t < n; t += 2) {
        std::size_t bi = 0, bj = 0;
        if (!min_nonzero(a, t, bi, bj))
            throw std::invalid_argument("alternating_normal_form: degenerate pairing");
        for (;;) {
            min_nonzero(a, t, bi, bj);
            // move the minimal entry to position (t, t+1)
            if (bi != t) {
                sym_swap(bi, t);
                if (bj == t) bj = bi;
            }
            if (bj != t + 1) sym_swap(bj, t + 1);
            const Int piv = a(t, t + 1);
            // clear rows t and t+1 beyond the 2x2 block; a(t+1,t+1)=a(t,t)=0,
            // so the two reductions do not disturb each other
            bool clean = true;
            for (std::size_t c = t + 2; c < n; ++c) {
                if (a(t, c) != 0) {
                    sym_add(c, t + 1, -(a(t, c) / piv));
                    if (a(t, c) != 0) clean = false;
                }
                if (a(t + 1, c) != 0) {
                    sym_add(c, t, a(t + 1, c) / piv);
                    if (a(t + 1, c) != 0) clean = false;
                }
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 2; i < n && divides; ++i)
                for (std::size_t j = t + 2; j < n && divides; ++j)
                    if (a(i, j) % piv != 0) {
                        sym_add(t, i, 1);  // pulls a nondivisible row into row t
                        divides = false;
                    }
            if (divides) break;
        }
        if (a(t, t + 1) < 0) sym_swap(t, t + 1);
    }

    out.divisors.reserve(n / 2);
    for (std::size_t t = 0; t < n; t += 2) out.divisors.push_back(a(t, t + 1));
    return out;
}

}  // namespace stringy
