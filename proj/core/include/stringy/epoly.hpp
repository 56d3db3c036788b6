#pragma once

#include <map>
#include <string>
#include <utility>

#include "stringy/numeric.hpp"

namespace stringy {

// Sparse bivariate polynomial in x, y with exact integer coefficients and
// nonnegative exponents. This is the value type for E-polynomials: the
// coefficient of x^p y^q is the signed Hodge number sum
// sum_k (-1)^{k-p-q} h^{p,q}(H^k_cpt), so compact smooth projective pieces
// contribute nonnegatively but nothing forbids negative coefficients.
//
// Values are immutable in spirit: every operation returns a new polynomial,
// no stored term ever has coefficient zero, and exponent pairs are unique.
class EPolynomial {
public:
    using Key = std::pair<int, int>;  // (p, q)
    using TermMap = std::map<Key, Int>;

    EPolynomial() = default;

    static EPolynomial zero() { return {}; }
    static EPolynomial one() { return constant(1); }
    static EPolynomial constant(Int c);
    // c * x^p * y^q; Laurent terms are rejected
    static EPolynomial term(int p, int q, Int c);
    // (xy)^k
    static EPolynomial xy_power(int k) { return term(k, k, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(int p, int q) const;

    EPolynomial& operator+=(const EPolynomial& rhs);
    EPolynomial& operator-=(const EPolynomial& rhs);
    EPolynomial operator-() const;

    // multiplication by (xy)^k: every exponent pair (p,q) -> (p+k, q+k)
    EPolynomial times_xy_power(int k) const;

    Rat evaluate(const Rat& x, const Rat& y) const;

    // h^{p,q} = h^{q,p} at the coefficient level
    bool symmetric_in_xy() const;
    // every term has both exponents >= k
    bool divisible_by_xy_power(int k) const;

    // Canonical rendering: terms sorted by (p, then q) ascending, each as
    // c*x^p*y^q with unit coefficients/exponents omitted, joined by " + ".
    // This string is the comparison format used by the CLI golden outputs.
    std::string to_string() const;

    friend bool operator==(const EPolynomial&, const EPolynomial&) = default;

private:
    TermMap terms_;
};

EPolynomial operator+(EPolynomial a, const EPolynomial& b);
EPolynomial operator-(EPolynomial a, const EPolynomial& b);
EPolynomial operator*(const EPolynomial& a, const EPolynomial& b);
EPolynomial operator*(const Int& s, const EPolynomial& a);

// E-polynomial of a d-dimensional compact complex torus:
// (1+x)^d (1+y)^d, i.e. coefficient of x^p y^q is C(d,p) C(d,q).
EPolynomial e_abelian_variety(int dim);

}  // namespace stringy
