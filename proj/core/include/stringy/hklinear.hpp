#pragma once

#include <random>
#include <vector>

#include "stringy/matrix.hpp"
#include "stringy/numeric.hpp"

namespace stringy {

// Exact complex rational scalar: just enough arithmetic for restricted
// holomorphic forms and their Pfaffians. No division on purpose.
struct ComplexRat {
    Rat re{0};
    Rat im{0};

    ComplexRat() = default;
    ComplexRat(int value) : re(value) {}  // implicit: lets Matrix<ComplexRat> use T(0), T(1)
    ComplexRat(Rat real, Rat imag = Rat(0)) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    ComplexRat operator-() const { return ComplexRat(-re, -im); }
    ComplexRat& operator+=(const ComplexRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRat& operator-=(const ComplexRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend ComplexRat operator+(ComplexRat a, const ComplexRat& b) { return a += b; }
    friend ComplexRat operator-(ComplexRat a, const ComplexRat& b) { return a -= b; }
    friend ComplexRat operator*(const ComplexRat& a, const ComplexRat& b) {
        return ComplexRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend bool operator==(const ComplexRat&, const ComplexRat&) = default;
};

using RatMatrix = Matrix<Rat>;
using ComplexMatrix = Matrix<ComplexRat>;

// A flat hyperkähler structure on R^{4k}: three exact complex structures
// satisfying the quaternion relations, each an isometry of one positive
// definite metric. Kähler forms and holomorphic volume data are derived.
class HyperkahlerModel {
public:
    HyperkahlerModel(int k, RatMatrix j1, RatMatrix j2, RatMatrix j3, RatMatrix metric);

    // H^k with the unit metric; J1, J2, J3 are blockwise left multiplication
    // by the imaginary quaternions i, j, k in coordinates (1, i, j, k).
    static HyperkahlerModel standard(int k);

    int k() const { return k_; }
    int dim() const { return 4 * k_; }
    const RatMatrix& complex_structure(int index) const;  // index in {1, 2, 3}
    const RatMatrix& metric() const { return metric_; }

private:
    int k_;
    RatMatrix j_[3];
    RatMatrix metric_;
};

// omega_i(u, v) = metric(J_i u, v), as the matrix J_i^T * metric.
// Antisymmetric and nondegenerate.
RatMatrix kahler_form(const HyperkahlerModel& model, int index);

// A half-dimensional linear subspace L of R^{4k}, stored as 2k independent
// basis rows of length 4k.
class LinearSubspace {
public:
    explicit LinearSubspace(RatMatrix basis_rows);
    static LinearSubspace from_vectors(const std::vector<std::vector<Rat>>& vectors);

    const RatMatrix& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    int ambient_dim() const { return static_cast<int>(basis_.cols()); }

private:
    RatMatrix basis_;
};

// Gram matrix of the form pulled back to the subspace basis: B * form * B^T.
RatMatrix restrict_form(const RatMatrix& form, const LinearSubspace& subspace);

// True iff L is J2-invariant and both omega_3 and omega_1 (the real and
// imaginary parts of the J2-holomorphic symplectic form omega_3 + i*omega_1)
// restrict to zero on L.
bool verify_holomorphic_lagrangian(const HyperkahlerModel& model, const LinearSubspace& subspace);

// Pf((omega_2 + i*omega_3)|_L): the J1-holomorphic volume form evaluated on
// the basis of L, as an exact complex rational.
ComplexRat restricted_volume(const HyperkahlerModel& model, const LinearSubspace& subspace);

// True iff omega_1 restricts to zero on L and Im Pf((omega_2 + i*omega_3)|_L)
// vanishes: L is special Lagrangian for J1 and its holomorphic volume form.
bool verify_special_lagrangian(const HyperkahlerModel& model, const LinearSubspace& subspace);

// span{1, j} in every quaternion block: the reference J2-holomorphic
// Lagrangian of the standard model.
LinearSubspace standard_holomorphic_lagrangian(int k);

// A random J2-holomorphic Lagrangian of the standard model: the reference
// subspace moved by random exact-rational complex symplectic transvections
// (which commute with J2 and preserve the holomorphic symplectic form).
// Deterministic given the generator state.
LinearSubspace random_holomorphic_lagrangian(int k, std::mt19937_64& rng);

}  // namespace stringy
