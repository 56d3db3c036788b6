#include "stringy/hklinear.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace stringy {

namespace {

void check_square(const RatMatrix& m, int n, const char* what) {
    if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != n)
        throw std::invalid_argument(std::string(what) + " must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
}

// Sylvester's criterion: all leading principal minors positive.
bool is_positive_definite(const RatMatrix& g) {
    for (std::size_t t = 1; t <= g.rows(); ++t) {
        RatMatrix lead(t, t);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) lead(i, j) = g(i, j);
        if (!(field_determinant(std::move(lead)) > 0)) return false;
    }
    return true;
}

}  // namespace

HyperkahlerModel::HyperkahlerModel(int k, RatMatrix j1, RatMatrix j2, RatMatrix j3,
                                   RatMatrix metric)
    : k_(k), j_{std::move(j1), std::move(j2), std::move(j3)}, metric_(std::move(metric)) {
    if (k < 1) throw std::invalid_argument("quaternionic dimension must be positive");
    const int n = dim();
    check_square(j_[0], n, "J1");
    check_square(j_[1], n, "J2");
    check_square(j_[2], n, "J3");
    check_square(metric_, n, "metric");

    const RatMatrix minus_identity = -RatMatrix::identity(n);
    for (int i = 0; i < 3; ++i)
        if (j_[i] * j_[i] != minus_identity)
            throw std::invalid_argument("J" + std::to_string(i + 1) + " squared is not -I");
    if (j_[0] * j_[1] != j_[2] || j_[1] * j_[2] != j_[0] || j_[2] * j_[0] != j_[1])
        throw std::invalid_argument("complex structures violate the quaternion relations");

    if (metric_ != metric_.transposed())
        throw std::invalid_argument("metric must be symmetric");
    if (!is_positive_definite(metric_))
        throw std::invalid_argument("metric must be positive definite");
    for (int i = 0; i < 3; ++i)
        if (j_[i].transposed() * metric_ * j_[i] != metric_)
            throw std::invalid_argument("J" + std::to_string(i + 1) +
                                        " is not an isometry of the metric");
}

HyperkahlerModel HyperkahlerModel::standard(int k) {
    if (k < 1) throw std::invalid_argument("quaternionic dimension must be positive");
    const int n = 4 * k;
    // Left multiplication by i, j, k on one quaternion block in the ordered
    // basis (1, i, j, k), written by columns: the image of each basis vector.
    const int li[4][4] = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    const int lj[4][4] = {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}};
    const int lk[4][4] = {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    const auto assemble = [&](const int block[4][4]) {
        RatMatrix m(n, n);
        for (int b = 0; b < k; ++b)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m(4 * b + r, 4 * b + c) = block[r][c];
        return m;
    };
    return HyperkahlerModel(k, assemble(li), assemble(lj), assemble(lk),
                            RatMatrix::identity(n));
}

const RatMatrix& HyperkahlerModel::complex_structure(int index) const {
    if (index < 1 || index > 3)
        throw std::invalid_argument("complex structure index must be 1, 2 or 3");
    return j_[index - 1];
}

RatMatrix kahler_form(const HyperkahlerModel& model, int index) {
    return model.complex_structure(index).transposed() * model.metric();
}

LinearSubspace::LinearSubspace(RatMatrix basis_rows) : basis_(std::move(basis_rows)) {
    if (basis_.rows() == 0) throw std::invalid_argument("subspace needs at least one basis vector");
    if (basis_.cols() != 2 * basis_.rows())
        throw std::invalid_argument("subspace must be half-dimensional: " +
                                    std::to_string(basis_.rows()) + " vectors need ambient " +
                                    std::to_string(2 * basis_.rows()));
    if (field_rank(basis_) != basis_.rows())
        throw std::invalid_argument("subspace basis is linearly dependent");
}

LinearSubspace LinearSubspace::from_vectors(const std::vector<std::vector<Rat>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("subspace needs at least one basis vector");
    RatMatrix basis(vectors.size(), vectors.front().size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != vectors.front().size())
            throw std::invalid_argument("basis vectors have mixed lengths");
        for (std::size_t j = 0; j < vectors[i].size(); ++j) basis(i, j) = vectors[i][j];
    }
    return LinearSubspace(std::move(basis));
}

RatMatrix restrict_form(const RatMatrix& form, const LinearSubspace& subspace) {
    if (form.rows() != form.cols() || static_cast<int>(form.rows()) != subspace.ambient_dim())
        throw std::invalid_argument("form shape differs from subspace ambient dimension");
    return subspace.basis() * form * subspace.basis().transposed();
}

namespace {

void check_compatible(const HyperkahlerModel& model, const LinearSubspace& subspace) {
    if (subspace.ambient_dim() != model.dim())
        throw std::invalid_argument("subspace lives in dimension " +
                                    std::to_string(subspace.ambient_dim()) +
                                    ", model in dimension " + std::to_string(model.dim()));
}

}  // namespace

bool verify_holomorphic_lagrangian(const HyperkahlerModel& model,
                                   const LinearSubspace& subspace) {
    check_compatible(model, subspace);
    // J2-invariance: stacking the basis with its J2-image must not raise the rank.
    const RatMatrix& basis = subspace.basis();
    const RatMatrix image = basis * model.complex_structure(2).transposed();
    RatMatrix stacked(2 * basis.rows(), basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            stacked(i, j) = basis(i, j);
            stacked(basis.rows() + i, j) = image(i, j);
        }
    if (field_rank(std::move(stacked)) != basis.rows()) return false;
    // The J2-holomorphic symplectic form omega_3 + i*omega_1 must vanish on L.
    return restrict_form(kahler_form(model, 3), subspace).is_zero() &&
           restrict_form(kahler_form(model, 1), subspace).is_zero();
}

ComplexRat restricted_volume(const HyperkahlerModel& model, const LinearSubspace& subspace) {
    check_compatible(model, subspace);
    const RatMatrix real_part = restrict_form(kahler_form(model, 2), subspace);
    const RatMatrix imag_part = restrict_form(kahler_form(model, 3), subspace);
    ComplexMatrix restricted(real_part.rows(), real_part.cols());
    for (std::size_t i = 0; i < real_part.rows(); ++i)
        for (std::size_t j = 0; j < real_part.cols(); ++j)
            restricted(i, j) = ComplexRat(real_part(i, j), imag_part(i, j));
    return pfaffian(restricted);
}

bool verify_special_lagrangian(const HyperkahlerModel& model, const LinearSubspace& subspace) {
    check_compatible(model, subspace);
    if (!restrict_form(kahler_form(model, 1), subspace).is_zero()) return false;
    return restricted_volume(model, subspace).im == 0;
}

LinearSubspace standard_holomorphic_lagrangian(int k) {
    if (k < 1) throw std::invalid_argument("quaternionic dimension must be positive");
    RatMatrix basis(2 * k, 4 * k);
    for (int b = 0; b < k; ++b) {
        basis(2 * b, 4 * b) = 1;      // the "1" axis of block b
        basis(2 * b + 1, 4 * b + 2) = 1;  // the "j" axis of block b
    }
    return LinearSubspace(std::move(basis));
}

namespace {

using ComplexVector = std::vector<ComplexRat>;

// Small exact rationals, portable across platforms (mt19937_64 output is
// specified by the standard; no distribution objects).
Rat small_rat(std::mt19937_64& rng) {
    const auto num = static_cast<std::int64_t>(rng() % 9) - 4;
    const auto den = static_cast<std::int64_t>(rng() % 3) + 1;
    return Rat(num, den);
}

ComplexRat small_complex(std::mt19937_64& rng) {
    Rat re = small_rat(rng);
    Rat im = small_rat(rng);
    return ComplexRat(std::move(re), std::move(im));
}

// Standard complex symplectic form pairing coordinates (2b, 2b+1).
ComplexRat std_symplectic(const ComplexVector& x, const ComplexVector& v) {
    ComplexRat acc;
    for (std::size_t b = 0; 2 * b + 1 < x.size(); ++b)
        acc += x[2 * b] * v[2 * b + 1] - x[2 * b + 1] * v[2 * b];
    return acc;
}

// In quaternion block b, the complex structure J2 pairs the axes (1, j) and
// (i, k): complex coordinate 2b is a + bi over (1, j), coordinate 2b+1 is
// a' + b'i over (i, -k).
std::vector<Rat> realize(const ComplexVector& w) {
    std::vector<Rat> out(2 * w.size(), Rat(0));
    for (std::size_t b = 0; 2 * b + 1 < w.size(); ++b) {
        out[4 * b] = w[2 * b].re;
        out[4 * b + 2] = w[2 * b].im;
        out[4 * b + 1] = w[2 * b + 1].re;
        out[4 * b + 3] = -w[2 * b + 1].im;
    }
    return out;
}

}  // namespace

LinearSubspace random_holomorphic_lagrangian(int k, std::mt19937_64& rng) {
    if (k < 1) throw std::invalid_argument("quaternionic dimension must be positive");
    // Complex basis of the reference Lagrangian {odd coordinates = 0}.
    std::vector<ComplexVector> basis(k, ComplexVector(2 * k));
    for (int b = 0; b < k; ++b) basis[b][2 * b] = ComplexRat(1);
    // Symplectic transvections x -> x + lambda * omega(x, v) * v preserve the
    // form and commute with multiplication by i, so they move holomorphic
    // Lagrangians to holomorphic Lagrangians.
    const int rounds = 4;
    for (int round = 0; round < rounds; ++round) {
        ComplexVector v(2 * k);
        for (auto& entry : v) entry = small_complex(rng);
        const ComplexRat lambda = small_complex(rng);
        for (auto& x : basis) {
            const ComplexRat factor = lambda * std_symplectic(x, v);
            for (std::size_t j = 0; j < x.size(); ++j) x[j] += factor * v[j];
        }
    }
    // A complex basis w_1..w_k realizes to the real basis w_1, i*w_1, ..., in
    // dimension 4k; complex independence makes the real family independent.
    RatMatrix real_basis(2 * k, 4 * k);
    const ComplexRat imaginary_unit(Rat(0), Rat(1));
    for (int b = 0; b < k; ++b) {
        ComplexVector rotated(2 * k);
        for (int j = 0; j < 2 * k; ++j) rotated[j] = imaginary_unit * basis[b][j];
        const std::vector<Rat> row0 = realize(basis[b]);
        const std::vector<Rat> row1 = realize(rotated);
        for (int j = 0; j < 4 * k; ++j) {
            real_basis(2 * b, j) = row0[j];
            real_basis(2 * b + 1, j) = row1[j];
        }
    }
    return LinearSubspace(std::move(real_basis));
}

}  // namespace stringy
