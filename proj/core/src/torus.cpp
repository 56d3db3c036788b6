#include "stringy/torus.hpp"

#include <stdexcept>

namespace stringy {

namespace {

IntMatrix block_normal_form(const std::vector<Int>& divisors) {
    const int rank = 2 * static_cast<int>(divisors.size());
    IntMatrix normal(rank, rank);
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        normal(2 * i, 2 * i + 1) = divisors[i];
        normal(2 * i + 1, 2 * i) = -divisors[i];
    }
    return normal;
}

}  // namespace

PolarizedLatticeTorus::PolarizedLatticeTorus(IntMatrix pairing) : pairing_(std::move(pairing)) {
    if (!pairing_.is_square() || pairing_.rows() == 0 || pairing_.rows() % 2 != 0)
        throw std::invalid_argument("pairing must be square of even positive rank");
    if (!is_alternating(pairing_))
        throw std::invalid_argument("pairing must be alternating (antisymmetric, zero diagonal)");
    if (integer_determinant(pairing_) == 0)
        throw std::invalid_argument("pairing must be nondegenerate");
    divisors_ = alternating_normal_form(pairing_).divisors;
}

PolarizedLatticeTorus PolarizedLatticeTorus::canonical() const {
    return PolarizedLatticeTorus(block_normal_form(divisors_));
}

Int PolarizedLatticeTorus::index_in_dual() const {
    Int product(1);
    for (const Int& d : divisors_) product *= d;
    return product * product;
}

PolarizedLatticeTorus principal_polarization(int k) {
    if (k < 1) throw std::invalid_argument("torus dimension must be positive");
    return PolarizedLatticeTorus(block_normal_form(std::vector<Int>(k, Int(1))));
}

PolarizedLatticeTorus dualize(const PolarizedLatticeTorus& torus) {
    // In a normal basis e_i, f_i with E(e_i, f_i) = d_i, the dual lattice is
    // spanned by e_i/d_i, f_i/d_i, where the induced pairing takes the value
    // 1/d_i; clearing each block by d_i^2 restores integrality and returns
    // the same normal form. Duality therefore acts on canonical forms as the
    // identity, and on general pairings as reduction to canonical form.
    return torus.canonical();
}

PolarizedLatticeTorus syz_dual_fiber(const PolarizedLatticeTorus& torus) {
    // Hom(pi_1, U(1)) has character lattice Lambda^*, the same dual as above.
    return dualize(torus);
}

FiberSide flipped(FiberSide side) {
    return side == FiberSide::SL ? FiberSide::PGL : FiberSide::SL;
}

std::string to_string(FiberSide side) { return side == FiberSide::SL ? "SL" : "PGL"; }

FiberSide fiber_side_from_string(const std::string& text) {
    if (text == "SL") return FiberSide::SL;
    if (text == "PGL") return FiberSide::PGL;
    throw std::invalid_argument("fiber side must be \"SL\" or \"PGL\", got \"" + text + "\"");
}

TorsorLabel::TorsorLabel(PolarizedLatticeTorus base_in, std::int64_t degree_in, FiberSide side_in)
    : base(std::move(base_in)),
      degree(degree_in),
      side(side_in),
      has_lagrangian_section(degree_in == 0) {}

TorsorLabel pic_torsor(const TorsorLabel& label, std::int64_t d) {
    return TorsorLabel(dualize(label.base), d, flipped(label.side));
}

std::pair<TorsorLabel, TorsorLabel> mirror_fiber_pair(const CurveSetup& setup,
                                                      const SpectralData& dims) {
    const std::int64_t fiber_dim = prym_dim(dims);
    if (fiber_dim < 1)
        throw std::invalid_argument("mirror fibers need positive dimension, got " +
                                    std::to_string(fiber_dim));
    TorsorLabel sl_fiber(principal_polarization(static_cast<int>(fiber_dim)), setup.sl_degree,
                         FiberSide::SL);
    TorsorLabel pgl_fiber(dualize(sl_fiber.base), setup.mirror_degree, FiberSide::PGL);
    if (sl_fiber.base.torus_dim() != pgl_fiber.base.torus_dim() ||
        sl_fiber.base.divisors() != pgl_fiber.base.divisors())
        throw std::logic_error("mirror fibers must share dimension and polarization type");
    return {std::move(sl_fiber), std::move(pgl_fiber)};
}

PolarizedLatticeTorus random_polarized_lattice(int k, std::mt19937_64& rng) {
    if (k < 1) throw std::invalid_argument("torus dimension must be positive");
    std::vector<Int> divisors(k);
    Int d = 1 + static_cast<std::int64_t>(rng() % 2);
    for (int i = 0; i < k; ++i) {
        divisors[i] = d;
        d *= 1 + static_cast<std::int64_t>(rng() % 3);
    }
    IntMatrix pairing = block_normal_form(divisors);
    const int rank = 2 * k;
    // Random unimodular congruences P^T A P keep the pairing alternating and
    // the divisor chain intact while scrambling the matrix entries.
    const int steps = 4 * k;
    for (int s = 0; s < steps; ++s) {
        const int i = static_cast<int>(rng() % rank);
        int j = static_cast<int>(rng() % rank);
        if (i == j) j = (j + 1) % rank;
        if (rng() % 4 == 0) {
            pairing.swap_cols(i, j);
            pairing.swap_rows(i, j);
        } else {
            const Int f = static_cast<std::int64_t>(rng() % 5) - 2;
            pairing.add_col(j, i, f);
            pairing.add_row(j, i, f);
        }
    }
    return PolarizedLatticeTorus(std::move(pairing));
}

}  // namespace stringy
