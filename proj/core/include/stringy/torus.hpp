#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stringy/hitchin.hpp"
#include "stringy/intlattice.hpp"

namespace stringy {

// A polarized lattice torus: the torus Lambda (x) R / Lambda together with an
// alternating nondegenerate integer pairing on the lattice Lambda. This is
// the desk-scale model of a polarized abelian variety — a Hitchin fiber —
// where duality, polarization type and torsor bookkeeping are all decidable.
class PolarizedLatticeTorus {
public:
    explicit PolarizedLatticeTorus(IntMatrix pairing);

    int rank() const { return static_cast<int>(pairing_.rows()); }  // 2k
    int torus_dim() const { return rank() / 2; }                    // k
    const IntMatrix& pairing() const { return pairing_; }

    // Polarization type d_1 | d_2 | ... | d_k (each divisor repeated twice in
    // the alternating normal form of the pairing).
    const std::vector<Int>& divisors() const { return divisors_; }

    // The same torus with the pairing in its alternating normal form: block
    // diagonal blocks [[0, d_i], [-d_i, 0]]. Canonical-form equality is the
    // isomorphism test used throughout.
    PolarizedLatticeTorus canonical() const;

    // Index of Lambda inside the dual lattice Lambda^* = {v : E(v, Lambda) in Z}:
    // the square of the product of the divisors, also |det(pairing)|.
    Int index_in_dual() const;

    friend bool operator==(const PolarizedLatticeTorus&, const PolarizedLatticeTorus&) = default;

private:
    IntMatrix pairing_;
    std::vector<Int> divisors_;
};

// The principally polarized torus of dimension k (standard symplectic pairing).
PolarizedLatticeTorus principal_polarization(int k);

// The dual torus Hom(Lambda, U(1)) = Lambda^* (x) R / Lambda^*, carrying the
// pairing induced from E on the dual lattice and cleared back to integrality
// block-by-block with the elementary divisors. In the normal basis the block
// [[0, d]] dualizes to [[0, 1/d]] and clears to [[0, d]] again, so the result
// is the canonical form of the input and the polarization type is preserved.
PolarizedLatticeTorus dualize(const PolarizedLatticeTorus& torus);

// The dual fiber in the torus-fibration sense: the character torus of
// pi_1(T) = Lambda. As a polarized lattice this coincides with dualize; the
// double application lands on the canonical form, which carries the
// distinguished basepoint.
PolarizedLatticeTorus syz_dual_fiber(const PolarizedLatticeTorus& torus);

enum class FiberSide { SL, PGL };

FiberSide flipped(FiberSide side);
std::string to_string(FiberSide side);
FiberSide fiber_side_from_string(const std::string& text);

// A torsor over a polarized torus: the label (base, degree, side) of a fiber
// mu_d^{-1}(v). Degree 0 torsors carry the distinguished section flag.
struct TorsorLabel {
    PolarizedLatticeTorus base;
    std::int64_t degree;
    FiberSide side;
    bool has_lagrangian_section;  // exactly when degree == 0

    TorsorLabel(PolarizedLatticeTorus base, std::int64_t degree, FiberSide side);
};

// Pic^d of the labelled torsor: base dualized, degree replaced by d, side
// flipped. The input label's own degree is discarded — Pic^d of a torsor over
// an abelian variety depends on d alone.
TorsorLabel pic_torsor(const TorsorLabel& label, std::int64_t d);

// A model mirror pair of Hitchin fibers: an SL-side torsor of dimension
// prym_dim(dims) with the default principal polarization and degree c, and
// its PGL-side dual with degree d.
std::pair<TorsorLabel, TorsorLabel> mirror_fiber_pair(const CurveSetup& setup,
                                                      const SpectralData& dims);

// A random polarized lattice of dimension k: a random divisor chain
// d_1 | ... | d_k in normal form, scrambled by random unimodular congruences.
// Deterministic given the generator state.
PolarizedLatticeTorus random_polarized_lattice(int k, std::mt19937_64& rng);

}  // namespace stringy
