#pragma once

#include <cstdint>
#include <functional>

#include "stringy/epoly.hpp"
#include "stringy/orbifold.hpp"

namespace stringy {

// Inputs for the Dolbeault moduli space M^d_Dol of rank-n semistable (or
// parabolic) Higgs bundles on a genus-g curve with m punctures, traceless
// side of degree c and mirror side of degree d.
struct CurveSetup {
    int genus;                   // g
    int rank;                    // n >= 2
    int punctures;               // m >= 0
    std::int64_t sl_degree;      // c
    std::int64_t mirror_degree;  // d
    bool generic_weights;
    bool coprime_case;

    // Validates: 2g - 2 + m > 0 with g >= 1; generic_weights needs m >= 1;
    // coprime_case needs m = 0 and gcd(n, c) = gcd(n, d) = 1.
    CurveSetup(int g, int n, int m, std::int64_t c, std::int64_t d, bool generic_weights,
               bool coprime_case);
};

// Inputs for the spectral cover: characteristic coefficients live in
// H^0(K^i((i-1)D)), so the twisting line bundle has degree 2g-2 untwisted
// and 2g-2+m in the parabolic case.
struct SpectralData {
    int rank;         // n >= 1 (n = 1 is the identity cover)
    int genus;        // g >= 0
    int line_degree;  // >= 2g - 2

    SpectralData(int n, int g, int line_degree);
};

// dim_C M^d_Dol = 2(n^2-1)(g-1) + n(n-1)m (full-flag parabolic, traceless).
std::int64_t moduli_dim(const CurveSetup& setup);

// dim of the Hitchin base V = sum_{i=2}^n dim H^0(K^i((i-1)D))
//                           = (n^2-1)(g-1) + n(n-1)m/2 = moduli_dim/2.
std::int64_t hitchin_base_dim(const CurveSetup& setup);

// Genus of the smooth spectral curve, by adjunction:
// 1 + n(g-1) + n(n-1)*line_degree/2.
std::int64_t spectral_genus(const SpectralData& data);

// Dimension of the generalized Prym torus in the Hitchin fiber:
// spectral_genus - g.
std::int64_t prym_dim(const SpectralData& data);

// The rank-2 mirror difference E_st(M^d_Dol) - E(quotient), expanded:
// 2^{m-1} (2^{2g}-1) (xy)^{3g-3+m} (1+x)^{g-1} (1+y)^{g-1}.
// Requires g >= 1, m >= 1.
EPolynomial closed_form_rank2(int g, int m);

// The rank-2 sector data behind the closed form: group Z_2^{2g}, identity
// sector omitted (its polynomial is the quotient's own E-polynomial, outside
// scope), and each of the 2^{2g}-1 nonidentity gamma carries the uniform
// trivial-character component 2^{m-1}(1+x)^{g-1}(1+y)^{g-1} with shift
// 3g-3+m. stringy_e of the result equals closed_form_rank2(g, m).
OrbifoldPresentation generate_rank2_presentation(int g, int m);

// Per-sector data a rank-3 model assigns to a nonidentity group element.
struct SectorModelData {
    EPolynomial component;  // trivial-character isotypic piece
    int shift;
};

using SectorModel = std::function<SectorModelData(const GammaElement&)>;

// Default rank-3 model, mirroring the rank-2 pattern: uniform component
// 3^{m-1} (1+x)^{2(g-1)} (1+y)^{2(g-1)} (the Prym of an unramified 3-cyclic
// cover has dimension 2(g-1)) and uniform shift 8(g-1)+3m (the half
// dimension of the rank-3 moduli space). There is no published closed form
// to pin this down; callers may substitute their own model.
SectorModel default_rank3_sector_model(int g, int m);

// Group Z_3^{2g}; 3^{2g}-1 nonidentity sectors populated from the model.
OrbifoldPresentation generate_rank3_presentation(int g, int m);
OrbifoldPresentation generate_rank3_presentation(int g, int m, const SectorModel& model);

}  // namespace stringy
