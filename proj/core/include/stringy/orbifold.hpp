#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stringy/epoly.hpp"
#include "stringy/gamma.hpp"

namespace stringy {

// One twisted sector of an orbifold quotient X/Gamma for abelian Gamma: the
// group element gamma, the fermionic shift F(gamma), and the cohomology of
// the fixed locus X^gamma broken into character-isotypic pieces under the
// Gamma-action. The trivial-character piece is E(X^gamma / Gamma); discrete
// torsion selects the other pieces, so one record serves both aggregators.
struct Sector {
    GammaElement gamma;
    int shift;  // F(gamma) >= 0, and 0 when gamma is the identity
    std::map<GammaCharacter, EPolynomial> isotypic;

    Sector(GammaElement gamma, int shift, std::map<GammaCharacter, EPolynomial> isotypic);
};

// The data of a quotient presentation: the group and a list of sectors with
// pairwise distinct gamma. Sectors left out contribute zero. The identity
// sector, when present, comes first.
class OrbifoldPresentation {
public:
    OrbifoldPresentation(GammaGroup group, std::vector<Sector> sectors);

    const GammaGroup& group() const { return group_; }
    const std::vector<Sector>& sectors() const { return sectors_; }

private:
    GammaGroup group_;
    std::vector<Sector> sectors_;
};

// E_st(X/Gamma) = sum over sectors of E(X^gamma/Gamma) * (xy)^{F(gamma)},
// where E(X^gamma/Gamma) is the trivial-character isotypic component.
EPolynomial stringy_e(const OrbifoldPresentation& presentation);

// The variant twisted by the torsion class c*rho: each sector contributes its
// isotypic component at induced_character(rho, gamma, c) instead of the
// trivial one. Missing components contribute zero; c = 0 recovers stringy_e.
EPolynomial twisted_stringy_e(const OrbifoldPresentation& presentation,
                              const TorsionClass& rho, std::int64_t multiplier);

// F(gamma) = (sum of c_i)/n for normal-space eigenvalues exp(2*pi*i*c_i/n),
// each c_i in [0, n). Throws when the sum is not divisible by n, which
// signals eigenvalue data inconsistent with an integer shift.
int fermionic_shift(const std::vector<std::int64_t>& age_numerators, std::int64_t n);

}  // namespace stringy
