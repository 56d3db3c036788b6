#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "stringy/matrix.hpp"
#include "stringy/numeric.hpp"

namespace stringy {

// The finite abelian group Gamma = Z_n^{2g} (the n-torsion of the Jacobian of
// a genus-g curve, acting by tensorization), its characters, and the classes
// in H^2(Gamma, U(1)) represented by alternating forms mod n. U(1) values are
// never stored as floats: every phase lives as a residue mod n, the exponent
// of a fixed primitive n-th root of unity.

struct GammaGroup {
    std::int64_t modulus;  // n >= 2: the exponent of the group
    int genus;             // g >= 1: group rank is 2g

    GammaGroup(std::int64_t n, int g);

    int rank() const { return 2 * genus; }
    Int order() const { return int_pow(Int(modulus), rank()); }

    friend bool operator==(const GammaGroup&, const GammaGroup&) = default;
};

class GammaElement {
public:
    GammaElement(const GammaGroup& group, std::vector<std::int64_t> coords);
    static GammaElement identity(const GammaGroup& group);

    const std::vector<std::int64_t>& coords() const { return coords_; }
    bool is_identity() const;

    friend bool operator==(const GammaElement&, const GammaElement&) = default;
    friend auto operator<=>(const GammaElement&, const GammaElement&) = default;

private:
    std::vector<std::int64_t> coords_;  // reduced to [0, n)
};

// A character sends delta to the root of unity with exponent
// <coords, delta> mod n.
class GammaCharacter {
public:
    GammaCharacter(const GammaGroup& group, std::vector<std::int64_t> coords);
    static GammaCharacter trivial(const GammaGroup& group);

    const std::vector<std::int64_t>& coords() const { return coords_; }
    bool is_trivial() const;

    friend bool operator==(const GammaCharacter&, const GammaCharacter&) = default;
    friend auto operator<=>(const GammaCharacter&, const GammaCharacter&) = default;

private:
    std::vector<std::int64_t> coords_;  // reduced to [0, n)
};

// <chi, delta> mod n: exponent of the character value chi(delta).
std::int64_t character_pairing(const GammaGroup& group, const GammaCharacter& chi,
                               const GammaElement& delta);

// A class in H^2(Gamma, U(1)) =~ Lambda^2 Hom(Gamma, Z_n) in its alternating
// normal representative: a 2g x 2g matrix mod n, skew-symmetric with zero
// diagonal. Class equality is matrix equality.
class TorsionClass {
public:
    TorsionClass(const GammaGroup& group, Matrix<std::int64_t> form);

    const GammaGroup& group() const { return group_; }
    const Matrix<std::int64_t>& form() const { return form_; }

    friend bool operator==(const TorsionClass&, const TorsionClass&) = default;

private:
    GammaGroup group_;
    Matrix<std::int64_t> form_;  // entries reduced to [0, n)
};

// rho = sum of the pullbacks of the standard generator of H^2(Z_n^2, U(1))
// under the g projections onto coordinate pairs (2i-1, 2i): the block
// diagonal form with g blocks [[0,1],[-1,0]] mod n.
TorsionClass standard_rho(const GammaGroup& group);

// Discrete-torsion phase exponent: gamma^T * form * delta mod n. The U(1)
// phase epsilon(gamma, delta) is exp(2*pi*i * exponent / n). Bilinear and
// antisymmetric in (gamma, delta).
std::int64_t epsilon_exponent(const TorsionClass& rho, const GammaElement& gamma,
                              const GammaElement& delta);

// The character delta -> c * (gamma^T * form * delta) mod n that rho induces
// on the centralizer of gamma (all of Gamma here); c realizes the multiplied
// class c*rho and may be any signed integer.
GammaCharacter induced_character(const TorsionClass& rho, const GammaElement& gamma,
                                 std::int64_t multiplier);

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

// All n^{2g} elements exactly once, in lexicographic coordinate order
// (identity first). Refuses with the required count if it exceeds the bound.
std::vector<GammaElement> enumerate_elements(const GammaGroup& group,
                                             std::uint64_t bound = kDefaultEnumerationBound);
std::vector<GammaCharacter> enumerate_characters(const GammaGroup& group,
                                                 std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace stringy
