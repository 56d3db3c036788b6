#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stringy/intlattice.hpp"
#include "stringy/torus.hpp"

using namespace stringy;

namespace {

IntMatrix blocks(const std::vector<Int>& divisors) {
    const std::size_t rank = 2 * divisors.size();
    IntMatrix m(rank, rank);
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        m(2 * i, 2 * i + 1) = divisors[i];
        m(2 * i + 1, 2 * i) = -divisors[i];
    }
    return m;
}

}  // namespace

TEST_CASE("torus construction validation") {
    CHECK_THROWS_AS(PolarizedLatticeTorus(IntMatrix(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(PolarizedLatticeTorus(IntMatrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(PolarizedLatticeTorus(IntMatrix(2, 4)), std::invalid_argument);

    IntMatrix symmetric(2, 2);
    symmetric(0, 1) = 1;
    symmetric(1, 0) = 1;
    CHECK_THROWS_AS(PolarizedLatticeTorus{symmetric}, std::invalid_argument);

    CHECK_THROWS_AS(PolarizedLatticeTorus(IntMatrix(2, 2)), std::invalid_argument);  // degenerate
}

TEST_CASE("principal polarization is self-dual") {
    for (int k = 1; k <= 4; ++k) {
        const PolarizedLatticeTorus principal = principal_polarization(k);
        CHECK(principal.rank() == 2 * k);
        CHECK(principal.torus_dim() == k);
        CHECK(principal.divisors() == std::vector<Int>(k, Int(1)));
        CHECK(principal.index_in_dual() == 1);
        CHECK(principal.canonical() == principal);
        CHECK(dualize(principal) == principal);
    }
    CHECK_THROWS_AS(principal_polarization(0), std::invalid_argument);
}

TEST_CASE("a scrambled (1,2) pairing keeps its type and index") {
    IntMatrix pairing = blocks({Int(1), Int(2)});
    // one unimodular congruence step, written out by hand
    pairing.add_col(2, 0, Int(1));
    pairing.add_row(2, 0, Int(1));
    REQUIRE(is_alternating(pairing));
    REQUIRE(pairing(1, 2) == -1);  // the scramble did move entries

    const PolarizedLatticeTorus torus(pairing);
    CHECK(torus.divisors() == std::vector<Int>{Int(1), Int(2)});
    CHECK(torus.index_in_dual() == 4);
    CHECK(integer_determinant(pairing) == 4);
    CHECK(torus.canonical().pairing() == blocks({Int(1), Int(2)}));

    const PolarizedLatticeTorus dual = dualize(torus);
    CHECK(dual.divisors() == torus.divisors());
    CHECK(dual == torus.canonical());
    CHECK(syz_dual_fiber(torus) == dual);
}

TEST_CASE("random lattices: duality is an involution preserving the type") {
    std::mt19937_64 rng(40961);
    for (int round = 0; round < 100; ++round) {
        const int k = 1 + round % 4;
        const PolarizedLatticeTorus torus = random_polarized_lattice(k, rng);
        const PolarizedLatticeTorus dual = dualize(torus);

        CHECK(dual.divisors() == torus.divisors());
        CHECK(dualize(dual) == dual);  // canonical forms are fixed points
        CHECK(dualize(dual) == torus.canonical());
        CHECK(syz_dual_fiber(torus) == dual);

        // cross-check the polarization type against the Smith normal form
        std::vector<Int> doubled;
        for (const Int& d : torus.divisors()) {
            doubled.push_back(d);
            doubled.push_back(d);
        }
        CHECK(smith_divisors(torus.pairing()) == doubled);

        Int det = integer_determinant(torus.pairing());
        if (det < 0) det = -det;
        CHECK(torus.index_in_dual() == det);
    }
}

TEST_CASE("random lattices reproduce on a fixed seed") {
    std::mt19937_64 a(7), b(7);
    CHECK(random_polarized_lattice(3, a).pairing() == random_polarized_lattice(3, b).pairing());
}

TEST_CASE("fiber side flips and names") {
    CHECK(flipped(FiberSide::SL) == FiberSide::PGL);
    CHECK(flipped(FiberSide::PGL) == FiberSide::SL);
    CHECK(to_string(FiberSide::SL) == "SL");
    CHECK(to_string(FiberSide::PGL) == "PGL");
    CHECK(fiber_side_from_string("SL") == FiberSide::SL);
    CHECK(fiber_side_from_string("PGL") == FiberSide::PGL);
    CHECK_THROWS_AS(fiber_side_from_string("GL"), std::invalid_argument);
}

TEST_CASE("torsor labels carry a section exactly in degree zero") {
    const PolarizedLatticeTorus base = principal_polarization(2);
    CHECK(TorsorLabel(base, 0, FiberSide::SL).has_lagrangian_section);
    CHECK(!TorsorLabel(base, 3, FiberSide::SL).has_lagrangian_section);
    CHECK(!TorsorLabel(base, -1, FiberSide::PGL).has_lagrangian_section);
}

TEST_CASE("pic functor: dual base, flipped side, degree from the argument alone") {
    std::mt19937_64 rng(5150);
    const PolarizedLatticeTorus base = random_polarized_lattice(2, rng);
    const TorsorLabel low(base, 3, FiberSide::SL);
    const TorsorLabel high(base, 11, FiberSide::SL);

    const TorsorLabel pic_low = pic_torsor(low, 5);
    const TorsorLabel pic_high = pic_torsor(high, 5);
    CHECK(pic_low.degree == 5);
    CHECK(pic_high.degree == 5);
    CHECK(pic_low.base == pic_high.base);
    CHECK(pic_low.base == dualize(base));
    CHECK(pic_low.side == FiberSide::PGL);
    CHECK(!pic_low.has_lagrangian_section);

    const TorsorLabel back = pic_torsor(pic_low, 0);
    CHECK(back.side == FiberSide::SL);
    CHECK(back.degree == 0);
    CHECK(back.has_lagrangian_section);
    CHECK(back.base == base.canonical());
}

TEST_CASE("mirror fiber pair at a hand-checked point") {
    const CurveSetup setup(2, 2, 0, 1, 1, false, true);
    const SpectralData dims(2, 2, 2);
    const auto [sl, pgl] = mirror_fiber_pair(setup, dims);

    CHECK(sl.side == FiberSide::SL);
    CHECK(pgl.side == FiberSide::PGL);
    CHECK(sl.base.torus_dim() == 3);
    CHECK(pgl.base.torus_dim() == 3);
    CHECK(sl.base.divisors() == pgl.base.divisors());
    CHECK(sl.degree == 1);
    CHECK(pgl.degree == 1);
    CHECK(!sl.has_lagrangian_section);

    const CurveSetup plain(2, 2, 0, 0, 0, false, false);
    const auto [sl0, pgl0] = mirror_fiber_pair(plain, dims);
    CHECK(sl0.has_lagrangian_section);
    CHECK(pgl0.has_lagrangian_section);
}

TEST_CASE("mirror fibers require positive dimension") {
    const CurveSetup setup(2, 2, 0, 1, 1, false, true);
    CHECK_THROWS_AS(mirror_fiber_pair(setup, SpectralData(1, 2, 2)), std::invalid_argument);
}
