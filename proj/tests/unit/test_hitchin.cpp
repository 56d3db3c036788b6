#include <cstddef>
#include <stdexcept>

#include "doctest.h"
#include "stringy/epoly.hpp"
#include "stringy/gamma.hpp"
#include "stringy/hitchin.hpp"
#include "stringy/orbifold.hpp"

using namespace stringy;

TEST_CASE("moduli and base dimensions at hand-checked points") {
    CHECK(moduli_dim(CurveSetup(2, 2, 0, 1, 1, false, false)) == 6);
    CHECK(moduli_dim(CurveSetup(3, 2, 0, 1, 1, false, false)) == 12);
    CHECK(moduli_dim(CurveSetup(2, 3, 0, 1, 1, false, false)) == 16);
    CHECK(moduli_dim(CurveSetup(1, 2, 1, 0, 0, true, false)) == 2);
    CHECK(moduli_dim(CurveSetup(2, 2, 3, 0, 0, true, false)) == 12);

    CHECK(hitchin_base_dim(CurveSetup(2, 2, 0, 1, 1, false, false)) == 3);
    CHECK(hitchin_base_dim(CurveSetup(3, 2, 0, 1, 1, false, false)) == 6);
    CHECK(hitchin_base_dim(CurveSetup(2, 3, 0, 1, 1, false, false)) == 8);
    CHECK(hitchin_base_dim(CurveSetup(1, 2, 1, 0, 0, true, false)) == 1);
    CHECK(hitchin_base_dim(CurveSetup(2, 2, 3, 0, 0, true, false)) == 6);
}

TEST_CASE("spectral genus and Prym dimension at hand-checked points") {
    CHECK(spectral_genus(SpectralData(2, 2, 2)) == 5);
    CHECK(prym_dim(SpectralData(2, 2, 2)) == 3);
    CHECK(spectral_genus(SpectralData(3, 2, 2)) == 10);
    CHECK(prym_dim(SpectralData(3, 2, 2)) == 8);
    CHECK(spectral_genus(SpectralData(2, 3, 4)) == 9);
    CHECK(prym_dim(SpectralData(2, 3, 4)) == 6);

    // the identity cover: spectral curve is the curve itself, Prym is a point
    CHECK(spectral_genus(SpectralData(1, 5, 8)) == 5);
    CHECK(prym_dim(SpectralData(1, 5, 8)) == 0);
}

TEST_CASE("base, half-moduli, and Prym dimensions agree across the grid") {
    for (int n = 2; n <= 5; ++n)
        for (int g = 2; g <= 10; ++g)
            for (int m = 0; m <= 5; ++m) {
                const CurveSetup setup(g, n, m, 1, 1, m >= 1, false);
                const SpectralData spectral(n, g, 2 * g - 2 + m);
                CHECK(moduli_dim(setup) == 2 * hitchin_base_dim(setup));
                CHECK(hitchin_base_dim(setup) == prym_dim(spectral));
            }
}

TEST_CASE("curve setup validation") {
    CHECK_THROWS_AS(CurveSetup(0, 2, 1, 0, 0, false, false), std::invalid_argument);
    CHECK_THROWS_AS(CurveSetup(2, 1, 0, 1, 1, false, false), std::invalid_argument);
    CHECK_THROWS_AS(CurveSetup(2, 2, -1, 0, 0, false, false), std::invalid_argument);
    CHECK_THROWS_AS(CurveSetup(1, 2, 0, 1, 1, false, false), std::invalid_argument);
    CHECK_THROWS_AS(CurveSetup(2, 2, 0, 1, 1, true, false), std::invalid_argument);
    CHECK_THROWS_AS(CurveSetup(2, 2, 1, 1, 1, false, true), std::invalid_argument);
    CHECK_THROWS_AS(CurveSetup(2, 2, 0, 2, 1, false, true), std::invalid_argument);
    CHECK_THROWS_AS(CurveSetup(2, 2, 0, 1, 2, false, true), std::invalid_argument);
    CHECK_NOTHROW(CurveSetup(2, 2, 0, 1, 1, false, true));
    CHECK_NOTHROW(CurveSetup(1, 2, 1, 0, 0, true, false));
}

TEST_CASE("spectral data validation") {
    CHECK_THROWS_AS(SpectralData(0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(SpectralData(2, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(SpectralData(2, 3, 3), std::invalid_argument);
    CHECK_NOTHROW(SpectralData(2, 3, 4));
    CHECK_NOTHROW(SpectralData(2, 0, -2));
}

TEST_CASE("rank-2 mirror difference in closed form") {
    CHECK(closed_form_rank2(1, 1).to_string() == "3*x*y");
    CHECK(closed_form_rank2(2, 1).to_string() ==
          "15*x^4*y^4 + 15*x^4*y^5 + 15*x^5*y^4 + 15*x^5*y^5");
    CHECK(closed_form_rank2(2, 2).to_string() ==
          "30*x^5*y^5 + 30*x^5*y^6 + 30*x^6*y^5 + 30*x^6*y^6");
    CHECK(closed_form_rank2(3, 1).evaluate(Rat(1), Rat(1)) == Rat(1008));

    CHECK_THROWS_AS(closed_form_rank2(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_rank2(2, 0), std::invalid_argument);
}

TEST_CASE("rank-2 sector sum matches the closed form") {
    for (int g = 1; g <= 5; ++g)
        for (int m = 1; m <= 4; ++m) {
            const OrbifoldPresentation presentation = generate_rank2_presentation(g, m);
            CHECK(stringy_e(presentation) == closed_form_rank2(g, m));
        }
}

TEST_CASE("generated sector lists skip the identity and cover everything else") {
    CHECK(generate_rank2_presentation(2, 1).sectors().size() == 15);
    CHECK(generate_rank2_presentation(3, 2).sectors().size() == 63);
    CHECK(generate_rank3_presentation(1, 1).sectors().size() == 8);
    CHECK(generate_rank3_presentation(2, 1).sectors().size() == 80);
    const OrbifoldPresentation presentation = generate_rank2_presentation(2, 1);
    for (const Sector& sector : presentation.sectors())
        CHECK(!sector.gamma.is_identity());
}

TEST_CASE("rank-2 aggregates vanish under a unit twist") {
    // only trivial-character components are populated, and the standard class
    // pairs every nonidentity element with a nontrivial induced character
    for (int g = 1; g <= 3; ++g) {
        const OrbifoldPresentation presentation = generate_rank2_presentation(g, 1);
        const TorsionClass rho = standard_rho(presentation.group());
        CHECK(twisted_stringy_e(presentation, rho, 1).is_zero());
    }
    const OrbifoldPresentation cubic = generate_rank3_presentation(2, 1);
    const TorsionClass rho3 = standard_rho(cubic.group());
    CHECK(twisted_stringy_e(cubic, rho3, 1).is_zero());
    CHECK(twisted_stringy_e(cubic, rho3, 2).is_zero());
}

TEST_CASE("rank-3 default model produces a structured aggregate") {
    const OrbifoldPresentation presentation = generate_rank3_presentation(2, 1);
    const EPolynomial total = stringy_e(presentation);
    CHECK(total.symmetric_in_xy());
    CHECK(total.divisible_by_xy_power(11));  // uniform shift 8(g-1)+3m at g=2, m=1
    CHECK(total == Int(80) * (EPolynomial::xy_power(11) * e_abelian_variety(2)));
}

TEST_CASE("rank-3 generation honors a substituted sector model") {
    // weight each sector by its support size: 4 elements of Z_3^2 touch one
    // coordinate, 4 touch both
    const SectorModel by_support = [](const GammaElement& gamma) {
        int live = 0;
        for (auto c : gamma.coords())
            if (c != 0) ++live;
        return SectorModelData{EPolynomial::one(), live};
    };
    const OrbifoldPresentation presentation = generate_rank3_presentation(1, 1, by_support);
    CHECK(stringy_e(presentation).to_string() == "4*x*y + 4*x^2*y^2");
}
