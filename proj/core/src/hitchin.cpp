#include "stringy/hitchin.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stringy {

CurveSetup::CurveSetup(int g, int n, int m, std::int64_t c, std::int64_t d,
                       bool generic_weights_in, bool coprime_case_in)
    : genus(g),
      rank(n),
      punctures(m),
      sl_degree(c),
      mirror_degree(d),
      generic_weights(generic_weights_in),
      coprime_case(coprime_case_in) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    if (m < 0) throw std::invalid_argument("puncture count must be nonnegative");
    if (2 * g - 2 + m <= 0)
        throw std::invalid_argument("need 2g - 2 + m > 0 for a nonempty smooth moduli space");
    if (generic_weights && m < 1)
        throw std::invalid_argument("generic weights need at least one puncture");
    if (coprime_case) {
        if (m != 0) throw std::invalid_argument("the coprime case is unpunctured");
        if (std::gcd(static_cast<std::int64_t>(n), c) != 1 ||
            std::gcd(static_cast<std::int64_t>(n), d) != 1)
            throw std::invalid_argument("the coprime case needs gcd(n, c) = gcd(n, d) = 1");
    }
}

SpectralData::SpectralData(int n, int g, int line_degree_in)
    : rank(n), genus(g), line_degree(line_degree_in) {
    if (n < 1) throw std::invalid_argument("spectral rank must be at least 1");
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (line_degree < 2 * g - 2)
        throw std::invalid_argument("line degree must be at least 2g - 2");
}

std::int64_t moduli_dim(const CurveSetup& setup) {
    const std::int64_t n = setup.rank, g = setup.genus, m = setup.punctures;
    return 2 * (n * n - 1) * (g - 1) + n * (n - 1) * m;
}

std::int64_t hitchin_base_dim(const CurveSetup& setup) {
    const std::int64_t n = setup.rank, g = setup.genus, m = setup.punctures;
    return (n * n - 1) * (g - 1) + n * (n - 1) * m / 2;
}

std::int64_t spectral_genus(const SpectralData& data) {
    const std::int64_t n = data.rank, g = data.genus, deg = data.line_degree;
    return 1 + n * (g - 1) + n * (n - 1) * deg / 2;
}

std::int64_t prym_dim(const SpectralData& data) { return spectral_genus(data) - data.genus; }

namespace {

void check_rank2_range(int g, int m) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    if (m < 1) throw std::invalid_argument("need at least one puncture");
}

// Builds a presentation whose nonidentity sectors carry only the
// trivial-character component given by the model.
OrbifoldPresentation generate_from_model(const GammaGroup& group, const SectorModel& model) {
    const GammaCharacter trivial = GammaCharacter::trivial(group);
    std::vector<Sector> sectors;
    for (GammaElement& gamma : enumerate_elements(group)) {
        if (gamma.is_identity()) continue;
        SectorModelData data = model(gamma);
        std::map<GammaCharacter, EPolynomial> isotypic;
        isotypic.emplace(trivial, std::move(data.component));
        sectors.emplace_back(std::move(gamma), data.shift, std::move(isotypic));
    }
    return OrbifoldPresentation(group, std::move(sectors));
}

}  // namespace

EPolynomial closed_form_rank2(int g, int m) {
    check_rank2_range(g, m);
    const Int count = int_pow(Int(2), m - 1) * (int_pow(Int(2), 2 * g) - 1);
    return count * (EPolynomial::xy_power(3 * g - 3 + m) * e_abelian_variety(g - 1));
}

OrbifoldPresentation generate_rank2_presentation(int g, int m) {
    check_rank2_range(g, m);
    const EPolynomial component = int_pow(Int(2), m - 1) * e_abelian_variety(g - 1);
    const int shift = 3 * g - 3 + m;
    return generate_from_model(GammaGroup(2, g), [&](const GammaElement&) {
        return SectorModelData{component, shift};
    });
}

SectorModel default_rank3_sector_model(int g, int m) {
    check_rank2_range(g, m);
    EPolynomial component = int_pow(Int(3), m - 1) * e_abelian_variety(2 * (g - 1));
    const int shift = 8 * (g - 1) + 3 * m;
    return [component = std::move(component), shift](const GammaElement&) {
        return SectorModelData{component, shift};
    };
}

OrbifoldPresentation generate_rank3_presentation(int g, int m) {
    return generate_rank3_presentation(g, m, default_rank3_sector_model(g, m));
}

OrbifoldPresentation generate_rank3_presentation(int g, int m, const SectorModel& model) {
    check_rank2_range(g, m);
    return generate_from_model(GammaGroup(3, g), model);
}

}  // namespace stringy
