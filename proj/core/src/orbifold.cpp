#include "stringy/orbifold.hpp"

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace stringy {

Sector::Sector(GammaElement gamma_in, int shift_in,
               std::map<GammaCharacter, EPolynomial> isotypic_in)
    : gamma(std::move(gamma_in)), shift(shift_in), isotypic(std::move(isotypic_in)) {
    if (shift < 0) throw std::invalid_argument("sector shift must be nonnegative");
    if (gamma.is_identity() && shift != 0)
        throw std::invalid_argument("identity sector must have shift 0");
    for (const auto& [chi, epoly] : isotypic)
        if (chi.coords().size() != gamma.coords().size())
            throw std::invalid_argument("isotypic character rank differs from sector gamma");
}

OrbifoldPresentation::OrbifoldPresentation(GammaGroup group, std::vector<Sector> sectors)
    : group_(group), sectors_(std::move(sectors)) {
    std::set<GammaElement> seen;
    for (std::size_t k = 0; k < sectors_.size(); ++k) {
        const Sector& sector = sectors_[k];
        if (static_cast<int>(sector.gamma.coords().size()) != group_.rank())
            throw std::invalid_argument("sector gamma rank differs from group rank");
        for (auto c : sector.gamma.coords())
            if (c >= group_.modulus)
                throw std::invalid_argument("sector gamma coordinate exceeds group modulus");
        for (const auto& [chi, epoly] : sector.isotypic)
            for (auto c : chi.coords())
                if (c >= group_.modulus)
                    throw std::invalid_argument(
                        "isotypic character coordinate exceeds group modulus");
        if (!seen.insert(sector.gamma).second)
            throw std::invalid_argument("duplicate sector for one group element");
        if (sector.gamma.is_identity() && k != 0)
            throw std::invalid_argument("identity sector must be listed first");
    }
}

namespace {

EPolynomial aggregate(const OrbifoldPresentation& presentation,
                      const std::function<GammaCharacter(const Sector&)>& select) {
    EPolynomial total = EPolynomial::zero();
    for (const Sector& sector : presentation.sectors()) {
        auto it = sector.isotypic.find(select(sector));
        if (it == sector.isotypic.end()) continue;
        total += it->second.times_xy_power(sector.shift);
    }
    return total;
}

}  // namespace

EPolynomial stringy_e(const OrbifoldPresentation& presentation) {
    return aggregate(presentation, [&](const Sector&) {
        return GammaCharacter::trivial(presentation.group());
    });
}

EPolynomial twisted_stringy_e(const OrbifoldPresentation& presentation,
                              const TorsionClass& rho, std::int64_t multiplier) {
    if (rho.group() != presentation.group())
        throw std::invalid_argument("torsion class group differs from presentation group");
    return aggregate(presentation, [&](const Sector& sector) {
        return induced_character(rho, sector.gamma, multiplier);
    });
}

int fermionic_shift(const std::vector<std::int64_t>& age_numerators, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("fermionic shift needs a positive modulus");
    std::int64_t sum = 0;
    for (auto c : age_numerators) {
        if (c < 0 || c >= n)
            throw std::invalid_argument("age numerator " + std::to_string(c) +
                                        " outside [0, " + std::to_string(n) + ")");
        sum += c;
    }
    if (sum % n != 0)
        throw std::domain_error("age numerators sum to " + std::to_string(sum) +
                                ", not a multiple of " + std::to_string(n));
    return static_cast<int>(sum / n);
}

}  // namespace stringy
