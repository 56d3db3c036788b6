#include "stringy/gamma.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace stringy {

namespace {

std::vector<std::int64_t> reduce_coords(const GammaGroup& group,
                                        std::vector<std::int64_t> coords) {
    if (static_cast<int>(coords.size()) != group.rank())
        throw std::invalid_argument("coordinate vector has length " +
                                    std::to_string(coords.size()) + ", expected " +
                                    std::to_string(group.rank()));
    for (auto& c : coords) c = mod_reduce(c, group.modulus);
    return coords;
}

}  // namespace

GammaGroup::GammaGroup(std::int64_t n, int g) : modulus(n), genus(g) {
    if (n < 2) throw std::invalid_argument("group modulus must be at least 2");
    if (n > std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("group modulus too large");
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
}

GammaElement::GammaElement(const GammaGroup& group, std::vector<std::int64_t> coords)
    : coords_(reduce_coords(group, std::move(coords))) {}

GammaElement GammaElement::identity(const GammaGroup& group) {
    return GammaElement(group, std::vector<std::int64_t>(group.rank(), 0));
}

bool GammaElement::is_identity() const {
    for (auto c : coords_)
        if (c != 0) return false;
    return true;
}

GammaCharacter::GammaCharacter(const GammaGroup& group, std::vector<std::int64_t> coords)
    : coords_(reduce_coords(group, std::move(coords))) {}

GammaCharacter GammaCharacter::trivial(const GammaGroup& group) {
    return GammaCharacter(group, std::vector<std::int64_t>(group.rank(), 0));
}

bool GammaCharacter::is_trivial() const {
    for (auto c : coords_)
        if (c != 0) return false;
    return true;
}

std::int64_t character_pairing(const GammaGroup& group, const GammaCharacter& chi,
                               const GammaElement& delta) {
    if (static_cast<int>(chi.coords().size()) != group.rank() ||
        static_cast<int>(delta.coords().size()) != group.rank())
        throw std::invalid_argument("character pairing: rank mismatch");
    std::int64_t acc = 0;
    for (int i = 0; i < group.rank(); ++i)
        acc = mod_reduce(acc + chi.coords()[i] * delta.coords()[i], group.modulus);
    return acc;
}

TorsionClass::TorsionClass(const GammaGroup& group, Matrix<std::int64_t> form)
    : group_(group), form_(std::move(form)) {
    const int rank = group.rank();
    if (static_cast<int>(form_.rows()) != rank || static_cast<int>(form_.cols()) != rank)
        throw std::invalid_argument("torsion class form must be " + std::to_string(rank) +
                                    "x" + std::to_string(rank));
    const auto n = group.modulus;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) form_(i, j) = mod_reduce(form_(i, j), n);
    for (int i = 0; i < rank; ++i) {
        if (form_(i, i) != 0)
            throw std::invalid_argument("torsion class form must have zero diagonal");
        for (int j = i + 1; j < rank; ++j)
            if (mod_reduce(form_(i, j) + form_(j, i), n) != 0)
                throw std::invalid_argument("torsion class form must be alternating mod n");
    }
}

TorsionClass standard_rho(const GammaGroup& group) {
    Matrix<std::int64_t> form(group.rank(), group.rank(), 0);
    for (int b = 0; b < group.genus; ++b) {
        form(2 * b, 2 * b + 1) = 1;
        form(2 * b + 1, 2 * b) = group.modulus - 1;
    }
    return TorsionClass(group, std::move(form));
}

std::int64_t epsilon_exponent(const TorsionClass& rho, const GammaElement& gamma,
                              const GammaElement& delta) {
    const auto& group = rho.group();
    if (static_cast<int>(gamma.coords().size()) != group.rank() ||
        static_cast<int>(delta.coords().size()) != group.rank())
        throw std::invalid_argument("epsilon exponent: rank mismatch");
    // Entries and coordinates sit in [0, n) with n < 2^31, so each product
    // fits in int64 as long as we reduce after every addition.
    const auto n = group.modulus;
    std::int64_t acc = 0;
    for (int i = 0; i < group.rank(); ++i) {
        std::int64_t row = 0;
        for (int j = 0; j < group.rank(); ++j)
            row = mod_reduce(row + rho.form()(i, j) * delta.coords()[j], n);
        acc = mod_reduce(acc + gamma.coords()[i] * row, n);
    }
    return acc;
}

GammaCharacter induced_character(const TorsionClass& rho, const GammaElement& gamma,
                                 std::int64_t multiplier) {
    const auto& group = rho.group();
    if (static_cast<int>(gamma.coords().size()) != group.rank())
        throw std::invalid_argument("induced character: rank mismatch");
    const auto n = group.modulus;
    const auto c = mod_reduce(multiplier, n);
    std::vector<std::int64_t> coords(group.rank(), 0);
    for (int j = 0; j < group.rank(); ++j) {
        std::int64_t col = 0;
        for (int i = 0; i < group.rank(); ++i)
            col = mod_reduce(col + gamma.coords()[i] * rho.form()(i, j), n);
        coords[j] = mod_reduce(c * col, n);
    }
    return GammaCharacter(group, std::move(coords));
}

namespace {

// Counts up through Z_n^{2g} like an odometer with the last coordinate
// fastest, which is exactly lexicographic order on coordinate vectors.
template <typename Make>
auto enumerate_impl(const GammaGroup& group, std::uint64_t bound, Make make) {
    const Int total = group.order();
    if (total > Int(bound))
        throw std::length_error("enumeration of " + total.str() +
                                " group elements exceeds bound " + std::to_string(bound));
    std::vector<decltype(make(std::vector<std::int64_t>{}))> out;
    out.reserve(static_cast<std::size_t>(total.convert_to<std::uint64_t>()));
    std::vector<std::int64_t> coords(group.rank(), 0);
    while (true) {
        out.push_back(make(coords));
        int pos = group.rank() - 1;
        while (pos >= 0) {
            if (++coords[pos] < group.modulus) break;
            coords[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

}  // namespace

std::vector<GammaElement> enumerate_elements(const GammaGroup& group, std::uint64_t bound) {
    return enumerate_impl(group, bound, [&](std::vector<std::int64_t> c) {
        return GammaElement(group, std::move(c));
    });
}

std::vector<GammaCharacter> enumerate_characters(const GammaGroup& group, std::uint64_t bound) {
    return enumerate_impl(group, bound, [&](std::vector<std::int64_t> c) {
        return GammaCharacter(group, std::move(c));
    });
}

}  // namespace stringy
