#include "stringy/epoly.hpp"

#include <sstream>
#include <stdexcept>

namespace stringy {

EPolynomial EPolynomial::constant(Int c) {
    EPolynomial p;
    if (c != 0) p.terms_.emplace(Key{0, 0}, std::move(c));
    return p;
}

EPolynomial EPolynomial::term(int p, int q, Int c) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("EPolynomial: negative exponents are not allowed");
    EPolynomial r;
    if (c != 0) r.terms_.emplace(Key{p, q}, std::move(c));
    return r;
}

Int EPolynomial::coefficient(int p, int q) const {
    auto it = terms_.find(Key{p, q});
    return it == terms_.end() ? Int(0) : it->second;
}

EPolynomial& EPolynomial::operator+=(const EPolynomial& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

EPolynomial& EPolynomial::operator-=(const EPolynomial& rhs) {
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, Int(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

EPolynomial EPolynomial::operator-() const {
    EPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, Int(-c));
    return r;
}

EPolynomial EPolynomial::times_xy_power(int k) const {
    if (k < 0) throw std::invalid_argument("times_xy_power: negative shift");
    EPolynomial r;
    for (const auto& [key, c] : terms_)
        r.terms_.emplace(Key{key.first + k, key.second + k}, c);
    return r;
}

Rat EPolynomial::evaluate(const Rat& x, const Rat& y) const {
    Rat acc = 0;
    for (const auto& [key, c] : terms_)
        acc += Rat(c) * rat_pow(x, key.first) * rat_pow(y, key.second);
    return acc;
}

bool EPolynomial::symmetric_in_xy() const {
    for (const auto& [key, c] : terms_)
        if (coefficient(key.second, key.first) != c) return false;
    return true;
}

bool EPolynomial::divisible_by_xy_power(int k) const {
    for (const auto& [key, c] : terms_)
        if (key.first < k || key.second < k) return false;
    return true;
}

std::string EPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string mono;
        if (key.first == 1) mono += "x";
        else if (key.first > 1) mono += "x^" + std::to_string(key.first);
        if (key.second >= 1) {
            if (!mono.empty()) mono += "*";
            mono += key.second == 1 ? "y" : "y^" + std::to_string(key.second);
        }
        if (mono.empty()) {
            out << c;
        } else if (c == 1) {
            out << mono;
        } else {
            out << c << "*" << mono;
        }
    }
    return out.str();
}

EPolynomial operator+(EPolynomial a, const EPolynomial& b) {
    a += b;
    return a;
}

EPolynomial operator-(EPolynomial a, const EPolynomial& b) {
    a -= b;
    return a;
}

EPolynomial operator*(const EPolynomial& a, const EPolynomial& b) {
    EPolynomial r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r += EPolynomial::term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

EPolynomial operator*(const Int& s, const EPolynomial& a) {
    if (s == 0) return {};
    EPolynomial r;
    for (const auto& [k, c] : a.terms()) r += EPolynomial::term(k.first, k.second, s * c);
    return r;
}

EPolynomial e_abelian_variety(int dim) {
    if (dim < 0) throw std::invalid_argument("e_abelian_variety: negative dimension");
    EPolynomial onex = EPolynomial::one() + EPolynomial::term(1, 0, 1);
    EPolynomial oney = EPolynomial::one() + EPolynomial::term(0, 1, 1);
    EPolynomial r = EPolynomial::one();
    for (int i = 0; i < dim; ++i) r = r * onex;
    for (int i = 0; i < dim; ++i) r = r * oney;
    return r;
}

}  // namespace stringy
