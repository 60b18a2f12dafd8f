#include "qkostant/ncpoly.hpp"

#include <stdexcept>

namespace qk {

NCPolynomial::NCPolynomial(Word w, LaurentScalar c) {
    if (!c.is_zero()) terms_.emplace(std::move(w), std::move(c));
}

LaurentScalar NCPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentScalar() : it->second;
}

void NCPolynomial::add_term(const Word& w, const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

size_t NCPolynomial::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
    size_t d = 0;
    for (const auto& [w, c] : terms_) {
        (void)c;
        d = std::max(d, w.degree());
    }
    return d;
}

bool NCPolynomial::is_standard() const {
    for (const auto& [w, c] : terms_) {
        (void)c;
        if (!w.is_standard()) return false;
    }
    return true;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

NCPolynomial NCPolynomial::scaled(const LaurentScalar& c) const {
    NCPolynomial out;
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
}

std::map<Word, Rational> NCPolynomial::evaluate_coefficients(const Rational& q0) const {
    std::map<Word, Rational> out;
    for (const auto& [w, c] : terms_) {
        Rational v = c.evaluate_at(q0);
        if (sgn(v) != 0) out.emplace(w, std::move(v));
    }
    return out;
}

int descent_count(const NCPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("descent_count: zero polynomial (max over empty set)");
    int best = 0;
    for (const auto& [w, c] : p.terms()) {
        (void)c;
        best = std::max(best, w.descent_count());
    }
    return best;
}

}  // namespace qk
