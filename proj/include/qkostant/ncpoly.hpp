#pragma once

#include <map>

#include "qkostant/laurent.hpp"
#include "qkostant/word.hpp"

namespace qk {

/// Finite formal sum of words with nonzero LaurentScalar coefficients.
/// Term map is ordered by word lex, so iteration is deterministic.
class NCPolynomial {
public:
    NCPolynomial() = default;
    explicit NCPolynomial(Word w, LaurentScalar c = LaurentScalar(1));
    static NCPolynomial unit() { return NCPolynomial(Word{}); }
    static NCPolynomial scalar(LaurentScalar c) { return NCPolynomial(Word{}, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, LaurentScalar>& terms() const { return terms_; }

    /// coefficient of w (zero if absent)
    LaurentScalar coefficient(const Word& w) const;
    void add_term(const Word& w, const LaurentScalar& c);

    /// max word length with nonzero coefficient; pre: nonzero
    size_t degree() const;
    /// every stored word is non-decreasing
    bool is_standard() const;

    NCPolynomial& operator+=(const NCPolynomial& rhs);
    NCPolynomial& operator-=(const NCPolynomial& rhs);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    NCPolynomial operator-() const;

    /// product in the free algebra: concatenation of words, no relations
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
    NCPolynomial scaled(const LaurentScalar& c) const;

    bool operator==(const NCPolynomial& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const NCPolynomial& rhs) const { return !(*this == rhs); }
    bool operator<(const NCPolynomial& rhs) const { return terms_ < rhs.terms_; }

    /// substitute q := q0 in every coefficient (terms may cancel)
    std::map<Word, Rational> evaluate_coefficients(const Rational& q0) const;

private:
    std::map<Word, LaurentScalar> terms_;
};

/// max over words of the inversion count; throws on the zero polynomial
int descent_count(const NCPolynomial& p);

}  // namespace qk
