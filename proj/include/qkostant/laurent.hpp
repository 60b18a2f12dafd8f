#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace qk {

using Rational = mpq_class;

/// Element of Q[q, q^-1]: a finite map from q-exponent to nonzero rational
/// coefficient. The zero element has an empty term map.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(long value);
    explicit LaurentScalar(Rational value);

    /// c * q^exponent
    static LaurentScalar q_power(int exponent, Rational coeff = Rational(1));
    /// (-q)^exponent, the sign bookkeeping used for permutation lengths
    static LaurentScalar neg_q_power(int exponent);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// true iff the element is c * q^k for a single term
    bool is_monomial() const { return terms_.size() == 1; }
    /// true iff the element is a rational constant (possibly zero)
    bool is_constant() const;

    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coefficient(int exponent) const;
    int min_exponent() const;  // pre: nonzero
    int max_exponent() const;  // pre: nonzero

    LaurentScalar& operator+=(const LaurentScalar& rhs);
    LaurentScalar& operator-=(const LaurentScalar& rhs);
    LaurentScalar& operator*=(const LaurentScalar& rhs);
    LaurentScalar operator-() const;

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);

    bool operator==(const LaurentScalar& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentScalar& rhs) const { return !(*this == rhs); }
    /// deterministic total order (for use as map key)
    bool operator<(const LaurentScalar& rhs) const;

    /// Substitute q := q0 exactly. Throws std::invalid_argument when q0 = 0.
    Rational evaluate_at(const Rational& q0) const;

    /// Positive rational c such that (*this)/c has coprime integer coefficients.
    /// pre: nonzero.
    Rational content() const;

    void scale(const Rational& c);
    /// multiply by q^k
    void shift(int k);

    /// Canonical textual form: terms in ascending q-exponent, e.g.
    /// "-1*q^-1 + 1*q^1"; "0" for zero. Bit-exact round trip with from_string.
    std::string to_string() const;
    static LaurentScalar from_string(std::string_view text);

private:
    void set_term(int exponent, Rational coeff);

    std::map<int, Rational> terms_;
};

/// Exact division in Q[q,q^-1]. Returns false when divisor does not divide
/// dividend (quotient untouched); divisor must be nonzero.
bool try_divide(const LaurentScalar& dividend, const LaurentScalar& divisor,
                LaurentScalar& quotient);

/// Monic gcd in Q[q] of the associated polynomials (q-power units stripped).
/// gcd(0,0) = 0.
LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b);

}  // namespace qk
