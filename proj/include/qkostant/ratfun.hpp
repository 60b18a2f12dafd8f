#pragma once

#include "qkostant/laurent.hpp"

namespace qk {

/// Element of Q(q) as a pair numerator/denominator of Laurent polynomials.
/// Representatives are kept content-normalized: both parts divided by their
/// common rational content and by a q-power so the denominator has lowest
/// exponent 0 and positive lowest coefficient. Equality is cross-multiplicative.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentScalar(1)) {}
    RationalFunction(LaurentScalar numerator, LaurentScalar denominator);
    explicit RationalFunction(LaurentScalar numerator)
        : RationalFunction(std::move(numerator), LaurentScalar(1)) {}

    const LaurentScalar& numerator() const { return num_; }
    const LaurentScalar& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;  // throws on zero rhs
    RationalFunction operator-() const;

    /// a/b = c/d iff a*d = c*b
    bool operator==(const RationalFunction& rhs) const;
    bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

    /// Optional pass: divide out the polynomial gcd of numerator and
    /// denominator, then re-apply content normalization.
    RationalFunction reduced() const;

private:
    void normalize();

    LaurentScalar num_;
    LaurentScalar den_;
};

}  // namespace qk
