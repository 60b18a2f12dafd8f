#include "qkostant/ratfun.hpp"

#include <stdexcept>

namespace qk {

RationalFunction::RationalFunction(LaurentScalar numerator, LaurentScalar denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentScalar(1);
        return;
    }
    const int shift = -den_.min_exponent();
    num_.shift(shift);
    den_.shift(shift);
    Rational c = num_.content();
    mpz_class num_gcd = gcd(c.get_num(), den_.content().get_num());
    mpz_class den_lcm = lcm(c.get_den(), den_.content().get_den());
    Rational joint(num_gcd, den_lcm);
    joint.canonicalize();
    if (sgn(den_.terms().begin()->second) < 0) joint = -joint;
    num_.scale(1 / joint);
    den_.scale(1 / joint);
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    if (rhs.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

bool RationalFunction::operator==(const RationalFunction& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

RationalFunction RationalFunction::reduced() const {
    if (num_.is_zero()) return *this;
    LaurentScalar g = laurent_gcd(num_, den_);
    if (g.is_zero() || g.is_one()) return *this;
    LaurentScalar qn, qd;
    if (!try_divide(num_, g, qn) || !try_divide(den_, g, qd))
        throw std::logic_error("RationalFunction::reduced: gcd does not divide");
    return RationalFunction(std::move(qn), std::move(qd));
}

}  // namespace qk
