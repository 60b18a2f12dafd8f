#include "qkostant/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qk {

LaurentScalar::LaurentScalar(long value) {
    if (value != 0) terms_[0] = Rational(value);
}

LaurentScalar::LaurentScalar(Rational value) {
    if (sgn(value) != 0) terms_[0] = std::move(value);
}

LaurentScalar LaurentScalar::q_power(int exponent, Rational coeff) {
    LaurentScalar out;
    if (sgn(coeff) != 0) out.terms_[exponent] = std::move(coeff);
    return out;
}

LaurentScalar LaurentScalar::neg_q_power(int exponent) {
    return q_power(exponent, Rational(exponent % 2 == 0 ? 1 : -1));
}

bool LaurentScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentScalar::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentScalar::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero");
    return terms_.begin()->first;
}

int LaurentScalar::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero");
    return terms_.rbegin()->first;
}

void LaurentScalar::set_term(int exponent, Rational coeff) {
    if (sgn(coeff) == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(coeff);
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto it = out.terms_.find(ea + eb);
            if (it == out.terms_.end()) {
                out.terms_.emplace(ea + eb, ca * cb);
            } else {
                it->second += ca * cb;
                if (sgn(it->second) == 0) out.terms_.erase(it);
            }
        }
    return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

bool LaurentScalar::operator<(const LaurentScalar& rhs) const {
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end() && jt != rhs.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        int c = cmp(it->second, jt->second);
        if (c != 0) return c < 0;
    }
    return jt != rhs.terms_.end();
}

Rational LaurentScalar::evaluate_at(const Rational& q0) const {
    if (sgn(q0) == 0) throw std::invalid_argument("evaluate_at: q0 must be nonzero");
    Rational acc(0);
    Rational inv = 1 / q0;
    for (const auto& [e, c] : terms_) {
        Rational p(1);
        const Rational& base = e >= 0 ? q0 : inv;
        for (int k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
        acc += c * p;
    }
    return acc;
}

Rational LaurentScalar::content() const {
    if (terms_.empty()) throw std::logic_error("content of zero");
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        (void)e;
        mpz_class num = abs(c.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    return content;
}

void LaurentScalar::scale(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return;
    }
    for (auto& [e, v] : terms_) {
        (void)e;
        v *= c;
    }
}

void LaurentScalar::shift(int k) {
    if (k == 0 || terms_.empty()) return;
    std::map<int, Rational> shifted;
    for (auto& [e, v] : terms_) shifted.emplace(e + k, std::move(v));
    terms_ = std::move(shifted);
}

std::string LaurentScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*q^" << e;
    }
    return os.str();
}

namespace {

Rational parse_rational_token(std::string_view tok) {
    if (tok.empty()) throw std::invalid_argument("LaurentScalar: empty coefficient");
    mpq_class value;
    if (value.set_str(std::string(tok), 10) != 0)
        throw std::invalid_argument("LaurentScalar: bad coefficient '" + std::string(tok) + "'");
    value.canonicalize();
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

LaurentScalar LaurentScalar::from_string(std::string_view text) {
    text = trim(text);
    if (text == "0") return LaurentScalar();
    LaurentScalar out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t sep = text.find(" + ", pos);
        std::string_view term = trim(text.substr(pos, sep == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : sep - pos));
        size_t star = term.find("*q^");
        if (star == std::string_view::npos)
            throw std::invalid_argument("LaurentScalar: expected c*q^k term");
        Rational coeff = parse_rational_token(term.substr(0, star));
        int exponent = 0;
        try {
            exponent = std::stoi(std::string(term.substr(star + 3)));
        } catch (const std::exception&) {
            throw std::invalid_argument("LaurentScalar: bad exponent");
        }
        LaurentScalar piece = q_power(exponent, coeff);
        out += piece;
        if (sep == std::string_view::npos) break;
        pos = sep + 3;
    }
    return out;
}

namespace {

// dense coefficient vector of the shifted ordinary polynomial, low degree first
std::vector<Rational> to_dense(const LaurentScalar& x) {
    const int lo = x.min_exponent();
    const int hi = x.max_exponent();
    std::vector<Rational> dense(static_cast<size_t>(hi - lo + 1), Rational(0));
    for (const auto& [e, c] : x.terms()) dense[static_cast<size_t>(e - lo)] = c;
    return dense;
}

size_t degree_of(const std::vector<Rational>& p) {
    size_t d = p.size();
    while (d > 0 && sgn(p[d - 1]) == 0) --d;
    return d;  // number of meaningful entries; 0 means zero polynomial
}

// remainder of a by b in Q[q], in place on a; b monic-normalized internally
void poly_mod(std::vector<Rational>& a, const std::vector<Rational>& b) {
    size_t db = degree_of(b);
    const Rational& lead_b = b[db - 1];
    for (size_t da = degree_of(a); da >= db && da > 0; da = degree_of(a)) {
        Rational factor = a[da - 1] / lead_b;
        size_t offset = da - db;
        for (size_t k = 0; k < db; ++k) a[offset + k] -= factor * b[k];
        a[da - 1] = 0;
    }
}

}  // namespace

bool try_divide(const LaurentScalar& dividend, const LaurentScalar& divisor,
                LaurentScalar& quotient) {
    if (divisor.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    if (dividend.is_zero()) {
        quotient = LaurentScalar();
        return true;
    }
    std::vector<Rational> a = to_dense(dividend);
    std::vector<Rational> b = to_dense(divisor);
    size_t da = degree_of(a), db = degree_of(b);
    if (da < db) return false;
    std::vector<Rational> quot(da - db + 1, Rational(0));
    const Rational& lead_b = b[db - 1];
    while (true) {
        da = degree_of(a);
        if (da == 0) break;
        if (da < db) return false;
        Rational factor = a[da - 1] / lead_b;
        size_t offset = da - db;
        quot[offset] = factor;
        for (size_t k = 0; k < db; ++k) a[offset + k] -= factor * b[k];
        a[da - 1] = 0;
    }
    LaurentScalar out;
    const int shift = dividend.min_exponent() - divisor.min_exponent();
    for (size_t k = 0; k < quot.size(); ++k)
        if (sgn(quot[k]) != 0) out += LaurentScalar::q_power(static_cast<int>(k) + shift, quot[k]);
    quotient = std::move(out);
    return true;
}

LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b) {
    if (a.is_zero() && b.is_zero()) return LaurentScalar();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Rational> u = to_dense(a);
    std::vector<Rational> v = to_dense(b);
    while (degree_of(v) > 0) {
        poly_mod(u, v);
        std::swap(u, v);
        // monic normalization keeps coefficient growth in check
        size_t dv = degree_of(v);
        if (dv > 0) {
            Rational lead = v[dv - 1];
            for (size_t k = 0; k < dv; ++k) v[k] /= lead;
        }
    }
    LaurentScalar out;
    for (size_t k = 0; k < degree_of(u); ++k)
        if (sgn(u[k]) != 0) out += LaurentScalar::q_power(static_cast<int>(k), u[k]);
    if (out.is_zero()) return out;
    // monic
    Rational lead = out.terms().rbegin()->second;
    out.scale(1 / lead);
    return out;
}

}  // namespace qk
