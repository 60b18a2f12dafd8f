#include "qkostant/expr_io.hpp"

#include <cctype>
#include <sstream>

namespace qk {

namespace {

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    NCPolynomial run() {
        NCPolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number");
        unsigned long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (value > 1000000000ul) fail("number too large");
            ++pos_;
        }
        return value;
    }

    long parse_int() {
        skip_ws();
        long sign = 1;
        if (accept('-'))
            sign = -1;
        else
            accept('+');
        return sign * static_cast<long>(parse_uint());
    }

    NCPolynomial expr() {
        bool negate = false;
        skip_ws();
        if (accept('-'))
            negate = true;
        else
            accept('+');
        NCPolynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    NCPolynomial term() {
        NCPolynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    NCPolynomial factor() {
        NCPolynomial base = atom();
        skip_ws();
        if (!accept('^')) return base;
        long e = parse_int();
        if (e > 4096 || e < -4096) fail("exponent out of range");
        if (e >= 0) {
            NCPolynomial acc = NCPolynomial::unit();
            for (long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        // negative powers only for invertible scalars c*q^k
        if (base.term_count() != 1 || !base.terms().begin()->first.empty() ||
            !base.terms().begin()->second.is_monomial())
            fail("negative power of a non-invertible expression");
        const auto& [exp, coeff] = *base.terms().begin()->second.terms().begin();
        LaurentScalar inv = LaurentScalar::q_power(-exp, 1 / coeff);
        LaurentScalar acc(1);
        for (long k = 0; k < -e; ++k) acc *= inv;
        return NCPolynomial::scalar(acc);
    }

    NCPolynomial atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NCPolynomial inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'q') {
            ++pos_;
            return NCPolynomial::scalar(LaurentScalar::q_power(1));
        }
        if (c == 'x') {
            ++pos_;
            expect('[');
            size_t at = pos_;
            unsigned long i = parse_uint();
            expect(',');
            unsigned long j = parse_uint();
            expect(']');
            if (i < 1 || i > static_cast<unsigned long>(n_) || j < 1 ||
                j > static_cast<unsigned long>(n_)) {
                pos_ = at;
                fail("generator index out of 1..n");
            }
            Word w;
            w.letters.push_back(GenIndex(static_cast<int>(i), static_cast<int>(j), n_));
            return NCPolynomial(std::move(w));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long p = parse_uint();
            Rational value(static_cast<long>(p));
            if (accept('/')) {
                unsigned long r = parse_uint();
                if (r == 0) fail("zero denominator");
                value = Rational(static_cast<long>(p), static_cast<long>(r));
                value.canonicalize();
            }
            return NCPolynomial::scalar(LaurentScalar(value));
        }
        fail("expected atom");
    }

    std::string_view text_;
    int n_;
    size_t pos_ = 0;
};

// |coeff| must be positive here; emits e.g. "3", "1/2*q^2", "q^-1"
std::string positive_monomial(const Rational& mag, int exponent) {
    std::ostringstream os;
    bool have_mag = !(mag == 1) || exponent == 0;
    if (have_mag) os << mag.get_str();
    if (exponent != 0) {
        if (have_mag) os << "*";
        os << "q^" << exponent;
    }
    return os.str();
}

// multi-term coefficient body in descending exponent order; caller has pulled
// the sign of the leading (highest-exponent) term, so it starts positive
std::string coefficient_body(const LaurentScalar& c) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        Rational mag = abs(it->second);
        if (first) {
            os << positive_monomial(mag, it->first);
            first = false;
        } else {
            os << (sgn(it->second) < 0 ? " - " : " + ") << positive_monomial(mag, it->first);
        }
    }
    os << ")";
    return os.str();
}

std::string word_body(const Word& w) {
    std::ostringstream os;
    size_t k = 0;
    bool first = true;
    while (k < w.letters.size()) {
        size_t run = k + 1;
        while (run < w.letters.size() && w.letters[run] == w.letters[k]) ++run;
        if (!first) os << "*";
        first = false;
        os << w.letters[k].to_string();
        if (run - k > 1) os << "^" << (run - k);
        k = run;
    }
    return os.str();
}

}  // namespace

NCPolynomial parse_expr(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("parse_expr: n must be positive");
    return Parser(text, n).run();
}

std::string format_expr(const NCPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        bool negative;
        std::string body;
        if (c.is_monomial()) {
            const auto& [exp, coeff] = *c.terms().begin();
            negative = sgn(coeff) < 0;
            Rational mag = abs(coeff);
            bool unit_coeff = mag == 1 && exp == 0 && !w.empty();
            std::string head = unit_coeff ? "" : positive_monomial(mag, exp);
            if (w.empty())
                body = head;
            else if (head.empty())
                body = word_body(w);
            else
                body = head + "*" + word_body(w);
        } else {
            negative = sgn(c.terms().rbegin()->second) < 0;
            LaurentScalar inner = negative ? -c : c;
            body = coefficient_body(inner);
            if (!w.empty()) body += "*" + word_body(w);
        }
        if (first) {
            if (negative) os << "-";
            os << body;
            first = false;
        } else {
            os << (negative ? " - " : " + ") << body;
        }
    }
    return os.str();
}

}  // namespace qk
