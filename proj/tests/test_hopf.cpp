#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <tuple>

#include "qkostant/expr_io.hpp"
#include "qkostant/hopf.hpp"
#include "qkostant/qminors.hpp"
#include "support/test_support.hpp"

using namespace qk;
using qk::test::qp;
using qk::test::word_of;

namespace {

NCPolynomial random_normal_poly(std::mt19937_64& rng, QuantumGL& H, int max_len) {
    NCPolynomial p;
    const int n = H.n();
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) {
        Word w;
        const int len = static_cast<int>(rng() % static_cast<uint64_t>(max_len + 1));
        for (int l = 0; l < len; ++l) {
            int r = static_cast<int>(rng() % static_cast<uint64_t>(n * n));
            w.letters.push_back(GenIndex(r / n + 1, r % n + 1, n));
        }
        long c = static_cast<long>(rng() % 7) - 3;
        if (c == 0) c = 1;
        p.add_term(w, LaurentScalar::q_power(static_cast<int>(rng() % 3) - 1, Rational(c)));
    }
    return H.rewriter().normal_form(p);
}

// A (x) A (x) A as a plain coefficient map
using Tensor3 = std::map<std::tuple<Word, Word, Word>, LaurentScalar>;

void add3(Tensor3& t, const Word& a, const Word& b, const Word& c, const LaurentScalar& v) {
    if (v.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(std::move(key), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

TEST_CASE("localized arithmetic examples") {
    QuantumGL H(2);
    LocalizedElement det_over_det = H.reduce({H.det(), 1});
    CHECK(det_over_det.det_power == 0);
    CHECK(det_over_det.num == NCPolynomial::unit());

    LocalizedElement x11{parse_expr("x[1,1]", 2), 0};
    LocalizedElement inv_det{NCPolynomial::unit(), 1};
    LocalizedElement product = H.loc_mul(x11, inv_det);
    CHECK(product.det_power == 1);
    CHECK(product.num == parse_expr("x[1,1]", 2));

    LocalizedElement sum = H.loc_add({parse_expr("x[1,1]", 2), 1}, {parse_expr("x[2,2]", 2), 1});
    CHECK(sum.det_power == 1);
    CHECK(sum.num == parse_expr("x[1,1] + x[2,2]", 2));

    // cross-multiplicative equality across representatives
    LocalizedElement scaled{H.rewriter().product(parse_expr("x[1,1]", 2), H.det()), 1};
    CHECK(H.loc_equal(scaled, x11));
}

TEST_CASE("divide_by_det") {
    QuantumGL H(2);
    auto one = H.divide_by_det(H.det());
    REQUIRE(one.has_value());
    CHECK(*one == NCPolynomial::unit());

    NCPolynomial x11_det = H.rewriter().product(parse_expr("x[1,1]", 2), H.det());
    auto back = H.divide_by_det(x11_det);
    REQUIRE(back.has_value());
    CHECK(*back == parse_expr("x[1,1]", 2));

    CHECK_FALSE(H.divide_by_det(parse_expr("x[1,1]", 2)).has_value());
    CHECK_FALSE(H.divide_by_det(parse_expr("x[1,2]*x[2,1]", 2)).has_value());

    QuantumGL H3(3);
    NCPolynomial mixed = H3.rewriter().product(parse_expr("x[1,3] + q*x[2,2]", 3), H3.det());
    auto quotient = H3.divide_by_det(mixed);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == parse_expr("x[1,3] + q*x[2,2]", 3));
}

TEST_CASE("words_with_content enumerates contingency tables") {
    auto words = words_with_content(2, {{1, 1}, {1, 1}});
    CHECK(words.size() == 2);  // x11 x22 and x12 x21
    for (const auto& w : words) CHECK(w.is_standard());
    auto diag = words_with_content(2, {{2, 0}, {0, 2}});
    REQUIRE(diag.size() == 1);
    CHECK(diag[0] == word_of({{1, 2}, {1, 2}}, 2));
}

TEST_CASE("comultiply examples") {
    QuantumGL H(2);
    TensorAA co = H.comultiply(parse_expr("x[1,1]", 2));
    REQUIRE(co.size() == 2);
    CHECK(co.at({word_of({{1, 1}}, 2), word_of({{1, 1}}, 2)}) == LaurentScalar(1));
    CHECK(co.at({word_of({{1, 2}}, 2), word_of({{2, 1}}, 2)}) == LaurentScalar(1));

    TensorAA unit = H.comultiply(NCPolynomial::unit());
    REQUIRE(unit.size() == 1);
    CHECK(unit.at({Word{}, Word{}}) == LaurentScalar(1));
}

TEST_CASE("the quantum determinant is grouplike, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        QuantumGL H(n);
        TensorAA co = H.comultiply(H.det());
        TensorAA expected;
        for (const auto& [wa, ca] : H.det().terms())
            for (const auto& [wb, cb] : H.det().terms()) expected[{wa, wb}] = ca * cb;
        CHECK(co == expected);
    }
}

TEST_CASE("counit axiom on both legs after comultiply") {
    std::mt19937_64 rng(67);
    for (int n = 1; n <= 3; ++n) {
        QuantumGL H(n);
        for (int trial = 0; trial < 10; ++trial) {
            NCPolynomial p = random_normal_poly(rng, H, 3);
            TensorAA co = H.comultiply(p);
            NCPolynomial left_folded, right_folded;
            for (const auto& [legs, c] : co) {
                LaurentScalar eps_left = H.counit(NCPolynomial(legs.first));
                if (!eps_left.is_zero()) left_folded.add_term(legs.second, c * eps_left);
                LaurentScalar eps_right = H.counit(NCPolynomial(legs.second));
                if (!eps_right.is_zero()) right_folded.add_term(legs.first, c * eps_right);
            }
            CHECK(left_folded == p);
            CHECK(right_folded == p);
        }
    }
}

TEST_CASE("comultiplication is coassociative on generators and random elements") {
    std::mt19937_64 rng(71);
    for (int n = 1; n <= 3; ++n) {
        QuantumGL H(n);
        std::vector<NCPolynomial> inputs;
        for (int r = 0; r < n * n; ++r)
            inputs.push_back(NCPolynomial(Word{{GenIndex(r / n + 1, r % n + 1, n)}}));
        for (int trial = 0; trial < 5; ++trial) inputs.push_back(random_normal_poly(rng, H, 3));
        for (const NCPolynomial& p : inputs) {
            TensorAA co = H.comultiply(p);
            Tensor3 left, right;
            for (const auto& [legs, c] : co) {
                for (const auto& [inner, ci] : H.comultiply(NCPolynomial(legs.first)))
                    add3(left, inner.first, inner.second, legs.second, c * ci);
                for (const auto& [inner, ci] : H.comultiply(NCPolynomial(legs.second)))
                    add3(right, legs.first, inner.first, inner.second, c * ci);
            }
            CHECK(left == right);
        }
    }
}

TEST_CASE("antipode examples") {
    QuantumGL H1(1);
    LocalizedElement s11 = H1.antipode_generator(1, 1);
    CHECK(s11.det_power == 1);
    CHECK(s11.num == NCPolynomial::unit());

    QuantumGL H(2);
    LocalizedElement s12 = H.antipode_generator(1, 2);
    CHECK(s12.det_power == 1);
    CHECK(s12.num == parse_expr("-q^-1*x[1,2]", 2));
    LocalizedElement s11_2 = H.antipode_generator(1, 1);
    CHECK(s11_2.num == parse_expr("x[2,2]", 2));
    LocalizedElement s21 = H.antipode_generator(2, 1);
    CHECK(s21.num == parse_expr("-q*x[2,1]", 2));
    CHECK_THROWS_AS(H.antipode_generator(0, 1), std::invalid_argument);
}

TEST_CASE("antipode axioms hold on both sides, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        QuantumGL H(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                LocalizedElement us{NCPolynomial(), 0}, su{NCPolynomial(), 0};
                for (int k = 1; k <= n; ++k) {
                    NCPolynomial u_ik(Word{{GenIndex(i, k, n)}});
                    NCPolynomial u_kj(Word{{GenIndex(k, j, n)}});
                    us = H.loc_add(us, H.loc_mul({u_ik, 0}, H.antipode_generator(k, j)));
                    su = H.loc_add(su, H.loc_mul(H.antipode_generator(i, k), {u_kj, 0}));
                }
                LocalizedElement expected{i == j ? NCPolynomial::unit() : NCPolynomial(), 0};
                CHECK(H.loc_equal(us, expected));
                CHECK(H.loc_equal(su, expected));
            }
    }
}

TEST_CASE("coaction on generators (alpha, paper formula as the oracle)") {
    QuantumGL H1(1);
    TensorElement a11 = H1.coaction(parse_expr("x[1,1]", 1), CoactionVariant::alpha);
    CHECK(H1.tensor_equal(a11, H1.tensor_of(parse_expr("x[1,1]", 1),
                                            {NCPolynomial::unit(), 0})));

    QuantumGL H(2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            NCPolynomial x_ij(Word{{GenIndex(i, j, 2)}});
            TensorElement actual = H.coaction(x_ij, CoactionVariant::alpha);
            // oracle: sum_{m,s} x_ms (x) u_sj S(u_im), assembled directly
            std::map<Word, LocalizedElement> expected_raw;
            for (int m = 1; m <= 2; ++m)
                for (int s = 1; s <= 2; ++s) {
                    NCPolynomial u_sj(Word{{GenIndex(s, j, 2)}});
                    LocalizedElement second =
                        H.loc_mul({u_sj, 0}, H.antipode_generator(i, m));
                    Word mid = word_of({{m, s}}, 2);
                    auto it = expected_raw.find(mid);
                    if (it == expected_raw.end())
                        expected_raw.emplace(mid, second);
                    else
                        it->second = H.loc_add(it->second, second);
                }
            TensorElement expected;
            for (auto& [w, leg] : expected_raw)
                if (!leg.is_zero()) expected.emplace(w, leg);
            CHECK(H.tensor_equal(actual, expected));
        }
}

TEST_CASE("coaction on generators (beta, frozen hand-derived legs at n = 2)") {
    QuantumGL H(2);
    TensorElement b11 = H.reduce_tensor(H.coaction(parse_expr("x[1,1]", 2),
                                                   CoactionVariant::beta));
    // beta(x11) = sum x_ms (x) S^-1(u_s1) u_1m with S^-1(u_ij) = q^{2(j-i)}S(u_ij):
    //   x11 leg: (x11 x22 - (q - q^-1) x12 x21) det^-1
    //   x12 leg: -q^-2 x11 x21 det^-1
    //   x21 leg:  q^-1 x12 x22 det^-1
    //   x22 leg: -q^-1 x12 x21 det^-1
    REQUIRE(b11.size() == 4);
    CHECK(b11.at(word_of({{1, 1}}, 2)).det_power == 1);
    CHECK(b11.at(word_of({{1, 1}}, 2)).num ==
          parse_expr("x[1,1]*x[2,2] - (q - q^-1)*x[1,2]*x[2,1]", 2));
    CHECK(b11.at(word_of({{1, 2}}, 2)).num == parse_expr("-q^-2*x[1,1]*x[2,1]", 2));
    CHECK(b11.at(word_of({{2, 1}}, 2)).num == parse_expr("q^-1*x[1,2]*x[2,2]", 2));
    CHECK(b11.at(word_of({{2, 2}}, 2)).num == parse_expr("-q^-1*x[1,2]*x[2,1]", 2));
}

TEST_CASE("the determinant is alpha-invariant and beta-invariant") {
    for (int n = 2; n <= 3; ++n) {
        QuantumGL H(n);
        TensorElement alpha = H.coaction(H.det(), CoactionVariant::alpha);
        CHECK(H.tensor_equal(alpha, H.tensor_of(H.det(), {NCPolynomial::unit(), 0})));
        CHECK(H.is_invariant(H.det(), CoactionVariant::alpha));
        CHECK(H.is_invariant(H.det(), CoactionVariant::beta));
    }
}

TEST_CASE("invariance suites: Delta_d under alpha, Delta'_d under beta, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        QuantumGL H(n);
        for (int d = 1; d <= n; ++d) {
            CHECK(H.is_invariant(delta_d(n, d), CoactionVariant::alpha));
            CHECK(H.is_invariant(delta_d_prime(n, d), CoactionVariant::beta));
        }
    }
}

TEST_CASE("x12 is not invariant") {
    QuantumGL H(2);
    CHECK_FALSE(H.is_invariant(parse_expr("x[1,2]", 2), CoactionVariant::alpha));
    CHECK_FALSE(H.is_invariant(parse_expr("x[1,2]", 2), CoactionVariant::beta));
    CHECK_FALSE(H.is_invariant(parse_expr("x[1,1]", 2), CoactionVariant::alpha));
}

TEST_CASE("the comodule axiom holds on generators, n <= 2") {
    // (alpha (x) id) alpha = (id (x) Delta_H) alpha, legs compared over common
    // det powers
    for (int n = 1; n <= 2; ++n) {
        QuantumGL H(n);
        for (int r = 0; r < n * n; ++r) {
            NCPolynomial gen(Word{{GenIndex(r / n + 1, r % n + 1, n)}});
            TensorElement base = H.coaction(gen, CoactionVariant::alpha);

            // common powers across both sides
            unsigned k1 = 0, k2 = 0;
            for (const auto& [w, leg] : base) {
                (void)w;
                k1 = std::max(k1, 0u);  // first H-leg powers come from re-coacting
                k2 = std::max(k2, leg.det_power);
            }
            // lhs terms: alpha(w) (x) leg  -> (w', h', leg)
            std::vector<std::tuple<Word, LocalizedElement, LocalizedElement>> lhs, rhs;
            for (const auto& [w, leg] : base) {
                TensorElement inner = H.coaction(NCPolynomial(w), CoactionVariant::alpha);
                for (const auto& [w2, h2] : inner) lhs.emplace_back(w2, h2, leg);
            }
            // rhs terms: w (x) Delta_H(leg); Delta_H(a det^-k) = sum a(1) det^-k (x) a(2) det^-k
            for (const auto& [w, leg] : base) {
                TensorAA co = H.comultiply(leg.num);
                for (const auto& [legs, c] : co)
                    rhs.emplace_back(w, LocalizedElement{NCPolynomial(legs.first, c),
                                                         leg.det_power},
                                     LocalizedElement{NCPolynomial(legs.second),
                                                      leg.det_power});
            }
            for (const auto& [w, h1, h2] : lhs) {
                (void)w;
                k1 = std::max(k1, h1.det_power);
                k2 = std::max(k2, h2.det_power);
            }
            for (const auto& [w, h1, h2] : rhs) {
                (void)w;
                k1 = std::max(k1, h1.det_power);
                k2 = std::max(k2, h2.det_power);
            }
            auto canonicalize =
                [&](const std::vector<std::tuple<Word, LocalizedElement, LocalizedElement>>&
                        terms) {
                    Tensor3 out;
                    for (const auto& [w, h1, h2] : terms) {
                        NCPolynomial lifted1 =
                            H.rewriter().product(h1.num, H.det_power(k1 - h1.det_power));
                        NCPolynomial lifted2 =
                            H.rewriter().product(h2.num, H.det_power(k2 - h2.det_power));
                        for (const auto& [w1, c1] : lifted1.terms())
                            for (const auto& [w2, c2] : lifted2.terms())
                                add3(out, w, w1, w2, c1 * c2);
                    }
                    return out;
                };
            CHECK(canonicalize(lhs) == canonicalize(rhs));
        }
    }
}

TEST_CASE("coaction multiplicativity against invariants") {
    QuantumGL H(2);
    CHECK(H.multiplicativity_on_invariants_check(parse_expr("x[1,2]", 2), delta_d(2, 1)));
    CHECK(H.multiplicativity_on_invariants_check(parse_expr("x[1,1]*x[2,1] - 3*x[2,2]", 2),
                                                 NCPolynomial::unit()));
    CHECK(H.multiplicativity_on_invariants_check(parse_expr("x[1,1]", 2), delta_d(2, 2)));
    CHECK_THROWS_AS(
        H.multiplicativity_on_invariants_check(parse_expr("x[1,1]", 2), parse_expr("x[1,2]", 2)),
        std::invalid_argument);

    QuantumGL H3(3);
    CHECK(H3.multiplicativity_on_invariants_check(parse_expr("x[1,3]", 3), delta_d(3, 1)));
}

TEST_CASE("the invariant ring is closed under products (spot checks)") {
    QuantumGL H(2);
    NCPolynomial p = H.rewriter().product(delta_d(2, 1), delta_d(2, 2));
    CHECK(H.is_invariant(p, CoactionVariant::alpha));
    NCPolynomial square = H.rewriter().product(delta_d(2, 1), delta_d(2, 1));
    CHECK(H.is_invariant(square, CoactionVariant::alpha));

    QuantumGL H3(3);
    NCPolynomial p3 = H3.rewriter().product(delta_d(3, 1), delta_d(3, 2));
    CHECK(H3.is_invariant(p3, CoactionVariant::alpha));
}
