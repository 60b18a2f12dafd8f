#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qkostant/expr_io.hpp"
#include "qkostant/filtration.hpp"
#include "qkostant/mutation.hpp"
#include "qkostant/qminors.hpp"
#include "support/test_support.hpp"

using namespace qk;
using qk::test::qp;
using qk::test::word_of;

namespace {

// classical determinant by cofactor expansion, the independent q = 1 oracle
long classical_det(const std::vector<std::vector<long>>& m, std::vector<int> rows,
                   std::vector<int> cols) {
    if (rows.empty()) return 1;
    long acc = 0;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != c) sub_cols.push_back(cols[j]);
        long term = m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[c])] *
                    classical_det(m, sub_rows, sub_cols);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational evaluate_at_matrix(const NCPolynomial& p, const std::vector<std::vector<long>>& m) {
    Rational total(0);
    for (const auto& [w, c] : p.terms()) {
        Rational value = c.evaluate_at(1);
        for (const GenIndex& g : w.letters)
            value *= Rational(m[static_cast<size_t>(g.row - 1)][static_cast<size_t>(g.col - 1)]);
        total += value;
    }
    return total;
}

}  // namespace

TEST_CASE("principal minor examples") {
    CHECK(qdet_principal(MinorSpec(2, {1, 2})) ==
          parse_expr("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]", 2));
    CHECK(qdet_principal(MinorSpec(3, {2})) == parse_expr("x[2,2]", 3));
    NCPolynomial full = qdet_principal(MinorSpec(3, {1, 2, 3}));
    CHECK(full.term_count() == 6);
    CHECK(full == quantum_determinant(3));
    for (const auto& [w, c] : full.terms()) {
        (void)c;
        CHECK(w.is_standard());
    }
}

TEST_CASE("minor spec validation") {
    CHECK_THROWS_AS(MinorSpec(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(MinorSpec(2, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MinorSpec(2, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MinorSpec(2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MinorSpec(2, {1, 3}), std::invalid_argument);
}

TEST_CASE("full quantum determinant matches the classical one at q = 1") {
    std::mt19937_64 rng(47);
    NCPolynomial det3 = qdet_principal(MinorSpec(3, {1, 2, 3}));
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<long>> m(3, std::vector<long>(3));
        for (auto& row : m)
            for (long& v : row) v = static_cast<long>(rng() % 15) - 7;
        CHECK(evaluate_at_matrix(det3, m) == Rational(classical_det(m, {0, 1, 2}, {0, 1, 2})));
    }
}

TEST_CASE("general quantum minors: coefficients are signed q powers") {
    NCPolynomial minor = quantum_minor(3, {1, 2}, {2, 3});
    CHECK(minor.term_count() == 2);
    CHECK(minor.coefficient(word_of({{1, 2}, {2, 3}}, 3)) == LaurentScalar(1));
    CHECK(minor.coefficient(word_of({{1, 3}, {2, 2}}, 3)) == qp(1, -1));
    CHECK(quantum_minor(3, {}, {}) == NCPolynomial::unit());
    CHECK_THROWS_AS(quantum_minor(3, {1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("delta_d examples") {
    CHECK(delta_d(2, 1) == parse_expr("x[1,1] + x[2,2]", 2));
    CHECK(delta_d(2, 2) == quantum_determinant(2));
    NCPolynomial d32 = delta_d(3, 2);
    CHECK(d32.term_count() == 6);  // 3 minors, 2 terms each, no collisions
    CHECK_THROWS_AS(delta_d(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(delta_d(2, 3), std::invalid_argument);
}

TEST_CASE("delta_d_prime examples") {
    CHECK(delta_d_prime(2, 1) == parse_expr("q^-2*x[1,1] + q^-4*x[2,2]", 2));
    CHECK(delta_d_prime(1, 1) == parse_expr("q^-2*x[1,1]", 1));
    CHECK(delta_d_prime(2, 2) == quantum_determinant(2).scaled(qp(-6)));
}

TEST_CASE("delta_d_t examples") {
    // t = n: only the identity permutation survives
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= n; ++d) {
            NCPolynomial diag = delta_d_t(n, d, n);
            NCPolynomial expected;
            std::vector<int> subset;
            auto recurse = [&](auto&& self, int next) -> void {
                if (static_cast<int>(subset.size()) == d) {
                    Word w;
                    for (int v : subset) w.letters.push_back(GenIndex(v, v, n));
                    expected.add_term(w, LaurentScalar(1));
                    return;
                }
                for (int v = next; v <= n; ++v) {
                    subset.push_back(v);
                    self(self, v + 1);
                    subset.pop_back();
                }
            };
            recurse(recurse, 1);
            CHECK(diag == expected);
        }
    // t = 1: the displacement bound never binds
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= n; ++d) CHECK(delta_d_t(n, d, 1) == delta_d(n, d));
    // n=3, d=2, t=2: the transposition on {1,3} is dropped
    NCPolynomial filtered = delta_d_t(3, 2, 2);
    CHECK(filtered.term_count() == 5);
    CHECK(filtered.coefficient(word_of({{1, 3}, {3, 1}}, 3)).is_zero());
    CHECK(filtered.coefficient(word_of({{1, 2}, {2, 1}}, 3)) == qp(1, -1));
    CHECK(filtered.coefficient(word_of({{1, 1}, {3, 3}}, 3)) == LaurentScalar(1));
}

TEST_CASE("symbols of the stage families descend the tower, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (int t = 1; t < n; ++t)
            for (int d = 1; d <= n; ++d)
                CHECK(symbol(delta_d_t(n, d, t), weighting_wt(n, t)) == delta_d_t(n, d, t + 1));
}

TEST_CASE("delta_d commute pairwise, n <= 3") {
    for (int n = 2; n <= 3; ++n) {
        MutationSystem S = build_system(n, 1);
        Rewriter rw(S);
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b)
                CHECK(rw.product(delta_d(n, a), delta_d(n, b)) ==
                      rw.product(delta_d(n, b), delta_d(n, a)));
    }
}

TEST_CASE("delta_d specializes to principal minor sums at q = 1") {
    std::mt19937_64 rng(53);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::vector<long>> m(static_cast<size_t>(n),
                                             std::vector<long>(static_cast<size_t>(n)));
            for (auto& row : m)
                for (long& v : row) v = static_cast<long>(rng() % 11) - 5;
            for (int d = 1; d <= n; ++d) {
                long oracle = 0;
                std::vector<int> subset;
                auto recurse = [&](auto&& self, int next) -> void {
                    if (static_cast<int>(subset.size()) == d) {
                        oracle += classical_det(m, subset, subset);
                        return;
                    }
                    for (int v = next; v < n; ++v) {
                        subset.push_back(v);
                        self(self, v + 1);
                        subset.pop_back();
                    }
                };
                recurse(recurse, 0);
                CHECK(evaluate_at_matrix(delta_d(n, d), m) == Rational(oracle));
            }
        }
    }
}

TEST_CASE("spec example: trace and determinant of [[1,2],[3,4]]") {
    std::vector<std::vector<long>> m{{1, 2}, {3, 4}};
    CHECK(evaluate_at_matrix(delta_d(2, 1), m) == 5);
    CHECK(evaluate_at_matrix(delta_d(2, 2), m) == -2);
}
