#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qkostant/expr_io.hpp"
#include "qkostant/kostant.hpp"
#include "support/test_support.hpp"

using namespace qk;
using qk::test::word_of;

namespace {

// independent partition counter: partitions of d into parts <= n, by direct
// recursive enumeration (the series expansion oracle)
long partitions_with_parts_at_most(int d, int n) {
    if (d == 0) return 1;
    if (d < 0 || n == 0) return 0;
    return partitions_with_parts_at_most(d - n, n) + partitions_with_parts_at_most(d, n - 1);
}

}  // namespace

TEST_CASE("hilbert profile examples") {
    HilbertProfile p2 = hilbert_dims(2, 8);
    CHECK(p2.dims_A[0] == 1);
    CHECK(p2.dims_A[1] == 4);
    CHECK(p2.dims_A[2] == 10);
    CHECK(p2.dims_A[3] == 20);
    for (int d = 0; d <= 8; ++d) CHECK(p2.dims_H[static_cast<size_t>(d)] == 2 * d + 1);

    HilbertProfile p1 = hilbert_dims(1, 5);
    CHECK(p1.dims_H[0] == 1);
    for (int d = 1; d <= 5; ++d) CHECK(p1.dims_H[static_cast<size_t>(d)] == 0);

    for (int n = 1; n <= 4; ++n) CHECK(hilbert_dims(n, 1).dims_A[1] == n * n);
}

TEST_CASE("dims_I matches the series expansion oracle") {
    for (int n = 1; n <= 4; ++n) {
        HilbertProfile profile = hilbert_dims(n, 10);
        for (int d = 0; d <= 10; ++d)
            CHECK(profile.dims_I[static_cast<size_t>(d)] ==
                  partitions_with_parts_at_most(d, n));
    }
    // the n=2 row is 1,1,2,2,3,...
    HilbertProfile p2 = hilbert_dims(2, 3);
    CHECK(p2.dims_I[2] == 2);
    CHECK(p2.dims_I[3] == 2);
}

TEST_CASE("hilbert convolution identity dims_A = dims_H * dims_I") {
    for (int n = 1; n <= 4; ++n) {
        HilbertProfile profile = hilbert_dims(n, 10);
        for (size_t d = 0; d <= 10; ++d) {
            mpz_class acc = 0;
            for (size_t e = 0; e <= d; ++e) acc += profile.dims_H[e] * profile.dims_I[d - e];
            CHECK(acc == profile.dims_A[d]);
        }
    }
}

TEST_CASE("candidate basis examples") {
    auto b1 = candidate_basis(2, 1);
    REQUIRE(b1.size() == 3);  // x11 excluded by a_11 < 1
    CHECK(b1[0] == word_of({{1, 2}}, 2));
    CHECK(b1[1] == word_of({{2, 1}}, 2));
    CHECK(b1[2] == word_of({{2, 2}}, 2));

    auto b0 = candidate_basis(2, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].empty());

    auto b2 = candidate_basis(2, 2);
    CHECK(b2.size() == 5);  // a_22 <= 1 keeps 5 of the 6 multisets over {x12,x21,x22}
    for (const auto& w : b2) {
        int diag22 = 0;
        for (const auto& g : w.letters) {
            CHECK(g != GenIndex(1, 1, 2));
            if (g == GenIndex(2, 2, 2)) ++diag22;
        }
        CHECK(diag22 <= 1);
    }
}

TEST_CASE("candidate counts match dims_H (the deciding counting oracle)") {
    for (int n = 1; n <= 3; ++n) {
        HilbertProfile profile = hilbert_dims(n, 6);
        for (int d = 0; d <= 6; ++d)
            CHECK(mpz_class(static_cast<unsigned long>(candidate_basis(n, d).size())) ==
                  profile.dims_H[static_cast<size_t>(d)]);
    }
    // the non-strict reading a_ii <= i overcounts already in degree 1 at n=2
    CHECK(candidate_basis(2, 1, +1).size() == 4);
    CHECK(hilbert_dims(2, 1).dims_H[1] == 3);
}

TEST_CASE("delta monomial enumeration matches dims_I degree by degree") {
    for (int n = 1; n <= 4; ++n) {
        HilbertProfile profile = hilbert_dims(n, 8);
        for (int e = 0; e <= 8; ++e)
            CHECK(mpz_class(static_cast<unsigned long>(delta_monomial_exponents(n, e).size())) ==
                  profile.dims_I[static_cast<size_t>(e)]);
    }
    // weighted degree is respected
    for (const auto& exponents : delta_monomial_exponents(3, 5)) {
        int total = 0;
        for (size_t k = 0; k < exponents.size(); ++k)
            total += static_cast<int>(k + 1) * exponents[k];
        CHECK(total == 5);
    }
}

TEST_CASE("counting identity before any rank computation") {
    for (int n = 1; n <= 3; ++n) {
        HilbertProfile profile = hilbert_dims(n, 6);
        for (int d = 0; d <= 6; ++d) {
            mpz_class acc = 0;
            for (int e = 0; e <= d; ++e)
                acc += mpz_class(static_cast<unsigned long>(
                           candidate_basis(n, d - e).size())) *
                       profile.dims_I[static_cast<size_t>(e)];
            CHECK(acc == profile.dims_A[static_cast<size_t>(d)]);
        }
    }
}

TEST_CASE("freeness certificate: n = 2 exact passes through degree 6") {
    CertifyOptions options;
    options.mode = CertifyMode::exact;
    FreenessCertificate cert = certify_freeness(2, 6, options);
    CHECK(cert.pass);
    CHECK(cert.counting_identity);
    REQUIRE(cert.degrees.size() == 7);
    for (const auto& record : cert.degrees) {
        CHECK(record.pass);
        CHECK(mpz_class(static_cast<unsigned long>(record.rank)) == record.dim_A);
        CHECK(mpz_class(static_cast<unsigned long>(record.candidate_count)) == record.dim_A);
    }
}

TEST_CASE("freeness certificate: n = 1 is trivially free") {
    CertifyOptions options;
    options.mode = CertifyMode::exact;
    CHECK(certify_freeness(1, 5, options).pass);
}

TEST_CASE("negative control: the too-small basis fails at the first degree") {
    CertifyOptions options;
    options.mode = CertifyMode::exact;
    options.basis_bound_shift = -1;  // a_ii < i-1
    FreenessCertificate cert = certify_freeness(2, 3, options);
    CHECK_FALSE(cert.pass);
    CHECK_FALSE(cert.counting_identity);
    CHECK_FALSE(cert.degrees[1].pass);  // degree 1 loses x22 and cannot reach dim 4
    CHECK(cert.degrees[1].candidate_count < 4);
}

TEST_CASE("sampled mode agrees with exact mode at n = 2") {
    CertifyOptions exact;
    exact.mode = CertifyMode::exact;
    CertifyOptions sampled;
    sampled.mode = CertifyMode::sampled;
    sampled.samples = 3;
    FreenessCertificate a = certify_freeness(2, 6, exact);
    FreenessCertificate b = certify_freeness(2, 6, sampled);
    CHECK(a.pass == b.pass);
    CHECK(b.rank_stable);
    CHECK(b.sampled_points.size() == 3);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (size_t k = 0; k < a.degrees.size(); ++k) {
        CHECK(a.degrees[k].rank == b.degrees[k].rank);
        CHECK(a.degrees[k].pass == b.degrees[k].pass);
    }
}

TEST_CASE("sampled certificates are reproducible and seed-dependent") {
    CertifyOptions options;
    options.mode = CertifyMode::sampled;
    options.samples = 3;
    FreenessCertificate a = certify_freeness(2, 4, options);
    FreenessCertificate b = certify_freeness(2, 4, options);
    CHECK(a.sampled_points == b.sampled_points);
    options.seed = 99;
    FreenessCertificate c = certify_freeness(2, 4, options);
    CHECK(a.sampled_points != c.sampled_points);
    CHECK(c.pass);
}

TEST_CASE("right-module freeness, n = 2 through degree 4") {
    CertifyOptions options;
    options.mode = CertifyMode::exact;
    options.right_module = true;
    FreenessCertificate cert = certify_freeness(2, 4, options);
    CHECK(cert.pass);
}

TEST_CASE("threaded expansion matches single-threaded") {
    CertifyOptions one;
    one.mode = CertifyMode::exact;
    CertifyOptions four = one;
    four.threads = 4;
    FreenessCertificate a = certify_freeness(2, 5, one);
    FreenessCertificate b = certify_freeness(2, 5, four);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (size_t k = 0; k < a.degrees.size(); ++k) CHECK(a.degrees[k].rank == b.degrees[k].rank);
}

TEST_CASE("invariant ring checks") {
    InvariantRingReport r2 = invariant_ring_check(2, 6);
    CHECK(r2.deltas_commute);
    CHECK(r2.monomials_independent);
    CHECK(r2.deltas_invariant);
    CHECK(r2.pass);
    CHECK(invariant_ring_check(1, 4).pass);
}

TEST_CASE("invariant ring check at n = 3, degree 4") {
    CHECK(invariant_ring_check(3, 4).pass);
}

TEST_CASE("classical oracle: identity matrix and fixed example") {
    ClassicalOracleReport r2 = classical_oracle_check(2, 3, 20, 42);
    CHECK(r2.commutative);
    CHECK(r2.minors_match);
    CHECK(r2.pass);
}

TEST_CASE("classical oracle at n = 3 with 20 trials") {
    CHECK(classical_oracle_check(3, 3, 20, 42).pass);
}

TEST_CASE("certify_freeness validates its inputs") {
    CertifyOptions options;
    CHECK_THROWS_AS(certify_freeness(0, 3, options), std::invalid_argument);
    CHECK_THROWS_AS(certify_freeness(2, 0, options), std::invalid_argument);
    options.mode = CertifyMode::sampled;
    options.samples = 0;
    CHECK_THROWS_AS(certify_freeness(2, 3, options), std::invalid_argument);
}
