#pragma once

#include <cstdint>
#include <string>

#include "qkostant/hilbert.hpp"
#include "qkostant/mutation.hpp"

namespace qk {

/// Standard words of degree d whose diagonal exponents satisfy a_ii < i
/// (off-diagonal exponents free): the candidate free-module basis. The
/// bound_shift parameter exists for negative controls (shift -1 gives the
/// too-small family a_ii < i-1).
std::vector<Word> candidate_basis(int n, int d, int bound_shift = 0);

/// Exponent vectors (e_1..e_n) with sum k*e_k = degree, graded-lex descending.
std::vector<std::vector<int>> delta_monomial_exponents(int n, int degree);

enum class CertifyMode { exact, sampled };

struct DegreeRecord {
    int d = 0;
    mpz_class dim_A;
    size_t candidate_count = 0;
    size_t rank = 0;
    bool pass = false;
};

struct FreenessCertificate {
    int n = 1;
    int max_degree = 0;
    CertifyMode mode = CertifyMode::exact;
    bool right_module = false;
    bool counting_identity = true;
    bool rank_stable = true;
    std::vector<std::string> sampled_points;
    std::vector<DegreeRecord> degrees;
    bool pass = false;
};

struct CertifyOptions {
    CertifyMode mode = CertifyMode::exact;
    int samples = 3;
    bool right_module = false;
    uint64_t seed = 42;
    int threads = 1;
    int basis_bound_shift = 0;  // negative control hook
};

/// Per degree d <= max_degree: expand every product (Delta-monomial of degree
/// e) * (candidate of degree d-e) to normal form, assemble the coefficient
/// matrix over Q(q) (exact) or over Q at sampled rational q-values, and pass
/// iff the matrix is square of size dim_A(d) with full rank.
FreenessCertificate certify_freeness(int n, int max_degree, const CertifyOptions& options);

struct InvariantRingReport {
    int n = 1;
    int max_degree = 0;
    bool deltas_commute = false;
    bool monomials_independent = false;
    bool deltas_invariant = false;
    bool pass = false;
};

/// Structural checks for the invariant ring: the Delta_d commute
/// pairwise, their monomials are linearly independent degree by degree (count
/// matching dims_I), and each Delta_d is alpha-invariant.
InvariantRingReport invariant_ring_check(int n, int max_degree);

struct ClassicalOracleReport {
    int n = 1;
    int trials = 0;
    bool commutative = false;
    bool minors_match = false;
    bool pass = false;
};

/// q = 1 degeneration: multiplication is commutative, and Delta_d evaluated on
/// random integer matrices equals the sum of principal d x d minors computed
/// by a direct integer determinant oracle.
ClassicalOracleReport classical_oracle_check(int n, int max_degree, int trials, uint64_t seed);

}  // namespace qk
