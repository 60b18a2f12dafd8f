#pragma once

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "qkostant/ncpoly.hpp"

namespace qk {

/// Classification of an ordered generator pair i < k (lex). For (i,j) < (k,l):
/// same_row (i=k, j<l), same_col (j=l, i<k), antidiagonal (i<k, j>l),
/// diagonal_curly (i<k, j<l) -- the pair carrying the nontrivial tail.
enum class PairClass { same_row, same_col, antidiagonal, diagonal_curly };

/// pre: a < b in the generator order; throws otherwise
PairClass classify_pair(const GenIndex& a, const GenIndex& b);

/// Relation tables of one stage: for every pair i < k the rewrite
///   x_k x_i = q(i,k) * x_i x_k + f(i,k)
/// with q(i,k) a unit scalar and f(i,k) zero except on diagonal_curly pairs.
class MutationSystem {
public:
    MutationSystem(int n, int stage);

    int n() const { return n_; }
    int stage() const { return stage_; }

    const LaurentScalar& q_entry(const GenIndex& lo, const GenIndex& hi) const;
    const NCPolynomial& f_entry(const GenIndex& lo, const GenIndex& hi) const;
    void set_q_entry(const GenIndex& lo, const GenIndex& hi, LaurentScalar q);
    void set_f_entry(const GenIndex& lo, const GenIndex& hi, NCPolynomial f);
    void set_stage(int stage) { stage_ = stage; }

    /// all pairs lo < hi in ascending (lo, hi) order
    std::vector<std::pair<GenIndex, GenIndex>> ordered_pairs() const;
    GenIndex generator(int rank0) const;

    /// equality of both tables entry for entry (stage label ignored)
    bool same_tables(const MutationSystem& rhs) const;

private:
    size_t pair_slot(const GenIndex& lo, const GenIndex& hi) const;

    int n_;
    int stage_;
    std::vector<LaurentScalar> q_table_;
    std::vector<NCPolynomial> f_table_;
};

/// The stage-t system S_t for the n x n quantum matrix algebra: q-scalars from
/// the defining relations, and curly tails (q^-1 - q) x_il x_kj retained
/// exactly when both swapped positions carry weight at stage t-1. Stage 1 is
/// the quantum matrix algebra itself.
MutationSystem build_system(int n, int stage);

/// One rewriting step at a descent: right_pos indexes the right letter of the
/// out-of-order adjacent pair (0-based, so the pair is (right_pos-1, right_pos)).
/// Throws when the position is not a descent.
NCPolynomial elementary_mutation(const Word& w, size_t right_pos, const MutationSystem& S);

/// Normalizer with a memoized letter-insertion cache. Deterministic; one
/// instance is not thread-safe, use one per thread.
class Rewriter {
public:
    explicit Rewriter(const MutationSystem& S) : S_(&S) {}

    const MutationSystem& system() const { return *S_; }

    NCPolynomial normal_form(const Word& w);
    NCPolynomial normal_form(const NCPolynomial& p);
    /// product in A(S); inputs need not be pre-normalized
    NCPolynomial product(const NCPolynomial& a, const NCPolynomial& b);
    NCPolynomial power(const NCPolynomial& a, unsigned e);

    size_t cache_size() const { return cache_.size(); }
    void clear_cache() { cache_.clear(); }

private:
    /// memoized normal form of (standard word) * letter, non-sorted case
    const NCPolynomial& insert(const Word& standard, const GenIndex& letter);
    /// as insert, with the already-sorted fast path inline
    NCPolynomial insert_part(const Word& standard, const GenIndex& letter);
    NCPolynomial insert_poly(const NCPolynomial& standard_poly, const GenIndex& letter);

    const MutationSystem* S_;
    std::unordered_map<Word, NCPolynomial, WordHash> cache_;
};

enum class MutationStrategy { leftmost_of_greatest, random_descent };

/// Literal mutation loop: repeatedly apply one elementary mutation chosen by
/// the strategy until every word is standard. Exists to make strategy
/// independence testable; the uniqueness of the result is the PBW property.
NCPolynomial normalize_with_strategy(const NCPolynomial& p, const MutationSystem& S,
                                     MutationStrategy strategy, std::mt19937_64* rng = nullptr);

/// Default normalization (memoized insertion path).
NCPolynomial normalize(const NCPolynomial& p, const MutationSystem& S);
/// Product in A(S) via a transient Rewriter; see Rewriter::product for loops.
NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b, const MutationSystem& S);

struct OverlapFailure {
    Word overlap;
    NCPolynomial reduce_left_first;
    NCPolynomial reduce_right_first;
};

struct PbwReport {
    bool pass = true;
    size_t overlaps_checked = 0;
    std::vector<OverlapFailure> failures;
};

/// Resolve every strictly descending word of length 3..max_overlap_degree two
/// ways (leftmost redex first vs rightmost redex first, then full
/// normalization) and compare. Length 3 covers all genuine overlap
/// ambiguities of the quadratic rules. pre: max_overlap_degree >= 3.
PbwReport pbw_confluence_check(const MutationSystem& S, int max_overlap_degree = 3);

/// All weakly increasing words of length d, ascending lex. Count is the
/// multiset number C(d + n^2 - 1, n^2 - 1).
std::vector<Word> standard_monomials(int n, int d);

}  // namespace qk
