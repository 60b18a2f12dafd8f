#pragma once

#include <optional>

#include "qkostant/mutation.hpp"

namespace qk {

/// Non-negative integer weight per generator; induces the ascending filtration
/// with deg(word) = sum of letter weights.
class Weighting {
public:
    Weighting(int n, std::vector<int> weights);

    int n() const { return n_; }
    int weight(const GenIndex& g) const { return weights_[static_cast<size_t>(g.rank0())]; }
    int word_weight(const Word& w) const;

    bool operator==(const Weighting& rhs) const = default;

private:
    int n_;
    std::vector<int> weights_;
};

/// The stage weighting w_t: weight 1 exactly on the band |i-j| < n-t.
/// t = 0 is the constant weighting 1 (the band is everything).
/// pre: 0 <= t <= n.
Weighting weighting_wt(int n, int t);

/// w(i,j) = 1 iff i = j; the weighting whose incompatibility motivates the
/// staged tower.
Weighting trace_weighting(int n);

/// max over words of the weight sum. pre: p != 0. The filtration reading
/// requires p in normal form; use the overload below for raw input.
int filtration_degree(const NCPolynomial& p, const Weighting& w);
/// normalizes first, then takes the weight maximum
int filtration_degree(const NCPolynomial& p, const Weighting& w, const MutationSystem& S);

/// top-weight homogeneous part; idempotent. pre: p != 0 in normal form.
NCPolynomial symbol(const NCPolynomial& p, const Weighting& w);

struct CompatibilityReport {
    bool compatible = true;
    /// first offending pair and its tail degree, present iff incompatible
    std::optional<std::pair<GenIndex, GenIndex>> witness;
    int witness_degree = 0;
    int witness_bound = 0;
};

/// Checks deg_w(f(i,k)) <= w(i) + w(k) for every pair.
CompatibilityReport compatibility_check(const MutationSystem& S, const Weighting& w);

/// The symbol system: same q-table, each tail truncated to its top-weight part
/// when its degree meets the bound w(i)+w(k), zero when strictly below.
/// Throws when the weighting is incompatible. The stage label advances by one.
MutationSystem symbol_system(const MutationSystem& S, const Weighting& w);

struct TowerStageReport {
    int t = 0;
    bool compatible = false;
    bool symbol_matches_next = false;
    bool graded_dims_ok = true;
};

struct TowerReport {
    bool pass = true;
    std::vector<TowerStageReport> stages;
};

/// For t = 1..n-1: compatibility of (S_t, w_t), table equality of
/// sigma_{w_t}(S_t) with S_{t+1}, and (up to max_degree) the bidegree
/// dimension match between gr A_t and A_{t+1}.
TowerReport tower_check(int n, int max_degree);

/// Dimension of the (degree d, w_t-weight e) slice of A_{t+1}, computed as the
/// rank of the normal forms of every degree-d weight-e word, compared against
/// the standard-monomial count. Exhaustive; keep n and d small.
bool graded_dimension_match(int n, int t, int d);

}  // namespace qk
