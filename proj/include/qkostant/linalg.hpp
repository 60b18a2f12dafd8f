#pragma once

#include <optional>
#include <vector>

#include "qkostant/ratfun.hpp"

namespace qk::linalg {

template <class T>
struct SparseEntry {
    int col;
    T value;
};

/// entries sorted by column, values nonzero
template <class T>
using SparseRow = std::vector<SparseEntry<T>>;

/// Rank over Q(q) by fraction-free elimination: rows are combined as
/// pivot_lead * row - row_lead * pivot, then stripped of rational content, a
/// common q-power, and (when entries grow) the polynomial content gcd.
/// Pivot choice is deterministic: fewest lead terms, then fewest entries,
/// then lowest row index.
int rank_laurent(std::vector<SparseRow<LaurentScalar>> rows, int ncols);

/// Rank over Q: denominators are cleared per row and the elimination runs
/// fraction-free over the integers with gcd content stripping.
int rank_rational(std::vector<SparseRow<Rational>> rows, int ncols);

/// Dense exact solve of M x = rhs over Q(q). Returns the unique solution when
/// the system is consistent with independent columns, std::nullopt when
/// inconsistent. Throws std::invalid_argument on dependent columns of a
/// consistent system (callers here always have injective M).
std::optional<std::vector<RationalFunction>> solve_dense(
    const std::vector<std::vector<LaurentScalar>>& M, const std::vector<LaurentScalar>& rhs);

}  // namespace qk::linalg
