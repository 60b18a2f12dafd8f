#pragma once

#include "qkostant/ncpoly.hpp"

namespace qk {

/// Nonempty strictly increasing subset of {1..n} selecting principal rows and
/// columns.
struct MinorSpec {
    int n;
    std::vector<int> rows_cols;

    MinorSpec(int size, std::vector<int> subset);
};

/// Principal quantum minor: sum over permutations w of the subset of
/// (-q)^{l(w)} x_{i_1 w(i_1)} ... x_{i_d w(i_d)}. Every word is standard.
NCPolynomial qdet_principal(const MinorSpec& spec);

/// General quantum minor on row set R and column set C (|R| = |C|, both
/// strictly increasing); needed by the antipode's cofactors. Empty sets give 1.
NCPolynomial quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols);

/// The full quantum determinant (rows = cols = {1..n}).
NCPolynomial quantum_determinant(int n);

/// Delta_d: sum of all C(n,d) principal d x d minors. pre: 1 <= d <= n.
NCPolynomial delta_d(int n, int d);

/// Delta'_d: as delta_d with each minor scaled by q^{-2 sum(I)}.
NCPolynomial delta_d_prime(int n, int d);

/// Stage-t family: permutations restricted to displacement |i - w(i)| <= n-t.
/// delta_d_t(n, d, 1) = delta_d(n, d); at t = n only the identity survives.
NCPolynomial delta_d_t(int n, int d, int t);

}  // namespace qk
