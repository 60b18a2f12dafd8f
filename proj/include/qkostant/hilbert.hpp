#pragma once

#include <gmpxx.h>

#include <vector>

namespace qk {

/// Graded dimensions: dims_A(d) = C(d+n^2-1, n^2-1); dims_I from the series
/// prod_{k=1}^{n} 1/(1-t^k); dims_H from prod_{k=1}^{n} (1-t^k) / (1-t)^{n^2}.
/// They satisfy the convolution identity dims_A = dims_H * dims_I.
struct HilbertProfile {
    int n = 1;
    std::vector<mpz_class> dims_A;
    std::vector<mpz_class> dims_I;
    std::vector<mpz_class> dims_H;
};

HilbertProfile hilbert_dims(int n, int max_degree);

mpz_class binomial(long top, long bottom);

}  // namespace qk
