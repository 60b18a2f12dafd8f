#include "qkostant/hilbert.hpp"

#include <stdexcept>

namespace qk {

mpz_class binomial(long top, long bottom) {
    if (bottom < 0 || bottom > top) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bottom));
    return out;
}

HilbertProfile hilbert_dims(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("hilbert_dims: n must be positive");
    if (max_degree < 0) throw std::invalid_argument("hilbert_dims: max_degree must be >= 0");
    HilbertProfile profile;
    profile.n = n;
    const size_t size = static_cast<size_t>(max_degree) + 1;

    profile.dims_A.resize(size);
    for (size_t d = 0; d < size; ++d)
        profile.dims_A[d] = binomial(static_cast<long>(d) + n * n - 1, n * n - 1);

    // partitions into parts <= n
    profile.dims_I.assign(size, 0);
    profile.dims_I[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (size_t d = static_cast<size_t>(part); d < size; ++d)
            profile.dims_I[d] += profile.dims_I[d - static_cast<size_t>(part)];

    // numerator prod_{k<=n} (1 - t^k), degree n(n+1)/2
    std::vector<mpz_class> numerator(static_cast<size_t>(n) * (n + 1) / 2 + 1, 0);
    numerator[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (size_t d = numerator.size(); d-- > static_cast<size_t>(k);)
            numerator[d] -= numerator[d - static_cast<size_t>(k)];

    profile.dims_H.assign(size, 0);
    for (size_t d = 0; d < size; ++d)
        for (size_t j = 0; j <= d && j < numerator.size(); ++j)
            profile.dims_H[d] += numerator[j] * profile.dims_A[d - j];

    return profile;
}

}  // namespace qk
