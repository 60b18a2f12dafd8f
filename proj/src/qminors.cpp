#include "qkostant/qminors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qk {

namespace {

int inversion_count(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv;
}

void check_subset(int n, const std::vector<int>& subset, const char* what) {
    for (size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] < 1 || subset[k] > n)
            throw std::invalid_argument(std::string(what) + ": index out of 1..n");
        if (k > 0 && subset[k] <= subset[k - 1])
            throw std::invalid_argument(std::string(what) + ": subset must be strictly increasing");
    }
}

}  // namespace

MinorSpec::MinorSpec(int size, std::vector<int> subset) : n(size), rows_cols(std::move(subset)) {
    if (n < 1) throw std::invalid_argument("MinorSpec: n must be positive");
    if (rows_cols.empty()) throw std::invalid_argument("MinorSpec: subset must be nonempty");
    check_subset(n, rows_cols, "MinorSpec");
}

NCPolynomial quantum_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
    check_subset(n, rows, "quantum_minor rows");
    check_subset(n, cols, "quantum_minor cols");
    if (rows.size() != cols.size())
        throw std::invalid_argument("quantum_minor: row and column sets must match in size");
    const size_t d = rows.size();
    if (d == 0) return NCPolynomial::unit();

    NCPolynomial out;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Word w;
        w.letters.reserve(d);
        for (size_t r = 0; r < d; ++r)
            w.letters.push_back(GenIndex(rows[r], cols[static_cast<size_t>(perm[r])], n));
        out.add_term(w, LaurentScalar::neg_q_power(inversion_count(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

NCPolynomial qdet_principal(const MinorSpec& spec) {
    return quantum_minor(spec.n, spec.rows_cols, spec.rows_cols);
}

NCPolynomial quantum_determinant(int n) {
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return quantum_minor(n, all, all);
}

namespace {

void for_each_subset(int n, int d, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset;
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(subset.size()) == d) {
            fn(subset);
            return;
        }
        for (int v = next; v <= n - (d - static_cast<int>(subset.size())) + 1; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 1);
}

}  // namespace

NCPolynomial delta_d(int n, int d) {
    if (d < 1 || d > n) throw std::invalid_argument("delta_d: d must lie in 1..n");
    NCPolynomial out;
    for_each_subset(n, d, [&](const std::vector<int>& subset) {
        out += qdet_principal(MinorSpec(n, subset));
    });
    return out;
}

NCPolynomial delta_d_prime(int n, int d) {
    if (d < 1 || d > n) throw std::invalid_argument("delta_d_prime: d must lie in 1..n");
    NCPolynomial out;
    for_each_subset(n, d, [&](const std::vector<int>& subset) {
        int total = 0;
        for (int v : subset) total += v;
        out += qdet_principal(MinorSpec(n, subset)).scaled(LaurentScalar::q_power(-2 * total));
    });
    return out;
}

NCPolynomial delta_d_t(int n, int d, int t) {
    if (d < 1 || d > n) throw std::invalid_argument("delta_d_t: d must lie in 1..n");
    if (t < 1 || t > n) throw std::invalid_argument("delta_d_t: t must lie in 1..n");
    NCPolynomial out;
    for_each_subset(n, d, [&](const std::vector<int>& subset) {
        std::vector<int> perm(subset.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool within_band = true;
            for (size_t r = 0; r < subset.size() && within_band; ++r)
                within_band =
                    std::abs(subset[r] - subset[static_cast<size_t>(perm[r])]) <= n - t;
            if (!within_band) continue;
            Word w;
            w.letters.reserve(subset.size());
            for (size_t r = 0; r < subset.size(); ++r)
                w.letters.push_back(GenIndex(subset[r], subset[static_cast<size_t>(perm[r])], n));
            out.add_term(w, LaurentScalar::neg_q_power(inversion_count(perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return out;
}

}  // namespace qk
