#include "qkostant/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qk::linalg {

namespace {

// ---------------------------------------------------------------- domain ops

struct LaurentOps {
    using Elem = LaurentScalar;

    static size_t lead_size(const Elem& e) { return e.terms().size(); }

    static void strip(SparseRow<Elem>& row) {
        if (row.empty()) return;
        // joint rational content and common q-power
        mpz_class num_gcd(0), den_lcm(1);
        int min_exp = row.front().value.min_exponent();
        int max_span = 0;
        for (const auto& entry : row) {
            Rational c = entry.value.content();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            min_exp = std::min(min_exp, entry.value.min_exponent());
            max_span = std::max(max_span,
                                entry.value.max_exponent() - entry.value.min_exponent());
        }
        Rational joint(num_gcd, den_lcm);
        joint.canonicalize();
        if (sgn(row.front().value.terms().begin()->second) < 0) joint = -joint;
        for (auto& entry : row) {
            entry.value.scale(1 / joint);
            entry.value.shift(-min_exp);
        }
        // polynomial content, only when entries have grown
        if (max_span > 48) {
            LaurentScalar g;
            for (const auto& entry : row) {
                g = laurent_gcd(g, entry.value);
                if (g.is_one()) return;
            }
            if (g.is_zero() || g.is_one()) return;
            for (auto& entry : row) {
                LaurentScalar quotient;
                if (!try_divide(entry.value, g, quotient))
                    throw std::logic_error("rank_laurent: content does not divide");
                entry.value = std::move(quotient);
            }
        }
    }
};

struct IntegerOps {
    using Elem = mpz_class;

    static size_t lead_size(const Elem& e) { return mpz_sizeinbase(e.get_mpz_t(), 2); }

    static void strip(SparseRow<Elem>& row) {
        if (row.empty()) return;
        mpz_class g(0);
        for (const auto& entry : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.value.get_mpz_t());
            if (g == 1) break;
        }
        if (sgn(row.front().value) < 0) g = -g;
        if (g == 1) return;
        for (auto& entry : row) entry.value /= g;
    }
};

// row := a * row - b * pivot, where a = pivot lead, b = row lead (lead cancels)
template <class Elem>
SparseRow<Elem> combine(const SparseRow<Elem>& row, const SparseRow<Elem>& pivot) {
    const Elem& a = pivot.front().value;
    const Elem& b = row.front().value;
    SparseRow<Elem> out;
    out.reserve(row.size() + pivot.size());
    size_t i = 1, j = 1;  // lead entries cancel by construction
    while (i < row.size() || j < pivot.size()) {
        if (j >= pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
            out.push_back({row[i].col, a * row[i].value});
            ++i;
        } else if (i >= row.size() || pivot[j].col < row[i].col) {
            Elem v = b * pivot[j].value;
            out.push_back({pivot[j].col, -v});
            ++j;
        } else {
            Elem v = a * row[i].value - b * pivot[j].value;
            if (!(v == Elem())) out.push_back({row[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class Ops>
int sparse_rank(std::vector<SparseRow<typename Ops::Elem>> rows, int ncols) {
    using Elem = typename Ops::Elem;
    std::vector<std::vector<size_t>> buckets(static_cast<size_t>(ncols));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) continue;
        Ops::strip(rows[r]);
        buckets[static_cast<size_t>(rows[r].front().col)].push_back(r);
    }
    int rank = 0;
    for (int col = 0; col < ncols; ++col) {
        auto& bucket = buckets[static_cast<size_t>(col)];
        if (bucket.empty()) continue;
        size_t pivot_index = bucket[0];
        for (size_t k = 1; k < bucket.size(); ++k) {
            const SparseRow<Elem>& cand = rows[bucket[k]];
            const SparseRow<Elem>& best = rows[pivot_index];
            auto cand_key = std::make_tuple(Ops::lead_size(cand.front().value), cand.size(),
                                            bucket[k]);
            auto best_key = std::make_tuple(Ops::lead_size(best.front().value), best.size(),
                                            pivot_index);
            if (cand_key < best_key) pivot_index = bucket[k];
        }
        ++rank;
        for (size_t r : bucket) {
            if (r == pivot_index) continue;
            rows[r] = combine(rows[r], rows[pivot_index]);
            if (rows[r].empty()) continue;
            Ops::strip(rows[r]);
            buckets[static_cast<size_t>(rows[r].front().col)].push_back(r);
        }
        bucket.clear();
    }
    return rank;
}

}  // namespace

int rank_laurent(std::vector<SparseRow<LaurentScalar>> rows, int ncols) {
    return sparse_rank<LaurentOps>(std::move(rows), ncols);
}

int rank_rational(std::vector<SparseRow<Rational>> rows, int ncols) {
    std::vector<SparseRow<mpz_class>> cleared(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        mpz_class lcm_den(1);
        for (const auto& entry : rows[r])
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                    entry.value.get_den().get_mpz_t());
        cleared[r].reserve(rows[r].size());
        for (const auto& entry : rows[r]) {
            Rational scaled = entry.value * Rational(lcm_den);
            cleared[r].push_back({entry.col, scaled.get_num()});
        }
    }
    return sparse_rank<IntegerOps>(std::move(cleared), ncols);
}

std::optional<std::vector<RationalFunction>> solve_dense(
    const std::vector<std::vector<LaurentScalar>>& M, const std::vector<LaurentScalar>& rhs) {
    const size_t nrows = M.size();
    if (rhs.size() != nrows) throw std::invalid_argument("solve_dense: shape mismatch");
    const size_t ncols = nrows == 0 ? 0 : M[0].size();

    std::vector<std::vector<RationalFunction>> a(nrows);
    std::vector<RationalFunction> b(nrows);
    for (size_t r = 0; r < nrows; ++r) {
        a[r].reserve(ncols);
        for (size_t c = 0; c < ncols; ++c) a[r].emplace_back(M[r][c]);
        b[r] = RationalFunction(rhs[r]);
    }

    std::vector<size_t> pivot_row_of_col(ncols, SIZE_MAX);
    size_t next_row = 0;
    for (size_t c = 0; c < ncols && next_row < nrows; ++c) {
        size_t found = SIZE_MAX;
        for (size_t r = next_row; r < nrows; ++r)
            if (!a[r][c].is_zero()) {
                found = r;
                break;
            }
        if (found == SIZE_MAX) continue;
        std::swap(a[found], a[next_row]);
        std::swap(b[found], b[next_row]);
        for (size_t r = next_row + 1; r < nrows; ++r) {
            if (a[r][c].is_zero()) continue;
            RationalFunction factor = (a[r][c] / a[next_row][c]).reduced();
            for (size_t k = c; k < ncols; ++k)
                a[r][k] = (a[r][k] - factor * a[next_row][k]).reduced();
            b[r] = (b[r] - factor * b[next_row]).reduced();
        }
        pivot_row_of_col[c] = next_row;
        ++next_row;
    }
    // consistency: remaining rows must have zero rhs
    for (size_t r = next_row; r < nrows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    // independent columns expected
    for (size_t c = 0; c < ncols; ++c)
        if (pivot_row_of_col[c] == SIZE_MAX)
            throw std::invalid_argument("solve_dense: dependent columns");

    std::vector<RationalFunction> x(ncols);
    for (size_t c = ncols; c-- > 0;) {
        size_t r = pivot_row_of_col[c];
        RationalFunction acc = b[r];
        for (size_t k = c + 1; k < ncols; ++k)
            acc = (acc - a[r][k] * x[k]).reduced();
        x[c] = (acc / a[r][c]).reduced();
    }
    return x;
}

}  // namespace qk::linalg
