#include "qkostant/kostant.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qkostant/hopf.hpp"
#include "qkostant/linalg.hpp"
#include "qkostant/qminors.hpp"

namespace qk {

std::vector<Word> candidate_basis(int n, int d, int bound_shift) {
    if (n < 1) throw std::invalid_argument("candidate_basis: n must be positive");
    if (d < 0) throw std::invalid_argument("candidate_basis: degree must be >= 0");
    std::vector<Word> out;
    Word current;
    const int count = n * n;
    auto cap_of = [&](int rank0) {
        const int row = rank0 / n + 1, col = rank0 % n + 1;
        if (row != col) return d;                      // off-diagonal: unconstrained
        return std::max(0, row - 1 + bound_shift);     // a_ii < i (+shift)
    };
    auto recurse = [&](auto&& self, int min_rank, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int r = min_rank; r < count; ++r) {
            int used = 0;
            for (auto it = current.letters.rbegin();
                 it != current.letters.rend() && it->rank0() == r; ++it)
                ++used;
            if (used >= cap_of(r)) continue;
            current.letters.push_back(GenIndex(r / n + 1, r % n + 1, n));
            self(self, r, remaining - 1);
            current.letters.pop_back();
        }
    };
    recurse(recurse, 0, d);
    return out;
}

std::vector<std::vector<int>> delta_monomial_exponents(int n, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<size_t>(n), 0);
    auto recurse = [&](auto&& self, int k, int left) -> void {
        if (k > n) {
            if (left == 0) out.push_back(current);
            return;
        }
        // lex descending on (e_1, ..., e_n)
        for (int e = left / k; e >= 0; --e) {
            current[static_cast<size_t>(k - 1)] = e;
            self(self, k + 1, left - e * k);
        }
        current[static_cast<size_t>(k - 1)] = 0;
    };
    recurse(recurse, 1, degree);
    return out;
}

namespace {

// Delta-monomial expander with memoization over exponent vectors
class DeltaMonomials {
public:
    DeltaMonomials(int n, Rewriter& rw) : rw_(rw) {
        deltas_.reserve(static_cast<size_t>(n));
        for (int d = 1; d <= n; ++d) deltas_.push_back(delta_d(n, d));
        cache_.emplace(std::vector<int>(static_cast<size_t>(n), 0), NCPolynomial::unit());
    }

    const NCPolynomial& expand(const std::vector<int>& exponents) {
        auto hit = cache_.find(exponents);
        if (hit != cache_.end()) return hit->second;
        std::vector<int> previous = exponents;
        size_t last = 0;
        for (size_t k = 0; k < previous.size(); ++k)
            if (previous[k] > 0) last = k;
        previous[last] -= 1;
        NCPolynomial value = rw_.product(expand(previous), deltas_[last]);
        return cache_.emplace(exponents, std::move(value)).first->second;
    }

private:
    Rewriter& rw_;
    std::vector<NCPolynomial> deltas_;
    std::map<std::vector<int>, NCPolynomial> cache_;
};

std::vector<std::string> pick_sample_points(uint64_t seed, int samples,
                                            std::vector<Rational>& values) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    while (static_cast<int>(values.size()) < samples) {
        long p = 2 + static_cast<long>(rng() % 96);
        long r = 2 + static_cast<long>(rng() % 96);
        if (p == r) continue;
        Rational q0(p, r);
        q0.canonicalize();
        if (std::find(values.begin(), values.end(), q0) != values.end()) continue;
        values.push_back(q0);
        std::ostringstream os;
        os << p << "/" << r;
        labels.push_back(os.str());
    }
    return labels;
}

struct DegreeJobs {
    // row polynomials of one degree, in deterministic row order
    std::vector<NCPolynomial> rows;
};

DegreeJobs expand_degree(int n, int d, bool right_module, int bound_shift, int threads,
                         const MutationSystem& S1) {
    struct Job {
        std::vector<int> exponents;
        Word candidate;
    };
    std::vector<Job> jobs;
    for (int e = 0; e <= d; ++e) {
        auto monomials = delta_monomial_exponents(n, e);
        auto candidates = candidate_basis(n, d - e, bound_shift);
        for (const auto& exponents : monomials)
            for (const auto& b : candidates) jobs.push_back({exponents, b});
    }

    DegreeJobs out;
    out.rows.resize(jobs.size());
    auto work = [&](size_t begin, size_t end) {
        Rewriter rw(S1);
        DeltaMonomials deltas(n, rw);
        for (size_t k = begin; k < end; ++k) {
            const NCPolynomial& m = deltas.expand(jobs[k].exponents);
            NCPolynomial b(jobs[k].candidate);
            out.rows[k] = right_module ? rw.product(b, m) : rw.product(m, b);
        }
    };
    if (threads <= 1 || jobs.size() < 16) {
        work(0, jobs.size());
    } else {
        const size_t used = std::min<size_t>(static_cast<size_t>(threads), jobs.size());
        std::vector<std::thread> pool;
        const size_t chunk = (jobs.size() + used - 1) / used;
        for (size_t t = 0; t < used; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(jobs.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace

FreenessCertificate certify_freeness(int n, int max_degree, const CertifyOptions& options) {
    if (n < 1) throw std::invalid_argument("certify_freeness: n must be positive");
    if (max_degree < 1) throw std::invalid_argument("certify_freeness: max_degree must be >= 1");
    if (options.mode == CertifyMode::sampled && options.samples < 1)
        throw std::invalid_argument("certify_freeness: sampled mode needs samples >= 1");

    FreenessCertificate cert;
    cert.n = n;
    cert.max_degree = max_degree;
    cert.mode = options.mode;
    cert.right_module = options.right_module;

    std::vector<Rational> sample_values;
    if (options.mode == CertifyMode::sampled)
        cert.sampled_points = pick_sample_points(options.seed, options.samples, sample_values);

    const HilbertProfile profile = hilbert_dims(n, max_degree);
    const MutationSystem S1 = build_system(n, 1);

    cert.pass = true;
    for (int d = 0; d <= max_degree; ++d) {
        DegreeRecord record;
        record.d = d;
        record.dim_A = profile.dims_A[static_cast<size_t>(d)];

        DegreeJobs jobs = expand_degree(n, d, options.right_module, options.basis_bound_shift,
                                        options.threads, S1);
        record.candidate_count = jobs.rows.size();

        // counting identity sum_e |B_e| * dims_I(d-e) = dims_A(d), checked on
        // the actual row count
        if (mpz_class(static_cast<unsigned long>(record.candidate_count)) != record.dim_A)
            cert.counting_identity = false;

        std::vector<Word> basis = standard_monomials(n, d);
        std::map<Word, int> col_of;
        for (size_t k = 0; k < basis.size(); ++k) col_of.emplace(basis[k], static_cast<int>(k));

        if (options.mode == CertifyMode::exact) {
            std::vector<linalg::SparseRow<LaurentScalar>> rows;
            rows.reserve(jobs.rows.size());
            for (const NCPolynomial& p : jobs.rows) {
                linalg::SparseRow<LaurentScalar> row;
                row.reserve(p.term_count());
                for (const auto& [w, c] : p.terms()) row.push_back({col_of.at(w), c});
                rows.push_back(std::move(row));
            }
            record.rank = static_cast<size_t>(
                linalg::rank_laurent(std::move(rows), static_cast<int>(basis.size())));
        } else {
            size_t agreed_rank = 0;
            bool first = true;
            for (const Rational& q0 : sample_values) {
                std::vector<linalg::SparseRow<Rational>> rows;
                rows.reserve(jobs.rows.size());
                for (const NCPolynomial& p : jobs.rows) {
                    linalg::SparseRow<Rational> row;
                    for (const auto& [w, c] : p.terms()) {
                        Rational value = c.evaluate_at(q0);
                        if (sgn(value) != 0) row.push_back({col_of.at(w), std::move(value)});
                    }
                    rows.push_back(std::move(row));
                }
                size_t rank = static_cast<size_t>(
                    linalg::rank_rational(std::move(rows), static_cast<int>(basis.size())));
                if (first) {
                    agreed_rank = rank;
                    first = false;
                } else if (rank != agreed_rank) {
                    cert.rank_stable = false;
                    agreed_rank = std::min(agreed_rank, rank);
                }
            }
            record.rank = agreed_rank;
        }

        record.pass = mpz_class(static_cast<unsigned long>(record.candidate_count)) ==
                          record.dim_A &&
                      mpz_class(static_cast<unsigned long>(record.rank)) == record.dim_A;
        cert.pass = cert.pass && record.pass;
        cert.degrees.push_back(std::move(record));
    }
    cert.pass = cert.pass && cert.rank_stable;
    return cert;
}

InvariantRingReport invariant_ring_check(int n, int max_degree) {
    InvariantRingReport report;
    report.n = n;
    report.max_degree = max_degree;

    MutationSystem S1 = build_system(n, 1);
    Rewriter rw(S1);

    report.deltas_commute = true;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            NCPolynomial da = delta_d(n, a), db = delta_d(n, b);
            if (rw.product(da, db) != rw.product(db, da)) report.deltas_commute = false;
        }

    report.monomials_independent = true;
    const HilbertProfile profile = hilbert_dims(n, max_degree);
    DeltaMonomials deltas(n, rw);
    for (int e = 1; e <= max_degree; ++e) {
        auto exponent_list = delta_monomial_exponents(n, e);
        if (mpz_class(static_cast<unsigned long>(exponent_list.size())) !=
            profile.dims_I[static_cast<size_t>(e)]) {
            report.monomials_independent = false;
            continue;
        }
        std::vector<Word> basis = standard_monomials(n, e);
        std::map<Word, int> col_of;
        for (size_t k = 0; k < basis.size(); ++k) col_of.emplace(basis[k], static_cast<int>(k));
        std::vector<linalg::SparseRow<LaurentScalar>> rows;
        for (const auto& exponents : exponent_list) {
            const NCPolynomial& p = deltas.expand(exponents);
            linalg::SparseRow<LaurentScalar> row;
            for (const auto& [w, c] : p.terms()) row.push_back({col_of.at(w), c});
            rows.push_back(std::move(row));
        }
        if (linalg::rank_laurent(std::move(rows), static_cast<int>(basis.size())) !=
            static_cast<int>(exponent_list.size()))
            report.monomials_independent = false;
    }

    report.deltas_invariant = true;
    QuantumGL H(n);
    for (int d = 1; d <= n; ++d)
        report.deltas_invariant =
            report.deltas_invariant && H.is_invariant(delta_d(n, d), CoactionVariant::alpha);

    report.pass =
        report.deltas_commute && report.monomials_independent && report.deltas_invariant;
    return report;
}

namespace {

// Laplace expansion along the first row; independent of the quantum machinery
mpz_class determinant_rc(const std::vector<std::vector<long>>& m, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    if (rows.empty()) return 1;
    mpz_class acc = 0;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != c) sub_cols.push_back(cols[j]);
        mpz_class term = m[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[c])] *
                         determinant_rc(m, sub_rows, sub_cols);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

mpz_class principal_minor_sum(const std::vector<std::vector<long>>& m, int n, int d) {
    mpz_class acc = 0;
    std::vector<int> subset;
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(subset.size()) == d) {
            acc += determinant_rc(m, subset, subset);
            return;
        }
        for (int v = next; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
    return acc;
}

}  // namespace

ClassicalOracleReport classical_oracle_check(int n, int max_degree, int trials, uint64_t seed) {
    ClassicalOracleReport report;
    report.n = n;
    report.trials = trials;

    std::mt19937_64 rng(seed);
    MutationSystem S1 = build_system(n, 1);
    Rewriter rw(S1);
    const Rational one(1);

    // commutativity at q = 1 on random pairs
    report.commutative = true;
    auto random_word = [&](int max_len) {
        Word w;
        const int len = static_cast<int>(rng() % static_cast<uint64_t>(max_len + 1));
        for (int k = 0; k < len; ++k) {
            int r = static_cast<int>(rng() % static_cast<uint64_t>(n * n));
            w.letters.push_back(GenIndex(r / n + 1, r % n + 1, n));
        }
        return w;
    };
    auto random_poly = [&]() {
        NCPolynomial p;
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < terms; ++k) {
            long c = static_cast<long>(rng() % 9) - 4;
            int e = static_cast<int>(rng() % 5) - 2;
            if (c == 0) c = 1;
            p.add_term(random_word(std::min(3, max_degree)),
                       LaurentScalar::q_power(e, Rational(c)));
        }
        return p;
    };
    for (int trial = 0; trial < trials; ++trial) {
        NCPolynomial a = random_poly(), b = random_poly();
        auto left = rw.product(a, b).evaluate_coefficients(one);
        auto right = rw.product(b, a).evaluate_coefficients(one);
        if (left != right) report.commutative = false;
    }

    // Delta_d on random integer matrices vs the minor-sum oracle
    report.minors_match = true;
    std::vector<NCPolynomial> deltas;
    for (int d = 1; d <= n; ++d) deltas.push_back(delta_d(n, d));
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::vector<long>> m(static_cast<size_t>(n),
                                         std::vector<long>(static_cast<size_t>(n)));
        for (auto& row : m)
            for (long& v : row) v = static_cast<long>(rng() % 19) - 9;
        for (int d = 1; d <= n; ++d) {
            Rational total(0);
            for (const auto& [w, c] : deltas[static_cast<size_t>(d - 1)].terms()) {
                Rational value = c.evaluate_at(one);
                for (const GenIndex& g : w.letters)
                    value *= Rational(m[static_cast<size_t>(g.row - 1)]
                                       [static_cast<size_t>(g.col - 1)]);
                total += value;
            }
            if (total != Rational(principal_minor_sum(m, n, d))) report.minors_match = false;
        }
    }
    // identity matrix sanity: Delta_d = C(n, d)
    {
        std::vector<std::vector<long>> m(static_cast<size_t>(n),
                                         std::vector<long>(static_cast<size_t>(n), 0));
        for (int k = 0; k < n; ++k) m[static_cast<size_t>(k)][static_cast<size_t>(k)] = 1;
        for (int d = 1; d <= n; ++d) {
            Rational total(0);
            for (const auto& [w, c] : deltas[static_cast<size_t>(d - 1)].terms()) {
                Rational value = c.evaluate_at(one);
                for (const GenIndex& g : w.letters)
                    value *= Rational(m[static_cast<size_t>(g.row - 1)]
                                       [static_cast<size_t>(g.col - 1)]);
                total += value;
            }
            if (total != Rational(binomial(n, d))) report.minors_match = false;
        }
    }

    report.pass = report.commutative && report.minors_match;
    return report;
}

}  // namespace qk
