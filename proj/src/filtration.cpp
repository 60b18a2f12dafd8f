#include "qkostant/filtration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "qkostant/linalg.hpp"

namespace qk {

Weighting::Weighting(int n, std::vector<int> weights) : n_(n), weights_(std::move(weights)) {
    if (n < 1) throw std::invalid_argument("Weighting: n must be positive");
    if (weights_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("Weighting: expected n^2 weights");
    for (int w : weights_)
        if (w < 0) throw std::invalid_argument("Weighting: weights must be non-negative");
}

int Weighting::word_weight(const Word& w) const {
    int total = 0;
    for (const GenIndex& g : w.letters) total += weight(g);
    return total;
}

Weighting weighting_wt(int n, int t) {
    if (t < 0 || t > n) throw std::invalid_argument("weighting_wt: t must lie in 0..n");
    std::vector<int> weights(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (std::abs(i - j) < n - t) weights[static_cast<size_t>((i - 1) * n + j - 1)] = 1;
    return Weighting(n, std::move(weights));
}

Weighting trace_weighting(int n) {
    std::vector<int> weights(static_cast<size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) weights[static_cast<size_t>((i - 1) * n + i - 1)] = 1;
    return Weighting(n, std::move(weights));
}

int filtration_degree(const NCPolynomial& p, const Weighting& w) {
    if (p.is_zero()) throw std::invalid_argument("filtration_degree: zero polynomial");
    int best = 0;
    bool first = true;
    for (const auto& [word, c] : p.terms()) {
        (void)c;
        int d = w.word_weight(word);
        best = first ? d : std::max(best, d);
        first = false;
    }
    return best;
}

int filtration_degree(const NCPolynomial& p, const Weighting& w, const MutationSystem& S) {
    return filtration_degree(normalize(p, S), w);
}

NCPolynomial symbol(const NCPolynomial& p, const Weighting& w) {
    const int top = filtration_degree(p, w);
    NCPolynomial out;
    for (const auto& [word, c] : p.terms())
        if (w.word_weight(word) == top) out.add_term(word, c);
    return out;
}

CompatibilityReport compatibility_check(const MutationSystem& S, const Weighting& w) {
    CompatibilityReport report;
    for (const auto& [lo, hi] : S.ordered_pairs()) {
        const NCPolynomial& f = S.f_entry(lo, hi);
        if (f.is_zero()) continue;
        const int bound = w.weight(lo) + w.weight(hi);
        const int deg = filtration_degree(f, w);
        if (deg > bound) {
            report.compatible = false;
            report.witness = {lo, hi};
            report.witness_degree = deg;
            report.witness_bound = bound;
            return report;
        }
    }
    return report;
}

MutationSystem symbol_system(const MutationSystem& S, const Weighting& w) {
    CompatibilityReport comp = compatibility_check(S, w);
    if (!comp.compatible)
        throw std::invalid_argument("symbol_system: weighting is not compatible");
    MutationSystem out(S.n(), S.stage() + 1);
    for (const auto& [lo, hi] : S.ordered_pairs()) {
        out.set_q_entry(lo, hi, S.q_entry(lo, hi));
        const NCPolynomial& f = S.f_entry(lo, hi);
        if (f.is_zero()) continue;
        const int bound = w.weight(lo) + w.weight(hi);
        if (filtration_degree(f, w) == bound) out.set_f_entry(lo, hi, symbol(f, w));
    }
    return out;
}

bool graded_dimension_match(int n, int t, int d) {
    const Weighting wt = weighting_wt(n, t);
    const MutationSystem next = build_system(n, t + 1);
    Rewriter rw(next);

    // column index per standard word of degree d, plus per-weight counts
    std::vector<Word> basis = standard_monomials(n, d);
    std::map<Word, int> col_of;
    std::map<int, int> standard_count;
    for (size_t k = 0; k < basis.size(); ++k) {
        col_of.emplace(basis[k], static_cast<int>(k));
        standard_count[wt.word_weight(basis[k])] += 1;
    }

    // normal forms of every degree-d word, grouped by weight (the relations of
    // the symbol system are weight-homogeneous, so each normal form stays in
    // its weight slice)
    std::map<int, std::vector<linalg::SparseRow<LaurentScalar>>> rows_by_weight;
    std::vector<GenIndex> letters;
    bool homogeneous = true;
    auto visit = [&](auto&& self) -> void {
        if (static_cast<int>(letters.size()) == d) {
            Word w{letters};
            const int e = wt.word_weight(w);
            NCPolynomial nf = rw.normal_form(w);
            linalg::SparseRow<LaurentScalar> row;
            for (const auto& [word, c] : nf.terms()) {
                if (wt.word_weight(word) != e) {
                    homogeneous = false;
                    return;
                }
                row.push_back({col_of.at(word), c});
            }
            rows_by_weight[e].push_back(std::move(row));
            return;
        }
        for (int r = 0; r < n * n && homogeneous; ++r) {
            letters.push_back(GenIndex(r / n + 1, r % n + 1, n));
            self(self);
            letters.pop_back();
        }
    };
    visit(visit);
    if (!homogeneous) return false;

    for (auto& [e, rows] : rows_by_weight) {
        int rank = linalg::rank_laurent(std::move(rows), static_cast<int>(basis.size()));
        if (rank != standard_count[e]) return false;
    }
    return true;
}

TowerReport tower_check(int n, int max_degree) {
    TowerReport report;
    for (int t = 1; t < n; ++t) {
        TowerStageReport stage;
        stage.t = t;
        const MutationSystem S_t = build_system(n, t);
        const Weighting w_t = weighting_wt(n, t);
        stage.compatible = compatibility_check(S_t, w_t).compatible;
        if (stage.compatible)
            stage.symbol_matches_next = symbol_system(S_t, w_t).same_tables(build_system(n, t + 1));
        for (int d = 1; d <= max_degree && stage.graded_dims_ok; ++d)
            stage.graded_dims_ok = graded_dimension_match(n, t, d);
        report.pass = report.pass && stage.compatible && stage.symbol_matches_next &&
                      stage.graded_dims_ok;
        report.stages.push_back(stage);
    }
    return report;
}

}  // namespace qk
