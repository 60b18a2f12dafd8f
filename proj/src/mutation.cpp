#include "qkostant/mutation.hpp"

#include <stdexcept>

#include "qkostant/filtration.hpp"

namespace qk {

PairClass classify_pair(const GenIndex& a, const GenIndex& b) {
    if (lex_compare(a, b) != std::strong_ordering::less)
        throw std::invalid_argument("classify_pair: requires a < b");
    if (a.row == b.row) return PairClass::same_row;
    if (a.col == b.col) return PairClass::same_col;
    if (a.col > b.col) return PairClass::antidiagonal;
    return PairClass::diagonal_curly;
}

MutationSystem::MutationSystem(int n, int stage) : n_(n), stage_(stage) {
    if (n < 1) throw std::invalid_argument("MutationSystem: n must be positive");
    const size_t slots = static_cast<size_t>(n) * n * n * n;
    q_table_.assign(slots, LaurentScalar(1));
    f_table_.assign(slots, NCPolynomial());
}

size_t MutationSystem::pair_slot(const GenIndex& lo, const GenIndex& hi) const {
    return static_cast<size_t>(lo.rank0()) * (static_cast<size_t>(n_) * n_) +
           static_cast<size_t>(hi.rank0());
}

const LaurentScalar& MutationSystem::q_entry(const GenIndex& lo, const GenIndex& hi) const {
    return q_table_[pair_slot(lo, hi)];
}

const NCPolynomial& MutationSystem::f_entry(const GenIndex& lo, const GenIndex& hi) const {
    return f_table_[pair_slot(lo, hi)];
}

void MutationSystem::set_q_entry(const GenIndex& lo, const GenIndex& hi, LaurentScalar q) {
    q_table_[pair_slot(lo, hi)] = std::move(q);
}

void MutationSystem::set_f_entry(const GenIndex& lo, const GenIndex& hi, NCPolynomial f) {
    f_table_[pair_slot(lo, hi)] = std::move(f);
}

GenIndex MutationSystem::generator(int rank0) const {
    return GenIndex(rank0 / n_ + 1, rank0 % n_ + 1, n_);
}

std::vector<std::pair<GenIndex, GenIndex>> MutationSystem::ordered_pairs() const {
    std::vector<std::pair<GenIndex, GenIndex>> out;
    const int count = n_ * n_;
    out.reserve(static_cast<size_t>(count) * (count - 1) / 2);
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) out.emplace_back(generator(a), generator(b));
    return out;
}

bool MutationSystem::same_tables(const MutationSystem& rhs) const {
    if (n_ != rhs.n_) return false;
    return q_table_ == rhs.q_table_ && f_table_ == rhs.f_table_;
}

MutationSystem build_system(int n, int stage) {
    if (stage < 1 || stage > n)
        throw std::invalid_argument("build_system: stage must lie in 1..n");
    MutationSystem S(n, stage);
    const Weighting w_prev = weighting_wt(n, stage - 1);
    const LaurentScalar tail_scalar =
        LaurentScalar::q_power(-1) - LaurentScalar::q_power(1);  // q^-1 - q
    const LaurentScalar q_inverse = LaurentScalar::q_power(-1);
    for (const auto& [lo, hi] : S.ordered_pairs()) {
        switch (classify_pair(lo, hi)) {
            case PairClass::same_row:
            case PairClass::same_col:
                // x_hi x_lo = q^-1 x_lo x_hi
                S.set_q_entry(lo, hi, q_inverse);
                break;
            case PairClass::antidiagonal:
                break;  // commute: q = 1, f = 0
            case PairClass::diagonal_curly: {
                GenIndex swapped_lo(lo.row, hi.col, n);
                GenIndex swapped_hi(hi.row, lo.col, n);
                if (w_prev.weight(swapped_lo) == 1 && w_prev.weight(swapped_hi) == 1) {
                    Word tail;
                    tail.letters = {swapped_lo, swapped_hi};
                    S.set_f_entry(lo, hi, NCPolynomial(std::move(tail), tail_scalar));
                }
                break;
            }
        }
    }
    return S;
}

NCPolynomial elementary_mutation(const Word& w, size_t right_pos, const MutationSystem& S) {
    if (right_pos == 0 || right_pos >= w.letters.size())
        throw std::invalid_argument("elementary_mutation: position out of range");
    const GenIndex lo = w.letters[right_pos];
    const GenIndex hi = w.letters[right_pos - 1];
    if (!(lo < hi)) throw std::invalid_argument("elementary_mutation: not a descent position");
    NCPolynomial out;
    Word swapped = w;
    std::swap(swapped.letters[right_pos - 1], swapped.letters[right_pos]);
    out.add_term(swapped, S.q_entry(lo, hi));
    const NCPolynomial& f = S.f_entry(lo, hi);
    for (const auto& [fw, fc] : f.terms()) {
        Word patched;
        patched.letters.reserve(w.letters.size() - 2 + fw.letters.size());
        patched.letters.insert(patched.letters.end(), w.letters.begin(),
                               w.letters.begin() + static_cast<long>(right_pos) - 1);
        patched.letters.insert(patched.letters.end(), fw.letters.begin(), fw.letters.end());
        patched.letters.insert(patched.letters.end(),
                               w.letters.begin() + static_cast<long>(right_pos) + 1,
                               w.letters.end());
        out.add_term(patched, fc);
    }
    return out;
}

const NCPolynomial& Rewriter::insert(const Word& standard, const GenIndex& letter) {
    Word key = standard.appended(letter);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    // the pair (last letter, new letter) is the only descent; rewrite it and
    // push the displaced letters back in recursively
    const GenIndex last = standard.letters.back();
    Word prefix = standard;
    prefix.letters.pop_back();

    NCPolynomial result;
    {
        // swap branch: q * (prefix . letter . last)
        NCPolynomial moved = insert_part(prefix, letter);
        result += insert_poly(moved, last).scaled(S_->q_entry(letter, last));
    }
    const NCPolynomial& f = S_->f_entry(letter, last);
    for (const auto& [fw, fc] : f.terms()) {
        NCPolynomial piece = NCPolynomial(prefix, fc);
        for (const GenIndex& g : fw.letters) piece = insert_poly(piece, g);
        result += piece;
    }
    auto [it, inserted] = cache_.emplace(std::move(key), std::move(result));
    (void)inserted;
    return it->second;
}

// normal form of (standard word) * letter with the sorted fast path inline
NCPolynomial Rewriter::insert_part(const Word& standard, const GenIndex& letter) {
    if (standard.empty() || standard.letters.back() <= letter)
        return NCPolynomial(standard.appended(letter));
    return insert(standard, letter);
}

NCPolynomial Rewriter::insert_poly(const NCPolynomial& standard_poly, const GenIndex& letter) {
    NCPolynomial out;
    for (const auto& [w, c] : standard_poly.terms()) {
        if (w.empty() || w.letters.back() <= letter) {
            out.add_term(w.appended(letter), c);
        } else {
            out += insert(w, letter).scaled(c);
        }
    }
    return out;
}

NCPolynomial Rewriter::normal_form(const Word& w) {
    NCPolynomial acc = NCPolynomial::unit();
    for (const GenIndex& g : w.letters) acc = insert_poly(acc, g);
    return acc;
}

NCPolynomial Rewriter::normal_form(const NCPolynomial& p) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        if (w.is_standard())
            out.add_term(w, c);
        else
            out += normal_form(w).scaled(c);
    }
    return out;
}

NCPolynomial Rewriter::product(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial left = normal_form(a);
    NCPolynomial out;
    for (const auto& [wb, cb] : b.terms()) {
        NCPolynomial acc = left;
        for (const GenIndex& g : wb.letters) acc = insert_poly(acc, g);
        out += acc.scaled(cb);
    }
    return out;
}

NCPolynomial Rewriter::power(const NCPolynomial& a, unsigned e) {
    NCPolynomial acc = NCPolynomial::unit();
    for (unsigned k = 0; k < e; ++k) acc = product(acc, a);
    return acc;
}

NCPolynomial normalize(const NCPolynomial& p, const MutationSystem& S) {
    Rewriter rw(S);
    return rw.normal_form(p);
}

NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b, const MutationSystem& S) {
    Rewriter rw(S);
    return rw.product(a, b);
}

NCPolynomial normalize_with_strategy(const NCPolynomial& p, const MutationSystem& S,
                                     MutationStrategy strategy, std::mt19937_64* rng) {
    if (strategy == MutationStrategy::random_descent && rng == nullptr)
        throw std::invalid_argument("normalize_with_strategy: random strategy needs an rng");
    NCPolynomial current = p;
    while (true) {
        // collect the non-standard words
        std::vector<const Word*> pending;
        for (const auto& [w, c] : current.terms()) {
            (void)c;
            if (!w.is_standard()) pending.push_back(&w);
        }
        if (pending.empty()) return current;

        Word chosen;
        size_t pos = 0;
        if (strategy == MutationStrategy::leftmost_of_greatest) {
            chosen = *pending.back();  // term map is ascending, take the greatest
            for (pos = 1; pos < chosen.letters.size(); ++pos)
                if (chosen.letters[pos] < chosen.letters[pos - 1]) break;
        } else {
            chosen = *pending[(*rng)() % pending.size()];
            std::vector<size_t> descents;
            for (size_t k = 1; k < chosen.letters.size(); ++k)
                if (chosen.letters[k] < chosen.letters[k - 1]) descents.push_back(k);
            pos = descents[(*rng)() % descents.size()];
        }
        LaurentScalar coeff = current.coefficient(chosen);
        current.add_term(chosen, -coeff);
        current += elementary_mutation(chosen, pos, S).scaled(coeff);
    }
}

PbwReport pbw_confluence_check(const MutationSystem& S, int max_overlap_degree) {
    if (max_overlap_degree < 3)
        throw std::invalid_argument("pbw_confluence_check: max_overlap_degree must be >= 3");
    PbwReport report;
    Rewriter rw(S);
    const int count = S.n() * S.n();

    std::vector<int> pick;
    // strictly descending words x_c x_b x_a ... of each length
    auto run_word = [&](const std::vector<int>& ranks) {
        Word w;
        for (int r : ranks) w.letters.push_back(S.generator(r));
        NCPolynomial left = rw.normal_form(elementary_mutation(w, 1, S));
        NCPolynomial right = rw.normal_form(elementary_mutation(w, w.letters.size() - 1, S));
        ++report.overlaps_checked;
        if (left != right) {
            report.pass = false;
            report.failures.push_back({w, left, right});
        }
    };

    for (int length = 3; length <= max_overlap_degree; ++length) {
        pick.assign(static_cast<size_t>(length), 0);
        // descending combinations of distinct generator ranks
        auto recurse = [&](auto&& self, int depth, int min_rank) -> void {
            if (depth == length) {
                run_word(pick);
                return;
            }
            for (int r = min_rank; r < count; ++r) {
                pick[static_cast<size_t>(length - 1 - depth)] = r;  // build ascending from the back
                self(self, depth + 1, r + 1);
            }
        };
        recurse(recurse, 0, 0);
    }
    return report;
}

std::vector<Word> standard_monomials(int n, int d) {
    if (n < 1) throw std::invalid_argument("standard_monomials: n must be positive");
    if (d < 0) throw std::invalid_argument("standard_monomials: degree must be >= 0");
    std::vector<Word> out;
    Word current;
    const int count = n * n;
    auto recurse = [&](auto&& self, int min_rank, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int r = min_rank; r < count; ++r) {
            current.letters.push_back(GenIndex(r / n + 1, r % n + 1, n));
            self(self, r, remaining - 1);
            current.letters.pop_back();
        }
    };
    recurse(recurse, 0, d);
    return out;
}

}  // namespace qk
