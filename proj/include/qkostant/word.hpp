#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qk {

/// Generator x_{row,col} of the n x n grid, 1-based indices.
/// Total order: (i,j) <= (k,l) iff n*i+j <= n*k+l (row-major).
struct GenIndex {
    int16_t row = 1;
    int16_t col = 1;
    int16_t n = 1;

    GenIndex() = default;
    GenIndex(int r, int c, int size);

    /// flattened rank n*row+col, the lex key
    int flat() const { return static_cast<int>(n) * row + col; }
    /// zero-based rank in [0, n^2)
    int rank0() const { return (row - 1) * n + (col - 1); }
    /// band distance |row - col|
    int eps() const { return row >= col ? row - col : col - row; }

    friend bool operator==(const GenIndex& a, const GenIndex& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator!=(const GenIndex& a, const GenIndex& b) { return !(a == b); }
    friend bool operator<(const GenIndex& a, const GenIndex& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
    friend bool operator<=(const GenIndex& a, const GenIndex& b) { return !(b < a); }

    std::string to_string() const;
};

/// Validated comparison; throws std::invalid_argument on mismatched n.
std::strong_ordering lex_compare(const GenIndex& a, const GenIndex& b);

/// A word in the free algebra: a finite letter sequence. Empty = unit monomial.
struct Word {
    std::vector<GenIndex> letters;

    Word() = default;
    explicit Word(std::vector<GenIndex> ls) : letters(std::move(ls)) {}

    size_t degree() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    /// non-decreasing in the generator order
    bool is_standard() const;
    /// number of inversions (k<l with letter_k > letter_l)
    int descent_count() const;
    Word appended(const GenIndex& g) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    /// lex on the letter sequence, prefixes first
    friend bool operator<(const Word& a, const Word& b);
};

struct WordHash {
    size_t operator()(const Word& w) const;
};

/// row and column multiplicities of a word (size-n vectors); the relation
/// tables preserve both, so they grade everything built on the rewriting.
struct WordContent {
    std::vector<int> rows;
    std::vector<int> cols;
    friend bool operator==(const WordContent&, const WordContent&) = default;
    friend bool operator<(const WordContent& a, const WordContent& b) {
        return a.rows != b.rows ? a.rows < b.rows : a.cols < b.cols;
    }
};

WordContent content_of(const Word& w, int n);

}  // namespace qk
