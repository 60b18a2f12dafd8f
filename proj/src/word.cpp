#include "qkostant/word.hpp"

#include <sstream>
#include <stdexcept>

namespace qk {

GenIndex::GenIndex(int r, int c, int size)
    : row(static_cast<int16_t>(r)), col(static_cast<int16_t>(c)), n(static_cast<int16_t>(size)) {
    if (size < 1) throw std::invalid_argument("GenIndex: n must be positive");
    if (r < 1 || r > size || c < 1 || c > size)
        throw std::invalid_argument("GenIndex: indices must lie in 1..n");
}

std::string GenIndex::to_string() const {
    std::ostringstream os;
    os << "x[" << row << "," << col << "]";
    return os.str();
}

std::strong_ordering lex_compare(const GenIndex& a, const GenIndex& b) {
    if (a.n != b.n) throw std::invalid_argument("lex_compare: mismatched algebra size");
    return a.flat() <=> b.flat();
}

bool Word::is_standard() const {
    for (size_t k = 1; k < letters.size(); ++k)
        if (letters[k] < letters[k - 1]) return false;
    return true;
}

int Word::descent_count() const {
    int count = 0;
    for (size_t k = 0; k < letters.size(); ++k)
        for (size_t l = k + 1; l < letters.size(); ++l)
            if (letters[l] < letters[k]) ++count;
    return count;
}

Word Word::appended(const GenIndex& g) const {
    Word out(*this);
    out.letters.push_back(g);
    return out;
}

bool operator<(const Word& a, const Word& b) {
    const size_t m = std::min(a.letters.size(), b.letters.size());
    for (size_t k = 0; k < m; ++k) {
        if (a.letters[k] != b.letters[k]) return a.letters[k] < b.letters[k];
    }
    return a.letters.size() < b.letters.size();
}

size_t WordHash::operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (const GenIndex& g : w.letters) {
        h ^= static_cast<size_t>(g.rank0() + 1);
        h *= 1099511628211ull;
    }
    return h;
}

WordContent content_of(const Word& w, int n) {
    WordContent c{std::vector<int>(static_cast<size_t>(n), 0),
                  std::vector<int>(static_cast<size_t>(n), 0)};
    for (const GenIndex& g : w.letters) {
        c.rows[static_cast<size_t>(g.row - 1)] += 1;
        c.cols[static_cast<size_t>(g.col - 1)] += 1;
    }
    return c;
}

}  // namespace qk
