#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qkostant/ncpoly.hpp"

namespace qk {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

/// Parse the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom   := 'x[' uint ',' uint ']' | 'q' | rational | '(' expr ')'
/// over generators x[i,j] with 1 <= i,j <= n. Juxtaposition order is kept
/// (free-algebra product); no relations are applied.
NCPolynomial parse_expr(std::string_view text, int n);

/// Canonical form: words in ascending lex-then-length order, q-exponents
/// always explicit (q^1), multi-term coefficients parenthesized in descending
/// exponent order with the leading sign pulled out. Round-trips through
/// parse_expr.
std::string format_expr(const NCPolynomial& p);

}  // namespace qk
