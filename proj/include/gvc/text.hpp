#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gvc/diffop.hpp"
#include "gvc/polynomial.hpp"

namespace gvc {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position; // 1-based column
};

std::vector<Token> lex(std::string_view text);

// Grammar:
//   expr     := ['-'] term (('+' | '-') ['-'] term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | ident | '(' expr ')'
//   rational := uint ('/' uint)?
// No implicit multiplication; '^' binds tighter than unary minus; exponents
// are non-negative integer literals; denominators must be positive.
Polynomial parse_poly(std::string_view text, const Ring& ring);

// Univariate in t.
PhiSpec parse_phi(std::string_view text);

// Over the symbols Dx, Dy, e.g. "(Dx - Dy^2)*Dy".
DiffOperator parse_operator(std::string_view text);

// Canonical text: graded-lex descending term order, explicit '*' and '^',
// rationals as a/b, "0" for zero. parse(format(v)) = v.
std::string format(const Polynomial& p);
std::string format(const DiffOperator& op);
std::string format(const PhiSpec& phi);

} // namespace gvc
