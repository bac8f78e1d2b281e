#include "gvc/text.hpp"

#include <cctype>
#include <limits>

#include "gvc/errors.hpp"

namespace gvc {

namespace {

std::string describe(const Token& token)
{
    if (token.kind == TokenKind::End)
        return "end of input";
    return "'" + token.lexeme + "'";
}

class Parser {
public:
    Parser(std::string_view text, const Ring& ring) : tokens_(lex(text)), ring_(ring) {}

    Polynomial parse()
    {
        Polynomial value = expr();
        expect_end();
        return value;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }
    bool at(TokenKind kind) const { return peek().kind == kind; }

    bool accept(TokenKind kind)
    {
        if (!at(kind))
            return false;
        ++pos_;
        return true;
    }

    void expect_end()
    {
        if (!at(TokenKind::End))
            throw SyntaxError(peek().position, "'+', '-', '*', '^' or end of input",
                              describe(peek()));
    }

    Polynomial expr()
    {
        bool negate = accept(TokenKind::Minus);
        Polynomial value = term();
        if (negate)
            value = -value;
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            const bool minus = advance().kind == TokenKind::Minus;
            bool inner_negate = accept(TokenKind::Minus);
            Polynomial rhs = term();
            if (inner_negate)
                rhs = -rhs;
            if (minus)
                value -= rhs;
            else
                value += rhs;
        }
        return value;
    }

    Polynomial term()
    {
        Polynomial value = factor();
        while (accept(TokenKind::Star))
            value *= factor();
        return value;
    }

    Polynomial factor()
    {
        Polynomial value = base();
        if (accept(TokenKind::Caret)) {
            const Token exp = expect(TokenKind::Number, "non-negative integer exponent");
            value = pow(value, parse_uint(exp));
        }
        return value;
    }

    Polynomial base()
    {
        if (at(TokenKind::Number)) {
            const Token num = advance();
            Rational value{Int(num.lexeme)};
            if (accept(TokenKind::Slash)) {
                const Token den = expect(TokenKind::Number, "positive integer denominator");
                const Int d{den.lexeme};
                if (d == 0)
                    throw SyntaxError(den.position, "positive integer denominator", "'0'");
                value /= Rational(d);
            }
            return Polynomial::constant(ring_, value);
        }
        if (at(TokenKind::Ident)) {
            const Token ident = advance();
            if (!ring_.index_of(ident.lexeme))
                throw UnknownVariableError(ident.lexeme, ident.position);
            return Polynomial::variable(ring_, ident.lexeme);
        }
        if (accept(TokenKind::LParen)) {
            Polynomial value = expr();
            expect(TokenKind::RParen, "')'");
            return value;
        }
        throw SyntaxError(peek().position, "number, variable or '('", describe(peek()));
    }

    Token expect(TokenKind kind, const std::string& what)
    {
        if (!at(kind))
            throw SyntaxError(peek().position, what, describe(peek()));
        return advance();
    }

    unsigned parse_uint(const Token& token) const
    {
        const Int value{token.lexeme};
        if (value > std::numeric_limits<unsigned>::max() / 2)
            throw SyntaxError(token.position, "a smaller exponent", "'" + token.lexeme + "'");
        return static_cast<unsigned>(value);
    }

    std::vector<Token> tokens_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t column = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            tokens.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), column});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size()
                   && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tokens.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), column});
            i = j;
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '^': kind = TokenKind::Caret; break;
        case '/': kind = TokenKind::Slash; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        default:
            throw SyntaxError(column, "a token", "'" + std::string(1, c) + "'");
        }
        tokens.push_back({kind, std::string(1, c), column});
        ++i;
    }
    tokens.push_back({TokenKind::End, "", text.size() + 1});
    return tokens;
}

Polynomial parse_poly(std::string_view text, const Ring& ring)
{
    return Parser(text, ring).parse();
}

PhiSpec parse_phi(std::string_view text)
{
    return PhiSpec(parse_poly(text, Ring::t()));
}

DiffOperator parse_operator(std::string_view text)
{
    return DiffOperator(parse_poly(text, Ring::dxdy()));
}

namespace {

std::string format_monomial(const Monomial& m, const Ring& ring)
{
    std::string out;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const int e = m.exp(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += ring.name(i);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string format_term(const Monomial& m, const Rational& magnitude, const Ring& ring)
{
    const std::string vars = format_monomial(m, ring);
    if (vars.empty())
        return format_rational(magnitude);
    if (magnitude == 1)
        return vars;
    return format_rational(magnitude) + "*" + vars;
}

} // namespace

std::string format(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative)
                out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += format_term(m, magnitude, p.ring());
    }
    return out;
}

std::string format(const DiffOperator& op)
{
    return format(op.symbol());
}

std::string format(const PhiSpec& phi)
{
    return format(phi.poly());
}

} // namespace gvc
