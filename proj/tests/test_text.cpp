#include <doctest.h>

#include <cctype>
#include <fstream>

#include "gvc/errors.hpp"
#include "gvc/text.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"

using namespace gvc;
using build::cst;
using build::term;
using build::x;
using build::y;

TEST_CASE("parse basic polynomial")
{
    const Polynomial p = parse_poly("3*x^2*y - 1/2*y + 4", Ring::xy());
    CHECK(p == term(3, 2, 1) + Polynomial::term(Ring::xy(), Monomial::unit(2).with_exp(1, 1),
                                                Rational(-1) / 2)
                   + cst(4));
}

TEST_CASE("parse errors carry positions")
{
    CHECK_THROWS_WITH_AS(parse_poly("x + + y", Ring::xy()),
                         doctest::Contains("position 5"), SyntaxError);
    try {
        parse_phi("t^");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 3);
    }
    try {
        parse_poly("x + z", Ring::xy());
        FAIL("expected UnknownVariableError");
    } catch (const UnknownVariableError& e) {
        CHECK(e.variable == "z");
        CHECK(e.position == 5);
    }
}

TEST_CASE("parenthesized expressions expand")
{
    CHECK(parse_poly("(x + y)^2", Ring::xy())
          == term(1, 2, 0) + term(2, 1, 1) + term(1, 0, 2));
    CHECK(parse_poly("(x + y)*(x - y)", Ring::xy()) == term(1, 2, 0) + term(-1, 0, 2));
}

TEST_CASE("precedence fixtures")
{
    // '^' binds tighter than unary minus
    CHECK(parse_poly("-x^2", Ring::xy()) == term(-1, 2, 0));
    // unary minus after a binary operator
    CHECK(parse_poly("x - -y", Ring::xy()) == x() + y());
    CHECK(parse_poly("-1/2*y", Ring::xy())
          == Polynomial::term(Ring::xy(), Monomial::unit(2).with_exp(1, 1), Rational(-1) / 2));
    // '*' binds tighter than '+'
    CHECK(parse_poly("x + 2*y", Ring::xy()) == x() + term(2, 0, 1));
}

TEST_CASE("grammar rejections")
{
    CHECK_THROWS_AS(parse_poly("2x", Ring::xy()), SyntaxError);          // implicit product
    CHECK_THROWS_AS(parse_poly("x^-2", Ring::xy()), SyntaxError);        // signed exponent
    CHECK_THROWS_AS(parse_poly("1/0", Ring::xy()), SyntaxError);         // zero denominator
    CHECK_THROWS_AS(parse_poly("x^(2)", Ring::xy()), SyntaxError);       // exponent must be literal
    CHECK_THROWS_AS(parse_poly("", Ring::xy()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x + y", Ring::xy()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x $ y", Ring::xy()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("- - x", Ring::xy()), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1.5", Ring::xy()), SyntaxError);         // no decimals
}

TEST_CASE("format canonical order and signs")
{
    CHECK(format(Polynomial::zero(Ring::xy())) == "0");
    // graded-lex descending: total degree first, then leftmost exponent
    CHECK(format(term(1, 2, 0) + term(2, 1, 2) + term(1, 0, 4)) == "y^4 + 2*x*y^2 + x^2");
    CHECK(format(term(1, 0, 3) + term(6, 1, 1)) == "y^3 + 6*x*y");
    CHECK(format(term(-1, 2, 0) + term(1, 0, 1)) == "-x^2 + y");
    CHECK(format(term(3, 2, 1)
                 + Polynomial::term(Ring::xy(), Monomial::unit(2).with_exp(1, 1), Rational(-1) / 2)
                 + cst(4))
          == "3*x^2*y - 1/2*y + 4");
    CHECK(format(term(1, 2, 1) + term(1, 1, 2)) == "x^2*y + x*y^2");
}

TEST_CASE("operator and phi parsing")
{
    CHECK(parse_operator("Dx*Dy") == DiffOperator::dx() * DiffOperator::dy());
    CHECK(parse_operator("(Dx - Dy^2)*Dy") == lambda_of(parse_phi("t^2")));
    CHECK(format(parse_operator("(Dx - Dy^2)*Dy")) == "-Dy^3 + Dx*Dy");

    const PhiSpec phi = parse_phi("t^2 + 2*t^3");
    CHECK(phi.coeff(2) == 1);
    CHECK(phi.coeff(3) == 2);
    CHECK(phi.order() == 2);
    CHECK(phi.degree() == 3);
    CHECK_THROWS_AS(parse_phi("x"), UnknownVariableError);
    CHECK_THROWS_AS(parse_operator("Dx*y"), UnknownVariableError);
}

TEST_CASE("round-trip on random polynomials and operators")
{
    testsupport::Rng rng(777101);
    for (int i = 0; i < 120; ++i) {
        const Polynomial p = testsupport::rand_poly(rng, Ring::xy(), 6, 7, 9);
        CHECK(parse_poly(format(p), Ring::xy()) == p);
    }
    for (int i = 0; i < 40; ++i) {
        const DiffOperator op(testsupport::rand_poly(rng, Ring::dxdy(), 4, 5, 9));
        CHECK(parse_operator(format(op)) == op);
    }
}

namespace {

std::vector<std::string> fixture_lines(const std::string& name)
{
    std::ifstream in(std::string(GVC_TEST_FIXTURES) + "/" + name);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("golden fixture files round-trip")
{
    for (const std::string& line : fixture_lines("expressions.txt")) {
        CAPTURE(line);
        const Polynomial p = parse_poly(line, Ring::xy());
        CHECK(parse_poly(format(p), Ring::xy()) == p);
    }
    for (const std::string& line : fixture_lines("operators.txt")) {
        CAPTURE(line);
        const DiffOperator op = parse_operator(line);
        CHECK(parse_operator(format(op)) == op);
    }
}

TEST_CASE("parse determinism")
{
    const std::string text = "x^3 - 4*x*y + 1/3*y^2 - 7";
    CHECK(parse_poly(text, Ring::xy()) == parse_poly(text, Ring::xy()));
    std::size_t first_pos = 0;
    for (int i = 0; i < 2; ++i) {
        try {
            parse_poly("x * * y", Ring::xy());
        } catch (const SyntaxError& e) {
            if (i == 0)
                first_pos = e.position;
            else
                CHECK(e.position == first_pos);
        }
    }
}
