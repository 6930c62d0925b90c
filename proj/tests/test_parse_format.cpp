#include "novikov/checks.hpp"
#include "novikov/format.hpp"
#include "novikov/maps.hpp"
#include "novikov/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace novikov;
using Catch::Matchers::Message;

TEST_CASE("operator precedence puts derivatives above products above circle") {
    auto R = standard_ring();
    auto x = DiffPolynomial::generator(R, 0);
    auto y = DiffPolynomial::generator(R, 1);
    auto z = DiffPolynomial::generator(R, 2);

    CHECK(eval_expr("x o y*z", R) == circ(x, y * z));
    CHECK(eval_expr("(x o y)*z", R) == circ(x, y) * z);
    CHECK(eval_expr("x o y'", R) == circ(x, y.delta()));
    CHECK(eval_expr("x o y^2", R) == circ(x, y * y));
    CHECK(eval_expr("x - y o z", R) == x - circ(y, z));
    CHECK(eval_expr("-x o y", R) == -circ(x, y));
    CHECK(eval_expr("2*x'^3", R) == (x.delta().pow(3)).scaled(Rational(2)));
    CHECK(eval_expr("x''", R) == eval_expr("x^(2)", R));
    CHECK(eval_expr("x'''", R) == eval_expr("x^(3)", R));
    CHECK(eval_expr("1/2*x - 3", R) == x.scaled(Rational(1, 2)) - DiffPolynomial::constant(R, Rational(3)));
}

TEST_CASE("the circle product refuses to chain without parentheses") {
    auto R = standard_ring();
    CHECK_THROWS_MATCHES(parse("x o y o z"), ParseError,
                         Message("'o' is nonassociative; parenthesize the chain (offset 6)"));
    CHECK(eval_expr("(x o y) o z", R) == circ(circ(DiffPolynomial::generator(R, 0),
                                                   DiffPolynomial::generator(R, 1)),
                                              DiffPolynomial::generator(R, 2)));
    CHECK(eval_expr("x o (y o z)", R) == circ(DiffPolynomial::generator(R, 0),
                                              circ(DiffPolynomial::generator(R, 1),
                                                   DiffPolynomial::generator(R, 2))));
    // The two groupings really differ.
    CHECK(eval_expr("(x o y) o z", R) != eval_expr("x o (y o z)", R));
}

TEST_CASE("parse errors carry byte offsets") {
    auto R = standard_ring();
    CHECK_THROWS_MATCHES(parse("x o -y"), ParseError,
                         Message("expected a number, generator, or '(' (offset 4)"));
    CHECK_THROWS_MATCHES(parse("1/0"), ParseError, Message("zero denominator (offset 2)"));
    CHECK_THROWS_MATCHES(eval_expr("q + x", R), ParseError,
                         Message("unknown generator 'q' (offset 0)"));
    CHECK_THROWS_MATCHES(parse("x +"), ParseError,
                         Message("expected a number, generator, or '(' (offset 3)"));
    CHECK_THROWS_MATCHES(parse("(x"), ParseError, Message("expected ')' (offset 2)"));
    try {
        parse("x o y o z");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
}

TEST_CASE("prime and multi-index notation track the derivation count") {
    auto R2 = make_ring({"x", "y"}, 2);
    CHECK_THROWS_MATCHES(eval_expr("x'", R2), ParseError,
                         Message("prime notation needs a single derivation; use ^(i1,...,im) (offset 1)"));
    CHECK_THROWS_MATCHES(eval_expr("x^(1)", R2), ParseError,
                         Message("multi-index length must equal the number of derivations (offset 1)"));
    CHECK_THROWS_MATCHES(eval_expr("x o y", R2), ParseError,
                         Message("'o' needs a single derivation (offset 2)"));
    auto f = eval_expr("x^(1,2)*y", R2);
    CHECK(f == DiffPolynomial::generator(R2, 0).derivative({1, 2}) * DiffPolynomial::generator(R2, 1));
    CHECK(format(f) == "x^(1,2)*y");
    CHECK(eval_expr(format(f), R2) == f);
}

TEST_CASE("formatting is canonical and parses back") {
    auto R = standard_ring();
    CHECK(format(DiffPolynomial::zero(R)) == "0");
    CHECK(format(DiffPolynomial::constant(R, Rational(-7, 3))) == "-7/3");
    CHECK(format(eval_expr("x + 2*y + z", R)) == "z + 2*y + x");
    CHECK(format(builtin_w(R)) == "y^2 - x*z");
    CHECK(format(builtin_w0(R)) == "y*y' - 1/2*x'*z - 1/2*x*z'");
    CHECK(format(builtin_w(R).delta().delta()) == "2*y'^2 + 2*y*y'' - x''*z - 2*x'*z' - x*z''");
    // Orders three and up switch from primes to explicit parentheses.
    CHECK(format(eval_expr("x'''*y", R)) == "x^(3)*y");

    Rng rng(77);
    for (int k = 0; k < 50; ++k) {
        auto f = random_polynomial(R, rng, 4, 4, 3);
        CHECK(eval_expr(format(f), R) == f);
    }
}

TEST_CASE("novikov elements format with the unit in front") {
    auto R = standard_ring();
    CHECK(format(NovikovElement(R, Rational(5, 2), DiffPolynomial::zero(R))) == "5/2");
    CHECK(format(NovikovElement::zero(R)) == "0");
    auto a = NovikovElement(R, Rational(-1), eval_expr("y*y'", R));
    CHECK(format(a) == "-1 + y*y'");
    auto b = NovikovElement::from_polynomial(eval_expr("3 - 2*z", R));
    CHECK(format(b) == "3 - 2*z");
}

TEST_CASE("map images format generator by generator") {
    auto R = standard_ring();
    auto rows = format_images(builtin_partial1(R));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::pair<std::string, std::string>{"x", "2*y"});
    CHECK(rows[1] == std::pair<std::string, std::string>{"y", "z"});
    CHECK(rows[2] == std::pair<std::string, std::string>{"z", "0"});

    auto nagata_rows = format_images(nagata(R));
    CHECK(nagata_rows[1] == std::pair<std::string, std::string>{"y", "y + y^2*z - x*z^2"});
    CHECK(nagata_rows[2] == std::pair<std::string, std::string>{"z", "z"});
}

TEST_CASE("decomposition trees format with minimal parentheses") {
    auto R = standard_ring();
    auto x = term_leaf(0);
    auto y = term_leaf(1);
    auto z = term_leaf(2);
    CHECK(format(R, x) == "x");
    CHECK(format(R, term_circ(x, y)) == "x o y");
    CHECK(format(R, term_circ(term_circ(x, y), z)) == "(x o y) o z");
    CHECK(format(R, term_circ(x, term_circ(y, z))) == "x o (y o z)");
    TermCombination comb = {{Rational(1), term_circ(x, term_circ(z, y))},
                            {Rational(-1), term_circ(term_circ(x, z), y)}};
    CHECK(format(R, comb) == "x o (z o y) - (x o z) o y");
    TermCombination scaled = {{Rational(-3, 2), term_circ(x, y)}, {Rational(2), y}};
    CHECK(format(R, scaled) == "-3/2*(x o y) + 2*y");
}
