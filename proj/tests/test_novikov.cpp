#include "novikov/checks.hpp"
#include "novikov/format.hpp"
#include "novikov/novikov_algebra.hpp"
#include "novikov/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace novikov;

namespace {

// Independent count of weight-1 monomials of a fixed degree: multisets of
// size deg over the alphabet of (generator, order) pairs whose orders sum to
// deg - 1. Counted by dynamic programming over the alphabet, one element at a
// time — no monomial object is ever built, so this shares nothing with the
// enumerator under test.
std::uint64_t weight_one_count(int generators, int deg) {
    int order_budget = deg - 1;
    std::vector<int> orders;
    for (int o = 0; o <= order_budget; ++o) {
        for (int g = 0; g < generators; ++g) {
            orders.push_back(o);
        }
    }
    // count[k][s] = multisets of size k with order sum s over the prefix.
    std::vector<std::vector<std::uint64_t>> count(
        static_cast<std::size_t>(deg) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(order_budget) + 1, 0));
    count[0][0] = 1;
    for (int letter : orders) {
        // Allowing repeats of the current letter means iterating sizes upward.
        for (int k = 1; k <= deg; ++k) {
            for (int s = letter; s <= order_budget; ++s) {
                count[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] +=
                    count[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - letter)];
            }
        }
    }
    return count[static_cast<std::size_t>(deg)][static_cast<std::size_t>(order_budget)];
}

} // namespace

TEST_CASE("circle product is the defining bilinear operation") {
    auto R = standard_ring();
    auto x = DiffPolynomial::generator(R, 0);
    auto y = DiffPolynomial::generator(R, 1);
    auto z = DiffPolynomial::generator(R, 2);
    CHECK(circ(x, y) == x * y.delta());
    CHECK(circ(x, DiffPolynomial::constant(R, Rational(7))) == DiffPolynomial::zero(R));
    CHECK(circ(x + y, z) == circ(x, z) + circ(y, z));
    CHECK(circ(x, y + z) == circ(x, y) + circ(x, z));
    auto R2 = make_ring({"x", "y"}, 2);
    CHECK_THROWS_AS(circ(DiffPolynomial::generator(R2, 0), DiffPolynomial::generator(R2, 1)),
                    std::invalid_argument);
}

TEST_CASE("w0 equals its circle-product presentation") {
    auto R = standard_ring();
    auto y = DiffPolynomial::generator(R, 1);
    auto x = DiffPolynomial::generator(R, 0);
    auto z = DiffPolynomial::generator(R, 2);
    auto presentation =
        (circ(y, y).scaled(Rational(2)) - circ(x, z) - circ(z, x)).scaled(Rational(1, 2));
    CHECK(presentation == builtin_w0(R));
    CHECK(format(builtin_w0(R)) == "y*y' - 1/2*x'*z - 1/2*x*z'");
    CHECK(eval_expr("1/2*(2*(y o y) - (x o z) - (z o x))", R) == builtin_w0(R));
}

TEST_CASE("weight-1 membership separates the named elements") {
    auto R = standard_ring();
    auto x = DiffPolynomial::generator(R, 0);
    auto y = DiffPolynomial::generator(R, 1);
    CHECK(is_novikov(x + circ(y, y).scaled(Rational(2))));
    CHECK(is_novikov(DiffPolynomial::zero(R)));
    CHECK(is_novikov(builtin_w0(R)));
    CHECK_FALSE(is_novikov(builtin_w(R)));
    CHECK_FALSE(is_novikov(builtin_w(R).delta().delta()));
    CHECK_FALSE(is_novikov(DiffPolynomial::one(R)));
}

TEST_CASE("novikov elements carry the unit separately from the body") {
    auto R = standard_ring();
    auto x = DiffPolynomial::generator(R, 0);
    auto elt = NovikovElement::from_polynomial(x + DiffPolynomial::constant(R, Rational(5, 2)));
    CHECK(elt.unit() == Rational(5, 2));
    CHECK(elt.body() == x);
    CHECK_THROWS_AS(NovikovElement::from_polynomial(builtin_w(R)), std::invalid_argument);
    CHECK_THROWS_AS(NovikovElement::from_body(DiffPolynomial::one(R)), std::invalid_argument);
    CHECK(NovikovElement::one(R).unit() == Rational(1));
    CHECK(NovikovElement::zero(R) == NovikovElement::from_body(DiffPolynomial::zero(R)));
}

TEST_CASE("the adjoined unit multiplies as a two-sided identity") {
    auto R = standard_ring();
    auto a = NovikovElement(R, Rational(3, 4),
                            circ(DiffPolynomial::generator(R, 1), DiffPolynomial::generator(R, 1)));
    CHECK(nov_mul(NovikovElement::one(R), a) == a);
    CHECK(nov_mul(a, NovikovElement::one(R)) == a);
    auto y = NovikovElement::generator(R, 1);
    auto yy = nov_mul(y, y);
    CHECK(yy.unit() == Rational(0));
    CHECK(yy.body() == circ(DiffPolynomial::generator(R, 1), DiffPolynomial::generator(R, 1)));
}

TEST_CASE("term trees evaluate through the circle product") {
    auto R = standard_ring();
    auto x = DiffPolynomial::generator(R, 0);
    auto y = DiffPolynomial::generator(R, 1);
    auto z = DiffPolynomial::generator(R, 2);
    auto left = term_circ(term_circ(term_leaf(0), term_leaf(1)), term_leaf(2));
    auto right = term_circ(term_leaf(0), term_circ(term_leaf(1), term_leaf(2)));
    CHECK(eval_term(R, left).body() == x * y.delta() * z.delta());
    CHECK(eval_term(R, right).body() == x * y.delta() * z.delta() + x * y * z.delta().delta());
    CHECK(format(R, left) == "(x o y) o z");
    CHECK(format(R, right) == "x o (y o z)");
}

TEST_CASE("decomposition reproduces the worked examples") {
    auto R = standard_ring();
    auto parse_monomial = [&](const std::string& s) {
        auto f = eval_expr(s, R);
        REQUIRE(f.term_count() == 1);
        return f.terms().begin()->first;
    };

    auto simple = express_as_novikov(R, parse_monomial("y*y'"));
    CHECK(format(R, simple) == "y o y");

    auto first_derivatives = express_as_novikov(R, parse_monomial("x*x'*y'"));
    CHECK(format(R, first_derivatives) == "(x o y) o x");

    auto second_derivative = express_as_novikov(R, parse_monomial("x*z*y''"));
    CHECK(format(R, second_derivative) == "x o (z o y) - (x o z) o y");
}

TEST_CASE("decomposition round trip is exhaustive through degree 4") {
    auto R = standard_ring();
    for (int deg = 1; deg <= 4; ++deg) {
        auto monomials = weight_one_monomials(R, deg);
        for (const auto& u : monomials) {
            if (u.degree() != deg) {
                continue;
            }
            auto combo = express_as_novikov(R, u);
            CHECK(eval_combination(R, combo).body() == DiffPolynomial::monomial(R, u));
        }
    }
}

TEST_CASE("decomposition rejects inputs outside the weight-1 span") {
    auto R = standard_ring();
    auto w = builtin_w(R);
    REQUIRE(w.term_count() == 2);
    CHECK_THROWS_AS(express_as_novikov(R, w.terms().begin()->first), std::invalid_argument);
}

TEST_CASE("the weight-1 enumeration matches an independent multiset count") {
    auto R = standard_ring();
    auto all = weight_one_monomials(R, 5);
    CHECK(all.size() == 510);
    std::uint64_t by_degree[6] = {0, 0, 0, 0, 0, 0};
    for (const auto& u : all) {
        REQUIRE(u.weight() == 1);
        by_degree[u.degree()] += 1;
    }
    std::uint64_t dp_total = 0;
    for (int deg = 1; deg <= 5; ++deg) {
        CHECK(by_degree[deg] == weight_one_count(3, deg));
        dp_total += weight_one_count(3, deg);
    }
    CHECK(dp_total == 510);

    auto R2 = make_ring({"a", "b"}, 1);
    auto pairs = weight_one_monomials(R2, 4);
    std::uint64_t pair_total = 0;
    for (int deg = 1; deg <= 4; ++deg) {
        pair_total += weight_one_count(2, deg);
    }
    CHECK(pairs.size() == pair_total);
}

TEST_CASE("circle products of weight-1 monomials stay weight 1") {
    auto R = standard_ring();
    Rng rng(606);
    auto vars = all_generators(R);
    for (int k = 0; k < 100; ++k) {
        auto u = random_weight_one_monomial(R, rng, 5, vars);
        auto v = random_weight_one_monomial(R, rng, 5, vars);
        auto product = circ(DiffPolynomial::monomial(R, u), DiffPolynomial::monomial(R, v));
        CHECK(is_novikov(product));
    }
}
