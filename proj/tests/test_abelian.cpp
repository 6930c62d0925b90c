#include "novikov/abelian.hpp"
#include "novikov/checks.hpp"
#include "novikov/format.hpp"
#include "novikov/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

using namespace novikov;

TEST_CASE("commutative polynomials behave like a polynomial ring") {
    auto R = standard_ring();
    auto x = CommPolynomial::generator(R, 0);
    auto y = CommPolynomial::generator(R, 1);
    auto sum = x + y;
    CHECK(sum * sum == x * x + (x * y).scaled(Rational(2)) + y * y);
    CHECK(sum - sum == CommPolynomial::zero(R));
    CHECK(sum.pow(0) == CommPolynomial::one(R));
    CHECK(sum.pow(3) == sum * sum * sum);
    CHECK_THROWS_AS(sum.pow(-1), std::invalid_argument);
    CHECK(format(comm_w(R)) == "y^2 - x*z");
    CHECK(format(CommPolynomial::zero(R)) == "0");
}

TEST_CASE("partial derivatives act coordinatewise") {
    auto R = standard_ring();
    auto x = CommPolynomial::generator(R, 0);
    auto y = CommPolynomial::generator(R, 1);
    auto z = CommPolynomial::generator(R, 2);
    auto f = x * x * y + z.pow(3).scaled(Rational(1, 3));
    CHECK(f.partial(0) == (x * y).scaled(Rational(2)));
    CHECK(f.partial(1) == x * x);
    CHECK(f.partial(2) == z * z);
    CHECK(CommPolynomial::one(R).partial(0) == CommPolynomial::zero(R));
    CHECK_THROWS_AS(f.partial(3), std::invalid_argument);
}

TEST_CASE("theta erases first derivatives and kills higher orders") {
    auto R = standard_ring();
    auto x = CommPolynomial::generator(R, 0);
    auto y = CommPolynomial::generator(R, 1);
    auto z = CommPolynomial::generator(R, 2);

    CHECK(theta(builtin_w0(R)) == comm_w(R));
    CHECK(theta(eval_expr("x*y'", R)) == x * y);
    CHECK(theta(eval_expr("x'*y + 3*z", R)) == x * y + z.scaled(Rational(3)));
    // An order-2 factor sends the whole monomial to zero.
    CHECK(theta(eval_expr("x*y*z''", R)) == CommPolynomial::zero(R));
    CHECK(theta(eval_expr("x*y*z'' + y*y'", R)) == y * y);
    // Only weight-1 bodies are in the domain.
    CHECK_THROWS_AS(theta(builtin_w(R)), std::invalid_argument);

    auto a = NovikovElement(R, Rational(5, 2), eval_expr("y*y'", R));
    CHECK(theta(a) == CommPolynomial::constant(R, Rational(5, 2)) + y * y);
    CHECK(theta(NovikovElement::one(R)) == CommPolynomial::one(R));
}

TEST_CASE("theta intertwines the circle product with multiplication") {
    auto R = standard_ring();
    Rng rng(2024);
    auto vars = std::vector<int>{0, 1, 2};
    for (int k = 0; k < 60; ++k) {
        auto f = random_weight_one_polynomial(R, rng, 3, 2, vars);
        auto g = random_weight_one_polynomial(R, rng, 3, 2, vars);
        CHECK(theta(circ(f, g)) == theta(f) * theta(g));
    }
}

TEST_CASE("the derivation with image w times the linear flow descends to Nagata's") {
    auto R = standard_ring();
    auto induced = induced_derivation(builtin_d1(R));
    CHECK(induced == nagata_derivation(R));
    auto w = comm_w(R);
    CHECK(nagata_derivation(R)(w) == CommPolynomial::zero(R));

    // Diff-mode derivations have no induced map.
    std::vector<DiffPolynomial> images = {eval_expr("2*y", R), eval_expr("z", R),
                                          DiffPolynomial::zero(R)};
    CHECK_THROWS_AS(induced_derivation(Derivation(R, images, false)), std::invalid_argument);
}

TEST_CASE("the exponential automorphism descends to the Nagata automorphism") {
    auto R = standard_ring();
    CHECK(induced_endomorphism(builtin_psi(R)) == nagata(R));
    CHECK(comm_exp(nagata_derivation(R)) == nagata(R));
    // Nagata fixes w, so it composes with itself along the same quadric.
    auto w = comm_w(R);
    CHECK(nagata(R)(w) == w);
}

TEST_CASE("commutative exponentials invert and diverge as expected") {
    auto R = standard_ring();
    auto D = nagata_derivation(R);
    auto forward = comm_exp(D);
    std::vector<CommPolynomial> neg;
    for (const auto& g : D.images()) {
        neg.push_back(-g);
    }
    auto backward = comm_exp(CommDerivation(R, neg));
    CHECK(compose(forward, backward) == CommEndomorphism::identity(R));
    CHECK(compose(backward, forward) == CommEndomorphism::identity(R));

    // x -> x is not nilpotent, so the series never stabilizes.
    std::vector<CommPolynomial> bad = {CommPolynomial::generator(R, 0), CommPolynomial::zero(R),
                                       CommPolynomial::zero(R)};
    CHECK_THROWS_AS(comm_exp(CommDerivation(R, bad), 12), std::domain_error);
}

TEST_CASE("commutative endomorphisms substitute and compose") {
    auto R = standard_ring();
    auto x = CommPolynomial::generator(R, 0);
    auto y = CommPolynomial::generator(R, 1);
    auto z = CommPolynomial::generator(R, 2);
    CommEndomorphism rotate(R, {y, z, x});
    CommEndomorphism square(R, {x * x, y, z});
    CHECK(compose(rotate, square)(x) == y * y);
    CHECK(compose(square, rotate)(x) == y);
    CHECK(compose(rotate, CommEndomorphism::identity(R)) == rotate);
    CHECK(rotate(comm_w(R)) == z * z - x * y);
}
