#include <doctest.h>

#include <random>

#include "novikov/errors.hpp"
#include "novikov/matrix.hpp"
#include "novikov/param_poly.hpp"
#include "novikov/rational.hpp"

using namespace novikov;

TEST_CASE("rationals stay in lowest terms") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(static_cast<void>(Rational(0).inverse()), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("rational arithmetic beyond machine integers") {
    Rational x = factorial(30) / factorial(28);
    CHECK(x == Rational(870));
    Rational big = factorial(25);
    CHECK(big.str() == "15511210043330985984000000");
    CHECK((big / big) == Rational(1));
    CHECK(binomial(10, 5) == Rational(252));
    Rational h;
    for (int k = 1; k <= 10; ++k) h += Rational(1, k);
    CHECK(h == Rational(7381, 2520));
}

TEST_CASE("parameter polynomials") {
    const ParamPoly a = ParamPoly::var(Param::alpha);
    const ParamPoly b = ParamPoly::var(Param::beta);
    const ParamPoly p = (a + b) * (a - b);
    CHECK(p == a * a - b * b);
    CHECK(p.total_degree() == 2);
    CHECK(p.evaluate({{Param::alpha, Rational(3)}, {Param::beta, Rational(2)}}) == Rational(5));
    CHECK(p.specialize({{Param::beta, Rational(1)}}) == a * a - ParamPoly(1));
    CHECK(ParamPoly::parse("alpha^2 - beta^2") == p);
    CHECK(ParamPoly::parse(p.str()) == p);
    CHECK(p.coefficient(Param::alpha, 2) == ParamPoly(1));
    CHECK(p.substitute(Param::beta, a) .is_zero());
    CHECK_THROWS_AS(ParamPoly::parse("alpha + zeta"), ParseError);
    CHECK_THROWS_AS(static_cast<void>(p.evaluate({{Param::alpha, Rational(1)}})), PreconditionError);
}

TEST_CASE("rref, rank and nullspace agree") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m(4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m(i, j) = Rational(d(rng));
        const auto r = rref(m);
        const RationalMatrix k = nullspace(m);
        CHECK(r.rank + k.rows() == 6);
        const RationalMatrix zero = m * k.transpose();
        for (std::size_t i = 0; i < zero.rows(); ++i)
            for (std::size_t j = 0; j < zero.cols(); ++j) CHECK(zero(i, j).is_zero());
    }
}

TEST_CASE("determinants") {
    const RationalMatrix m{{Rational(2), Rational(1)}, {Rational(7), Rational(4)}};
    CHECK(determinant(m) == Rational(1));
    const RationalMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(determinant(singular).is_zero());
    // Vandermonde: prod_{i<j} (x_j - x_i)
    const ParamPoly a = ParamPoly::var(Param::alpha);
    const ParamPoly b = ParamPoly::var(Param::beta);
    const ParamPoly g = ParamPoly::var(Param::gamma);
    const PolyMatrix v{{ParamPoly(1), a, a * a}, {ParamPoly(1), b, b * b}, {ParamPoly(1), g, g * g}};
    CHECK(poly_det(v) == (b - a) * (g - a) * (g - b));
    const ParamAssignment at{{Param::alpha, Rational(1)}, {Param::beta, Rational(2)}, {Param::gamma, Rational(5)}};
    CHECK(determinant(specialize(v, at)) == poly_det(v).evaluate(at));
    CHECK_THROWS_AS(poly_det(PolyMatrix(2, 3)), ShapeError);
}
