#include <doctest.h>

#include "novikov/errors.hpp"
#include "novikov/series.hpp"

using namespace novikov;

namespace {
Rational catalan(long n) { return binomial(2 * n, n) / Rational(n + 1); }
}

TEST_CASE("inverse of t/(1-t)") {
    RationalSeries f(10);
    for (int k = 1; k <= 10; ++k) f[k] = 1;
    const RationalSeries g = comp_inverse(f);
    for (int k = 1; k <= 10; ++k) CHECK(g[k] == Rational(k % 2 == 1 ? 1 : -1));
    CHECK(compose(f, g)[1] == Rational(1));
    for (int k = 2; k <= 10; ++k) CHECK(compose(f, g)[k].is_zero());
}

TEST_CASE("commutative and Lie series are dual") {
    const RationalSeries com = from_dims([](int) { return 1L; }, 12);
    const RationalSeries lie = from_dims([](int n) { return factorial(n - 1).to_long(); }, 12);
    CHECK(check_dual_pair(com, lie));
    CHECK(sign_twist(comp_inverse(com)) == lie);
    CHECK(koszul_sign_test(com).passed);
}

TEST_CASE("sign test reports the first failure") {
    const SignTestResult r = koszul_sign_test(from_dims(std::vector<long>{1, 2, 5}, 6));
    CHECK_FALSE(r.passed);
    CHECK(*r.failing_n == 5);
    CHECK(*r.value == Rational(-17, 12));
}

TEST_CASE("weighted inverse: Catalan numbers") {
    // t + u t^2 inverts to sum (-1)^(n-1) C_(n-1) u^(n-1) t^n.
    const PolySeries f = parse_series("t + u t^2", 12);
    for (int n = 1; n <= 12; ++n) {
        CHECK(weighted_inverse_coeff(f, n, n - 1) == catalan(n - 1) * Rational(n % 2 == 1 ? 1 : -1));
        if (n > 1) CHECK(weighted_inverse_coeff(f, n, 0).is_zero());
    }
}

TEST_CASE("parsing and JSON") {
    const PolySeries p = parse_series("(1/2 + 1/2 u) t^2 + t - t^5", 6);
    CHECK(p[1] == ParamPoly(1));
    CHECK(p[5] == ParamPoly(-1));
    CHECK(parse_series(p.str(), 6) == p);
    CHECK(series_from_json(to_json(p)) == p);
    const RationalSeries r = to_rational(parse_series("t + 5/6 t^3", 4));
    CHECK(r.str() == "t + 5/6 t^3");
    CHECK(to_rational(series_from_json(to_json(r))) == r);
    CHECK_THROWS_AS(parse_series("1 + t"), ParseError);
    CHECK_THROWS_AS(to_rational(p), PreconditionError);
}

TEST_CASE("degenerate input") {
    RationalSeries f(4);
    f[2] = 1;
    CHECK_THROWS_AS(comp_inverse(f), DomainError);
}
