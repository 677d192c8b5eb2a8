#include <doctest.h>

#include "novikov/errors.hpp"
#include "novikov/magma.hpp"

using namespace novikov;

TEST_CASE("parse and print round trip") {
    for (const char* text : {"(ab)c - a(bc)", "a(aa)", "[a,b]·c", "2a(bc) - 1/2 (ba)c"}) {
        const MagPoly f = MagPoly::parse(text);
        CHECK(MagPoly::parse(f.str()) == f);
        CHECK(poly_from_json(to_json(f)) == f);
    }
    CHECK(MagPoly::parse("(a,b,c)") == MagPoly::parse("(ab)c - a(bc)"));
    CHECK(MagPoly::parse("alpha (aa)a").terms().begin()->second == ParamPoly::var(Param::alpha));
    CHECK_THROWS_AS(MagPoly::parse("(ab"), ParseError);
    CHECK_THROWS_AS(poly_from_json("{"), ParseError);
}

TEST_CASE("multilinearization of a cube") {
    const auto parts = multilinearize(MagPoly::parse("(aa)a"));
    REQUIRE(parts.size() == 1);
    const MagPoly& f = parts.front();
    CHECK(f.multilinear_arity() == 3);
    CHECK(f.terms().size() == 6);  // all orderings of (xy)z
    // Restitution recovers 3! times the cube.
    CHECK(restitute(f, {1, 2, 3}) == MagPoly::parse("(aa)a") * ParamPoly(6));
}

TEST_CASE("multilinearization splits multidegrees") {
    const auto parts = multilinearize(MagPoly::parse("(aa)b + a(bb)"));
    CHECK(parts.size() == 2);
    for (const auto& p : parts) CHECK(p.multilinear_arity() == 3);
}

TEST_CASE("polarization is inverse to expansion") {
    for (const char* text : {"(ab)c", "a(bc) - b(ac)", "(ab)(cd)"}) {
        const MagPoly f = MagPoly::parse(text);
        CHECK(expand_polar(polarize(f)) == f);
    }
    CHECK(expand_polar(PolarPoly::parse("a·b")) == MagPoly::parse("ab + ba"));
    CHECK(expand_polar(PolarPoly::parse("[a,b]")) == MagPoly::parse("ab - ba"));
    CHECK(canonical_polar(PolarPoly::parse("[b,a] + [a,b]")).is_zero());
}

TEST_CASE("mirror and permutation action") {
    const MagPoly f = MagPoly::parse("(ab)c");
    CHECK(mirror(f) == MagPoly::parse("c(ba)"));
    CHECK(mirror(mirror(f)) == f);
    CHECK(act({2, 1, 3}, f) == MagPoly::parse("(ba)c"));
    CHECK(substitute(f, 3, MagPoly::parse("a")) == MagPoly::parse("(ab)a"));
    CHECK(derive(MagPoly::parse("(aa)b"), 1, MagPoly::parse("c")) == MagPoly::parse("(ca)b + (ac)b"));
}
