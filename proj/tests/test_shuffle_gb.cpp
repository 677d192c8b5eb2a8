#include <doctest.h>

#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"
#include "novikov/shuffle.hpp"

using namespace novikov;

namespace {
long double_factorial(long n) { return n <= 1 ? 1 : n * double_factorial(n - 2); }
}

TEST_CASE("shuffle monomials of the polarized alphabet fill the magmatic space") {
    // 2^(n-1) (2n-3)!! = n! Catalan(n-1)
    for (int n = 2; n <= 6; ++n) {
        const long want = (1L << (n - 1)) * double_factorial(2 * n - 3);
        CHECK(static_cast<long>(enumerate_monomials(polarized_alphabet(), n).size()) == want);
    }
}

TEST_CASE("shuffle trees") {
    const ShuffleTree l1 = ShuffleTree::leaf(1), l2 = ShuffleTree::leaf(2), l3 = ShuffleTree::leaf(3);
    const ShuffleTree t = ShuffleTree::node(1, ShuffleTree::node(0, l1, l3), l2);
    CHECK(t.arity() == 3);
    CHECK(t.is_shuffle());
    CHECK(t.str(polarized_alphabet()) == "[a1·a3,a2]");
    CHECK(ShuffleTree::from_code(t.code()) == t);
    CHECK_THROWS_AS(ShuffleTree::node(0, l2, l1), PreconditionError);
    CHECK(divides(ShuffleTree::node(0, l1, l2), t));
}

TEST_CASE("polarized expressions convert both ways") {
    const Alphabet a = polarized_alphabet();
    for (const char* text : {"[a1·a3,a2]", "(a1·a2)·a3 - [a1,[a2,a3]]", "a3·[a2,a1]"}) {
        const PolarPoly p = PolarPoly::parse(text);
        CHECK(canonical_polar(to_polar(to_shuffle(p, a), a)) == canonical_polar(p));
    }
    // [a2,a1] = -[a1,a2]
    const auto c = to_shuffle(PolarPoly::parse("[a2,a1]"), a);
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->second == Rational(-1));
}

TEST_CASE("order presets parse and are total") {
    const Alphabet a = polarized_alphabet();
    for (auto spec : {order_presets::kRevGradedRevPathLex, order_presets::kBracketCountRevPathLex,
                      order_presets::kDotCountRevPathLex, order_presets::kDotCountPathLex}) {
        const MonomialOrder o = MonomialOrder::parse(spec, a);
        const auto ms = enumerate_monomials(a, 4);
        for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
            CHECK(o.compare(ms[i], ms[i + 1]) != 0);
            CHECK(o.compare(ms[i], ms[i + 1]) == -o.compare(ms[i + 1], ms[i]));
        }
    }
    CHECK_THROWS_AS(MonomialOrder::parse("graded(%)", a), ParseError);
}

TEST_CASE("completion of the Novikov presentation reproduces the free dimensions") {
    Presentation p;
    p.relations = polarized_novikov_presentation();
    const RewriteSystem rs = complete(to_rewrite_system(p), CompletionOptions{5, 5000, 1});
    CHECK(rs.is_reduced());
    CHECK(is_groebner(rs, 5));
    CHECK(normal_count(rs, 3) == 6);
    CHECK(normal_count(rs, 4) == 20);
    CHECK(normal_count(rs, 5) == 70);
}

TEST_CASE("rule budget") {
    Presentation p;
    p.relations = polarized_novikov_presentation();
    CHECK_THROWS_AS(complete(to_rewrite_system(p), CompletionOptions{5, 3, 1}), BudgetExceeded);
}

TEST_CASE("reduction and interreduction") {
    Presentation p;
    p.relations = {PolarPoly::parse("[a1,a2]·a3"), PolarPoly::parse("[a1,a2]·a3 - [a1·a2,a3]")};
    const RewriteSystem listed = listed_rewrite_system(p);
    CHECK(listed.size() == 2);
    CHECK_FALSE(listed.is_reduced());
    CHECK(listed.interreduced().is_reduced());
    const Alphabet a = polarized_alphabet();
    CHECK(listed.interreduced().reduce(to_shuffle(PolarPoly::parse("[a1·a2,a3]"), a)).empty());
}

TEST_CASE("presentation JSON round trip") {
    const Presentation p = koszul_family_presentation(Family::T, {ProjectivePoint(Rational(1), Rational(2)), {}});
    const Presentation q = presentation_from_json(to_json(p));
    CHECK(q.order == p.order);
    CHECK(q.generators == p.generators);
    REQUIRE(q.relations.size() == p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        CHECK(canonical_polar(q.relations[i]) == canonical_polar(p.relations[i]));
    }
    CHECK_THROWS_AS(presentation_from_json("{\"relations\": 3}"), ParseError);
}
