#include <doctest.h>

#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"
#include "novikov/novikov.hpp"

using namespace novikov;

TEST_CASE("free Novikov dimensions are central binomials") {
    for (int n = 1; n <= 7; ++n) CHECK(nov_basis(n).size() == binomial(2 * n - 2, n - 1).to_long());
    CHECK_THROWS_AS(nov_basis(kMaxArityCap + 1), ResourceError);
    CHECK_THROWS_AS(basis_nov(7), ResourceError);
}

TEST_CASE("basis indices and permutations are consistent") {
    const NovBasis& b = nov_basis(4);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index(b.at(i)) == i);
    const auto map = b.permutation_map({2, 3, 4, 1});
    std::vector<bool> hit(b.size());
    for (auto j : map) hit[j] = true;
    CHECK(std::count(hit.begin(), hit.end(), true) == static_cast<long>(b.size()));
    CHECK_THROWS_AS(static_cast<void>(b.index(Orders{1, 1, 1, 1})), PreconditionError);
}

TEST_CASE("the differential embedding") {
    CHECK(embed(MagPoly::parse("ab")).str() == "a'b");
    // Both defining identities vanish on x'y.
    for (const auto& f : novikov_identities()) CHECK(embed(f).is_zero());
    // Associativity does not.
    CHECK_FALSE(embed(MagPoly::parse("(ab)c - a(bc)")).is_zero());
    CHECK_THROWS_AS(embed(MagPoly::parse("(aa)b")), PreconditionError);
}

TEST_CASE("linearized differential text matches the embedding") {
    CHECK(linearize_differential("a'b") == embed(MagPoly::parse("ab")));
    // (ab)c -> (a'b)'c = a''bc + a'b'c
    CHECK(linearize_differential("a''bc + a'b'c") == embed(MagPoly::parse("(ab)c")));
    CHECK_THROWS_AS(linearize_differential("a''b"), PreconditionError);
    CHECK_THROWS_AS(linearize_differential("a'(b"), ParseError);
}

TEST_CASE("commutative Novikov algebras are commutative associative") {
    const IdealBasis ideal = build_ideal(std::vector<MagPoly>{MagPoly::parse("ab - ba")}, 6);
    for (int n = 1; n <= 6; ++n) CHECK(ideal.quotient_dim(n) == 1);
    CHECK(implies({MagPoly::parse("ab - ba")}, MagPoly::parse("(ab)c - a(bc)")));
    CHECK_FALSE(implies({MagPoly::parse("(ab)c - a(bc)")}, MagPoly::parse("ab - ba")));
}

TEST_CASE("ideal membership and normal forms") {
    const IdealBasis ideal = build_ideal(std::vector<MagPoly>{MagPoly::parse("(ab)c")}, 4);
    CHECK(ideal.quotient_dim(3) + ideal.rank(3) == 6);
    const NovElement e = embed(MagPoly::parse("(ab)c"));
    CHECK(ideal.contains(e));
    CHECK(ideal.reduce(e).is_zero());
    const NovElement f = embed(MagPoly::parse("a(bc)"));
    CHECK(ideal.contains(ideal.reduce(f) - f));
    CHECK_THROWS_AS(build_ideal(std::vector<MagPoly>{}, 9), ResourceError);
}

TEST_CASE("orbit spans") {
    const IdealBasis none = build_ideal(std::vector<NovElement>{}, 3);
    CHECK(orbit_span_dim(none, linearize_differential("a'b")) == 2);
    CHECK(orbit_span_dim(none, linearize_differential("a'b - b'a")) == 1);
}

TEST_CASE("element JSON round trip") {
    const NovElement e = linearize_differential("a''bc - 2a'b'c");
    CHECK(e.arity() == 3);
    CHECK(nov_element_from_json(to_json(e)) == e);
    CHECK_THROWS_AS(nov_element_from_json("[1,2"), ParseError);
}
