#include <doctest.h>

#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"
#include "novikov/novikov.hpp"
#include "novikov/rep_sn.hpp"

using namespace novikov;

TEST_CASE("irreducible dimensions square-sum to n!") {
    for (int n = 1; n <= 8; ++n) {
        Rational sum;
        for (const auto& p : partitions(n)) sum += Rational(hook_dim(p) * hook_dim(p));
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("characters are orthonormal") {
    for (int n = 2; n <= 6; ++n) {
        const auto ps = partitions(n);
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                Rational s;
                for (const auto& mu : ps) s += class_size(mu) * Rational(character(a, mu) * character(b, mu));
                CHECK(s / factorial(n) == Rational(a == b ? 1 : 0));
            }
            CHECK(character(a, Partition(static_cast<std::size_t>(n), 1)) == hook_dim(a));
        }
    }
}

TEST_CASE("cycle types") {
    CHECK(cycle_type({2, 3, 1, 5, 4}) == Partition{3, 2});
    CHECK(cycle_type(class_representative({3, 1, 1})) == Partition{3, 1, 1});
}

TEST_CASE("partition labels") {
    CHECK(partition_label({3, 1}) == "V_{3,1}");
    for (const char* t : {"3,1", "(3,1)", "V31", "V_{3,1}"}) CHECK(parse_partition(t) == Partition{3, 1});
    CHECK_THROWS_AS(parse_partition("V"), ParseError);
}

TEST_CASE("free Novikov arity three") {
    const IdealBasis none = build_ideal(std::vector<NovElement>{}, 5);
    const ModuleDecomposition d = decompose(none, 3);
    CHECK(d.str() == "V_{3}^2 + V_{2,1}^2");
    for (int n = 1; n <= 5; ++n) CHECK(decompose(none, n).dimension() == static_cast<long>(nov_basis(n).size()));
    CHECK(decomposition_from_json(to_json(d)) == d);
}

TEST_CASE("distributivity") {
    // Commutative associative: one trivial module in each arity.
    const auto com = is_distributive(std::vector<MagPoly>{MagPoly::parse("ab - ba")}, 5);
    CHECK(com.distributive);
    const auto nov = is_distributive(std::vector<MagPoly>{}, 4);
    REQUIRE_FALSE(nov.distributive);
    CHECK(nov.first_failure->first == 3);
}

TEST_CASE("one trivial-module identity leaves V_{2,1} doubled") {
    const std::vector<MagPoly> gens{trivial_identity(ProjectivePoint(Rational(1), Rational(1)))};
    CHECK(decompose(build_ideal(gens, 3), 3).str() == "V_{3} + V_{2,1}^2");
    const auto r = is_distributive(gens, 3);
    REQUIRE_FALSE(r.distributive);
    CHECK(r.first_failure->first == 3);
    CHECK(partition_label(r.first_failure->second) == "V_{2,1}");
}
