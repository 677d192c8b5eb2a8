#include <doctest.h>

#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"

using namespace novikov;

namespace {
ProjectivePoint pt(long x, long y) { return {Rational(x), Rational(y)}; }
}

TEST_CASE("projective points normalize") {
    CHECK(pt(2, -4).str() == "(1:-2)");
    CHECK(pt(2, -4) == pt(-1, 2));
    CHECK(pt(0, 5) == pt(0, 1));
    CHECK(ProjectivePoint(Rational(1, 2), Rational(1, 3)).str() == "(3:2)");
    CHECK_THROWS_AS(pt(0, 0), PreconditionError);
}

TEST_CASE("families") {
    CHECK(parse_family("q") == Family::Q);
    CHECK_THROWS_AS(parse_family("X"), ParseError);
    CHECK(family_parameters(Family::O) == std::pair{true, true});
    CHECK_THROWS_AS(family_generators(Family::P, {}), PreconditionError);
    const auto s = family_generators(Family::S, {{}, pt(1, 1)});
    REQUIRE(s.magmatic.size() == s.embedded.size());
    for (std::size_t i = 0; i < s.magmatic.size(); ++i) CHECK(embed(s.magmatic[i]) == s.embedded[i]);
    // The Novikov relation space has half the arity-3 combs.
    CHECK(relation_rank(novikov_relation_space()) == 6);
}

TEST_CASE("the trivial-module identity at (1:-1) is the commutator") {
    CHECK(trivial_identity(pt(1, -1)) == multilinearize(MagPoly::parse("(aa)a - a(aa)")).front());
    CHECK(trivial_identity(pt(2, 6)) == trivial_identity(pt(1, 3)));
}

TEST_CASE("the one-dimensional algebra") {
    const FiniteAlgebra a = algebra_A();
    CHECK(check_algebra_identity(a, MagPoly::parse("(ab)c - a(bc)")));
    CHECK_FALSE(check_algebra_identity(a, MagPoly::parse("ab")));
    for (const auto& f : novikov_identities()) CHECK(check_algebra_identity(a, f));
}

TEST_CASE("the two-dimensional algebra") {
    const FiniteAlgebra b = algebra_B();
    const auto e = b.basis_vector(0), f = b.basis_vector(1);
    CHECK(b.format(b.multiply(e, f)) == "-δ e");
    CHECK(b.format(b.multiply(f, f)) == "f");
    // Not associative for delta != 0.
    CHECK_FALSE(check_algebra_identity(b, MagPoly::parse("(ab)c - a(bc)")));
    CHECK(check_algebra_identity(b.specialize({{Param::delta, Rational(0)}}), MagPoly::parse("(ab)c - a(bc)")));
    for (const auto& row : check_B_triple_products()) CHECK_MESSAGE(row.matches, row.expression);
    CHECK_THROWS_AS(static_cast<void>(b.change_basis(RationalMatrix{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}})), DomainError);
}

TEST_CASE("listed Gröbner systems") {
    for (const auto s : {GbSystem::q_1_m1, GbSystem::q_1_0, GbSystem::q_0_1}) {
        const RewriteSystem rs = gb_system(s);
        CHECK(rs.size() == 14);
        CHECK(rs.is_reduced());
        // Printed rules that differ from the corrected ones are not in the oracle basis.
        const RewriteSystem printed = gb_system(s, true);
        const RewriteSystem oracle = gb_system_oracle(s);
        for (const auto i : gb_system_misprints(s)) {
            const auto c = printed.rules()[i].combination();
            CHECK(std::none_of(oracle.rules().begin(), oracle.rules().end(),
                               [&](const Rule& r) { return r.combination() == c; }));
        }
    }
    CHECK(gb_system_misprints(GbSystem::q_1_m1).size() == 1);
    CHECK(gb_system_misprints(GbSystem::q_1_0).size() == 4);
    CHECK(gb_system_misprints(GbSystem::q_0_1).empty());
    CHECK_FALSE(is_groebner(gb_system(GbSystem::q_1_0, true), 5));
    CHECK(gb_system_point(GbSystem::q_1_m1) == pt(1, -1));
}

TEST_CASE("consequence ledger") {
    const auto entries = consequence_ledger();
    CHECK(entries.size() > 400);
    std::set<std::string> ids;
    for (const auto& e : entries) ids.insert(e.id);
    CHECK(ids.size() == entries.size());

    // Negative controls: a false claim must be reported as not implied.
    LedgerEntry bad;
    bad.id = "control-arity-two";
    bad.anchor = "control";
    bad.family = Family::P;
    bad.point = {pt(2, 1), {}};
    bad.identity = "a'b";
    LedgerEntry bad2 = bad;
    bad2.id = "control-free-cube";
    bad2.family = Family::Q;
    bad2.point = {{}, pt(1, 0)};
    bad2.identity = "a'''bcd";
    const auto results = check_ledger({bad, bad2}, 1);
    CHECK_FALSE(results[0].implied);
    CHECK_FALSE(results[1].implied);
    CHECK(results[1].arity == 4);
}

TEST_CASE("lattice") {
    const LatticeReport r = lattice_report({pt(1, -1), pt(1, 0)}, 4, 1);
    const auto v21 = r.find(3, {2, 1});
    const auto v31 = r.find(4, {3, 1});
    REQUIRE(v21);
    REQUIRE(v31);
    CHECK(r.implies[*v21][*v31]);
    CHECK_FALSE(r.implies[*v31][*v21]);
    CHECK_THROWS_AS(lattice_report({pt(1, -1), pt(1, 0)}, 7, 1), ResourceError);
    // Nov itself has V_3 twice in arity 3: both coordinates of the pencil are needed.
    CHECK_THROWS_AS(lattice_report({pt(1, 1), pt(1, 1)}, 0, 1), ResourceError);
}

TEST_CASE("dual list") {
    for (const auto& d : catalogued_duals()) CHECK_MESSAGE(d.matches, (d.name + ": " + d.detail));
}

TEST_CASE("verification report") {
    VerifyConfig c;
    c.groups = {"free", "determinants", "series"};
    c.timings = false;
    c.jobs = 1;
    const VerificationReport r = verify_all(c);
    CHECK_FALSE(r.has_failure());
    CHECK(r.checks.front().id == "free-dim-1");
    const std::string json = to_json(r);
    CHECK(to_json(report_from_json(json)) == json);
    CHECK(to_json(verify_all(c)) == json);

    c.groups = {"both-family"};
    c.max_arity = 4;
    const VerificationReport small = verify_all(c);
    CHECK_FALSE(small.has_failure());
    CHECK(std::any_of(small.checks.begin(), small.checks.end(),
                      [](const CheckResult& x) { return x.status == CheckStatus::skipped; }));

    c.groups = {"no-such-group"};
    CHECK_THROWS_AS(verify_all(c), PreconditionError);
    CHECK_THROWS_AS(report_from_json("{\"checks\": [{\"id\": 1}]}"), ParseError);
}
