#include <algorithm>
#include <map>
#include <mutex>

#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"
#include "parallel.hpp"

namespace novikov {

namespace {

ProjectivePoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

// Multilinear monomial a^{(k1)} b^{(k2)} ... in differential text.
std::string monomial_text(const std::vector<int>& orders) {
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        s += static_cast<char>('a' + i);
        s += std::string(static_cast<std::size_t>(orders[i]), '\'');
    }
    return s;
}

// Multilinear monomials of arity n, weight n-1, with orders[i] >= lower[i].
std::vector<std::string> monomials_with_floor(int n, const std::vector<int>& lower) {
    std::vector<std::string> out;
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == k.size()) {
            k[i] = left;
            if (i >= lower.size() || left >= lower[i]) out.push_back(monomial_text(k));
            return;
        }
        const int lo = i < lower.size() ? lower[i] : 0;
        for (int v = left; v >= lo; --v) {
            k[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, n - 1);
    return out;
}

std::string derivative(char letter, int order) {
    return std::string(1, letter) + std::string(static_cast<std::size_t>(order), '\'');
}

std::string power(const std::string& base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    const std::string b = base.size() == 1 ? base : "(" + base + ")";
    return b + "^" + std::to_string(e);
}

struct Group {
    Family family;
    std::vector<ParamPoint> points;
    std::string stratum;  // descriptive, used in ids
    std::string anchor;
    std::vector<std::string> identities;
    std::string generator;
};

std::string point_tag(const ParamPoint& p) {
    std::string s = p.str();
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ','; }), s.end());
    return s;
}

std::vector<Group> groups() {
    const ParamPoint g21{pt(2, 1), {}};
    const ParamPoint g12{pt(1, 2), {}};
    const ParamPoint p11{pt(1, 1), {}};
    const ParamPoint p01{pt(0, 1), {}};
    const ParamPoint p1m1{pt(1, -1), {}};
    const ParamPoint p10{pt(1, 0), {}};

    std::vector<Group> out;

    out.push_back({Family::P, {g21, g12, p11, p01, p1m1, p10}, "all", "trivial-module family, every stratum",
                   {"alpha a''a'a^2 + (alpha+beta)(a')^3a",
                    "alpha(a'''a^3 + 2a''a'a^2) + (alpha+beta)(2a''a'a^2 + (a')^3a)",
                    "alpha(a'''a^3 + 5a''a'a^2) + (alpha+beta)(2a''a'a^2 + 3(a')^3a)",
                    "alpha a''b'a^2 + (alpha+beta)(a')^2b'a",
                    "alpha(a'''a^2b + 2a''a'ab) + (alpha+beta)(2a''a'ab + (a')^3b)",
                    "alpha(a'''a^2b + 2a''b'a^2 + b''a'a^2 + 2a''a'ab) + (alpha+beta)(2a''a'ab + 2(a')^2b'a + (a')^3b)",
                    "alpha(b'''a^3 + 2b''a'a^2 + 3a''b'a^2) + (alpha+beta)(2b''a'a^2 + 3(a')^2b'a)"},
                   {}});

    out.push_back({Family::P, {g21, g12, p11}, "generic-and-1:1", "trivial-module family, generic stratum and (1:1)",
                   {"b''a'a^2 + a''b'a^2 + 2a''a'ab", "3(a')^2b'a + (a')^3b", "b'''a^3 + 3a'''a^2b"},
                   {}});

    out.push_back({Family::P, {g21, g12}, "generic", "trivial-module family, generic stratum",
                   {"a'''a^2b", "b'''a^3", "a''a'ab", "a''b'a^2", "b''a'a^2", "(a')^3b", "b'(a')^2a", "a'''bcd", "a'b'c'd",
                    "b''b'a^2 + 2b''a'ab", "b''a'ab + a''b'ab + a''a'b^2", "b''b'a^2 + 2a''b'ab",
                    "alpha(3b''b'a^2 + 2a''b'ab) + (alpha+beta)(2b''a'ab)", "a''a'b^2", "a''b'ab", "b''a'ab",
                    "b''b'a^2", "c''a'ab + b''a'ac", "c''b'a^2 + b''c'a^2", "a''c'ab + a''b'ac",
                    "alpha(b''c'a^2 + 2a''b'ac) + (alpha+beta)(2b''a'ac)", "b''c'a^2 + 2a''c'ab",
                    "b''c'a^2 + 2b''a'ac", "a''b'ac", "a''c'ab", "b''a'ac", "c''a'ab", "b''c'a^2", "c''b'a^2",
                    "a''b'cd"},
                   {}});

    out.push_back({Family::P, {p11}, "1:1", "trivial-module family at (1:1)",
                   {"a'''a^3", "a''a'a^2", "(a')^3a", "a'''a^2b", "b'''a^3", "b''a'a^2", "a''b'a^2 + 2a''a'ab",
                    "a''b'a^2 + 2b'(a')^2a", "(a')^3b + 3b'(a')^2a", "a'''bcd", "(a')^4b", "a'b'c'd'e",
                    "a''b'c'd'ef", "(a'')^2a^3", "a''b''a^3", "(a'')^2a^2b", "(b'')^2a^3", "a''b''a^2b",
                    "(a'')^2ab^2", "a''b''cde", "a'''b''cdef", "a''''bcde", "a'''''bcdef", "b''(a')^2a^2",
                    "a'b'c'd'e'f", "a'''b'c'def"},
                   {}});

    out.push_back({Family::P, {p01}, "0:1", "trivial-module family at (0:1)",
                   {"b''a'a^2 + a''b'a^2 + 2a''a'ab", "3(a')^2b'a + (a')^3b", "a''a'a^2", "(a')^3a", "b'(a')^2a",
                    "(a')^3b", "a''a'ab", "b''a'a^2", "a''b'a^2", "a'b'c'd", "a''b'cd"},
                   {}});

    out.push_back({Family::P, {p1m1}, "1:-1", "trivial-module family at (1:-1)",
                   {"a'''a^3", "a''a'a^2", "b'''a^3 + 3a'''a^2b", "b''a'a^2 + a''b'a^2 + 2a''a'ab", "a'''a^2b",
                    "b'''a^3", "a''a'ab", "a''b'a^2", "b''a'a^2", "a'''bcd", "a''b'cd", "a''''bcde"},
                   {}});

    {
        Group g{Family::P, {ParamPoint{}}, "lemma", "vanishing of a''b'cd forces higher monomials", {}, "a''b'cd"};
        for (int n = 4; n <= 5; ++n) {
            for (const auto& m : monomials_with_floor(n, {2, 1})) g.identities.push_back(m);
        }
        out.push_back(std::move(g));
    }

    std::vector<ParamPoint> q_samples;
    for (const auto& d : {Rational(0), Rational(-1), Rational(1), Rational(2), Rational(-3, 2)}) {
        q_samples.push_back({{}, ProjectivePoint(Rational(1), d)});
    }
    {
        Group g{Family::Q, q_samples, "gamma1", "two-dimensional-module family with gamma = 1",
                {"a''a'ab - b''a'a^2 + delta((a')^3b - (a')^2b'a)",
                 "a'''a^2b + 4a''a'ab - 2b''a'a^2 + delta(2a''a'ab + 2(a')^3b - a''b'a^2 - 2(a')^2b'a)",
                 "a'''a^2b + 2a''a'ab + delta(2a''a'ab - a''b'a^2)",
                 "b'''a^3 + 2b''a'a^2 + delta b''a'a^2",
                 "a'''a^2b + a''b'a^2 + a''a'ab - b'''a^3 - 2b''a'a^2 + delta(2a''a'ab - a''b'a^2 - b''a'a^2)",
                 "a'''a^2b + (1+2delta)a''a'ab + (1-delta)a''b'a^2",
                 "a''b'a^2 - a''a'ab",
                 "b'''ba^2 + 3b''b'a^2 - a''b'ab + delta(b''a'ab + a'(b')^2a - (a')^2b'b)",
                 "a'''ab^2 + 2a''b'ab - b''a'ab + a''a'b^2 + delta(2a''a'b^2 - a''b'ab + (a')^2b'b - a'(b')^2a)",
                 "a''b'ab - b''b'a^2 + delta((a')^2b'b - a'(b')^2a)",
                 "a'''ab^2 + (1-delta)a''b'ab - b''a'ab + (1+2delta)a''a'b^2 + b''b'a^2",
                 "b'''a^2b + 2b''b'a^2 + delta b''a'ab",
                 "a'''ab^2 + 2a''a'b^2 + delta a''b'ab",
                 "(-1+2delta)a''a'b^2 + (1-2delta)a''b'ab - b''a'ab + b''b'a^2",
                 "a'''ab^2 - b'''a^2b + (1-delta)a''b'ab + (1+2delta)a''a'b^2 - (2+delta)b''a'ab",
                 "(-1+2delta)a''a'b^2 + (1-2delta)a''b'ab - 2b''a'ab + 2b''b'a^2",
                 "b''a'ab - b''b'a^2",
                 "a''b'ab - a''a'b^2",
                 "a''c'ab - b''c'a^2 + delta((a')^2c'b - a'b'c'a)",
                 "a'''abc + 2a''c'ab + a''a'bc - 2b''a'ac + c''a'ab + delta(2a''a'bc + 2(a')^2c'b - a''b'ac - a'b'c'a - (a')^2b'c)",
                 "b'''a^2c - a''b'ac + 2b''c'a^2 + c''b'a^2 + delta(b''a'ac - (a')^2b'c + a'b'c'a)",
                 "a'''abc - b'''a^2c + a''b'ac + a''a'bc - 2b''a'ac + delta(2a''a'bc - a''b'ac - b''a'ac)",
                 "c''a'ab - c''b'a^2",
                 "c''d'ab + c''a'bd - 2c''b'ad",
                 "d''c'ab + d''a'bc - 2d''b'ac",
                 "d''c'ab + b''c'ad + d''a'bc + b''a'cd - 2d''b'ac - 2b''d'ac",
                 "b''c'ad + b''a'cd - 2b''d'ac",
                 "b''d'ac + b''a'cd - 2b''c'ad",
                 "a''b'cd - a''c'bd",
                 "a'''a^2b + 2a''b'a^2 + delta a''a'ab",
                 "a'''a^2b + (2+delta)a''b'a^2"},
                {}};
        for (int n = 4; n <= 6; ++n) {
            // a^{(n-2)} b' c d ... - a^{(n-2)} b c' d ...
            std::vector<int> k1(static_cast<std::size_t>(n), 0), k2(static_cast<std::size_t>(n), 0);
            k1[0] = k2[0] = n - 2;
            k1[1] = 1;
            k2[2] = 1;
            g.identities.push_back(monomial_text(k1) + " - " + monomial_text(k2));
            // a^{(n-1)} a^{n-2} b + (n-2+delta) a^{(n-2)} a^{n-2} b'
            g.identities.push_back(derivative('a', n - 1) + power("a", n - 2) + "b + (" + std::to_string(n - 2) +
                                   "+delta)" + derivative('a', n - 2) + power("a", n - 2) + "b'");
        }
        for (int n = 5; n <= 6; ++n) {
            for (const auto& m : monomials_with_floor(n, {2, 2})) g.identities.push_back(m);
        }
        for (int n = 4; n <= 5; ++n) {
            const std::string tail = power("a'", n - 3);
            g.identities.push_back("a''ab" + tail + " - b''a^2" + tail + " + delta(" + power("a'", n - 1) + "b - " +
                                   power("a'", n - 2) + "b'a)");
        }
        out.push_back(std::move(g));
    }

    {
        Group g{Family::Q, {ParamPoint{{}, pt(0, 1)}}, "0:1", "two-dimensional-module family at (0:1)",
                {"a''a'a^2", "b''a'a^2", "a''a'ab", "a''b'a^2", "b''a'ab", "a''a'b^2", "b''a'ac", "a''a'bc",
                 "a''b'ac", "b''c'a^2", "a''b'cd", "b''a'ab + a'(b')^2a - (a')^2b'b",
                 "2a''a'b^2 - a''b'ab + (a')^2b'b - a'(b')^2a", "(a')^2c'b - a'b'c'a", "(a')^2b'c - a'b'c'a",
                 "b''a'ac - (a')^2b'c + a'b'c'a", "2a''a'bc - a''b'ac - b''a'ac"},
                {}};
        for (int n = 4; n <= 5; ++n) {
            g.identities.push_back(power("a'", n - 1) + "b - " + power("a'", n - 2) + "b'a");
        }
        for (const auto& m : monomials_with_floor(5, {2, 1})) g.identities.push_back(m);
        out.push_back(std::move(g));
    }

    out.push_back({Family::O,
                   {ParamPoint{pt(1, -1), pt(1, 1)}, ParamPoint{pt(1, -1), pt(0, 1)}, ParamPoint{pt(1, -1), pt(1, 2)}},
                   "1:-1-delta-nonzero", "both-identities family, (1:-1) with delta nonzero",
                   {"(a')^3b - (a')^2b'a"}, {}});
    out.push_back({Family::O, {ParamPoint{pt(1, -1), pt(1, 0)}}, "perm", "both-identities family, permutative point",
                   {"a''bc"}, {}});
    out.push_back({Family::O, {ParamPoint{pt(0, 1), pt(0, 1)}}, "nap-dual", "both-identities family, NAP dual point",
                   {"a'b'c"}, {}});
    out.push_back({Family::O,
                   {ParamPoint{pt(1, 1), pt(1, 0)}, ParamPoint{pt(1, 1), pt(0, 1)}, ParamPoint{pt(1, 1), pt(1, 2)}},
                   "1:1", "both-identities family, (1:1) with any (gamma:delta)", {"a''a'ab - a''b'a^2"}, {}});
    return out;
}

ParamAssignment assignment(const ParamPoint& p) {
    ParamAssignment a;
    if (p.ab) {
        a[Param::alpha] = p.ab->x();
        a[Param::beta] = p.ab->y();
    }
    if (p.gd) {
        a[Param::gamma] = p.gd->x();
        a[Param::delta] = p.gd->y();
    }
    return a;
}

std::string family_tag(Family f) { return std::string(family_name(f)); }

} // namespace

std::vector<LedgerEntry> consequence_ledger() {
    std::vector<LedgerEntry> out;
    for (const auto& g : groups()) {
        for (const auto& point : g.points) {
            int index = 0;
            for (const auto& identity : g.identities) {
                ++index;
                LedgerEntry e;
                const std::string num = (index < 10 ? "0" : "") + std::to_string(index);
                e.id = family_tag(g.family) + "-" + g.stratum + (g.points.size() > 1 ? "@" + point_tag(point) : "") +
                       "-" + num;
                if (!g.generator.empty()) e.id = "lemma-" + g.stratum + "-" + num;
                e.anchor = g.anchor;
                e.family = g.family;
                e.point = point;
                e.identity = identity;
                e.generator = g.generator;
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

std::vector<LedgerResult> check_ledger(const std::vector<LedgerEntry>& entries, unsigned jobs) {
    auto key_of = [](const LedgerEntry& e) {
        return e.generator.empty() ? family_tag(e.family) + point_tag(e.point) : "gen:" + e.generator;
    };

    std::vector<NovElement> elements(entries.size());
    std::map<std::string, int> need;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        elements[i] = linearize_differential(entries[i].identity).specialize(assignment(entries[i].point));
        int& m = need[key_of(entries[i])];
        m = std::max(m, elements[i].arity());
    }

    std::vector<std::string> keys;
    for (const auto& [k, m] : need) keys.push_back(k);
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < keys.size(); ++i) slot[keys[i]] = i;
    std::vector<const LedgerEntry*> representative(keys.size(), nullptr);
    for (const auto& e : entries) {
        auto& r = representative[slot[key_of(e)]];
        if (!r) r = &e;
    }

    std::vector<IdealBasis> ideals(keys.size());
    detail::parallel_for(keys.size(), jobs, [&](std::size_t i) {
        const LedgerEntry& e = *representative[i];
        std::vector<NovElement> gens;
        if (!e.generator.empty()) gens.push_back(linearize_differential(e.generator));
        else gens = family_generators(e.family, e.point).embedded;
        ideals[i] = build_ideal(gens, need[keys[i]]);
    });

    std::vector<LedgerResult> out(entries.size());
    detail::parallel_for(entries.size(), jobs, [&](std::size_t i) {
        out[i].entry = entries[i];
        out[i].arity = elements[i].arity();
        out[i].implied = ideals[slot.at(key_of(entries[i]))].contains(elements[i]);
    });
    return out;
}

} // namespace novikov
