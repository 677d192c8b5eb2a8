#include "novikov/catalog.hpp"
#include "novikov/errors.hpp"

namespace novikov {

namespace {

ProjectivePoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

bool inside_novikov(const QuadraticPresentation& p) {
    QuadraticPresentation both = novikov_relation_space();
    both.relations.insert(both.relations.end(), p.relations.begin(), p.relations.end());
    return relation_rank(both) == relation_rank(novikov_relation_space());
}

std::string relations_text(const QuadraticPresentation& p) {
    if (p.relations.empty()) return "(no relations)";
    std::string s;
    for (const auto& r : p.relations) {
        if (!s.empty()) s += "; ";
        s += r.str();
    }
    return s;
}

DualCheck exact_dual(std::string name, std::string source, const QuadraticPresentation& src, const std::string& expected_text) {
    DualCheck c;
    c.name = std::move(name);
    c.source = std::move(source);
    c.expected = expected_text;
    c.dual = koszul_dual(src);
    const QuadraticPresentation left = mirrored(c.dual);
    QuadraticPresentation expected{Symmetry::none, {}};
    if (!expected_text.empty()) expected.relations.push_back(MagPoly::parse(expected_text));
    const bool same = same_relation_space(left, expected);
    const bool quotient = inside_novikov(left);
    c.matches = same && quotient;
    c.detail = "mirrored dual rank " + std::to_string(relation_rank(left)) + (same ? ", equal" : ", different") +
               (quotient ? ", Novikov is a quotient" : ", Novikov is not a quotient");
    return c;
}

DualCheck pencil_dual(std::string name, std::string source, const QuadraticPresentation& src, const MagPoly& x,
                      const MagPoly& y, const ProjectivePoint& expected_point, const std::string& display) {
    DualCheck c;
    c.name = std::move(name);
    c.source = std::move(source);
    c.expected = display + " at " + expected_point.str();
    c.dual = koszul_dual(src);
    const QuadraticPresentation left = mirrored(c.dual);
    const auto found = match_pencil(left, x, y);
    const bool quotient = inside_novikov(left);
    const bool same = found && ProjectivePoint(found->first, found->second) == expected_point;
    c.matches = same && quotient;
    c.detail = std::string("pencil point ") + (found ? ProjectivePoint(found->first, found->second).str() : "none") +
               (quotient ? ", Novikov is a quotient" : ", Novikov is not a quotient");
    return c;
}

} // namespace

QuadraticPresentation novikov_quotient_presentation(const std::vector<MagPoly>& identities) {
    return arity3_presentation(build_ideal(identities, 3));
}

Presentation koszul_family_presentation(Family f, const ParamPoint& point) {
    Presentation p;
    if (f == Family::S) {
        if (!point.gd) throw PreconditionError("S needs (gamma:delta)");
        const Rational g = point.gd->x();
        const Rational d = point.gd->y();
        for (const char* r : {"[[a1,a2],a3]+[[a2,a3],a1]+[[a3,a1],a2]", "[a1,a2]·a3+[a2,a3]·a1+[a3,a1]·a2",
                              "[a1·a2,a3]+[a2·a3,a1]+[a3·a1,a2]", "(a1·a2)·a3+(a2·a3)·a1+(a3·a1)·a2",
                              "2[a1,a2]·a3-[a1·a3,a2]-[[a1,a2],a3]-[a1,a2·a3]",
                              "(a1·a2)·a3-a1·(a2·a3)-[a1,a3]·a2"}) {
            p.relations.push_back(PolarPoly::parse(r));
        }
        p.relations.push_back(PolarPoly::parse("a1·[a2,a3]") * ParamPoly(g + d) +
                              PolarPoly::parse("[a1,[a2,a3]]") * ParamPoly(d - g));
    } else if (f == Family::T) {
        if (!point.ab) throw PreconditionError("T needs (alpha:beta)");
        const Rational a = point.ab->x();
        const Rational b = point.ab->y();
        for (const char* r : {"[a1,a2]·a3", "[[a1,a2],a3]", "(a1·a2)·a3-a1·(a2·a3)", "[a1·a2,a3]+[a1,a2·a3]"}) {
            p.relations.push_back(PolarPoly::parse(r));
        }
        p.relations.push_back(PolarPoly::parse("a1·(a2·a3)") * ParamPoly(a + b) +
                              PolarPoly::parse("[a1,a2·a3]") * ParamPoly(b - a));
    } else {
        throw PreconditionError("polarized Koszul presentations exist for S and T only");
    }
    if (auto order = koszul_family_order(f, point)) p.order = *order;
    return p;
}

std::optional<std::string> koszul_family_order(Family f, const ParamPoint& point) {
    if (f == Family::S && point.gd) {
        if (point.gd->x() == point.gd->y()) return std::string(order_presets::kBracketCountRevPathLex);
        if (point.gd->x() == -point.gd->y()) return std::string(order_presets::kDotCountRevPathLex);
    }
    if (f == Family::T && point.ab && !(point.ab->x() + point.ab->y()).is_zero()) {
        return std::string(order_presets::kDotCountPathLex);
    }
    return std::nullopt;
}

std::vector<DualCheck> catalogued_duals() {
    std::vector<DualCheck> out;
    out.push_back(exact_dual("perm-to-pre-lie", "O((1:-1),(1:0))",
                             novikov_quotient_presentation(family_generators(Family::O, {pt(1, -1), pt(1, 0)}).magmatic),
                             "(a,b,c) - (a,c,b)"));
    out.push_back(exact_dual("nap-dual-to-nap", "O((0:1),(0:1))",
                             novikov_quotient_presentation(family_generators(Family::O, {pt(0, 1), pt(0, 1)}).magmatic),
                             "a(bc) - b(ac)"));

    // Displayed in the opposite hand: the mirror of this pencil is compared with the mirrored dual.
    const MagPoly sx = mirror(MagPoly::parse("(a,b,c) + (c,b,a) - (b,a,c) - (b,c,a)"));
    const MagPoly sy = mirror(MagPoly::parse("(ab)c + (cb)a - (ac)b - (ca)b"));
    for (const auto& p : {pt(1, 0), pt(0, 1), pt(1, 1), pt(1, -1), pt(1, 2), pt(2, -3)}) {
        const ParamPoint point{{}, p};
        out.push_back(pencil_dual("S" + p.str(), "S" + p.str(),
                                  novikov_quotient_presentation(family_generators(Family::S, point).magmatic), sx, sy,
                                  ProjectivePoint(p.x(), -p.y()), "gamma X + delta Y"));
    }

    // Signed form of the (alpha:beta) pencil; the unsigned sums are not in either Novikov space.
    const MagPoly tx = MagPoly::parse("(ab)c + (bc)a + (ca)b - (ac)b - (ba)c - (cb)a");
    const MagPoly ty = MagPoly::parse("a(bc) + b(ca) + c(ab) - a(cb) - b(ac) - c(ba)");
    for (const auto& p : {pt(1, 0), pt(0, 1), pt(1, 1), pt(1, -1), pt(1, 2), pt(2, 1)}) {
        const ParamPoint point{p, {}};
        out.push_back(pencil_dual("T" + p.str(), "T" + p.str(),
                                  novikov_quotient_presentation(family_generators(Family::T, point).magmatic), tx, ty, p,
                                  "alpha X + beta Y"));
    }

    {
        DualCheck c;
        c.name = "nilpotent-to-magmatic";
        c.source = "Nov / Nov(3)";
        c.expected = "(no relations)";
        c.dual = koszul_dual(novikov_quotient_presentation({MagPoly::parse("(ab)c"), MagPoly::parse("a(bc)")}));
        c.matches = relation_rank(c.dual) == 0;
        c.detail = "dual relations: " + relations_text(c.dual);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace novikov
