#include "novikov/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "novikov/errors.hpp"

namespace novikov {

// ---------------------------------------------------------------- points

ProjectivePoint::ProjectivePoint(const Rational& x, const Rational& y) {
    if (x.is_zero() && y.is_zero()) throw PreconditionError("(0:0) is not a point of the projective line");
    const Rational s = x.is_zero() ? y : x;
    x_ = x / s;
    y_ = y / s;
}

std::string ProjectivePoint::str() const {
    // Smallest integer representative with the same first-nonzero sign convention.
    mpz_class l = 1;
    for (const auto* r : {&x_, &y_}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->denominator().get_mpz_t());
    mpz_class a = (x_ * Rational(mpq_class(l))).numerator();
    mpz_class b = (y_ * Rational(mpq_class(l))).numerator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 0) {
        a /= g;
        b /= g;
    }
    return "(" + a.get_str() + ":" + b.get_str() + ")";
}

std::string ParamPoint::str() const {
    if (ab && gd) return "(" + ab->str() + "," + gd->str() + ")";
    if (ab) return ab->str();
    if (gd) return gd->str();
    return "()";
}

// ---------------------------------------------------------------- families

std::string_view family_name(Family f) {
    switch (f) {
        case Family::P: return "P";
        case Family::Q: return "Q";
        case Family::O: return "O";
        case Family::S: return "S";
        case Family::T: return "T";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(name[0]))) {
            case 'P': return Family::P;
            case 'Q': return Family::Q;
            case 'O': return Family::O;
            case 'S': return Family::S;
            case 'T': return Family::T;
            default: break;
        }
    }
    throw ParseError("unknown family '" + std::string(name) + "' (expected P, Q, O, S or T)");
}

std::pair<bool, bool> family_parameters(Family f) {
    switch (f) {
        case Family::P: return {true, false};
        case Family::Q: return {false, true};
        case Family::O: return {true, true};
        case Family::S: return {false, true};
        case Family::T: return {true, false};
    }
    return {false, false};
}

namespace {

MagPoly single_linearization(const MagPoly& f) {
    auto parts = multilinearize(f);
    if (parts.size() != 1) throw ConsistencyError("expected one multihomogeneous component");
    return parts.front();
}

} // namespace

MagPoly trivial_identity(const ProjectivePoint& ab) {
    return single_linearization(MagPoly::parse("(aa)a") * ParamPoly(ab.x()) + MagPoly::parse("a(aa)") * ParamPoly(ab.y()));
}

MagPoly two_dim_identity(const ProjectivePoint& gd) {
    return single_linearization(MagPoly::parse("(a,a,b) - (b,a,a)") * ParamPoly(gd.x()) +
                                MagPoly::parse("a(ab) - a(ba)") * ParamPoly(gd.y()));
}

std::vector<MagPoly> novikov_identities() {
    return {MagPoly::parse("(a,b,c) - (a,c,b)"), MagPoly::parse("a(bc) - b(ac)")};
}

QuadraticPresentation novikov_relation_space() {
    return QuadraticPresentation{Symmetry::none, novikov_identities()};
}

FamilyGenerators family_generators(Family f, const ParamPoint& point) {
    const auto [needs_ab, needs_gd] = family_parameters(f);
    if (needs_ab && !point.ab) throw PreconditionError(std::string(family_name(f)) + " needs (alpha:beta)");
    if (needs_gd && !point.gd) throw PreconditionError(std::string(family_name(f)) + " needs (gamma:delta)");
    FamilyGenerators g;
    switch (f) {
        case Family::P: g.magmatic = {trivial_identity(*point.ab)}; break;
        case Family::Q: g.magmatic = {two_dim_identity(*point.gd)}; break;
        case Family::O: g.magmatic = {trivial_identity(*point.ab), two_dim_identity(*point.gd)}; break;
        case Family::S:
            g.magmatic = {trivial_identity({Rational(1), Rational(0)}), trivial_identity({Rational(0), Rational(1)}),
                          two_dim_identity(*point.gd)};
            break;
        case Family::T:
            g.magmatic = {trivial_identity(*point.ab), two_dim_identity({Rational(1), Rational(0)}),
                          two_dim_identity({Rational(0), Rational(1)})};
            break;
    }
    for (const auto& m : g.magmatic) g.embedded.push_back(embed(m));
    return g;
}

// ---------------------------------------------------------------- coefficient systems

std::vector<CoefficientSystem> coefficient_systems() {
    const ParamPoly a = ParamPoly::var(Param::alpha);
    const ParamPoly b = ParamPoly::var(Param::beta);
    const ParamPoly z(0);
    const ParamPoly one(1);
    auto c = [](long v) { return ParamPoly(v); };
    auto mat = [](std::initializer_list<std::initializer_list<ParamPoly>> rows) { return PolyMatrix(rows); };
    std::vector<CoefficientSystem> out;
    out.push_back({"cubic in one letter",
                   {"a'''a^3", "a''a'a^2", "(a')^3a"},
                   mat({{z, a, a + b}, {a, c(4) * a + c(2) * b, a + b}, {a, c(7) * a + c(2) * b, c(3) * a + c(3) * b}}),
                   a * a * (a + b)});
    out.push_back({"quartic in two letters, b linear",
                   {"a'''a^2b", "b'''a^3", "a''a'ab", "a''b'a^2", "b''a'a^2", "(a')^3b", "b'(a')^2a"},
                   mat({{z, z, c(2), one, one, z, z},
                        {z, z, z, z, z, one, c(3)},
                        {c(3), one, z, z, z, z, z},
                        {z, z, z, a, z, z, a + b},
                        {a, z, c(4) * a + c(2) * b, z, z, a + b, z},
                        {a, z, c(4) * a + c(2) * b, c(2) * a, a, a + b, c(2) * a + c(2) * b},
                        {z, a, z, c(3) * a, c(4) * a + c(2) * b, z, c(3) * a + c(3) * b}}),
                   c(6) * a * a * (b - a) * (b + a)});
    out.push_back({"quartic in two letters, both quadratic",
                   {"a''a'b^2", "a''b'ab", "b''a'ab", "b''b'a^2"},
                   mat({{one, one, one, z}, {z, c(2), z, one}, {z, z, c(2), one}, {z, c(2) * a, c(2) * a + c(2) * b, c(3) * a}}),
                   c(4) * (a - b)});
    out.push_back({"quartic in three letters",
                   {"a''b'ac", "a''c'ab", "b''a'ac", "c''a'ab", "b''c'a^2", "c''b'a^2"},
                   mat({{z, z, one, one, z, z},
                        {z, z, z, z, one, one},
                        {one, one, z, z, z, z},
                        {c(2) * a, z, c(2) * a + c(2) * b, z, a, z},
                        {z, c(2), z, z, one, z},
                        {z, z, c(2), z, one, z}}),
                   c(4) * (b - a)});
    return out;
}

NovElement system_row(const CoefficientSystem& s, std::size_t row) {
    NovElement out;
    for (std::size_t j = 0; j < s.monomials.size(); ++j) {
        const NovElement m = linearize_differential(s.monomials[j]);
        if (out.arity() == 0) out = NovElement(m.arity());
        if (!s.matrix(row, j).is_zero()) out += m * s.matrix(row, j);
    }
    return out;
}

// ---------------------------------------------------------------- polarized presentation

std::vector<PolarPoly> polarized_novikov_presentation() {
    return {
        PolarPoly::parse("[[a1,a2],a3]+[[a2,a3],a1]+[[a3,a1],a2]"),
        PolarPoly::parse("[a1,a2]·a3+[a2,a3]·a1+[a3,a1]·a2"),
        PolarPoly::parse("2[a1,a2]·a3-[a1·a3,a2]-[[a1,a2],a3]-[a1,a2·a3]"),
        PolarPoly::parse("(a1·a2)·a3-a1·(a2·a3)-[a1,a3]·a2"),
    };
}

bool verify_polarized_presentation(const std::vector<PolarPoly>& relations) {
    QuadraticPresentation p{Symmetry::none, {}};
    for (const auto& r : relations) p.relations.push_back(expand_polar(r));
    return same_relation_space(p, novikov_relation_space());
}

bool verify_polarized_presentation() { return verify_polarized_presentation(polarized_novikov_presentation()); }

std::vector<PolarPoly> polarized_novikov_identities() {
    const char* lines[] = {
        "[[a1,a2],a3]-[a1,[a2,a3]]-[[a1,a3],a2]",
        "[a1·a2,a3]-[a1·a3,a2]-2a1·[a2,a3]-[a1,[a2,a3]]",
        "2[a1,a2]·a3-[a1·a3,a2]-[[a1,a3],a2]-[a1,a2·a3]-[a1,[a2,a3]]",
        "2(a1·a3)·a2-[a1·a3,a2]-[[a1,a3],a2]-2a1·(a2·a3)-[a1,a2·a3]-[a1,[a2,a3]]",
        "2[a1,a3]·a2-[a1·a3,a2]-[[a1,a3],a2]-2a1·[a2,a3]-[a1,a2·a3]-[a1,[a2,a3]]",
        "2(a1·a2)·a3-[a1·a3,a2]-[[a1,a3],a2]-2a1·(a2·a3)-2a1·[a2,a3]-[a1,a2·a3]-[a1,[a2,a3]]",
    };
    std::vector<PolarPoly> out;
    for (const char* l : lines) out.push_back(PolarPoly::parse(l));
    return out;
}

// ---------------------------------------------------------------- finite algebras

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> basis_names,
                             std::vector<std::vector<Vector>> table)
    : name_(std::move(name)), basis_names_(std::move(basis_names)), table_(std::move(table)) {
    const std::size_t d = basis_names_.size();
    if (table_.size() != d) throw ShapeError("multiplication table needs one row per basis vector");
    for (const auto& row : table_) {
        if (row.size() != d) throw ShapeError("multiplication table must be square");
        for (const auto& v : row) {
            if (v.size() != d) throw ShapeError("structure constant vectors must have the algebra dimension");
        }
    }
}

FiniteAlgebra::Vector FiniteAlgebra::basis_vector(std::size_t i) const {
    Vector v(dim());
    v.at(i) = ParamPoly(1);
    return v;
}

FiniteAlgebra::Vector FiniteAlgebra::multiply(const Vector& x, const Vector& y) const {
    const std::size_t d = dim();
    Vector r(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            const ParamPoly c = x[i] * y[j];
            for (std::size_t k = 0; k < d; ++k) {
                if (!table_[i][j][k].is_zero()) r[k] += c * table_[i][j][k];
            }
        }
    }
    return r;
}

FiniteAlgebra::Vector FiniteAlgebra::evaluate(const Tree& t, const std::vector<Vector>& values) const {
    if (t.is_leaf()) return values.at(static_cast<std::size_t>(t.var() - 1));
    const Vector l = evaluate(t.left(), values);
    const Vector r = evaluate(t.right(), values);
    Vector p = multiply(l, r);
    if (t.op() == Op::mul) return p;
    const Vector q = multiply(r, l);
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (t.op() == Op::sym) p[k] += q[k];
        else p[k] -= q[k];
    }
    return p;
}

FiniteAlgebra::Vector FiniteAlgebra::evaluate(const TreePoly& f, const std::vector<Vector>& values) const {
    Vector r(dim());
    for (const auto& [t, c] : f.terms()) {
        const Vector v = evaluate(t, values);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += c * v[k];
    }
    return r;
}

FiniteAlgebra FiniteAlgebra::specialize(const ParamAssignment& values) const {
    auto table = table_;
    for (auto& row : table) {
        for (auto& v : row) {
            for (auto& c : v) c = c.specialize(values);
        }
    }
    return FiniteAlgebra(name_, basis_names_, std::move(table));
}

FiniteAlgebra FiniteAlgebra::change_basis(const Matrix<Rational>& rows) const {
    const std::size_t d = dim();
    if (rows.rows() != d || rows.cols() != d) throw ShapeError("basis change must be a square matrix of the algebra dimension");
    Matrix<Rational> aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = rows(i, j);
        aug(i, d + i) = Rational(1);
    }
    const auto rr = rref(aug);
    if (rr.rank < d || rr.pivots.back() >= d) throw DomainError("basis change is not invertible");
    // inv(i, j): coordinate of e_i along u_j.
    Matrix<Rational> inv(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) inv(i, j) = rr.reduced(i, d + j);
    }
    std::vector<Vector> u(d, Vector(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) u[i][j] = ParamPoly(rows(i, j));
    }
    std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Vector w = multiply(u[i], u[k]);
            for (std::size_t m = 0; m < d; ++m) {
                ParamPoly c;
                for (std::size_t j = 0; j < d; ++j) {
                    if (!w[j].is_zero() && !inv(j, m).is_zero()) c += w[j] * inv(j, m);
                }
                table[i][k][m] = c;
            }
        }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back("u" + std::to_string(i + 1));
    return FiniteAlgebra(name_, std::move(names), std::move(table));
}

std::string FiniteAlgebra::format(const Vector& v) const {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        std::string c = v[k].str();
        std::string term;
        if (c == "1") term = basis_names_[k];
        else if (c == "-1") term = "-" + basis_names_[k];
        else if (c.find(' ') != std::string::npos) term = "(" + c + ") " + basis_names_[k];
        else term = c + " " + basis_names_[k];
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

bool check_algebra_identity(const FiniteAlgebra& alg, const MagPoly& identity) {
    const int n = identity.max_var();
    if (n <= 0) return identity.is_zero();
    const std::size_t d = alg.dim();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<FiniteAlgebra::Vector> values(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i) values[i] = alg.basis_vector(idx[i]);
        const auto v = alg.evaluate(identity, values);
        if (!std::all_of(v.begin(), v.end(), [](const ParamPoly& c) { return c.is_zero(); })) return false;
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == d) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return true;
}

FiniteAlgebra algebra_A() {
    return FiniteAlgebra("A", {"e"}, {{{ParamPoly(1)}}});
}

FiniteAlgebra algebra_B() {
    const ParamPoly delta = ParamPoly::var(Param::delta);
    using V = FiniteAlgebra::Vector;
    return FiniteAlgebra("B_delta", {"e", "f"},
                         {{V{ParamPoly(0), ParamPoly(0)}, V{-delta, ParamPoly(0)}},
                          {V{ParamPoly(1), ParamPoly(0)}, V{ParamPoly(0), ParamPoly(1)}}});
}

std::vector<TripleProductCheck> check_B_triple_products() {
    const FiniteAlgebra b = algebra_B();
    const ParamPoly delta = ParamPoly::var(Param::delta);
    using V = FiniteAlgebra::Vector;
    const V zero{ParamPoly(0), ParamPoly(0)};
    const V e{ParamPoly(1), ParamPoly(0)};
    const V f{ParamPoly(0), ParamPoly(1)};
    const V minus_delta_e{-delta, ParamPoly(0)};
    const V delta_sq_e{delta * delta, ParamPoly(0)};
    struct Row {
        const char* text;
        int x, y, z;
        bool left;  // (xy)z when true, x(yz) otherwise
        V expected;
    };
    // Basis index 0 is e, 1 is f.
    const std::vector<Row> rows = {
        {"(ee)e", 0, 0, 0, true, zero},           {"e(ee)", 0, 0, 0, false, zero},
        {"(ef)e", 0, 1, 0, true, zero},           {"e(fe)", 0, 1, 0, false, zero},
        {"(fe)e", 1, 0, 0, true, zero},           {"f(ee)", 1, 0, 0, false, zero},
        {"(ff)e", 1, 1, 0, true, e},              {"f(fe)", 1, 1, 0, false, e},
        {"(ee)f", 0, 0, 1, true, zero},           {"e(ef)", 0, 0, 1, false, zero},
        {"(ef)f", 0, 1, 1, true, delta_sq_e},     {"e(ff)", 0, 1, 1, false, minus_delta_e},
        {"(fe)f", 1, 0, 1, true, minus_delta_e},  {"f(ef)", 1, 0, 1, false, minus_delta_e},
        {"(ff)f", 1, 1, 1, true, f},              {"f(ff)", 1, 1, 1, false, f},
    };
    std::vector<TripleProductCheck> out;
    for (const auto& r : rows) {
        const V x = b.basis_vector(static_cast<std::size_t>(r.x));
        const V y = b.basis_vector(static_cast<std::size_t>(r.y));
        const V z = b.basis_vector(static_cast<std::size_t>(r.z));
        const V got = r.left ? b.multiply(b.multiply(x, y), z) : b.multiply(x, b.multiply(y, z));
        out.push_back({r.text, b.format(r.expected), b.format(got), got == r.expected});
    }
    return out;
}

// ---------------------------------------------------------------- Gröbner systems

namespace {

// Printed text; in the Q(1:0) list "a_2·b_3" and "[[a_1,a_2],a_3,]" are read as
// "a2·a3" and "[[a1,a2],a3]".
const std::vector<std::vector<std::string>>& printed_systems() {
    static const std::vector<std::vector<std::string>> systems = {
        {"[a1,[a2,a3]]", "[[a1,a3],a2]", "[[a1,a2],a3]", "a1·[a2,a3]+1/2[a1·a3,a2]-1/2[a1·a2,a3]",
         "[a1,a2·a3]-2[a1,a2]·a3+[a1·a3,a2]",
         "a1·(a2·a3)-(a1·a2)·a3+[a1,a2·a3]-1/2[a1·a3,a2]+1/2[a1·a2,a3]",
         "(a1·a3)·a2-(a1·a2)·a3-1/2[a1·a3,a2]+1/2[a1·a2,a3]",
         "[a1,a3]·a2-[a1,a2]·a3+1/2[a1·a3,a2]-1/2[a1·a2,a3]", "[[a1,a2]·a4,a3]", "[[a1,a2]·a3,a4]",
         "[[a1,a3]·a4,a2]", "[a1·a3,a2]·a4-[a1·a2,a3]·a4-[(a1·a3)·a4,a2]+[(a1·a2)·a4,a3]",
         "[a1·a4,a2]·a3-[a1·a2,a3]·a4-[(a1·a3)·a4,a2]+1/2[(a1·a2)·a4,a3]+1/2[(a1·a2)·a3,a4]",
         "([a1,a2]·a3)·a4-2[a1·a2,a3]·a4-[(a1·a3)·a4,a2]+3/2[(a1·a2)·a4,a3]+1/2[(a1·a2)·a3,a4]"},
        {"a1·[a2,a3]+[[a1,a3],a2]-[[a1,a2],a3]", "[a1,a2·a3]+[a1·a2,a3]+3[[a1,a3],a2]",
         "a1·(a2·a3)-(a1·a2)·a3-[[a1,a3],a2]", "[a1,[a2,a3]]+[[a1,a3],a2]-[[a1,a2],a3]",
         "[a1,a2]·a3+[[a1,a2],a3]", "[a1,a3]·a2+[[a1,a3],a2]",
         "(a1·a3)·a2-(a1·a2)·a3+[[a1,a3],a2]-[[a1,a2],a3]",
         "[a1·a3,a2]-[a1·a2,a3]+3[[a1,a3],a2]-3[[a1,a2],a3]",
         "[[a1·a2,a4],a3]-[[a1·a2,a3],a4]-2[[[a1,a4],a2],a3]+2[[[a1,a3],a2],a4]",
         "[[a1·a3,a4],a2]-[[a1·a2,a3],a4]+2[[[a1,a4],a2],a3]-3[[[a1,a3],a2],a4]-[[[a1,a2],a3],a4]",
         "[(a1·a2)·a3,a4]+3[[a1·a2,a3],a4]-4[[[a1,a4],a2],a3]+8[[[a1,a3],a2],a4]-2[[[a1,a2],a3],a4]",
         "[[[a1,a4],a3],a2]-[[[a1,a4],a2],a3]", "[[[a1,a3],a4],a2]-[[[a1,a3],a2],a4]",
         "[[[a1,a2],a4],a3]-[[[a1,a2],a3],a4]"},
        {"a1·[a2,a3]-[[a1,a3],a2]+[[a1,a2],a3]", "[a1,a2·a3]-[[a1,a3],a2]+[a1·a2,a3]",
         "a1·(a2·a3)+[[a1,a3],a2]-(a1·a2)·a3", "[a1,[a2,a3]]+[[a1,a3],a2]-[[a1,a2],a3]",
         "[a1,a2]·a3-[[a1,a2],a3]", "[a1,a3]·a2-[[a1,a3],a2]",
         "(a1·a3)·a2-(a1·a2)·a3+[[a1,a3],a2]-[[a1,a2],a3]",
         "[a1·a3,a2]-[a1·a2,a3]+[[a1,a3],a2]-[[a1,a2],a3]",
         "[[a1·a3,a4],a2]-[[a1·a2,a3],a4]+[[[a1,a3],a2],a4]-[[[a1,a2],a3],a4]",
         "[[a1·a2,a4],a3]-[[a1·a2,a3],a4]", "[(a1·a2)·a3,a4]-[[a1·a2,a3],a4]",
         "[[[a1,a4],a3],a2]-[[[a1,a4],a2],a3]", "[[[a1,a3],a4],a2]-[[[a1,a3],a2],a4]",
         "[[[a1,a2],a4],a3]-[[[a1,a2],a3],a4]"},
    };
    return systems;
}

// Corrections established against the closure oracle: index -> corrected relation.
const std::vector<std::vector<std::pair<std::size_t, std::string>>>& corrections() {
    static const std::vector<std::vector<std::pair<std::size_t, std::string>>> c = {
        {{5, "a1·(a2·a3)-(a1·a2)·a3+[a1,a2]·a3-1/2[a1·a3,a2]+1/2[a1·a2,a3]"}},
        {{6, "(a1·a3)·a2-(a1·a2)·a3-[[a1,a3],a2]+[[a1,a2],a3]"},
         {7, "[a1·a3,a2]-[a1·a2,a3]-3[[a1,a3],a2]+3[[a1,a2],a3]"},
         {8, "[[a1·a2,a4],a3]-[[a1·a2,a3],a4]+2[[[a1,a4],a2],a3]-2[[[a1,a3],a2],a4]"},
         {9, "[[a1·a3,a4],a2]-[[a1·a2,a3],a4]+2[[[a1,a4],a2],a3]-3[[[a1,a3],a2],a4]+[[[a1,a2],a3],a4]"}},
        {},
    };
    return c;
}

std::size_t system_index(GbSystem s) { return static_cast<std::size_t>(s); }

} // namespace

std::string_view gb_system_name(GbSystem s) {
    switch (s) {
        case GbSystem::q_1_m1: return "Q(1:-1)";
        case GbSystem::q_1_0: return "Q(1:0)";
        case GbSystem::q_0_1: return "Q(0:1)";
    }
    return "?";
}

ProjectivePoint gb_system_point(GbSystem s) {
    switch (s) {
        case GbSystem::q_1_m1: return {Rational(1), Rational(-1)};
        case GbSystem::q_1_0: return {Rational(1), Rational(0)};
        case GbSystem::q_0_1: return {Rational(0), Rational(1)};
    }
    return {};
}

std::vector<std::string> gb_system_text(GbSystem s, bool as_printed) {
    auto text = printed_systems().at(system_index(s));
    if (!as_printed) {
        for (const auto& [i, fixed] : corrections().at(system_index(s))) text.at(i) = fixed;
    }
    return text;
}

std::vector<PolarPoly> gb_system_relations(GbSystem s, bool as_printed) {
    std::vector<PolarPoly> out;
    for (const auto& t : gb_system_text(s, as_printed)) out.push_back(PolarPoly::parse(t));
    return out;
}

RewriteSystem gb_system(GbSystem s, bool as_printed) {
    Presentation p;
    p.relations = gb_system_relations(s, as_printed);
    return listed_rewrite_system(p);
}

std::vector<std::size_t> gb_system_misprints(GbSystem s) {
    std::vector<std::size_t> out;
    for (const auto& [i, fixed] : corrections().at(system_index(s))) out.push_back(i);
    return out;
}

RewriteSystem gb_system_oracle(GbSystem s) {
    const Alphabet alphabet = polarized_alphabet();
    const IdealBasis ideal = build_ideal(std::vector<MagPoly>{two_dim_identity(gb_system_point(s))}, 4);
    std::vector<ShuffleCombination> relations;
    for (int n = 3; n <= 4; ++n) {
        const auto monomials = enumerate_monomials(alphabet, n);
        Matrix<Rational> images(0, nov_basis(n).size());
        for (const auto& t : monomials) {
            ShuffleCombination c;
            c[t] = Rational(1);
            images.append_row(ideal.reduce(embed(expand_polar(to_polar(c, alphabet)))).dense());
        }
        // Rows of the left kernel are the relations among monomials in Nov(n)/I(n).
        const auto kernel = nullspace(images.transpose());
        for (std::size_t i = 0; i < kernel.rows(); ++i) {
            ShuffleCombination c;
            for (std::size_t j = 0; j < monomials.size(); ++j) add_term(c, monomials[j], kernel(i, j));
            relations.push_back(std::move(c));
        }
    }
    const auto order = MonomialOrder::parse(order_presets::kRevGradedRevPathLex, alphabet);
    return RewriteSystem::from_relations(alphabet, order, relations);
}

} // namespace novikov
