#include "novikov/koszul.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

using Perm3 = std::array<int, 3>;

int sign_of(const Perm3& p) {
    int inv = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) inv += p[i] > p[j] ? 1 : 0;
    }
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<Perm3> all_perms() {
    std::vector<Perm3> out;
    Perm3 p{1, 2, 3};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct BasisData {
    std::vector<Tree> trees;
    std::vector<int> signs;             // sgn of the labelling, negated on right combs
    std::vector<int> canon;             // basis tree = canon * (labelled comb)
    std::map<Tree, std::size_t> index;  // canonical tree -> basis index
};

BasisData make_basis(Symmetry g) {
    BasisData d;
    auto leaf = [](int v) { return Tree::leaf(v); };
    if (g == Symmetry::none) {
        for (const auto& p : all_perms()) {
            d.trees.push_back(Tree::mul(Tree::mul(leaf(p[0]), leaf(p[1])), leaf(p[2])));
            d.signs.push_back(sign_of(p));
            d.trees.push_back(Tree::mul(leaf(p[0]), Tree::mul(leaf(p[1]), leaf(p[2]))));
            d.signs.push_back(-sign_of(p));
            d.canon.insert(d.canon.end(), {1, 1});
        }
    } else {
        const Op op = g == Symmetry::sym ? Op::sym : Op::anti;
        for (const Perm3& p : {Perm3{1, 2, 3}, Perm3{1, 3, 2}, Perm3{2, 3, 1}}) {
            const Tree t = Tree::node(op, Tree::node(op, leaf(p[0]), leaf(p[1])), leaf(p[2]));
            const auto canon = canonical_polar(PolarPoly(t));
            if (canon.terms().size() != 1) throw ConsistencyError("quadratic basis: unexpected canonical form");
            const auto& [ct, c] = *canon.terms().begin();
            d.trees.push_back(ct);
            d.signs.push_back(sign_of(p));
            d.canon.push_back(c == ParamPoly(1) ? 1 : -1);
        }
    }
    for (std::size_t i = 0; i < d.trees.size(); ++i) d.index.emplace(d.trees[i], i);
    return d;
}

const BasisData& basis_data(Symmetry g) {
    static const std::array<BasisData, 3> data{make_basis(Symmetry::none), make_basis(Symmetry::sym),
                                               make_basis(Symmetry::antisym)};
    return data[static_cast<std::size_t>(g)];
}

MagPoly from_coordinates(Symmetry g, const std::vector<Rational>& v) {
    const auto& b = basis_data(g);
    MagPoly f;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) f.add(b.trees[i], ParamPoly(v[i]));
    }
    return f;
}

std::vector<Rational> reduce_mod(std::vector<Rational> v, const RrefResult& r) {
    for (std::size_t i = 0; i < r.rank; ++i) {
        const Rational c = v[r.pivots[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!r.reduced(i, j).is_zero()) v[j] -= c * r.reduced(i, j);
        }
    }
    return v;
}

RrefResult relation_rref(const QuadraticPresentation& p) {
    const std::size_t dim = quadratic_basis(p.generator).size();
    Matrix<Rational> m(0, dim);
    for (const auto& rel : p.relations) {
        for (const auto& perm : all_perms()) {
            m.append_row(quadratic_coordinates(p.generator, act({perm[0], perm[1], perm[2]}, rel)));
        }
    }
    if (m.rows() == 0) return RrefResult{Matrix<Rational>(0, dim), {}, 0};
    return rref(std::move(m));
}

} // namespace

const std::vector<Tree>& quadratic_basis(Symmetry generator) { return basis_data(generator).trees; }

Symmetry dual_symmetry(Symmetry generator) {
    switch (generator) {
        case Symmetry::sym: return Symmetry::antisym;
        case Symmetry::antisym: return Symmetry::sym;
        case Symmetry::none: break;
    }
    return Symmetry::none;
}

Rational quadratic_pairing_sign(Symmetry generator, std::size_t basis_index) {
    const auto& own = basis_data(generator);
    const auto& dual = basis_data(dual_symmetry(generator));
    return Rational(own.signs.at(basis_index) * own.canon.at(basis_index) * dual.canon.at(basis_index));
}

std::vector<Rational> quadratic_coordinates(Symmetry generator, const MagPoly& f) {
    const auto& b = basis_data(generator);
    std::vector<Rational> v(b.trees.size());
    if (f.is_zero()) return v;
    if (f.multilinear_arity() != 3) throw PreconditionError("quadratic relations must be multilinear of arity 3");
    if (!f.has_rational_coefficients()) throw SymbolicParameterError();
    const MagPoly g = generator == Symmetry::none ? expand_polar(f) : canonical_polar(f);
    for (const auto& [t, c] : g.terms()) {
        auto it = b.index.find(t);
        if (it == b.index.end()) {
            throw PreconditionError("monomial " + t.str() + " does not belong to the arity-3 space of this generator");
        }
        v[it->second] += c.constant_value();
    }
    return v;
}

Matrix<Rational> relation_space(const QuadraticPresentation& p) { return relation_rref(p).reduced; }

std::size_t relation_rank(const QuadraticPresentation& p) { return relation_rref(p).rank; }

QuadraticPresentation koszul_dual(const QuadraticPresentation& p) {
    const auto r = relation_rref(p);
    const std::size_t dim = quadratic_basis(p.generator).size();
    // <x, y> = sum_i x_i y_i s_i, so the annihilator is the kernel of R * diag(s).
    Matrix<Rational> rs(r.rank, dim);
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t j = 0; j < dim; ++j) rs(i, j) = r.reduced(i, j) * quadratic_pairing_sign(p.generator, j);
    }
    QuadraticPresentation out;
    out.generator = dual_symmetry(p.generator);
    Matrix<Rational> ker;
    if (r.rank == 0) {
        ker = Matrix<Rational>(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) ker(i, i) = Rational(1);
    } else {
        ker = nullspace(rs);
    }
    if (ker.rows() == 0) return out;
    const auto kr = rref(ker);
    for (std::size_t i = 0; i < kr.rank; ++i) {
        std::vector<Rational> row(dim);
        for (std::size_t j = 0; j < dim; ++j) row[j] = kr.reduced(i, j);
        out.relations.push_back(from_coordinates(out.generator, row));
    }
    return out;
}

bool same_relation_space(const QuadraticPresentation& a, const QuadraticPresentation& b) {
    if (a.generator != b.generator) return false;
    const auto ra = relation_rref(a);
    const auto rb = relation_rref(b);
    return ra.rank == rb.rank && ra.reduced == rb.reduced;
}

QuadraticPresentation mirrored(const QuadraticPresentation& p) {
    if (p.generator != Symmetry::none) throw PreconditionError("mirror applies to magmatic presentations");
    QuadraticPresentation out{Symmetry::none, {}};
    for (const auto& r : p.relations) out.relations.push_back(mirror(expand_polar(r)));
    return out;
}

QuadraticPresentation arity3_presentation(const IdealBasis& ideal) {
    if (ideal.max_arity() < 3) throw PreconditionError("ideal must be built through arity 3");
    const auto& trees = quadratic_basis(Symmetry::none);
    const std::size_t nov_dim = nov_basis(3).size();
    Matrix<Rational> images(0, nov_dim);
    for (const auto& t : trees) images.append_row(ideal.reduce(embed(MagPoly(t))).dense());
    QuadraticPresentation out{Symmetry::none, {}};
    const auto ker = nullspace(images.transpose());
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        std::vector<Rational> row(trees.size());
        for (std::size_t j = 0; j < trees.size(); ++j) row[j] = ker(i, j);
        out.relations.push_back(from_coordinates(Symmetry::none, row));
    }
    return out;
}

ModuleDecomposition arity3_decomposition(const QuadraticPresentation& p) {
    const auto r = relation_rref(p);
    const auto& trees = quadratic_basis(p.generator);
    std::vector<bool> is_pivot(trees.size(), false);
    for (std::size_t i = 0; i < r.rank; ++i) is_pivot[r.pivots[i]] = true;
    std::map<Partition, Rational> trace;
    for (const auto& mu : partitions(3)) {
        const auto sigma = class_representative(mu);
        Rational tr;
        for (std::size_t c = 0; c < trees.size(); ++c) {
            if (is_pivot[c]) continue;
            const auto image = reduce_mod(quadratic_coordinates(p.generator, act(sigma, MagPoly(trees[c]))), r);
            tr += image[c];
        }
        trace.emplace(mu, tr);
    }
    return decompose_class_function(3, trace);
}

std::optional<std::pair<Rational, Rational>> match_pencil(const QuadraticPresentation& target, const MagPoly& a,
                                                          const MagPoly& b) {
    if (target.generator != Symmetry::none) throw PreconditionError("pencil matching needs a magmatic presentation");
    const auto r = relation_rref(target);
    const auto na = reduce_mod(quadratic_coordinates(Symmetry::none, a), r);
    const auto nb = reduce_mod(quadratic_coordinates(Symmetry::none, b), r);
    auto is_zero = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
    };
    std::vector<std::pair<Rational, Rational>> candidates;
    if (is_zero(na) && is_zero(nb)) {
        candidates = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
    } else if (is_zero(nb)) {
        candidates = {{Rational(0), Rational(1)}};
    } else {
        // x*na + y*nb = 0 with nb != 0 forces x != 0; take x = 1, y = -na/nb where defined.
        std::size_t k = 0;
        while (nb[k].is_zero()) ++k;
        const Rational y = -(na[k] / nb[k]);
        bool ok = true;
        for (std::size_t j = 0; j < na.size(); ++j) ok = ok && (na[j] + y * nb[j]).is_zero();
        if (ok) candidates = {{Rational(1), y}};
    }
    for (const auto& [x, y] : candidates) {
        QuadraticPresentation q{Symmetry::none, {a * ParamPoly(x) + b * ParamPoly(y)}};
        if (relation_rank(q) == r.rank) return std::make_pair(x, y);
    }
    return std::nullopt;
}

} // namespace novikov
