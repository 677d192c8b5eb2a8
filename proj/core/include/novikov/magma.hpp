#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/param_poly.hpp"

namespace novikov {

/// Product kinds: the magmatic product and its two polarized halves.
enum class Op : std::uint8_t {
    mul,   ///< xy, JSON tag "@"
    sym,   ///< x·y = xy + yx, JSON tag "*"
    anti,  ///< [x,y] = xy - yx, JSON tag "[]"
};

/// Immutable binary tree with variable leaves (>= 1). Copies share structure.
class Tree {
public:
    static Tree leaf(int var);
    static Tree node(Op op, Tree left, Tree right);
    static Tree mul(Tree l, Tree r) { return node(Op::mul, std::move(l), std::move(r)); }

    [[nodiscard]] bool is_leaf() const;
    [[nodiscard]] int var() const;
    [[nodiscard]] Op op() const;
    [[nodiscard]] const Tree& left() const;
    [[nodiscard]] const Tree& right() const;

    [[nodiscard]] int degree() const;  ///< number of leaves
    [[nodiscard]] std::vector<int> leaves() const;
    [[nodiscard]] int min_leaf() const;
    [[nodiscard]] bool only_mul() const;
    [[nodiscard]] bool is_multilinear() const;
    /// Replaces the i-th leaf (left to right) by labels[i].
    [[nodiscard]] Tree with_leaves(const std::vector<int>& labels) const;
    [[nodiscard]] Tree map_vars(const std::function<int(int)>& f) const;
    /// Letters a, b, c, ... for variables 1, 2, 3, ...
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct Node;
    explicit Tree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static int compare(const Tree& a, const Tree& b);
    std::shared_ptr<const Node> n_;
};

/// Linear combination of trees with parameter-polynomial coefficients.
/// Used both for magmatic polynomials and for polarized expressions.
class TreePoly {
public:
    using Terms = std::map<Tree, ParamPoly>;

    TreePoly() = default;
    TreePoly(const Tree& t, ParamPoly c = ParamPoly(1));  // NOLINT(google-explicit-constructor)

    /// Text form: "(ab)c - a(bc)", "[a,b]·c", "2a(ab) - alpha b(aa)", associators "(a,b,c)".
    static TreePoly parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] ParamPoly coefficient(const Tree& t) const;
    [[nodiscard]] int max_var() const;
    /// Arity of a multilinear homogeneous polynomial; -1 when not multilinear.
    [[nodiscard]] int multilinear_arity() const;
    [[nodiscard]] bool has_rational_coefficients() const;
    [[nodiscard]] TreePoly specialize(const ParamAssignment& values) const;
    [[nodiscard]] TreePoly map_vars(const std::function<int(int)>& f) const;
    [[nodiscard]] std::string str() const;

    void add(const Tree& t, const ParamPoly& c);
    TreePoly& operator+=(const TreePoly& o);
    TreePoly& operator-=(const TreePoly& o);
    TreePoly& operator*=(const ParamPoly& c);

    friend TreePoly operator+(TreePoly a, const TreePoly& b) { return a += b; }
    friend TreePoly operator-(TreePoly a, const TreePoly& b) { return a -= b; }
    friend TreePoly operator*(TreePoly a, const ParamPoly& c) { return a *= c; }
    friend TreePoly operator*(const ParamPoly& c, TreePoly a) { return a *= c; }
    friend bool operator==(const TreePoly& a, const TreePoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

using MagPoly = TreePoly;
using PolarPoly = TreePoly;

/// Bilinear extension of a product node.
TreePoly product(Op op, const TreePoly& a, const TreePoly& b);

/// Splits by multidegree and fully linearizes each component; variables renumbered 1..n.
std::vector<MagPoly> multilinearize(const MagPoly& f);
/// Sets every variable of `group` equal to its least member and renumbers the rest
/// consecutively. Throws PreconditionError unless f is symmetric in `group`.
MagPoly restitute(const MagPoly& f, const std::vector<int>& group);
/// Sum over occurrences of `var`, each replaced in turn by `replacement`.
MagPoly derive(const MagPoly& f, int var, const MagPoly& replacement);
/// Replaces every occurrence of `var` by `replacement`.
MagPoly substitute(const MagPoly& f, int var, const MagPoly& replacement);

/// Rewrites x·y and [x,y] in terms of the magmatic product.
MagPoly expand_polar(const PolarPoly& p);
/// xy = 1/2 x·y + 1/2 [x,y], recursively; output in canonical polarized form.
PolarPoly polarize(const MagPoly& f);
/// Orders the children of · and [] (with sign) and drops [x,x].
PolarPoly canonical_polar(const PolarPoly& p);
/// Reverses every magmatic product: xy -> yx.
MagPoly mirror(const MagPoly& f);
/// Variable i becomes perm[i-1].
TreePoly act(const std::vector<int>& perm, const TreePoly& f);

std::string to_json(const Tree& t);
std::string to_json(const TreePoly& f);
Tree tree_from_json(std::string_view text);
TreePoly poly_from_json(std::string_view text);

} // namespace novikov
