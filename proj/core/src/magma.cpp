#include "novikov/magma.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "json_detail.hpp"
#include "novikov/errors.hpp"

namespace novikov {

struct Tree::Node {
    Op op = Op::mul;
    int var = 0;  // > 0 for leaves
    int degree = 1;
    int min_leaf = 0;
    Tree l{nullptr};
    Tree r{nullptr};
};

Tree Tree::leaf(int var) {
    if (var < 1) throw PreconditionError("tree leaf variable must be >= 1");
    auto n = std::make_shared<Node>();
    n->var = var;
    n->min_leaf = var;
    return Tree(std::move(n));
}

Tree Tree::node(Op op, Tree left, Tree right) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->degree = left.degree() + right.degree();
    n->min_leaf = std::min(left.min_leaf(), right.min_leaf());
    n->l = std::move(left);
    n->r = std::move(right);
    return Tree(std::move(n));
}

bool Tree::is_leaf() const { return n_->var > 0; }
int Tree::var() const { return n_->var; }
Op Tree::op() const { return n_->op; }
const Tree& Tree::left() const { return n_->l; }
const Tree& Tree::right() const { return n_->r; }
int Tree::degree() const { return n_->degree; }
int Tree::min_leaf() const { return n_->min_leaf; }

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    std::function<void(const Tree&)> walk = [&](const Tree& t) {
        if (t.is_leaf()) {
            out.push_back(t.var());
            return;
        }
        walk(t.left());
        walk(t.right());
    };
    walk(*this);
    return out;
}

bool Tree::only_mul() const {
    if (is_leaf()) return true;
    return op() == Op::mul && left().only_mul() && right().only_mul();
}

bool Tree::is_multilinear() const {
    auto l = leaves();
    std::sort(l.begin(), l.end());
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Tree Tree::with_leaves(const std::vector<int>& labels) const {
    std::size_t pos = 0;
    std::function<Tree(const Tree&)> build = [&](const Tree& t) -> Tree {
        if (t.is_leaf()) return leaf(labels.at(pos++));
        Tree l = build(t.left());
        Tree r = build(t.right());
        return node(t.op(), std::move(l), std::move(r));
    };
    return build(*this);
}

Tree Tree::map_vars(const std::function<int(int)>& f) const {
    if (is_leaf()) return leaf(f(var()));
    return node(op(), left().map_vars(f), right().map_vars(f));
}

namespace {

std::string var_name(int v) {
    if (v >= 1 && v <= 26) return std::string(1, static_cast<char>('a' + v - 1));
    return "x" + std::to_string(v);
}

void print_tree(std::ostream& os, const Tree& t, bool top) {
    if (t.is_leaf()) {
        os << var_name(t.var());
        return;
    }
    switch (t.op()) {
        case Op::mul:
            if (!top) os << "(";
            print_tree(os, t.left(), false);
            print_tree(os, t.right(), false);
            if (!top) os << ")";
            break;
        case Op::sym:
            if (!top) os << "(";
            print_tree(os, t.left(), false);
            os << "\xC2\xB7";
            print_tree(os, t.right(), false);
            if (!top) os << ")";
            break;
        case Op::anti:
            os << "[";
            print_tree(os, t.left(), true);
            os << ",";
            print_tree(os, t.right(), true);
            os << "]";
            break;
    }
}

} // namespace

std::string Tree::str() const {
    std::ostringstream os;
    print_tree(os, *this, true);
    return os.str();
}

int Tree::compare(const Tree& a, const Tree& b) {
    if (a.n_ == b.n_) return 0;
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) return a.var() == b.var() ? 0 : (a.var() < b.var() ? -1 : 1);
    if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
    int c = compare(a.left(), b.left());
    if (c != 0) return c;
    return compare(a.right(), b.right());
}

// ---------------------------------------------------------------------------

TreePoly::TreePoly(const Tree& t, ParamPoly c) { add(t, c); }

ParamPoly TreePoly::coefficient(const Tree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? ParamPoly() : it->second;
}

int TreePoly::max_var() const {
    int m = 0;
    for (const auto& [t, c] : terms_) {
        for (int v : t.leaves()) m = std::max(m, v);
    }
    return m;
}

int TreePoly::multilinear_arity() const {
    if (terms_.empty()) return -1;
    int n = terms_.begin()->first.degree();
    for (const auto& [t, c] : terms_) {
        if (t.degree() != n || !t.is_multilinear()) return -1;
    }
    return n;
}

bool TreePoly::has_rational_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
}

TreePoly TreePoly::specialize(const ParamAssignment& values) const {
    TreePoly r;
    for (const auto& [t, c] : terms_) r.add(t, c.specialize(values));
    return r;
}

TreePoly TreePoly::map_vars(const std::function<int(int)>& f) const {
    TreePoly r;
    for (const auto& [t, c] : terms_) r.add(t.map_vars(f), c);
    return r;
}

void TreePoly::add(const Tree& t, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TreePoly& TreePoly::operator+=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

TreePoly& TreePoly::operator-=(const TreePoly& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
}

TreePoly& TreePoly::operator*=(const ParamPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

std::string TreePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string coeff;
        bool negative = false;
        if (c.is_constant()) {
            Rational v = c.constant_value();
            negative = v.sign() < 0;
            if (!v.abs().is_one()) coeff = v.abs().str();
        } else if (c.terms().size() == 1) {
            negative = c.terms().begin()->second.sign() < 0;
            coeff = (negative ? -c : c).str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        if (!coeff.empty()) os << coeff << " ";
        os << t.str();
    }
    return os.str();
}

TreePoly product(Op op, const TreePoly& a, const TreePoly& b) {
    TreePoly r;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) r.add(Tree::node(op, ta, tb), ca * cb);
    return r;
}

// --------------------------------------------------------------------------- parsing

namespace {

class MagParser {
public:
    explicit MagParser(std::string_view s) : s_(s) {}

    TreePoly run() {
        TreePoly p = poly();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("magma expression '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek_str(std::string_view t) {
        skip_ws();
        return s_.substr(pos_, t.size()) == t;
    }
    bool eat_str(std::string_view t) {
        if (!peek_str(t)) return false;
        pos_ += t.size();
        return true;
    }
    bool eat_minus() { return eat_str("-") || eat_str("\xE2\x88\x92"); }
    bool eat_dot() { return eat_str("\xC2\xB7") || eat_str("*"); }

    TreePoly poly() {
        TreePoly acc;
        bool neg = eat_minus();
        if (!neg) eat_str("+");
        TreePoly t = term();
        acc = neg ? t * ParamPoly(-1) : t;
        for (;;) {
            if (eat_minus()) acc -= term();
            else if (eat_str("+")) acc += term();
            else break;
        }
        return acc;
    }

    // coefficient prefix: number[/number], a parameter name, or {poly}; may repeat.
    TreePoly term() {
        ParamPoly coeff(1);
        while (eat_minus()) coeff *= ParamPoly(-1);
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) fail("expected a term");
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
                coeff *= ParamPoly(Rational::parse(s_.substr(start, pos_ - start)));
                continue;
            }
            if (c == '{') {
                std::size_t close = s_.find('}', pos_);
                if (close == std::string_view::npos) fail("unterminated '{'");
                coeff *= ParamPoly::parse(s_.substr(pos_ + 1, close - pos_ - 1));
                pos_ = close + 1;
                continue;
            }
            std::size_t probe = pos_;
            // Single letters are variables; parameters need a longer spelling.
            if (auto p = match_param(s_, probe); p && probe - pos_ > 1) {
                pos_ = probe;
                coeff *= ParamPoly::var(*p);
                continue;
            }
            break;
        }
        eat_str("*");
        TreePoly m = dotted();
        return m * coeff;
    }

    TreePoly dotted() {
        TreePoly l = juxt();
        if (eat_dot()) {
            TreePoly r = juxt();
            return product(Op::sym, l, r);
        }
        return l;
    }

    TreePoly juxt() {
        std::vector<TreePoly> units;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == '(' || c == '[' || (std::islower(static_cast<unsigned char>(c)) != 0)) {
                TreePoly u = unit();
                if (eat_str("^")) {
                    std::size_t start = pos_;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                    if (start == pos_) fail("expected exponent");
                    int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
                    if (k < 1) fail("exponent must be positive");
                    // a^k is the left comb ((aa)a)...
                    TreePoly acc = u;
                    for (int i = 1; i < k; ++i) acc = product(Op::mul, acc, u);
                    u = acc;
                }
                units.push_back(std::move(u));
                continue;
            }
            break;
        }
        if (units.empty()) fail("expected a monomial");
        if (units.size() == 1) return units[0];
        if (units.size() == 2) return product(Op::mul, units[0], units[1]);
        fail("ambiguous juxtaposition of more than two factors; add parentheses");
    }

    TreePoly unit() {
        skip_ws();
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TreePoly p = poly();
            if (eat_str(",")) {
                // Associator (x,y,z) = (xy)z - x(yz).
                TreePoly q = poly();
                if (!eat_str(",")) fail("expected ',' in associator");
                TreePoly r = poly();
                if (!eat_str(")")) fail("expected ')'");
                return product(Op::mul, product(Op::mul, p, q), r) - product(Op::mul, p, product(Op::mul, q, r));
            }
            if (!eat_str(")")) fail("expected ')'");
            return p;
        }
        if (c == '[') {
            ++pos_;
            TreePoly l = poly();
            if (!eat_str(",")) fail("expected ','");
            TreePoly r = poly();
            if (!eat_str("]")) fail("expected ']'");
            return product(Op::anti, l, r);
        }
        ++pos_;
        int var = c - 'a' + 1;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start != pos_) var = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (var < 1) fail("variable index must be >= 1");
        return TreePoly(Tree::leaf(var));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

TreePoly TreePoly::parse(std::string_view text) { return MagParser(text).run(); }

// --------------------------------------------------------------------------- operations

namespace {

std::map<int, int> degrees_of(const Tree& t) {
    std::map<int, int> d;
    for (int v : t.leaves()) ++d[v];
    return d;
}

} // namespace

std::vector<MagPoly> multilinearize(const MagPoly& f) {
    std::map<std::map<int, int>, MagPoly> components;
    for (const auto& [t, c] : f.terms()) components[degrees_of(t)].add(t, c);

    std::vector<MagPoly> out;
    for (const auto& [deg, comp] : components) {
        // variable v owns the block [start[v], start[v] + deg[v]).
        std::map<int, int> start;
        int next = 1;
        for (const auto& [v, d] : deg) {
            start[v] = next;
            next += d;
        }
        MagPoly result;
        for (const auto& [t, c] : comp.terms()) {
            const std::vector<int> leaves = t.leaves();
            std::map<int, std::vector<std::size_t>> positions;
            for (std::size_t i = 0; i < leaves.size(); ++i) positions[leaves[i]].push_back(i);
            std::vector<int> labels(leaves.size());
            std::vector<std::pair<int, std::vector<int>>> perms;
            for (const auto& [v, d] : deg) {
                std::vector<int> p(static_cast<std::size_t>(d));
                std::iota(p.begin(), p.end(), start[v]);
                perms.emplace_back(v, std::move(p));
            }
            std::function<void(std::size_t)> rec = [&](std::size_t k) {
                if (k == perms.size()) {
                    result.add(t.with_leaves(labels), c);
                    return;
                }
                auto& [v, p] = perms[k];
                std::sort(p.begin(), p.end());
                do {
                    const auto& pos = positions[v];
                    for (std::size_t i = 0; i < pos.size(); ++i) labels[pos[i]] = p[i];
                    rec(k + 1);
                } while (std::next_permutation(p.begin(), p.end()));
            };
            rec(0);
        }
        if (!result.is_zero()) out.push_back(std::move(result));
    }
    return out;
}

TreePoly act(const std::vector<int>& perm, const TreePoly& f) {
    return f.map_vars([&](int v) {
        if (v < 1 || static_cast<std::size_t>(v) > perm.size()) return v;
        return perm[static_cast<std::size_t>(v - 1)];
    });
}

MagPoly restitute(const MagPoly& f, const std::vector<int>& group) {
    if (group.empty()) return f;
    std::vector<int> g = group;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    const int n = std::max(f.max_var(), g.back());
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        std::vector<int> swap(static_cast<std::size_t>(n));
        std::iota(swap.begin(), swap.end(), 1);
        std::swap(swap[static_cast<std::size_t>(g[i] - 1)], swap[static_cast<std::size_t>(g[i + 1] - 1)]);
        if (!(act(swap, f) == f)) {
            throw PreconditionError("restitute: polynomial is not symmetric in the given variables");
        }
    }
    const std::set<int> gs(g.begin(), g.end());
    std::set<int> survivors;
    for (const auto& [t, c] : f.terms())
        for (int v : t.leaves()) survivors.insert(gs.count(v) != 0 ? g.front() : v);
    std::map<int, int> renumber;
    int next = 1;
    for (int v : survivors) renumber[v] = next++;
    return f.map_vars([&](int v) { return renumber.at(gs.count(v) != 0 ? g.front() : v); });
}

namespace {

// Sum over each single occurrence of var replaced by `rep`.
TreePoly derive_tree(const Tree& t, int var, const TreePoly& rep) {
    if (t.is_leaf()) return t.var() == var ? rep : TreePoly();
    TreePoly l = derive_tree(t.left(), var, rep);
    TreePoly r = derive_tree(t.right(), var, rep);
    return product(t.op(), l, TreePoly(t.right())) + product(t.op(), TreePoly(t.left()), r);
}

TreePoly subst_tree(const Tree& t, int var, const TreePoly& rep) {
    if (t.is_leaf()) return t.var() == var ? rep : TreePoly(t);
    return product(t.op(), subst_tree(t.left(), var, rep), subst_tree(t.right(), var, rep));
}

TreePoly expand_tree(const Tree& t) {
    if (t.is_leaf()) return TreePoly(t);
    TreePoly l = expand_tree(t.left());
    TreePoly r = expand_tree(t.right());
    switch (t.op()) {
        case Op::mul: return product(Op::mul, l, r);
        case Op::sym: return product(Op::mul, l, r) + product(Op::mul, r, l);
        case Op::anti: return product(Op::mul, l, r) - product(Op::mul, r, l);
    }
    return {};
}

TreePoly polarize_tree(const Tree& t) {
    if (t.is_leaf()) return TreePoly(t);
    if (t.op() != Op::mul) throw PreconditionError("polarize expects a magmatic polynomial");
    TreePoly l = polarize_tree(t.left());
    TreePoly r = polarize_tree(t.right());
    const Rational half(1, 2);
    return (product(Op::sym, l, r) + product(Op::anti, l, r)) * ParamPoly(half);
}

// Canonical form of a single polarized tree: (tree, sign); sign 0 means the tree vanishes.
std::pair<Tree, int> canon_tree(const Tree& t) {
    if (t.is_leaf()) return {t, 1};
    auto [l, sl] = canon_tree(t.left());
    auto [r, sr] = canon_tree(t.right());
    int sign = sl * sr;
    if (sign == 0) return {t, 0};
    if (t.op() == Op::mul) return {Tree::node(Op::mul, l, r), sign};
    if (l == r) return {t, t.op() == Op::anti ? 0 : sign};
    if (r < l) {
        std::swap(l, r);
        if (t.op() == Op::anti) sign = -sign;
    }
    return {Tree::node(t.op(), l, r), sign};
}

Tree mirror_tree(const Tree& t) {
    if (t.is_leaf()) return t;
    return Tree::node(t.op(), mirror_tree(t.right()), mirror_tree(t.left()));
}

} // namespace

MagPoly derive(const MagPoly& f, int var, const MagPoly& replacement) {
    MagPoly r;
    for (const auto& [t, c] : f.terms()) r += derive_tree(t, var, replacement) * c;
    return r;
}

MagPoly substitute(const MagPoly& f, int var, const MagPoly& replacement) {
    MagPoly r;
    for (const auto& [t, c] : f.terms()) r += subst_tree(t, var, replacement) * c;
    return r;
}

MagPoly expand_polar(const PolarPoly& p) {
    MagPoly r;
    for (const auto& [t, c] : p.terms()) r += expand_tree(t) * c;
    return r;
}

PolarPoly canonical_polar(const PolarPoly& p) {
    PolarPoly r;
    for (const auto& [t, c] : p.terms()) {
        auto [ct, s] = canon_tree(t);
        if (s != 0) r.add(ct, c * ParamPoly(s));
    }
    return r;
}

PolarPoly polarize(const MagPoly& f) {
    PolarPoly r;
    for (const auto& [t, c] : f.terms()) r += polarize_tree(t) * c;
    return canonical_polar(r);
}

MagPoly mirror(const MagPoly& f) {
    MagPoly r;
    for (const auto& [t, c] : f.terms()) r.add(mirror_tree(t), c);
    return r;
}

// --------------------------------------------------------------------------- JSON

namespace detail {

json tree_json(const Tree& t) {
    if (t.is_leaf()) return t.var();
    const char* tag = t.op() == Op::mul ? "@" : (t.op() == Op::sym ? "*" : "[]");
    return json::array({tag, tree_json(t.left()), tree_json(t.right())});
}

Tree tree_from(const json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v < 1) throw ParseError("tree JSON: leaf must be an integer >= 1");
        return Tree::leaf(static_cast<int>(v));
    }
    if (!j.is_array() || j.size() != 3 || !j[0].is_string()) {
        throw ParseError("tree JSON: expected a leaf integer or [tag, left, right]");
    }
    const auto tag = j[0].get<std::string>();
    Op op;
    if (tag == "@") op = Op::mul;
    else if (tag == "*") op = Op::sym;
    else if (tag == "[]") op = Op::anti;
    else throw ParseError("tree JSON: unknown tag '" + tag + "'");
    return Tree::node(op, tree_from(j[1]), tree_from(j[2]));
}

json poly_json(const TreePoly& f) {
    json out = json::array();
    for (const auto& [t, c] : f.terms()) out.push_back(json::array({c.str(), tree_json(t)}));
    return out;
}

TreePoly poly_from(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON: expected a list of [coeff, monomial]");
    TreePoly f;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) throw ParseError("polynomial JSON: term must be [coeff, monomial]");
        ParamPoly c;
        if (term[0].is_string()) c = ParamPoly::parse(term[0].get<std::string>());
        else if (term[0].is_number_integer()) c = ParamPoly(Rational(term[0].get<long>()));
        else throw ParseError("polynomial JSON: coefficient must be a string or integer");
        f.add(tree_from(term[1]), c);
    }
    return f;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace detail

std::string to_json(const Tree& t) { return detail::tree_json(t).dump(); }
std::string to_json(const TreePoly& f) { return detail::poly_json(f).dump(); }
Tree tree_from_json(std::string_view text) { return detail::tree_from(detail::parse_json(text)); }
TreePoly poly_from_json(std::string_view text) { return detail::poly_from(detail::parse_json(text)); }

} // namespace novikov
