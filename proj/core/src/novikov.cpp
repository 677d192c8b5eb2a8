#include "novikov/novikov.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json_detail.hpp"
#include "novikov/errors.hpp"

namespace novikov {

// --------------------------------------------------------------------------- basis

namespace {

void compositions(int total, int parts, Orders& cur, std::vector<Orders>& out) {
    if (parts == 1) {
        cur.push_back(static_cast<std::uint8_t>(total));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = total; k >= 0; --k) {
        cur.push_back(static_cast<std::uint8_t>(k));
        compositions(total - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

Orders shape(const Orders& k) {
    Orders s = k;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

} // namespace

NovBasis::NovBasis(int n) : n_(n) {
    if (n < 1) throw PreconditionError("arity must be >= 1");
    Orders cur;
    compositions(n - 1, n, cur, monomials_);
    std::stable_sort(monomials_.begin(), monomials_.end(), [](const Orders& a, const Orders& b) {
        Orders sa = shape(a), sb = shape(b);
        if (sa != sb) return sa > sb;
        return a > b;
    });
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(key(monomials_[i]), static_cast<std::uint32_t>(i));
}

std::uint64_t NovBasis::key(const Orders& k) {
    std::uint64_t h = 0;
    for (auto x : k) h = h * 16 + x;
    return h;
}

std::uint32_t NovBasis::index(const Orders& k) const {
    if (static_cast<int>(k.size()) != n_) throw PreconditionError("order vector has the wrong arity");
    auto it = index_.find(key(k));
    if (it == index_.end()) throw PreconditionError("order vector is not of weight n-1");
    return it->second;
}

std::vector<std::uint32_t> NovBasis::permutation_map(const std::vector<int>& perm) const {
    std::vector<std::uint32_t> out(monomials_.size());
    Orders img(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        const Orders& k = monomials_[i];
        for (int v = 0; v < n_; ++v) img[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)] - 1)] = k[static_cast<std::size_t>(v)];
        out[i] = index(img);
    }
    return out;
}

const NovBasis& nov_basis(int n) {
    static std::array<std::unique_ptr<NovBasis>, kMaxArityCap + 1> cache;
    static std::array<std::once_flag, kMaxArityCap + 1> flags;
    if (n < 1) throw PreconditionError("arity must be >= 1");
    if (n > kMaxArityCap) throw ResourceError("arity " + std::to_string(n) + " exceeds the hard cap " + std::to_string(kMaxArityCap));
    auto idx = static_cast<std::size_t>(n);
    std::call_once(flags[idx], [&] { cache[idx] = std::make_unique<NovBasis>(n); });
    return *cache[idx];
}

namespace {

void check_cap(int n, int cap) {
    if (cap > kMaxArityCap) throw ResourceError("arity cap above " + std::to_string(kMaxArityCap) + " is not supported");
    if (n > cap) throw ResourceError("arity " + std::to_string(n) + " exceeds the configured cap " + std::to_string(cap));
}

} // namespace

std::vector<Orders> basis_nov(int n, int cap) {
    check_cap(n, cap);
    return nov_basis(n).monomials();
}

// --------------------------------------------------------------------------- elements

bool NovElement::has_rational_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
}

NovElement NovElement::specialize(const ParamAssignment& values) const {
    NovElement r(arity_);
    for (const auto& [k, c] : terms_) r.add(k, c.specialize(values));
    return r;
}

std::vector<Rational> NovElement::dense() const {
    const NovBasis& b = nov_basis(arity_);
    std::vector<Rational> v(b.size());
    for (const auto& [k, c] : terms_) v[b.index(k)] = c.constant_value();
    return v;
}

NovElement NovElement::from_dense(int arity, const std::vector<Rational>& v) {
    const NovBasis& b = nov_basis(arity);
    NovElement e(arity);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) e.add(b.at(i), ParamPoly(v[i]));
    }
    return e;
}

NovElement NovElement::permuted(const std::vector<int>& perm) const {
    NovElement r(arity_);
    Orders img(static_cast<std::size_t>(arity_));
    for (const auto& [k, c] : terms_) {
        for (int v = 0; v < arity_; ++v) img[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)] - 1)] = k[static_cast<std::size_t>(v)];
        r.add(img, c);
    }
    return r;
}

void NovElement::add(const Orders& k, const ParamPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(k.size()) != arity_) throw PreconditionError("order vector arity mismatch");
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NovElement& NovElement::operator+=(const NovElement& o) {
    if (is_zero() && arity_ == 0) arity_ = o.arity_;
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

NovElement& NovElement::operator-=(const NovElement& o) {
    if (is_zero() && arity_ == 0) arity_ = o.arity_;
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

NovElement& NovElement::operator*=(const ParamPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

namespace {

std::string diff_var(int var, int order) {
    std::string s(1, static_cast<char>('a' + var));
    if (order <= 3) s.append(static_cast<std::size_t>(order), '\'');
    else s += "^{(" + std::to_string(order) + ")}";
    return s;
}

} // namespace

std::string NovElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        bool negative = false;
        std::string coeff;
        if (c.is_constant()) {
            Rational v = c.constant_value();
            negative = v.sign() < 0;
            if (!v.abs().is_one()) coeff = v.abs().str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        os << coeff;
        for (std::size_t v = 0; v < k.size(); ++v) os << diff_var(static_cast<int>(v), k[v]);
    }
    return os.str();
}

// --------------------------------------------------------------------------- embed

namespace {

using IntTerms = std::map<Orders, long long>;

IntTerms embed_tree(const Tree& t, std::size_t n) {
    if (t.is_leaf()) return {{Orders(n, 0), 1}};
    if (t.op() != Op::mul) throw PreconditionError("embed expects magmatic products only; expand polarized forms first");
    IntTerms l = embed_tree(t.left(), n);
    const IntTerms r = embed_tree(t.right(), n);
    const std::vector<int> lvars = t.left().leaves();
    IntTerms dl;
    for (const auto& [k, c] : l) {
        for (int v : lvars) {
            Orders d = k;
            ++d[static_cast<std::size_t>(v - 1)];
            dl[d] += c;
        }
    }
    IntTerms out;
    for (const auto& [kl, cl] : dl) {
        for (const auto& [kr, cr] : r) {
            Orders s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint8_t>(kl[i] + kr[i]);
            out[s] += cl * cr;
        }
    }
    return out;
}

} // namespace

NovElement embed(const MagPoly& f) {
    if (f.is_zero()) return NovElement(0);
    const int n = f.multilinear_arity();
    if (n < 1) throw PreconditionError("embed requires a multilinear homogeneous polynomial");
    NovElement e(n);
    for (const auto& [t, c] : f.terms()) {
        for (const auto& [k, m] : embed_tree(t, static_cast<std::size_t>(n))) {
            if (m != 0) e.add(k, c * ParamPoly(Rational(static_cast<long>(m))));
        }
    }
    return e;
}

// --------------------------------------------------------------------------- differential parser

namespace {

// (letter, order) pairs, sorted.
using DiffMono = std::vector<std::pair<int, int>>;
using DiffPoly = std::map<DiffMono, ParamPoly>;

DiffPoly dp_mul(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            DiffMono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            ParamPoly c = ca * cb;
            auto& slot = r[m];
            slot += c;
            if (slot.is_zero()) r.erase(m);
        }
    return r;
}

void dp_add(DiffPoly& a, const DiffPoly& b, int sign) {
    for (const auto& [m, c] : b) {
        auto& slot = a[m];
        if (sign > 0) slot += c;
        else slot -= c;
        if (slot.is_zero()) a.erase(m);
    }
}

DiffPoly dp_const(const ParamPoly& c) {
    DiffPoly r;
    if (!c.is_zero()) r[DiffMono{}] = c;
    return r;
}

class DiffParser {
public:
    explicit DiffParser(std::string_view s) : s_(s) {}

    DiffPoly run() {
        DiffPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("differential polynomial '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat_str(std::string_view t) {
        skip_ws();
        if (s_.substr(pos_, t.size()) != t) return false;
        pos_ += t.size();
        return true;
    }
    bool eat_minus() { return eat_str("-") || eat_str("\xE2\x88\x92"); }

    DiffPoly expr() {
        bool neg = eat_minus();
        if (!neg) eat_str("+");
        DiffPoly acc;
        dp_add(acc, term(), neg ? -1 : 1);
        for (;;) {
            if (eat_minus()) dp_add(acc, term(), -1);
            else if (eat_str("+")) dp_add(acc, term(), 1);
            else break;
        }
        return acc;
    }

    bool at_factor() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               (static_cast<unsigned char>(c) >= 0x80 && s_.substr(pos_, 3) != "\xE2\x88\x92");
    }

    DiffPoly term() {
        DiffPoly acc = factor();
        for (;;) {
            if (eat_str("*")) {
                acc = dp_mul(acc, factor());
                continue;
            }
            if (eat_str("/")) {
                skip_ws();
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (start == pos_) fail("expected an integer divisor");
                Rational d = Rational::parse(s_.substr(start, pos_ - start));
                acc = dp_mul(acc, dp_const(ParamPoly(d.inverse())));
                continue;
            }
            if (at_factor()) {
                acc = dp_mul(acc, factor());
                continue;
            }
            break;
        }
        return acc;
    }

    DiffPoly factor() {
        DiffPoly base = atom();
        skip_ws();
        if (s_.substr(pos_, 1) == "^" && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            int k = std::stoi(std::string(s_.substr(start, pos_ - start)));
            DiffPoly r = dp_const(ParamPoly(1));
            for (int i = 0; i < k; ++i) r = dp_mul(r, base);
            return r;
        }
        return base;
    }

    DiffPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            DiffPoly p = expr();
            if (!eat_str(")")) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return dp_const(ParamPoly(Rational::parse(s_.substr(start, pos_ - start))));
        }
        std::size_t probe = pos_;
        if (auto p = match_param(s_, probe)) {
            pos_ = probe;
            return dp_const(ParamPoly::var(*p));
        }
        if (c >= 'a' && c <= 'h') {
            ++pos_;
            int order = 0;
            for (;;) {
                if (pos_ < s_.size() && s_[pos_] == '\'') { ++order; ++pos_; continue; }
                if (s_.substr(pos_, 3) == "\xE2\x80\xB2") { order += 1; pos_ += 3; continue; }
                if (s_.substr(pos_, 3) == "\xE2\x80\xB3") { order += 2; pos_ += 3; continue; }
                if (s_.substr(pos_, 3) == "\xE2\x80\xB4") { order += 3; pos_ += 3; continue; }
                break;
            }
            // a^{(k)} or a^(k) sets the order explicitly.
            if (s_.substr(pos_, 3) == "^{(" || s_.substr(pos_, 2) == "^(") {
                pos_ += s_.substr(pos_, 3) == "^{(" ? 3 : 2;
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (start == pos_) fail("expected derivative order");
                order += std::stoi(std::string(s_.substr(start, pos_ - start)));
                if (!eat_str(")")) fail("expected ')'");
                if (s_.substr(pos_ - 1, 1) == ")" && pos_ < s_.size() && s_[pos_] == '}') ++pos_;
            }
            DiffPoly r;
            r[DiffMono{{c - 'a', order}}] = ParamPoly(1);
            return r;
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

NovElement linearize_differential(std::string_view text) {
    const DiffPoly p = DiffParser(text).run();
    if (p.empty()) return NovElement(0);
    std::map<int, int> deg;
    int weight = -1;
    bool first = true;
    for (const auto& [m, c] : p) {
        std::map<int, int> d;
        int w = 0;
        for (const auto& [letter, order] : m) {
            ++d[letter];
            w += order;
        }
        if (first) {
            deg = d;
            weight = w;
            first = false;
        } else if (d != deg || w != weight) {
            throw PreconditionError("differential polynomial is not multihomogeneous");
        }
    }
    int n = 0;
    for (const auto& [l, d] : deg) n += d;
    if (weight != n - 1) throw PreconditionError("differential polynomial is not of weight n-1 (not in Nov(n))");
    std::map<int, int> start;
    int next = 0;
    for (const auto& [l, d] : deg) {
        start[l] = next;
        next += d;
    }
    NovElement out(n);
    for (const auto& [m, c] : p) {
        // orders of each letter's occurrences, distributed over its block in every order
        std::map<int, std::vector<int>> occ;
        for (const auto& [letter, order] : m) occ[letter].push_back(order);
        Orders k(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<int, std::vector<int>>> letters(occ.begin(), occ.end());
        std::function<void(std::size_t)> rec = [&](std::size_t li) {
            if (li == letters.size()) {
                out.add(k, c);
                return;
            }
            auto& [letter, orders] = letters[li];
            std::vector<int> slots(orders.size());
            std::iota(slots.begin(), slots.end(), start[letter]);
            do {
                for (std::size_t i = 0; i < orders.size(); ++i) k[static_cast<std::size_t>(slots[i])] = static_cast<std::uint8_t>(orders[i]);
                rec(li + 1);
            } while (std::next_permutation(slots.begin(), slots.end()));
        };
        rec(0);
    }
    return out;
}

// --------------------------------------------------------------------------- ideals

IdealBasis::IdealBasis(int max_arity) {
    levels_.emplace_back();
    for (int n = 1; n <= max_arity; ++n) levels_.emplace_back(nov_basis(n).size());
}

const EchelonBasis& IdealBasis::level(int n) const {
    if (n < 1 || n > max_arity()) throw PreconditionError("ideal not computed at arity " + std::to_string(n));
    return levels_[static_cast<std::size_t>(n)];
}

EchelonBasis& IdealBasis::level(int n) {
    if (n < 1 || n > max_arity()) throw PreconditionError("ideal not computed at arity " + std::to_string(n));
    return levels_[static_cast<std::size_t>(n)];
}

std::size_t IdealBasis::quotient_dim(int n) const { return level(n).dim() - level(n).rank(); }

bool IdealBasis::contains(const NovElement& e) const {
    if (e.is_zero()) return true;
    return level(e.arity()).contains(e.dense());
}

NovElement IdealBasis::reduce(const NovElement& e) const {
    if (e.is_zero()) return e;
    std::vector<Rational> v = e.dense();
    level(e.arity()).reduce(v);
    return NovElement::from_dense(e.arity(), v);
}

std::vector<NovElement> IdealBasis::basis(int n) const {
    std::vector<NovElement> out;
    for (const auto& row : level(n).dense_rows()) out.push_back(NovElement::from_dense(n, row));
    return out;
}

namespace {

// Images of every arity-m basis monomial under the 2 + 2m closure operations.
struct Transition {
    int m = 0;
    std::vector<std::vector<SparseRow>> images;  // [monomial][op]
};

Transition make_transition(int m) {
    const NovBasis& src = nov_basis(m);
    const NovBasis& dst = nov_basis(m + 1);
    Transition t;
    t.m = m;
    const auto um = static_cast<std::size_t>(m);
    for (const Orders& k : src.monomials()) {
        std::vector<SparseRow> ops;
        auto push = [&](std::map<std::uint32_t, long long>& acc) {
            SparseRow r;
            for (const auto& [i, c] : acc) {
                if (c != 0) r.emplace_back(i, Rational(static_cast<long>(c)));
            }
            ops.push_back(std::move(r));
        };
        Orders ext = k;
        ext.push_back(0);
        {  // f' a_{m+1}
            std::map<std::uint32_t, long long> acc;
            for (std::size_t v = 0; v < um; ++v) {
                Orders d = ext;
                ++d[v];
                acc[dst.index(d)] += 1;
            }
            push(acc);
        }
        {  // f a'_{m+1}
            std::map<std::uint32_t, long long> acc;
            Orders d = ext;
            d[um] = 1;
            acc[dst.index(d)] += 1;
            push(acc);
        }
        for (std::size_t i = 0; i < um; ++i) {
            const int ki = k[i];
            std::map<std::uint32_t, long long> left, right;
            for (int s = 0; s <= ki; ++s) {
                const long long c = binomial(ki, s).to_long();
                Orders a = ext;  // a_i -> a_i' a_{m+1}
                a[i] = static_cast<std::uint8_t>(1 + s);
                a[um] = static_cast<std::uint8_t>(ki - s);
                left[dst.index(a)] += c;
                Orders b = ext;  // a_i -> a_{m+1}' a_i
                b[um] = static_cast<std::uint8_t>(1 + s);
                b[i] = static_cast<std::uint8_t>(ki - s);
                right[dst.index(b)] += c;
            }
            push(left);
            push(right);
        }
        t.images.push_back(std::move(ops));
    }
    return t;
}

const Transition& transition(int m) {
    static std::array<std::unique_ptr<Transition>, kMaxArityCap + 1> cache;
    static std::array<std::once_flag, kMaxArityCap + 1> flags;
    auto idx = static_cast<std::size_t>(m);
    std::call_once(flags[idx], [&] { cache[idx] = std::make_unique<Transition>(make_transition(m)); });
    return *cache[idx];
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

void require_rational(const NovElement& e) {
    if (!e.has_rational_coefficients()) throw SymbolicParameterError();
}

// Inserts every S_n image of e.
void insert_orbit(EchelonBasis& level, const NovElement& e) {
    if (e.is_zero()) return;
    const NovBasis& b = nov_basis(e.arity());
    const std::vector<Rational> v = e.dense();
    std::vector<int> perm = identity_perm(e.arity());
    do {
        if (level.rank() == level.dim()) return;
        const auto map = b.permutation_map(perm);
        std::vector<Rational> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) w[map[i]] = v[i];
        }
        level.insert(std::move(w));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Applies op `op` to a row over the arity-m basis, then relabels by `map`.
std::vector<Rational> apply_op(const Transition& t, const SparseRow& row, std::size_t op,
                               const std::vector<std::uint32_t>& map, std::size_t dst_dim) {
    std::vector<Rational> out(dst_dim);
    for (const auto& [i, c] : row) {
        for (const auto& [j, d] : t.images[i][op]) {
            Rational& slot = out[map[j]];
            slot.sub_mul(-c, d);
        }
    }
    return out;
}

} // namespace

IdealBasis build_ideal(const std::vector<NovElement>& generators, int max_arity, const ClosureOptions& options) {
    check_cap(max_arity, options.arity_cap);
    for (const auto& g : generators) require_rational(g);
    IdealBasis ideal(max_arity);
    for (int n = 1; n <= max_arity; ++n) {
        EchelonBasis& level = ideal.level(n);
        const std::size_t dim = level.dim();
        if (n > 1) {
            const EchelonBasis& prev = ideal.level(n - 1);
            const Transition& t = transition(n - 1);
            const NovBasis& dst = nov_basis(n);
            const std::size_t ops = 2 + 2 * static_cast<std::size_t>(n - 1);
            // Coset representatives (j n) of S_{n-1} in S_n; prev is S_{n-1}-stable.
            for (int j = n; j >= 1 && level.rank() < dim; --j) {
                std::vector<int> perm = identity_perm(n);
                std::swap(perm[static_cast<std::size_t>(j - 1)], perm[static_cast<std::size_t>(n - 1)]);
                const auto map = dst.permutation_map(perm);
                for (std::size_t r = 0; r < prev.rank() && level.rank() < dim; ++r) {
                    for (std::size_t op = 0; op < ops && level.rank() < dim; ++op) {
                        level.insert(apply_op(t, prev.row(r), op, map, dim));
                    }
                }
            }
        }
        for (const auto& g : generators) {
            if (g.arity() == n) insert_orbit(level, g);
        }
    }
    return ideal;
}

IdealBasis build_ideal(const std::vector<MagPoly>& generators, int max_arity, const ClosureOptions& options) {
    std::vector<NovElement> embedded;
    for (const auto& g : generators) {
        if (!g.has_rational_coefficients()) throw SymbolicParameterError();
        NovElement e = embed(g);
        if (!e.is_zero()) embedded.push_back(std::move(e));
    }
    return build_ideal(embedded, max_arity, options);
}

std::vector<NovElement> closure_step(const std::vector<NovElement>& fs) {
    std::vector<NovElement> nonzero;
    for (const auto& f : fs) {
        require_rational(f);
        if (!f.is_zero()) nonzero.push_back(f);
    }
    if (nonzero.empty()) return {};
    const int m = nonzero.front().arity();
    for (const auto& f : nonzero) {
        if (f.arity() != m) throw PreconditionError("closure_step: inputs must share one arity");
    }
    const Transition& t = transition(m);
    const NovBasis& dst = nov_basis(m + 1);
    EchelonBasis out(dst.size());
    const std::size_t ops = 2 + 2 * static_cast<std::size_t>(m);
    std::vector<int> perm = identity_perm(m + 1);
    do {
        const auto map = dst.permutation_map(perm);
        for (const auto& f : nonzero) {
            const std::vector<Rational> v = f.dense();
            SparseRow row;
            for (std::uint32_t i = 0; i < v.size(); ++i) {
                if (!v[i].is_zero()) row.emplace_back(i, v[i]);
            }
            for (std::size_t op = 0; op < ops; ++op) out.insert(apply_op(t, row, op, map, dst.size()));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<NovElement> res;
    for (const auto& r : out.dense_rows()) res.push_back(NovElement::from_dense(m + 1, r));
    return res;
}

std::pair<std::size_t, IdealBasis> quotient_dim(const std::vector<MagPoly>& generators, int n, const ClosureOptions& options) {
    IdealBasis ideal = build_ideal(generators, n, options);
    return {ideal.quotient_dim(n), std::move(ideal)};
}

bool implies(const std::vector<MagPoly>& generators, const NovElement& candidate, const ClosureOptions& options) {
    if (candidate.is_zero()) return true;
    require_rational(candidate);
    const IdealBasis ideal = build_ideal(generators, candidate.arity(), options);
    return ideal.contains(candidate);
}

bool implies(const std::vector<MagPoly>& generators, const MagPoly& candidate, const ClosureOptions& options) {
    return implies(generators, embed(candidate), options);
}

std::size_t orbit_span_dim(const IdealBasis& ideal, const NovElement& e) {
    if (e.is_zero()) return 0;
    require_rational(e);
    const int n = e.arity();
    const EchelonBasis& level = ideal.level(n);
    EchelonBasis span(level.dim());
    std::vector<int> perm = identity_perm(n);
    do {
        std::vector<Rational> v = e.permuted(perm).dense();
        level.reduce(v);
        span.insert(std::move(v));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return span.rank();
}

// --------------------------------------------------------------------------- JSON

std::string to_json(const NovElement& e) {
    detail::json terms = detail::json::array();
    for (const auto& [k, c] : e.terms()) {
        std::vector<int> orders(k.begin(), k.end());
        terms.push_back({{"orders", orders}, {"coeff", c.str()}});
    }
    return detail::json{{"arity", e.arity()}, {"terms", terms}}.dump();
}

NovElement nov_element_from_json(std::string_view text) {
    const detail::json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("arity") || !j.contains("terms")) {
        throw ParseError("NovElement JSON needs 'arity' and 'terms'");
    }
    const int n = j.at("arity").get<int>();
    NovElement e(n);
    for (const auto& t : j.at("terms")) {
        Orders k;
        for (const auto& x : t.at("orders")) {
            const int v = x.get<int>();
            if (v < 0 || v > 255) throw ParseError("derivative order out of range");
            k.push_back(static_cast<std::uint8_t>(v));
        }
        int w = 0;
        for (auto x : k) w += x;
        if (static_cast<int>(k.size()) != n || w != n - 1) throw ParseError("NovElement JSON: monomial not in Nov(arity)");
        const auto& c = t.at("coeff");
        e.add(k, c.is_string() ? ParamPoly::parse(c.get<std::string>()) : ParamPoly(Rational(c.get<long>())));
    }
    return e;
}

} // namespace novikov
