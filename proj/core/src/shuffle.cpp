#include "novikov/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "json_detail.hpp"
#include "novikov/errors.hpp"
#include "novikov/matrix.hpp"
#include "parallel.hpp"

namespace novikov {

namespace {

constexpr int kMaxArity = 8;

/// Subtree extents and minimal leaves of a prefix code, indexed by code position.
struct Flat {
    const std::vector<std::int8_t>* code = nullptr;
    std::vector<std::uint8_t> end;
    std::vector<std::int8_t> min;

    explicit Flat(const std::vector<std::int8_t>& c) : code(&c), end(c.size()), min(c.size()) {
        if (!c.empty()) fill(0);
    }
    [[nodiscard]] std::int8_t at(std::size_t p) const { return (*code)[p]; }
    [[nodiscard]] std::size_t right(std::size_t p) const { return end[p + 1]; }

private:
    std::size_t fill(std::size_t p) {
        if ((*code)[p] > 0) {
            min[p] = (*code)[p];
            end[p] = static_cast<std::uint8_t>(p + 1);
            return p + 1;
        }
        const std::size_t r = fill(p + 1);
        const std::size_t e = fill(r);
        min[p] = std::min(min[p + 1], min[r]);
        end[p] = static_cast<std::uint8_t>(e);
        return e;
    }
};

bool match_at(const Flat& pat, std::size_t q, const Flat& t, std::size_t p, Occurrence& occ) {
    const std::int8_t pc = pat.at(q);
    if (pc > 0) {
        occ.inputs[pc - 1] = p;
        return true;
    }
    if (t.at(p) != pc) return false;
    occ.vertices |= 1u << p;
    return match_at(pat, q + 1, t, p + 1, occ) && match_at(pat, pat.right(q), t, t.right(p), occ);
}

std::optional<Occurrence> match_root(const Flat& pat, std::size_t pattern_arity, const Flat& t, std::size_t p) {
    Occurrence occ;
    occ.root = p;
    occ.inputs.assign(pattern_arity, 0);
    if (!match_at(pat, 0, t, p, occ)) return std::nullopt;
    for (std::size_t i = 1; i < pattern_arity; ++i) {
        if (t.min[occ.inputs[i - 1]] > t.min[occ.inputs[i]]) return std::nullopt;
    }
    return occ;
}

std::optional<Occurrence> first_occurrence(const Flat& pat, std::size_t pattern_arity, const Flat& t) {
    if (pat.code->size() > t.code->size()) return std::nullopt;
    for (std::size_t p = 0; p < t.code->size(); ++p) {
        if (t.at(p) != pat.at(0)) continue;
        if (auto occ = match_root(pat, pattern_arity, t, p)) return occ;
    }
    return std::nullopt;
}

void emit_substituted(const std::vector<std::int8_t>& tree, const Occurrence& occ,
                      const std::vector<std::int8_t>& rep, const Flat& flat, std::vector<std::int8_t>& out) {
    for (std::int8_t c : rep) {
        if (c < 0) {
            out.push_back(c);
            continue;
        }
        const std::size_t s = occ.inputs[c - 1];
        out.insert(out.end(), tree.begin() + static_cast<std::ptrdiff_t>(s),
                   tree.begin() + flat.end[s]);
    }
}

std::string normalize_generator_name(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == ' ' || ch == '-' || ch == ',' || ch == '_') continue;
        if (s.substr(i, 2) == "\xC2\xB7") {  // U+00B7 middle dot
            out += '*';
            ++i;
            continue;
        }
        if (ch == '.') {
            out += '*';
            continue;
        }
        out += ch;
    }
    return out;
}

int find_generator(const Alphabet& alphabet, std::string_view name) {
    const std::string key = normalize_generator_name(name);
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
        if (normalize_generator_name(alphabet[g].name) == key) return static_cast<int>(g);
    }
    throw ParseError("monomial order: unknown generator '" + std::string(name) + "'");
}

int generator_for(const Alphabet& alphabet, Op op) {
    const Symmetry want = op == Op::sym ? Symmetry::sym : (op == Op::anti ? Symmetry::antisym : Symmetry::none);
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
        if (alphabet[g].symmetry == want) return static_cast<int>(g);
    }
    throw PreconditionError("alphabet has no generator for this product");
}

Op op_for(const Generator& g) {
    switch (g.symmetry) {
        case Symmetry::sym: return Op::sym;
        case Symmetry::antisym: return Op::anti;
        case Symmetry::none: break;
    }
    return Op::mul;
}

/// All shuffle trees on the label set {1..n}, built from standardized smaller ones.
/// `keep` filters a candidate whose children are already kept.
std::vector<std::vector<ShuffleTree>> build_trees(int generators, int n,
                                                  const std::function<bool(const ShuffleTree&)>& keep) {
    std::vector<std::vector<ShuffleTree>> by_arity(static_cast<std::size_t>(n) + 1);
    by_arity[1].push_back(ShuffleTree::leaf(1));
    for (int m = 2; m <= n; ++m) {
        auto& out = by_arity[static_cast<std::size_t>(m)];
        // Subsets of {2..m} joined with 1 form the left label set; the right set is nonempty.
        const unsigned full = (1u << (m - 1)) - 1;
        for (unsigned mask = 0; mask < full; ++mask) {
            std::vector<int> left_labels{1};
            std::vector<int> right_labels;
            for (int i = 2; i <= m; ++i) {
                if (mask & (1u << (i - 2))) left_labels.push_back(i);
                else right_labels.push_back(i);
            }
            const auto& ls = by_arity[left_labels.size()];
            const auto& rs = by_arity[right_labels.size()];
            for (const auto& l : ls) {
                const ShuffleTree lt = l.relabeled(left_labels);
                for (const auto& r : rs) {
                    const ShuffleTree rt = r.relabeled(right_labels);
                    for (int g = 0; g < generators; ++g) {
                        ShuffleTree t = ShuffleTree::node(g, lt, rt);
                        if (keep(t)) out.push_back(std::move(t));
                    }
                }
            }
        }
    }
    return by_arity;
}

void check_arity(int n) {
    if (n < 1 || n > kMaxArity) {
        throw ResourceError("shuffle monomials are supported for arity 1.." + std::to_string(kMaxArity));
    }
}

} // namespace

Alphabet polarized_alphabet() { return {{"*", Symmetry::sym}, {"[]", Symmetry::antisym}}; }

// --------------------------------------------------------------------------- ShuffleTree

ShuffleTree ShuffleTree::leaf(int label) {
    if (label < 1 || label > 127) throw PreconditionError("leaf label out of range");
    return ShuffleTree({static_cast<std::int8_t>(label)});
}

ShuffleTree ShuffleTree::node(int gen, const ShuffleTree& left, const ShuffleTree& right) {
    if (left.code_.empty() || right.code_.empty()) throw PreconditionError("empty subtree");
    if (left.min_leaf() >= right.min_leaf()) {
        throw PreconditionError("shuffle condition: min-leaf(left) < min-leaf(right) required");
    }
    std::vector<std::int8_t> code;
    code.reserve(1 + left.code_.size() + right.code_.size());
    code.push_back(static_cast<std::int8_t>(-(gen + 1)));
    code.insert(code.end(), left.code_.begin(), left.code_.end());
    code.insert(code.end(), right.code_.begin(), right.code_.end());
    return ShuffleTree(std::move(code));
}

ShuffleTree ShuffleTree::from_code(std::vector<std::int8_t> code) {
    // A valid prefix code has exactly one more leaf than internal vertices, completed at the end.
    int need = 1;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (need == 0) throw ParseError("shuffle tree code: trailing symbols");
        need += code[i] < 0 ? 1 : -1;
        if (code[i] == 0) throw ParseError("shuffle tree code: zero symbol");
    }
    if (need != 0) throw ParseError("shuffle tree code: incomplete tree");
    ShuffleTree t(std::move(code));
    if (!t.is_shuffle()) throw PreconditionError("shuffle condition violated");
    return t;
}

ShuffleTree ShuffleTree::left() const {
    if (is_leaf()) throw PreconditionError("leaf has no children");
    const Flat f(code_);
    return ShuffleTree(std::vector<std::int8_t>(code_.begin() + 1, code_.begin() + f.end[1]));
}

ShuffleTree ShuffleTree::right() const {
    if (is_leaf()) throw PreconditionError("leaf has no children");
    const Flat f(code_);
    return ShuffleTree(std::vector<std::int8_t>(code_.begin() + f.end[1], code_.end()));
}

int ShuffleTree::arity() const { return static_cast<int>((code_.size() + 1) / 2); }

int ShuffleTree::min_leaf() const {
    int m = 127;
    for (std::int8_t c : code_) {
        if (c > 0) m = std::min<int>(m, c);
    }
    return m;
}

int ShuffleTree::count(int gen) const {
    return static_cast<int>(std::count(code_.begin(), code_.end(), static_cast<std::int8_t>(-(gen + 1))));
}

bool ShuffleTree::is_shuffle() const {
    if (code_.empty()) return false;
    const Flat f(code_);
    std::vector<bool> seen(code_.size() + 2, false);
    for (std::size_t p = 0; p < code_.size(); ++p) {
        if (code_[p] > 0) {
            const auto l = static_cast<std::size_t>(code_[p]);
            if (l > static_cast<std::size_t>(arity()) || seen[l]) return false;
            seen[l] = true;
        } else if (f.min[p + 1] >= f.min[f.right(p)]) {
            return false;
        }
    }
    return true;
}

ShuffleTree ShuffleTree::relabeled(const std::vector<int>& map) const {
    std::vector<std::int8_t> code = code_;
    for (auto& c : code) {
        if (c > 0) c = static_cast<std::int8_t>(map.at(static_cast<std::size_t>(c - 1)));
    }
    return ShuffleTree(std::move(code));
}

std::string ShuffleTree::str(const Alphabet& alphabet) const {
    std::function<std::string(std::size_t, const Flat&)> rec = [&](std::size_t p, const Flat& f) -> std::string {
        const std::int8_t c = code_[p];
        if (c > 0) return "a" + std::to_string(c);
        const auto g = static_cast<std::size_t>(-c - 1);
        const std::string& name = g < alphabet.size() ? alphabet[g].name : std::string("g" + std::to_string(g));
        auto child = [&](std::size_t q) {
            std::string s = rec(q, f);
            const bool infix_child = code_[q] < 0 && alphabet.size() > static_cast<std::size_t>(-code_[q] - 1) &&
                                     alphabet[static_cast<std::size_t>(-code_[q] - 1)].name != "[]";
            return infix_child ? "(" + s + ")" : s;
        };
        if (name == "[]") return "[" + rec(p + 1, f) + "," + rec(f.right(p), f) + "]";
        const std::string sep = name == "*" ? "\xC2\xB7" : name;
        return child(p + 1) + sep + child(f.right(p));
    };
    const Flat f(code_);
    return rec(0, f);
}

void add_term(ShuffleCombination& c, const ShuffleTree& t, const Rational& x) {
    if (x.is_zero()) return;
    auto [it, inserted] = c.try_emplace(t, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero()) c.erase(it);
    }
}

// --------------------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(std::string name, std::vector<OrderStage> stages, std::vector<int> rank)
    : name_(std::move(name)), stages_(std::move(stages)), rank_(std::move(rank)) {}

MonomialOrder MonomialOrder::parse(std::string_view spec, const Alphabet& alphabet) {
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;
    for (char ch : spec) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '-' && depth == 0) {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    tokens.push_back(cur);
    if (depth != 0) throw ParseError("monomial order: unbalanced parentheses");

    std::vector<OrderStage> stages;
    std::vector<int> rank;
    std::vector<std::size_t> default_count;  // graded stages awaiting the top generator
    bool reverse_next = false;
    for (std::string tok : tokens) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        const auto open = tok.find('(');
        const std::string head = tok.substr(0, open);
        std::string arg;
        if (open != std::string::npos) {
            if (tok.back() != ')') throw ParseError("monomial order: expected ')' in '" + tok + "'");
            arg = tok.substr(open + 1, tok.size() - open - 2);
        }
        if (head == "rev" || head == "reverse") {
            if (reverse_next) throw ParseError("monomial order: repeated 'rev'");
            reverse_next = true;
            continue;
        }
        OrderStage st;
        st.reversed = reverse_next;
        reverse_next = false;
        if (head == "graded") {
            st.kind = StageKind::generator_count;
            if (arg.empty()) default_count.push_back(stages.size());
            else st.generator = find_generator(alphabet, arg);
        } else if (head == "pathlex") {
            st.kind = StageKind::path_lex;
            if (!arg.empty()) {
                if (!rank.empty()) throw ParseError("monomial order: generator precedence given twice");
                std::vector<int> seq;
                std::size_t start = 0;
                while (true) {
                    const auto gt = arg.find('>', start);
                    seq.push_back(find_generator(alphabet, arg.substr(start, gt - start)));
                    if (gt == std::string::npos) break;
                    start = gt + 1;
                }
                if (seq.size() != alphabet.size()) {
                    throw ParseError("monomial order: precedence must list every generator once");
                }
                rank.assign(alphabet.size(), -1);
                for (std::size_t i = 0; i < seq.size(); ++i) {
                    auto& r = rank[static_cast<std::size_t>(seq[i])];
                    if (r != -1) throw ParseError("monomial order: generator listed twice");
                    r = static_cast<int>(seq.size() - 1 - i);
                }
            }
        } else if (head == "perm") {
            st.kind = StageKind::permutation;
        } else if (head == "arity") {
            st.kind = StageKind::arity;
        } else {
            throw ParseError("monomial order: unknown stage '" + tok + "'");
        }
        stages.push_back(st);
    }
    if (reverse_next) throw ParseError("monomial order: trailing 'rev'");
    if (stages.empty()) throw ParseError("monomial order: no stages");
    if (rank.empty()) {
        rank.resize(alphabet.size());
        for (std::size_t g = 0; g < alphabet.size(); ++g) rank[g] = static_cast<int>(alphabet.size() - 1 - g);
    }
    const auto top = static_cast<int>(std::max_element(rank.begin(), rank.end()) - rank.begin());
    for (std::size_t i : default_count) stages[i].generator = top;
    return MonomialOrder(std::string(spec), std::move(stages), std::move(rank));
}

std::vector<int> MonomialOrder::key(const ShuffleTree& t) const {
    const auto& code = t.code();
    const int n = t.arity();
    std::vector<int> key;
    key.reserve(code.size() * 4);

    // Root-to-leaf generator words, indexed by leaf label.
    std::vector<std::vector<int>> words;
    auto ensure_words = [&] {
        if (!words.empty()) return;
        words.assign(static_cast<std::size_t>(n) + 1, {});
        std::vector<int> path;
        std::vector<int> pending;  // children still to visit per open vertex
        for (std::int8_t c : code) {
            if (c < 0) {
                path.push_back(rank_.at(static_cast<std::size_t>(-c - 1)));
                pending.push_back(2);
                continue;
            }
            words[static_cast<std::size_t>(c)] = path;
            while (!pending.empty() && --pending.back() == 0) {
                pending.pop_back();
                path.pop_back();
            }
        }
    };

    for (const auto& st : stages_) {
        const std::size_t start = key.size();
        switch (st.kind) {
            case StageKind::arity:
                key.push_back(n);
                break;
            case StageKind::generator_count:
                key.push_back(t.count(st.generator));
                break;
            case StageKind::path_lex:
                ensure_words();
                // Words compare degree-lexicographically: length first, then letters.
                for (int l = 1; l <= n; ++l) {
                    const auto& w = words[static_cast<std::size_t>(l)];
                    key.push_back(static_cast<int>(w.size()));
                    key.insert(key.end(), w.begin(), w.end());
                }
                break;
            case StageKind::permutation:
                for (std::int8_t c : code) {
                    if (c > 0) key.push_back(c);
                }
                break;
        }
        if (st.reversed) {
            for (std::size_t i = start; i < key.size(); ++i) key[i] = -key[i];
        }
    }
    for (std::int8_t c : code) {
        if (c > 0) key.push_back(c);
    }
    for (std::int8_t c : code) key.push_back(c);
    return key;
}

int MonomialOrder::compare(const ShuffleTree& a, const ShuffleTree& b) const {
    const auto ka = key(a);
    const auto kb = key(b);
    return ka < kb ? -1 : (kb < ka ? 1 : 0);
}

// --------------------------------------------------------------------------- monomials

std::vector<ShuffleTree> enumerate_monomials(const Alphabet& alphabet, int n, const MonomialOrder* order) {
    check_arity(n);
    if (alphabet.empty()) throw PreconditionError("empty alphabet");
    auto by_arity = build_trees(static_cast<int>(alphabet.size()), n, [](const ShuffleTree&) { return true; });
    auto out = std::move(by_arity[static_cast<std::size_t>(n)]);
    if (order != nullptr) {
        std::vector<std::pair<std::vector<int>, std::size_t>> keys;
        keys.reserve(out.size());
        for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(order->key(out[i]), i);
        std::sort(keys.begin(), keys.end(), std::greater<>());
        std::vector<ShuffleTree> sorted;
        sorted.reserve(out.size());
        for (const auto& [k, i] : keys) sorted.push_back(out[i]);
        return sorted;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Occurrence> occurrences(const ShuffleTree& pattern, const ShuffleTree& tree) {
    std::vector<Occurrence> out;
    const Flat pf(pattern.code());
    const Flat tf(tree.code());
    const auto ar = static_cast<std::size_t>(pattern.arity());
    for (std::size_t p = 0; p < tree.code().size(); ++p) {
        if (tree.code()[p] != pattern.code()[0] && !pattern.is_leaf()) continue;
        if (auto occ = match_root(pf, ar, tf, p)) out.push_back(std::move(*occ));
    }
    return out;
}

bool divides(const ShuffleTree& pattern, const ShuffleTree& tree) {
    const Flat pf(pattern.code());
    const Flat tf(tree.code());
    return first_occurrence(pf, static_cast<std::size_t>(pattern.arity()), tf).has_value();
}

ShuffleTree substitute(const ShuffleTree& tree, const Occurrence& occ, const ShuffleTree& replacement) {
    if (static_cast<std::size_t>(replacement.arity()) != occ.inputs.size()) {
        throw PreconditionError("substitute: replacement arity differs from the occurrence");
    }
    const Flat f(tree.code());
    const auto& code = tree.code();
    std::vector<std::int8_t> out(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(occ.root));
    emit_substituted(code, occ, replacement.code(), f, out);
    out.insert(out.end(), code.begin() + f.end[occ.root], code.end());
    return ShuffleTree::from_code(std::move(out));
}

// --------------------------------------------------------------------------- translation

std::pair<ShuffleTree, int> to_shuffle(const Tree& polar, const Alphabet& alphabet) {
    if (polar.is_leaf()) return {ShuffleTree::leaf(polar.var()), 1};
    const int g = generator_for(alphabet, polar.op());
    auto [l, sl] = to_shuffle(polar.left(), alphabet);
    auto [r, sr] = to_shuffle(polar.right(), alphabet);
    int sign = sl * sr;
    const int ml = l.min_leaf();
    const int mr = r.min_leaf();
    if (ml == mr) throw PreconditionError("polarized relation is not multilinear");
    if (ml > mr) {
        const Symmetry s = alphabet[static_cast<std::size_t>(g)].symmetry;
        if (s == Symmetry::none) throw PreconditionError("generator without symmetry in non-shuffle position");
        if (s == Symmetry::antisym) sign = -sign;
        std::swap(l, r);
    }
    return {ShuffleTree::node(g, l, r), sign};
}

ShuffleCombination to_shuffle(const PolarPoly& p, const Alphabet& alphabet) {
    if (p.is_zero()) return {};
    if (p.multilinear_arity() < 1) throw PreconditionError("polarized relation is not multilinear");
    if (!p.has_rational_coefficients()) throw SymbolicParameterError();
    ShuffleCombination out;
    for (const auto& [t, c] : p.terms()) {
        auto [s, sign] = to_shuffle(t, alphabet);
        add_term(out, s, c.constant_value() * Rational(sign));
    }
    return out;
}

PolarPoly to_polar(const ShuffleCombination& c, const Alphabet& alphabet) {
    std::function<Tree(const ShuffleTree&)> conv = [&](const ShuffleTree& t) {
        if (t.is_leaf()) return Tree::leaf(t.label());
        const auto g = static_cast<std::size_t>(t.generator());
        return Tree::node(op_for(alphabet.at(g)), conv(t.left()), conv(t.right()));
    };
    PolarPoly out;
    for (const auto& [t, x] : c) out.add(conv(t), ParamPoly(x));
    return out;
}

std::vector<ShuffleCombination> polarized_to_shuffle(const std::vector<PolarPoly>& relations,
                                                     const Alphabet& alphabet) {
    std::vector<ShuffleCombination> out;
    for (const auto& rel : relations) {
        if (rel.is_zero()) continue;
        const int n = rel.multilinear_arity();
        if (n < 1) throw PreconditionError("polarized relation is not multilinear: " + rel.str());
        check_arity(n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            auto c = to_shuffle(act(perm, rel), alphabet);
            if (!c.empty()) out.push_back(std::move(c));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

// --------------------------------------------------------------------------- rewriting

namespace {

using Ordered = std::map<std::vector<int>, std::pair<ShuffleTree, Rational>, std::greater<>>;

void ordered_add(Ordered& o, const MonomialOrder& order, const ShuffleTree& t, const Rational& x) {
    if (x.is_zero()) return;
    auto key = order.key(t);
    auto it = o.find(key);
    if (it == o.end()) {
        o.emplace(std::move(key), std::make_pair(t, x));
        return;
    }
    it->second.second += x;
    if (it->second.second.is_zero()) o.erase(it);
}

/// Row-reduces same-arity combinations against each other with columns in descending order.
std::vector<Rule> echelon_rules(const MonomialOrder& order, const std::vector<ShuffleCombination>& polys) {
    std::map<std::vector<int>, ShuffleTree, std::greater<>> columns;
    for (const auto& p : polys) {
        for (const auto& [t, x] : p) columns.emplace(order.key(t), t);
    }
    if (columns.empty()) return {};
    std::vector<ShuffleTree> cols;
    std::map<ShuffleTree, std::size_t> index;
    for (const auto& [k, t] : columns) {
        index.emplace(t, cols.size());
        cols.push_back(t);
    }
    Matrix<Rational> m(0, cols.size());
    for (const auto& p : polys) {
        std::vector<Rational> row(cols.size());
        for (const auto& [t, x] : p) row[index.at(t)] = x;
        m.append_row(row);
    }
    const auto r = rref(m);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < r.rank; ++i) {
        Rule rule;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!r.reduced(i, j).is_zero()) rule.terms.emplace_back(cols[j], r.reduced(i, j));
        }
        rules.push_back(std::move(rule));
    }
    return rules;
}

/// Arity sweep: reduce each arity against the finished lower arities, then row-reduce it.
std::vector<Rule> sweep(const Alphabet& alphabet, const MonomialOrder& order,
                        const std::vector<ShuffleCombination>& polys) {
    std::map<int, std::vector<ShuffleCombination>> by_arity;
    for (const auto& p : polys) {
        if (p.empty()) continue;
        by_arity[p.begin()->first.arity()].push_back(p);
    }
    RewriteSystem done(alphabet, order);
    std::vector<Rule> out;
    for (auto& [n, list] : by_arity) {
        std::vector<ShuffleCombination> reduced;
        for (const auto& p : list) {
            for (const auto& [t, x] : p) {
                if (t.arity() != n) throw PreconditionError("relation is not homogeneous in arity");
            }
            auto r = done.reduce(p);
            if (!r.empty()) reduced.push_back(std::move(r));
        }
        for (auto& rule : echelon_rules(order, reduced)) {
            done.add_rule(rule.combination());
            out.push_back(std::move(rule));
        }
    }
    return out;
}

} // namespace

ShuffleCombination Rule::combination() const {
    ShuffleCombination c;
    for (const auto& [t, x] : terms) add_term(c, t, x);
    return c;
}

RewriteSystem::RewriteSystem(Alphabet alphabet, MonomialOrder order)
    : alphabet_(std::move(alphabet)), order_(std::move(order)) {}

RewriteSystem RewriteSystem::from_relations(Alphabet alphabet, MonomialOrder order,
                                            const std::vector<ShuffleCombination>& relations) {
    RewriteSystem rs(std::move(alphabet), std::move(order));
    rs.rules_ = sweep(rs.alphabet_, rs.order_, relations);
    return rs;
}

Rule RewriteSystem::make_rule(const ShuffleCombination& relation) const {
    Ordered o;
    for (const auto& [t, x] : relation) ordered_add(o, order_, t, x);
    Rule rule;
    if (o.empty()) return rule;
    const Rational lead = o.begin()->second.second.inverse();
    for (auto& [k, tx] : o) rule.terms.emplace_back(tx.first, tx.second * lead);
    return rule;
}

bool RewriteSystem::add_rule(const ShuffleCombination& relation) {
    Rule r = make_rule(relation);
    if (r.terms.empty()) return false;
    rules_.push_back(std::move(r));
    return true;
}

ShuffleCombination RewriteSystem::reduce(const ShuffleCombination& e) const {
    return reduce_except(e, rules_.size());
}

ShuffleCombination RewriteSystem::reduce_except(const ShuffleCombination& e, std::size_t skip) const {
    std::vector<Flat> leads;
    leads.reserve(rules_.size());
    for (const auto& r : rules_) leads.emplace_back(r.lead().code());

    Ordered work;
    for (const auto& [t, x] : e) ordered_add(work, order_, t, x);
    ShuffleCombination out;
    while (!work.empty()) {
        auto top = work.begin();
        const ShuffleTree t = top->second.first;
        const Rational c = top->second.second;
        work.erase(top);
        const Flat tf(t.code());
        bool reduced = false;
        for (std::size_t i = 0; i < rules_.size() && !reduced; ++i) {
            if (i == skip) continue;
            const auto& rule = rules_[i];
            auto occ = first_occurrence(leads[i], static_cast<std::size_t>(rule.lead().arity()), tf);
            if (!occ) continue;
            for (std::size_t k = 1; k < rule.terms.size(); ++k) {
                ordered_add(work, order_, substitute(t, *occ, rule.terms[k].first), -(c * rule.terms[k].second));
            }
            reduced = true;
        }
        if (!reduced) add_term(out, t, c);
    }
    return out;
}

bool RewriteSystem::is_reduced() const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto& r = rules_[i];
        if (r.terms.empty() || r.terms.front().second != Rational(1)) return false;
        for (std::size_t k = 1; k < r.terms.size(); ++k) {
            if (order_.compare(r.terms[k].first, r.lead()) >= 0) return false;
        }
        if (reduce_except(r.combination(), i) != r.combination()) return false;
    }
    return true;
}

RewriteSystem RewriteSystem::interreduced() const {
    std::vector<ShuffleCombination> polys;
    polys.reserve(rules_.size());
    for (const auto& r : rules_) polys.push_back(r.combination());
    return from_relations(alphabet_, order_, polys);
}

// --------------------------------------------------------------------------- completion

std::vector<CriticalPair> find_overlaps(const RewriteSystem& rs, int max_arity, unsigned jobs) {
    if (max_arity > 7) throw ResourceError("overlap search is supported up to arity 7");
    const auto& rules = rs.rules();
    std::vector<Flat> leads;
    int min_arity = kMaxArity + 1;
    for (const auto& r : rules) {
        leads.emplace_back(r.lead().code());
        min_arity = std::min(min_arity, r.lead().arity());
    }
    std::vector<CriticalPair> pairs;
    if (rules.empty() || max_arity < 3) return pairs;

    struct Hit {
        std::size_t rule;
        Occurrence occ;
    };
    const auto trees = build_trees(static_cast<int>(rs.alphabet().size()), max_arity,
                                   [](const ShuffleTree&) { return true; });
    std::vector<std::pair<std::size_t, std::pair<Hit, Hit>>> raw;
    std::vector<ShuffleTree> overlap_trees;
    for (int n = std::max(3, min_arity); n <= max_arity; ++n) {
        for (const auto& t : trees[static_cast<std::size_t>(n)]) {
            const Flat tf(t.code());
            std::uint32_t all = 0;
            for (std::size_t p = 0; p < t.code().size(); ++p) {
                if (t.code()[p] < 0) all |= 1u << p;
            }
            std::vector<Hit> hits;
            for (std::size_t i = 0; i < rules.size(); ++i) {
                const auto ar = static_cast<std::size_t>(rules[i].lead().arity());
                if (ar > static_cast<std::size_t>(n)) continue;
                for (std::size_t p = 0; p < t.code().size(); ++p) {
                    if (t.code()[p] != rules[i].lead().code()[0]) continue;
                    if (auto occ = match_root(leads[i], ar, tf, p)) hits.push_back({i, std::move(*occ)});
                }
            }
            for (std::size_t a = 0; a < hits.size(); ++a) {
                for (std::size_t b = a + 1; b < hits.size(); ++b) {
                    const auto va = hits[a].occ.vertices;
                    const auto vb = hits[b].occ.vertices;
                    if ((va & vb) == 0 || (va | vb) != all) continue;
                    raw.push_back({overlap_trees.size(), {hits[a], hits[b]}});
                }
            }
            if (!raw.empty() && raw.back().first == overlap_trees.size()) overlap_trees.push_back(t);
        }
    }

    pairs.resize(raw.size());
    detail::parallel_for(raw.size(), jobs, [&](std::size_t k) {
        const auto& [ti, hp] = raw[k];
        const ShuffleTree& t = overlap_trees[ti];
        ShuffleCombination s;
        for (const auto& [x, rule_occ] : {std::pair{Rational(1), &hp.first}, std::pair{Rational(-1), &hp.second}}) {
            const auto& rule = rules[rule_occ->rule];
            for (std::size_t j = 1; j < rule.terms.size(); ++j) {
                add_term(s, substitute(t, rule_occ->occ, rule.terms[j].first), x * rule.terms[j].second);
            }
        }
        pairs[k] = CriticalPair{t, hp.first.rule, hp.second.rule, rs.reduce(s)};
    });
    return pairs;
}

bool is_groebner(const RewriteSystem& rs, int max_arity) {
    for (const auto& p : find_overlaps(rs, max_arity, 0)) {
        if (!p.remainder.empty()) return false;
    }
    return true;
}

RewriteSystem complete(const RewriteSystem& rs, const CompletionOptions& options) {
    RewriteSystem cur = rs.interreduced();
    while (true) {
        std::vector<ShuffleCombination> polys;
        for (const auto& r : cur.rules()) polys.push_back(r.combination());
        const std::size_t before = polys.size();
        for (auto& p : find_overlaps(cur, options.max_arity, options.jobs)) {
            if (!p.remainder.empty()) polys.push_back(std::move(p.remainder));
        }
        if (polys.size() == before) return cur;
        cur = RewriteSystem::from_relations(cur.alphabet(), cur.order(), polys);
        if (cur.size() > options.rule_budget) {
            throw BudgetExceeded("completion exceeded the rule budget of " + std::to_string(options.rule_budget) +
                                 " rules below arity " + std::to_string(options.max_arity));
        }
    }
}

std::vector<ShuffleTree> normal_monomials(const RewriteSystem& rs, int n) {
    check_arity(n);
    std::vector<Flat> leads;
    for (const auto& r : rs.rules()) leads.emplace_back(r.lead().code());
    // Children of a candidate are already normal, so only a match at the root can occur.
    auto keep = [&](const ShuffleTree& t) {
        const Flat tf(t.code());
        for (std::size_t i = 0; i < leads.size(); ++i) {
            const auto& lead = rs.rules()[i].lead();
            if (lead.arity() > t.arity() || lead.code()[0] != t.code()[0]) continue;
            if (match_root(leads[i], static_cast<std::size_t>(lead.arity()), tf, 0)) return false;
        }
        return true;
    };
    auto by_arity = build_trees(static_cast<int>(rs.alphabet().size()), n, keep);
    if (!leads.empty() && n == 1) {
        for (const auto& r : rs.rules()) {
            if (r.lead().is_leaf()) return {};
        }
    }
    auto out = std::move(by_arity[static_cast<std::size_t>(n)]);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t normal_count(const RewriteSystem& rs, int n) { return normal_monomials(rs, n).size(); }

// --------------------------------------------------------------------------- presentations

RewriteSystem to_rewrite_system(const Presentation& p) {
    auto order = MonomialOrder::parse(p.order, p.generators);
    return RewriteSystem::from_relations(p.generators, std::move(order), polarized_to_shuffle(p.relations, p.generators));
}

RewriteSystem listed_rewrite_system(const Presentation& p) {
    RewriteSystem rs(p.generators, MonomialOrder::parse(p.order, p.generators));
    for (const auto& r : p.relations) rs.add_rule(to_shuffle(r, p.generators));
    return rs;
}

Presentation to_presentation(const RewriteSystem& rs) {
    Presentation p;
    p.generators = rs.alphabet();
    p.order = rs.order().name();
    for (const auto& r : rs.rules()) p.relations.push_back(to_polar(r.combination(), rs.alphabet()));
    return p;
}

namespace {

const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::sym: return "sym";
        case Symmetry::antisym: return "antisym";
        case Symmetry::none: break;
    }
    return "none";
}

} // namespace

std::string to_json(const Presentation& p) {
    using detail::json;
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back({{"name", g.name}, {"symmetry", symmetry_name(g.symmetry)}});
    json rels = json::array();
    for (const auto& r : p.relations) rels.push_back(detail::poly_json(r));
    return json{{"generators", gens}, {"relations", rels}, {"order", p.order}}.dump();
}

Presentation presentation_from_json(std::string_view text) {
    using detail::json;
    const json j = detail::parse_json(text);
    if (!j.is_object()) throw ParseError("presentation JSON: expected an object");
    Presentation p;
    if (j.contains("generators")) {
        p.generators.clear();
        for (const auto& g : j.at("generators")) {
            if (!g.is_object() || !g.contains("name")) throw ParseError("presentation JSON: generator needs a name");
            Generator gen{g.at("name").get<std::string>(), Symmetry::none};
            const std::string s = g.value("symmetry", "none");
            if (s == "sym") gen.symmetry = Symmetry::sym;
            else if (s == "antisym") gen.symmetry = Symmetry::antisym;
            else if (s != "none") throw ParseError("presentation JSON: unknown symmetry '" + s + "'");
            p.generators.push_back(std::move(gen));
        }
    }
    if (!j.contains("relations") || !j.at("relations").is_array()) {
        throw ParseError("presentation JSON: missing relations list");
    }
    for (const auto& r : j.at("relations")) {
        if (r.is_string()) p.relations.push_back(PolarPoly::parse(r.get<std::string>()));
        else p.relations.push_back(detail::poly_from(r));
    }
    if (j.contains("order")) p.order = j.at("order").get<std::string>();
    return p;
}

} // namespace novikov
