#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/magma.hpp"
#include "novikov/rational.hpp"

namespace novikov {

enum class Symmetry : std::uint8_t { none, sym, antisym };

struct Generator {
    std::string name;
    Symmetry symmetry = Symmetry::none;
    friend bool operator==(const Generator&, const Generator&) = default;
};
using Alphabet = std::vector<Generator>;

/// The two polarized operations: "*" (x·y, symmetric) and "[]" ([x,y], antisymmetric).
Alphabet polarized_alphabet();

/// Planar binary tree, internal vertices labelled by generator indices, leaves by
/// a permutation of 1..n, with min-leaf(left) < min-leaf(right) at every vertex.
/// Stored as a prefix code: internal vertex -> -(g+1), leaf -> label.
class ShuffleTree {
public:
    ShuffleTree() = default;
    static ShuffleTree leaf(int label);
    /// Throws PreconditionError when the shuffle condition fails.
    static ShuffleTree node(int gen, const ShuffleTree& left, const ShuffleTree& right);
    static ShuffleTree from_code(std::vector<std::int8_t> code);

    [[nodiscard]] const std::vector<std::int8_t>& code() const { return code_; }
    [[nodiscard]] bool is_leaf() const { return code_.size() == 1; }
    [[nodiscard]] int label() const { return code_[0]; }
    [[nodiscard]] int generator() const { return -code_[0] - 1; }
    [[nodiscard]] ShuffleTree left() const;
    [[nodiscard]] ShuffleTree right() const;
    [[nodiscard]] int arity() const;
    [[nodiscard]] int min_leaf() const;
    [[nodiscard]] int count(int gen) const;
    [[nodiscard]] bool is_shuffle() const;
    /// Label i becomes map[i-1].
    [[nodiscard]] ShuffleTree relabeled(const std::vector<int>& map) const;
    /// "[a1·a2,a3]"; generators named "*" print infix as "·", "[]" as brackets.
    [[nodiscard]] std::string str(const Alphabet& alphabet) const;

    friend auto operator<=>(const ShuffleTree&, const ShuffleTree&) = default;

private:
    explicit ShuffleTree(std::vector<std::int8_t> code) : code_(std::move(code)) {}
    std::vector<std::int8_t> code_;
};

using ShuffleCombination = std::map<ShuffleTree, Rational>;
void add_term(ShuffleCombination& c, const ShuffleTree& t, const Rational& x);

enum class StageKind : std::uint8_t { arity, generator_count, path_lex, permutation };

struct OrderStage {
    StageKind kind = StageKind::path_lex;
    int generator = 0;  ///< for generator_count
    bool reversed = false;
};

/// Composite monomial order. Generator precedence: rank[g] larger means greater.
/// After the listed stages, ties are broken by the leaf permutation and then the code,
/// so the order is total.
class MonomialOrder {
public:
    MonomialOrder() = default;
    MonomialOrder(std::string name, std::vector<OrderStage> stages, std::vector<int> rank);

    /// Grammar: stages joined by '-'; "rev" reverses the following stage.
    /// Stages: "graded" | "graded(g)" | "pathlex(g1 > g2 ...)" | "perm" | "arity".
    /// Plain "graded" counts the highest-precedence generator.
    static MonomialOrder parse(std::string_view spec, const Alphabet& alphabet);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::vector<OrderStage>& stages() const { return stages_; }
    /// Lexicographically larger key means larger monomial.
    [[nodiscard]] std::vector<int> key(const ShuffleTree& t) const;
    /// -1, 0, 1.
    [[nodiscard]] int compare(const ShuffleTree& a, const ShuffleTree& b) const;

private:
    std::string name_;
    std::vector<OrderStage> stages_;
    std::vector<int> rank_;
};

/// Named presets over the polarized alphabet.
namespace order_presets {
/// Fewer brackets first, then reverse path-lex with [ ] > *.
inline constexpr std::string_view kRevGradedRevPathLex = "rev-graded-rev-pathlex([ ] > *)";
/// More brackets greater, then reverse path-lex with [ ] > *.
inline constexpr std::string_view kBracketCountRevPathLex = "graded([ ])-rev-pathlex([ ] > *)";
/// More products greater, then reverse path-lex with * > [ ].
inline constexpr std::string_view kDotCountRevPathLex = "graded(*)-rev-pathlex(* > [ ])";
/// More products greater, then path-lex with [ ] > *.
inline constexpr std::string_view kDotCountPathLex = "graded(*)-pathlex([ ] > *)";
} // namespace order_presets

/// All shuffle trees of arity n over the alphabet, sorted by `order` (largest first)
/// or by code when no order is given.
std::vector<ShuffleTree> enumerate_monomials(const Alphabet& alphabet, int n, const MonomialOrder* order = nullptr);

/// Embedding of `pattern` in `tree`: subtree rooted at code position `root`, with
/// input subtrees at positions inputs[l-1] for pattern leaf l.
struct Occurrence {
    std::size_t root = 0;
    std::vector<std::size_t> inputs;
    std::uint32_t vertices = 0;  ///< code positions of covered internal vertices
};
std::vector<Occurrence> occurrences(const ShuffleTree& pattern, const ShuffleTree& tree);
bool divides(const ShuffleTree& pattern, const ShuffleTree& tree);
/// Replaces the occurrence by `replacement` (same arity as the pattern).
ShuffleTree substitute(const ShuffleTree& tree, const Occurrence& occ, const ShuffleTree& replacement);

/// A multilinear polarized tree as a signed shuffle monomial; sign 0 if it vanishes.
std::pair<ShuffleTree, int> to_shuffle(const Tree& polar, const Alphabet& alphabet);
ShuffleCombination to_shuffle(const PolarPoly& p, const Alphabet& alphabet);
PolarPoly to_polar(const ShuffleCombination& c, const Alphabet& alphabet);
/// S_n-orbits of multilinear polarized relations, written over shuffle monomials.
std::vector<ShuffleCombination> polarized_to_shuffle(const std::vector<PolarPoly>& relations,
                                                     const Alphabet& alphabet = polarized_alphabet());

/// Leading term first, leading coefficient 1.
struct Rule {
    std::vector<std::pair<ShuffleTree, Rational>> terms;
    [[nodiscard]] const ShuffleTree& lead() const { return terms.front().first; }
    [[nodiscard]] ShuffleCombination combination() const;
};

class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(Alphabet alphabet, MonomialOrder order);

    /// Row-reduces the relations arity by arity; each row becomes a rule.
    static RewriteSystem from_relations(Alphabet alphabet, MonomialOrder order,
                                        const std::vector<ShuffleCombination>& relations);

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] const MonomialOrder& order() const { return order_; }
    [[nodiscard]] const std::vector<Rule>& rules() const { return rules_; }
    [[nodiscard]] std::size_t size() const { return rules_.size(); }

    /// Orients and normalizes a relation as given (no reduction). Returns false for zero.
    bool add_rule(const ShuffleCombination& relation);
    [[nodiscard]] Rule make_rule(const ShuffleCombination& relation) const;

    /// Normal form: no monomial divisible by any leading term.
    [[nodiscard]] ShuffleCombination reduce(const ShuffleCombination& e) const;
    /// Normal form with respect to all rules except `skip`.
    [[nodiscard]] ShuffleCombination reduce_except(const ShuffleCombination& e, std::size_t skip) const;
    /// Leading coefficients 1, no leading term divisible by another, tails normal.
    [[nodiscard]] bool is_reduced() const;
    [[nodiscard]] RewriteSystem interreduced() const;

private:
    Alphabet alphabet_;
    MonomialOrder order_;
    std::vector<Rule> rules_;
};

struct CriticalPair {
    ShuffleTree overlap;
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    ShuffleCombination remainder;  ///< reduced S-polynomial
};

/// Small common multiples of leading terms of arity <= max_arity, with reduced S-polynomials.
std::vector<CriticalPair> find_overlaps(const RewriteSystem& rs, int max_arity, unsigned jobs = 1);
bool is_groebner(const RewriteSystem& rs, int max_arity);

struct CompletionOptions {
    int max_arity = 5;
    std::size_t rule_budget = 2000;
    unsigned jobs = 0;  ///< S-polynomial reduction threads; 0 = hardware concurrency
};
/// Adds reduced S-polynomials until none remain below the arity bound, then interreduces.
/// Throws BudgetExceeded when the rule count passes the budget.
RewriteSystem complete(const RewriteSystem& rs, const CompletionOptions& options);

std::vector<ShuffleTree> normal_monomials(const RewriteSystem& rs, int n);
std::size_t normal_count(const RewriteSystem& rs, int n);

/// Polarized presentation as exchanged in JSON.
struct Presentation {
    Alphabet generators = polarized_alphabet();
    std::vector<PolarPoly> relations;
    std::string order = std::string(order_presets::kRevGradedRevPathLex);
};

RewriteSystem to_rewrite_system(const Presentation& p);
/// One rule per listed relation, oriented but neither expanded to S_n-orbits nor reduced.
RewriteSystem listed_rewrite_system(const Presentation& p);
/// Rules written back as polarized relations.
Presentation to_presentation(const RewriteSystem& rs);

std::string to_json(const Presentation& p);
Presentation presentation_from_json(std::string_view text);

} // namespace novikov
