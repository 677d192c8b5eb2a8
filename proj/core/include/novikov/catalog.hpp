#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "novikov/koszul.hpp"
#include "novikov/magma.hpp"
#include "novikov/matrix.hpp"
#include "novikov/novikov.hpp"
#include "novikov/rep_sn.hpp"
#include "novikov/shuffle.hpp"

namespace novikov {

/// A point (x:y) of the projective line, normalized so the first nonzero coordinate is 1.
class ProjectivePoint {
public:
    ProjectivePoint() : x_(1), y_(0) {}
    /// Throws PreconditionError for (0:0).
    ProjectivePoint(const Rational& x, const Rational& y);

    [[nodiscard]] const Rational& x() const { return x_; }
    [[nodiscard]] const Rational& y() const { return y_; }
    /// "(1:-1)", "(2:-3)" with the smallest integer representative.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    Rational x_;
    Rational y_;
};

/// (α:β) for the trivial-module identity, (γ:δ) for the two-dimensional one.
struct ParamPoint {
    std::optional<ProjectivePoint> ab;
    std::optional<ProjectivePoint> gd;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// P: quotient by a copy of V_3 ((α:β)); Q: by a copy of V_{2,1} ((γ:δ)); O: by both;
/// S: by both copies of V_3 and one copy of V_{2,1} ((γ:δ)); T: by one copy of V_3 ((α:β))
/// and both copies of V_{2,1}.
enum class Family { P, Q, O, S, T };

std::string_view family_name(Family f);
/// Accepts "P", "Q", "O", "S", "T" (case-insensitive).
Family parse_family(std::string_view name);
/// Which coordinates a family needs: first = (α:β), second = (γ:δ).
std::pair<bool, bool> family_parameters(Family f);

/// The multilinear defining identities in both forms; embedded[i] = embed(magmatic[i]).
struct FamilyGenerators {
    std::vector<MagPoly> magmatic;
    std::vector<NovElement> embedded;
};

/// Throws PreconditionError when a coordinate the family needs is missing.
FamilyGenerators family_generators(Family f, const ParamPoint& point);
/// α(aa)a + β a(aa), multilinearized.
MagPoly trivial_identity(const ProjectivePoint& ab);
/// γ((a,a,b) - (b,a,a)) + δ(a(ab) - a(ba)), multilinearized.
MagPoly two_dim_identity(const ProjectivePoint& gd);
/// Multilinear (a,b,c) - (a,c,b) and a(bc) - b(ac): the Novikov identities.
std::vector<MagPoly> novikov_identities();
/// The 6-dimensional multilinear Novikov relation space inside the 12 arity-3 combs.
QuadraticPresentation novikov_relation_space();

// ---------------------------------------------------------------- coefficient systems

/// A displayed square system M m = 0 among differential monomials of the trivial-module family.
struct CoefficientSystem {
    std::string name;
    std::vector<std::string> monomials;  ///< differential text, column order
    PolyMatrix matrix;
    ParamPoly stated_determinant;
};

/// The four systems whose determinants decide the generic case of the trivial-module family.
std::vector<CoefficientSystem> coefficient_systems();
/// sum_j matrix(row, j) monomial_j, linearized.
NovElement system_row(const CoefficientSystem& s, std::size_t row);

// ---------------------------------------------------------------- polarized presentation

/// The four displayed generators of the polarized Novikov presentation.
std::vector<PolarPoly> polarized_novikov_presentation();
/// True iff the S_3-span of the expanded relations equals the Novikov relation space.
bool verify_polarized_presentation(const std::vector<PolarPoly>& relations);
bool verify_polarized_presentation();
/// The six identities satisfied by x·y and [x,y], each written lhs - rhs.
std::vector<PolarPoly> polarized_novikov_identities();

// ---------------------------------------------------------------- finite algebras

/// A d-dimensional algebra over ParamPoly given by structure constants.
class FiniteAlgebra {
public:
    using Vector = std::vector<ParamPoly>;

    /// table[i][j] holds the coordinates of e_i e_j.
    FiniteAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<std::vector<Vector>> table);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t dim() const { return basis_names_.size(); }
    [[nodiscard]] const std::vector<std::string>& basis_names() const { return basis_names_; }
    [[nodiscard]] Vector basis_vector(std::size_t i) const;
    [[nodiscard]] Vector multiply(const Vector& x, const Vector& y) const;
    /// Evaluates a tree (any Op) with variable i bound to values[i-1].
    [[nodiscard]] Vector evaluate(const Tree& t, const std::vector<Vector>& values) const;
    [[nodiscard]] Vector evaluate(const TreePoly& f, const std::vector<Vector>& values) const;
    [[nodiscard]] FiniteAlgebra specialize(const ParamAssignment& values) const;
    /// New basis u_i = sum_j rows(i, j) e_j; rows must be invertible.
    [[nodiscard]] FiniteAlgebra change_basis(const Matrix<Rational>& rows) const;
    /// "(delta^2) e + f", "0".
    [[nodiscard]] std::string format(const Vector& v) const;

private:
    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<Vector>> table_;
};

/// Substitutes every tuple of basis vectors; true iff every coordinate is the zero polynomial.
bool check_algebra_identity(const FiniteAlgebra& alg, const MagPoly& identity);

/// One-dimensional, ee = e.
FiniteAlgebra algebra_A();
/// Basis e, f with ee = 0, ef = -δe, fe = e, ff = f; δ stays symbolic.
FiniteAlgebra algebra_B();

struct TripleProductCheck {
    std::string expression;  ///< "(ef)f"
    std::string expected;    ///< as displayed, "-δ e"
    std::string computed;
    bool matches = false;
};
/// The sixteen displayed triple products of B_δ against the multiplication table.
std::vector<TripleProductCheck> check_B_triple_products();

// ---------------------------------------------------------------- Gröbner systems

/// The three displayed reduced Gröbner bases of quotients of the Novikov operad.
enum class GbSystem { q_1_m1, q_1_0, q_0_1 };

std::string_view gb_system_name(GbSystem s);
ProjectivePoint gb_system_point(GbSystem s);
/// Relations as printed (two obvious typos in one system normalized, see README);
/// first displayed monomial first.
std::vector<PolarPoly> gb_system_relations(GbSystem s, bool as_printed = false);
/// The relation texts behind gb_system_relations.
std::vector<std::string> gb_system_text(GbSystem s, bool as_printed = false);
/// Listed rules under the shared reverse graded reverse path-lex order.
RewriteSystem gb_system(GbSystem s, bool as_printed = false);
/// 0-based indices of printed relations that differ from the corrected ones.
std::vector<std::size_t> gb_system_misprints(GbSystem s);
/// Independent oracle: the reduced basis computed from Nov(n)/I(n) for n = 3, 4.
RewriteSystem gb_system_oracle(GbSystem s);

// ---------------------------------------------------------------- consequence ledger

struct LedgerEntry {
    std::string id;
    std::string anchor;
    Family family = Family::P;
    ParamPoint point;
    std::string identity;   ///< differential text; alpha..delta are read at `point`
    std::string generator;  ///< when set, replaces the family: the ideal generated by this element
};

/// Every displayed derived identity with the generator set and stratum it is claimed for.
std::vector<LedgerEntry> consequence_ledger();

struct LedgerResult {
    LedgerEntry entry;
    bool implied = false;
    int arity = 0;
};
/// Checks entries in parallel, one ideal per (family, point).
std::vector<LedgerResult> check_ledger(const std::vector<LedgerEntry>& entries, unsigned jobs = 0);

// ---------------------------------------------------------------- lattice

/// A surviving irreducible module of O_ρ(n), with a generator of its isotypic component.
struct LatticeNode {
    int arity = 0;
    Partition partition;
    NovElement generator;
    [[nodiscard]] std::string label() const;
};

struct LatticeReport {
    ParamPoint rho;
    int max_arity = 0;
    std::vector<LatticeNode> nodes;
    std::vector<std::vector<bool>> implies;  ///< implies[i][j]: node i forces node j (i != j)

    /// Covering pairs of the implication order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
    [[nodiscard]] std::optional<std::size_t> find(int arity, const Partition& p) const;
};

/// Modules of O_ρ(1..max_arity) and which ones each forces. Requires every
/// multiplicity to be at most one. max_arity <= 6.
LatticeReport lattice_report(const ParamPoint& rho, int max_arity, unsigned jobs = 0);
/// Nodes of `report` forced by adding `element` to the identities of O_ρ.
std::vector<std::size_t> implied_nodes(const LatticeReport& report, const NovElement& element);

std::string to_json(const LatticeReport& r);

// ---------------------------------------------------------------- Koszul duals

struct DualCheck {
    std::string name;
    std::string source;       ///< the Koszul quotient of the Novikov operad
    std::string expected;     ///< the identity displayed for its dual
    QuadraticPresentation dual;
    bool matches = false;
    std::string detail;
};

/// Polarized presentation of S or T at a point, as used for their quadratic Gröbner bases.
Presentation koszul_family_presentation(Family f, const ParamPoint& point);
/// The order under which the presentation is claimed quadratic: S with γ = δ, S with
/// γ = -δ, and T with α + β != 0; nullopt elsewhere.
std::optional<std::string> koszul_family_order(Family f, const ParamPoint& point);

/// Arity-3 presentation of a quotient of the Novikov operad by multilinear identities.
QuadraticPresentation novikov_quotient_presentation(const std::vector<MagPoly>& identities);
/// Duals of the Koszul quotients, compared with the dual-operad list (left convention;
/// the right-handed displays are mirrored before comparison).
std::vector<DualCheck> catalogued_duals();

// ---------------------------------------------------------------- verification report

enum class CheckStatus { pass, fail, flagged, skipped };
std::string_view status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    std::string anchor;
    int criterion = 0;  ///< acceptance criterion number, 0 for supporting checks
    std::string expected;  ///< "stated: ", "derived: " or "trivial: " by where the value comes from
    std::string computed;
    CheckStatus status = CheckStatus::pass;
    long millis = 0;
};

struct VerifyConfig {
    int max_arity = 6;            ///< checks needing a larger arity are skipped
    std::set<std::string> groups;  ///< empty = all; see verification_groups()
    unsigned jobs = 0;             ///< 0 = hardware concurrency
    bool timings = true;           ///< false zeroes millis so reports are byte-reproducible
    std::function<void(const CheckResult&)> progress;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    [[nodiscard]] bool has_failure() const;
    [[nodiscard]] std::string table() const;
};

std::vector<std::string> verification_groups();
/// Runs the checks in parallel; the report keeps the declaration order.
VerificationReport verify_all(const VerifyConfig& config = {});

std::string to_json(const VerificationReport& r);
VerificationReport report_from_json(std::string_view text);

} // namespace novikov
