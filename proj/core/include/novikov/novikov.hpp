#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "novikov/echelon.hpp"
#include "novikov/magma.hpp"
#include "novikov/param_poly.hpp"

namespace novikov {

/// Derivative orders (k_1, ..., k_n) of a_1^{(k_1)} ... a_n^{(k_n)}.
using Orders = std::vector<std::uint8_t>;

inline constexpr int kDefaultArityCap = 6;
inline constexpr int kMaxArityCap = 8;

struct ClosureOptions {
    int arity_cap = kDefaultArityCap;  ///< at most kMaxArityCap
};

/// Basis of Nov(n): order vectors of weight n-1, grouped by sorted shape
/// (largest first) and lex-descending inside a shape.
class NovBasis {
public:
    explicit NovBasis(int n);

    [[nodiscard]] int arity() const { return n_; }
    [[nodiscard]] std::size_t size() const { return monomials_.size(); }
    [[nodiscard]] const Orders& at(std::size_t i) const { return monomials_[i]; }
    [[nodiscard]] const std::vector<Orders>& monomials() const { return monomials_; }
    /// Throws PreconditionError for a vector of the wrong arity or weight.
    [[nodiscard]] std::uint32_t index(const Orders& k) const;
    /// Index map i -> index(sigma . m_i); sigma sends variable i to perm[i-1].
    [[nodiscard]] std::vector<std::uint32_t> permutation_map(const std::vector<int>& perm) const;

private:
    static std::uint64_t key(const Orders& k);
    int n_;
    std::vector<Orders> monomials_;
    std::map<std::uint64_t, std::uint32_t> index_;
};

/// Shared immutable basis; throws ResourceError above kMaxArityCap.
const NovBasis& nov_basis(int n);
/// Throws ResourceError when n exceeds `cap`.
std::vector<Orders> basis_nov(int n, int cap = kDefaultArityCap);

/// Element of Nov(n) with parameter-polynomial coefficients.
class NovElement {
public:
    NovElement() = default;
    explicit NovElement(int arity) : arity_(arity) {}

    [[nodiscard]] int arity() const { return arity_; }
    [[nodiscard]] const std::map<Orders, ParamPoly>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool has_rational_coefficients() const;
    [[nodiscard]] NovElement specialize(const ParamAssignment& values) const;
    /// Coordinates in nov_basis(arity); requires rational coefficients.
    [[nodiscard]] std::vector<Rational> dense() const;
    static NovElement from_dense(int arity, const std::vector<Rational>& v);
    [[nodiscard]] NovElement permuted(const std::vector<int>& perm) const;
    /// "a''bc + a'b'c"; variables print as a, b, c, ...
    [[nodiscard]] std::string str() const;

    void add(const Orders& k, const ParamPoly& c);
    NovElement& operator+=(const NovElement& o);
    NovElement& operator-=(const NovElement& o);
    NovElement& operator*=(const ParamPoly& c);
    friend NovElement operator+(NovElement a, const NovElement& b) { return a += b; }
    friend NovElement operator-(NovElement a, const NovElement& b) { return a -= b; }
    friend NovElement operator*(NovElement a, const ParamPoly& c) { return a *= c; }
    friend bool operator==(const NovElement& a, const NovElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    int arity_ = 0;
    std::map<Orders, ParamPoly> terms_;
};

/// xy -> x'y with the Leibniz rule. Requires a multilinear homogeneous input.
NovElement embed(const MagPoly& f);

/// Parses a differential polynomial such as "a''b'a^2 + 2a''a'ab" or
/// "gamma(a''ab - b''a^2) + delta((a')^2b - a'b'a)" and returns its full
/// linearization (letters a..h; each letter of degree d expands to d variables,
/// blocks ordered by letter). Throws PreconditionError unless the input is
/// multihomogeneous of weight n-1.
NovElement linearize_differential(std::string_view text);

/// Per-arity echelonized consequence subspaces I(n) of Nov(n), n = 1..max_arity.
class IdealBasis {
public:
    IdealBasis() = default;
    explicit IdealBasis(int max_arity);

    [[nodiscard]] int max_arity() const { return static_cast<int>(levels_.size()) - 1; }
    [[nodiscard]] const EchelonBasis& level(int n) const;
    EchelonBasis& level(int n);
    [[nodiscard]] std::size_t rank(int n) const { return level(n).rank(); }
    [[nodiscard]] std::size_t quotient_dim(int n) const;
    [[nodiscard]] bool contains(const NovElement& e) const;
    /// Normal form of e modulo I(arity).
    [[nodiscard]] NovElement reduce(const NovElement& e) const;
    [[nodiscard]] std::vector<NovElement> basis(int n) const;

private:
    std::vector<EchelonBasis> levels_;  // index = arity; slot 0 unused
};

/// Builds I(1..max_arity) generated by the given elements (any arities >= 1).
/// Coefficients must be rational. Throws ResourceError above options.arity_cap.
IdealBasis build_ideal(const std::vector<NovElement>& generators, int max_arity,
                       const ClosureOptions& options = {});
/// Embeds multilinear magmatic identities, then builds the ideal.
IdealBasis build_ideal(const std::vector<MagPoly>& generators, int max_arity,
                       const ClosureOptions& options = {});

/// One closure step with the full S_{m+1} orbit; returns an echelon spanning set.
std::vector<NovElement> closure_step(const std::vector<NovElement>& fs);

std::pair<std::size_t, IdealBasis> quotient_dim(const std::vector<MagPoly>& generators, int n,
                                                const ClosureOptions& options = {});
bool implies(const std::vector<MagPoly>& generators, const NovElement& candidate,
             const ClosureOptions& options = {});
bool implies(const std::vector<MagPoly>& generators, const MagPoly& candidate,
             const ClosureOptions& options = {});
/// Dimension of the S_n-span of e + I(n) in Nov(n)/I(n).
std::size_t orbit_span_dim(const IdealBasis& ideal, const NovElement& e);

std::string to_json(const NovElement& e);
NovElement nov_element_from_json(std::string_view text);

} // namespace novikov
