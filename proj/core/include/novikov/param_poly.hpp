#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "novikov/rational.hpp"

namespace novikov {

/// The closed parameter alphabet. Order here is the lex order used by grlex.
enum class Param : std::uint8_t { alpha, beta, gamma, delta, s, u };
inline constexpr std::size_t kParamCount = 6;

std::string_view param_name(Param p);
/// Matches "α", "alpha", "β", ... , "s", "u" at `pos`; advances `pos` on success.
std::optional<Param> match_param(std::string_view text, std::size_t& pos);

using Exponents = std::array<std::uint8_t, kParamCount>;

/// Graded lex, largest first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Partial assignment of parameters to rationals.
using ParamAssignment = std::map<Param, Rational>;

/// Polynomial in the parameter alphabet with rational coefficients.
class ParamPoly {
public:
    using Terms = std::map<Exponents, Rational, GrlexGreater>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    static ParamPoly var(Param p);
    /// Unknown identifiers are rejected with ParseError.
    static ParamPoly parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Requires is_constant().
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] int degree(Param p) const;
    [[nodiscard]] int total_degree() const;
    /// Coefficient of p^k as a polynomial in the remaining parameters.
    [[nodiscard]] ParamPoly coefficient(Param p, int k) const;
    [[nodiscard]] ParamPoly specialize(const ParamAssignment& values) const;
    /// Every occurring parameter must be assigned.
    [[nodiscard]] Rational evaluate(const ParamAssignment& values) const;
    [[nodiscard]] ParamPoly substitute(Param p, const ParamPoly& value) const;
    [[nodiscard]] ParamPoly pow(unsigned k) const;
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] std::string str() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);
    ParamPoly& operator/=(const Rational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
    friend ParamPoly operator/(ParamPoly a, const Rational& c) { return a /= c; }
    friend ParamPoly operator-(const ParamPoly& a);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    /// Fused a -= b * c.
    void sub_mul(const ParamPoly& b, const ParamPoly& c) { *this -= b * c; }

private:
    void add_term(const Exponents& e, const Rational& c);
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

} // namespace novikov
