#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/errors.hpp"
#include "novikov/param_poly.hpp"
#include "novikov/rational.hpp"

namespace novikov {

inline constexpr int kDefaultSeriesOrder = 24;

/// Truncated series c_1 t + ... + c_N t^N with c_0 = 0.
/// C is Rational or ParamPoly (polynomials in u for the weighted case).
template <class C>
class PowerSeries {
public:
    explicit PowerSeries(int order = kDefaultSeriesOrder) : c_(static_cast<std::size_t>(order) + 1) {}

    [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const C& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    C& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] PowerSeries truncated(int order) const {
        PowerSeries r(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) r[k] = (*this)[k];
        return r;
    }
    /// "t + t^2 + 5/6 t^3"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<C> c_;
};

using RationalSeries = PowerSeries<Rational>;
using PolySeries = PowerSeries<ParamPoly>;

/// Applied to every coefficient after a product; lets callers truncate in u.
template <class C>
using CoeffTrim = std::function<void(C&)>;

template <class C>
PowerSeries<C> add(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    if (a.order() != b.order()) throw ShapeError("series orders differ");
    PowerSeries<C> r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

template <class C>
PowerSeries<C> scale(const PowerSeries<C>& a, const C& s) {
    PowerSeries<C> r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a[k] * s;
    return r;
}

template <class C>
PowerSeries<C> multiply(const PowerSeries<C>& a, const PowerSeries<C>& b, const CoeffTrim<C>& trim = {}) {
    const int n = std::min(a.order(), b.order());
    PowerSeries<C> r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == C(0)) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == C(0)) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    if (trim) {
        for (int k = 0; k <= n; ++k) trim(r[k]);
    }
    return r;
}

/// f(g) with g(0) = 0 and f's constant term ignored.
template <class C>
PowerSeries<C> compose(const PowerSeries<C>& f, const PowerSeries<C>& g, const CoeffTrim<C>& trim = {}) {
    if (!(g[0] == C(0))) throw PreconditionError("compose: inner series needs zero constant term");
    const int n = std::min(f.order(), g.order());
    PowerSeries<C> acc(n);
    for (int k = n; k >= 1; --k) {
        acc[0] += f[k];
        acc = multiply(acc, g.truncated(n), trim);
    }
    return acc;
}

namespace detail {
template <class C>
Rational leading_unit(const C& c1) {
    if constexpr (std::is_same_v<C, Rational>) {
        if (c1.is_zero()) throw DomainError("series with c1 = 0 has no compositional inverse");
        return c1;
    } else {
        if (c1.is_zero()) throw DomainError("series with c1 = 0 has no compositional inverse");
        if (!c1.is_constant()) throw PreconditionError("compositional inverse needs a constant c1");
        return c1.constant_value();
    }
}
} // namespace detail

/// g with f(g(t)) = t up to the truncation order.
template <class C>
PowerSeries<C> comp_inverse(const PowerSeries<C>& f, const CoeffTrim<C>& trim = {}) {
    const int n = f.order();
    const Rational c1 = detail::leading_unit(f[1]);
    const Rational inv = c1.inverse();
    PowerSeries<C> g(n);
    if (n >= 1) g[1] = C(inv);
    for (int k = 2; k <= n; ++k) {
        // g_k is the only unknown in [t^k] f(g); its contribution is c1 g_k.
        PowerSeries<C> h = compose(f.truncated(k), g.truncated(k), trim);
        C gk = h[k] * C(-inv);
        if (trim) trim(gk);
        g[k] = gk;
    }
    return g;
}

/// Coefficients dims[n-1] / n!; missing arities are zero.
RationalSeries from_dims(const std::vector<long>& dims, int order = kDefaultSeriesOrder);
/// Same, with dims given by a function of the arity.
RationalSeries from_dims(const std::function<long(int)>& dim_of, int order = kDefaultSeriesOrder);

struct SignTestResult {
    bool passed = true;
    std::optional<int> failing_n;
    std::optional<Rational> value;  ///< a_n of the inverse at failing_n
    RationalSeries inverse;
};

/// Requires (-1)^{n-1} a_n >= 0 for the inverse coefficients a_n, n <= order.
SignTestResult koszul_sign_test(const RationalSeries& f);
/// -g(-f(t)) = t up to the common order.
bool check_dual_pair(const RationalSeries& f, const RationalSeries& g);
/// Series with c_k -> (-1)^{k+1} c_k, i.e. -f(-t).
RationalSeries sign_twist(const RationalSeries& f);
/// Coefficient of u^k in [t^n] of the compositional inverse.
Rational weighted_inverse_coeff(const PolySeries& f, int n, int k);

/// Parses "t + t^2 + 5/6 t^3" or "(1/2 + 1/2 u) t^2 - t^5"; constants rejected.
PolySeries parse_series(std::string_view text, int order = kDefaultSeriesOrder);
/// Requires rational coefficients.
RationalSeries to_rational(const PolySeries& s);
PolySeries to_poly(const RationalSeries& s);

/// JSON list of coefficient strings c_1..c_N.
std::string to_json(const RationalSeries& s);
std::string to_json(const PolySeries& s);
PolySeries series_from_json(std::string_view text);

template <class C>
std::string PowerSeries<C>::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= order(); ++k) {
        const C& c = (*this)[k];
        if (c == C(0)) continue;
        std::string coeff;
        bool negative = false;
        if constexpr (std::is_same_v<C, Rational>) {
            negative = c.sign() < 0;
            if (!c.abs().is_one()) coeff = c.abs().str();
        } else {
            if (c.is_constant()) {
                Rational v = c.constant_value();
                negative = v.sign() < 0;
                if (!v.abs().is_one()) coeff = v.abs().str();
            } else {
                coeff = "(" + c.str() + ")";
            }
        }
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        if (!coeff.empty()) os << coeff << " ";
        os << "t";
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace novikov
