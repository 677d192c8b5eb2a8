#include "novikov/series.hpp"

#include <cctype>
#include <regex>

#include "json_detail.hpp"

namespace novikov {

RationalSeries from_dims(const std::vector<long>& dims, int order) {
    return from_dims(
        [&](int n) { return static_cast<std::size_t>(n) <= dims.size() ? dims[static_cast<std::size_t>(n - 1)] : 0L; }, order);
}

RationalSeries from_dims(const std::function<long(int)>& dim_of, int order) {
    RationalSeries s(order);
    for (int n = 1; n <= order; ++n) s[n] = Rational(dim_of(n)) / factorial(n);
    return s;
}

SignTestResult koszul_sign_test(const RationalSeries& f) {
    SignTestResult r;
    r.inverse = comp_inverse(f);
    for (int n = 1; n <= f.order(); ++n) {
        const Rational& a = r.inverse[n];
        const int sign = (n % 2 == 1) ? a.sign() : -a.sign();
        if (sign < 0) {
            r.passed = false;
            r.failing_n = n;
            r.value = a;
            break;
        }
    }
    return r;
}

RationalSeries sign_twist(const RationalSeries& f) {
    RationalSeries r(f.order());
    for (int k = 1; k <= f.order(); ++k) r[k] = (k % 2 == 1) ? f[k] : -f[k];
    return r;
}

bool check_dual_pair(const RationalSeries& f, const RationalSeries& g) {
    const int n = std::min(f.order(), g.order());
    // -g(-f(t)) = sign_twist(g) composed with f.
    RationalSeries h = compose(sign_twist(g.truncated(n)), f.truncated(n));
    for (int k = 1; k <= n; ++k) {
        if (h[k] != Rational(k == 1 ? 1 : 0)) return false;
    }
    return true;
}

Rational weighted_inverse_coeff(const PolySeries& f, int n, int k) {
    if (n < 1 || n > f.order()) throw PreconditionError("weighted_inverse_coeff: n outside the truncation order");
    if (k < 0) throw PreconditionError("weighted_inverse_coeff: negative u-degree");
    for (int i = 1; i <= f.order(); ++i) {
        for (const auto& [e, c] : f[i].terms()) {
            for (std::size_t p = 0; p < kParamCount; ++p) {
                if (p != static_cast<std::size_t>(Param::u) && e[p] != 0) {
                    throw PreconditionError("weighted series may only involve the parameter u");
                }
            }
        }
    }
    const auto u = static_cast<std::size_t>(Param::u);
    CoeffTrim<ParamPoly> trim = [&](ParamPoly& c) {
        if (c.degree(Param::u) <= k) return;
        ParamPoly kept;
        for (const auto& [e, v] : c.terms()) {
            if (e[u] <= k) kept += ParamPoly::var(Param::u).pow(e[u]) * v;
        }
        c = kept;
    };
    const PolySeries g = comp_inverse(f.truncated(n), trim);
    return g[n].coefficient(Param::u, k).constant_value();
}

namespace {

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

PolySeries parse_series(std::string_view text, int order) {
    std::string s(text);
    // normalize U+2212 to '-'
    for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) s.replace(p, 3, "-");
    std::vector<std::pair<int, std::string>> terms;  // sign, body
    int depth = 0;
    int sign = 1;
    std::string cur;
    auto flush = [&] {
        std::string body = strip(cur);
        if (!body.empty()) terms.emplace_back(sign, body);
        else if (!terms.empty() || sign != 1) throw ParseError("series: dangling sign in '" + std::string(text) + "'");
        cur.clear();
    };
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            if (strip(cur).empty() && terms.empty()) {
                sign = c == '-' ? -sign : sign;
                continue;
            }
            flush();
            sign = c == '-' ? -1 : 1;
            continue;
        }
        cur.push_back(c);
    }
    flush();
    PolySeries out(order);
    static const std::regex term_re(R"(^(.*?)\s*\*?\s*t(?:\s*\^\s*(\d+))?$)");
    for (const auto& [sg, body] : terms) {
        std::smatch m;
        if (!std::regex_match(body, m, term_re)) throw ParseError("series term '" + body + "' lacks a power of t");
        const int k = m[2].matched ? std::stoi(m[2].str()) : 1;
        if (k < 1) throw ParseError("series: constant terms are not allowed");
        const std::string coeff = strip(m[1].str());
        ParamPoly c = coeff.empty() ? ParamPoly(1) : ParamPoly::parse(coeff);
        if (k <= order) out[k] += sg > 0 ? c : -c;
    }
    return out;
}

RationalSeries to_rational(const PolySeries& s) {
    RationalSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) r[k] = s[k].constant_value();
    return r;
}

PolySeries to_poly(const RationalSeries& s) {
    PolySeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) r[k] = ParamPoly(s[k]);
    return r;
}

std::string to_json(const RationalSeries& s) {
    detail::json j = detail::json::array();
    for (int k = 1; k <= s.order(); ++k) j.push_back(s[k].str());
    return j.dump();
}

std::string to_json(const PolySeries& s) {
    detail::json j = detail::json::array();
    for (int k = 1; k <= s.order(); ++k) j.push_back(s[k].str());
    return j.dump();
}

PolySeries series_from_json(std::string_view text) {
    const detail::json j = detail::parse_json(text);
    if (!j.is_array()) throw ParseError("series JSON: expected a list of coefficient strings");
    PolySeries s(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& c = j[i];
        s[static_cast<int>(i) + 1] = c.is_string() ? ParamPoly::parse(c.get<std::string>()) : ParamPoly(Rational(c.get<long>()));
    }
    return s;
}

} // namespace novikov
