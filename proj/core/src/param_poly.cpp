#include "novikov/param_poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

struct ParamSpelling {
    std::string_view text;
    Param param;
};

// Longer spellings first so that prefixes do not shadow them.
constexpr std::array<ParamSpelling, 10> kSpellings{{
    {"alpha", Param::alpha}, {"beta", Param::beta}, {"gamma", Param::gamma},
    {"delta", Param::delta}, {"\xCE\xB1", Param::alpha}, {"\xCE\xB2", Param::beta},
    {"\xCE\xB3", Param::gamma}, {"\xCE\xB4", Param::delta}, {"s", Param::s},
    {"u", Param::u},
}};

bool is_ident_char(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

int total(const Exponents& e) {
    int t = 0;
    for (auto x : e) t += x;
    return t;
}

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    ParamPoly run() {
        ParamPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("parameter polynomial '" + std::string(s_) + "': " + why + " at offset " +
                         std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // Accepts ASCII '-' and U+2212.
    bool eat_minus() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') { ++pos_; return true; }
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") { pos_ += 3; return true; }
        return false;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    ParamPoly expr() {
        ParamPoly acc;
        bool neg = eat_minus();
        if (!neg) eat('+');
        ParamPoly t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (eat_minus()) acc -= term();
            else if (eat('+')) acc += term();
            else break;
        }
        return acc;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        if (c == '(' || std::isdigit(static_cast<unsigned char>(c))) return true;
        std::size_t probe = pos_;
        return match_param(s_, probe).has_value() || is_ident_char(c) ||
               static_cast<unsigned char>(c) >= 0x80;
    }

    ParamPoly term() {
        ParamPoly acc = factor();
        for (;;) {
            if (eat('*')) { acc = acc * factor(); continue; }
            if (eat('/')) {
                ParamPoly d = factor();
                if (!d.is_constant()) fail("division by a non-constant");
                if (d.constant_value().is_zero()) throw DomainError("division by zero");
                acc /= d.constant_value();
                continue;
            }
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-' && s_[pos_] != ')' &&
                s_.substr(pos_, 3) != "\xE2\x88\x92" && starts_factor()) {
                acc = acc * factor();
                continue;
            }
            break;
        }
        return acc;
    }

    ParamPoly factor() {
        if (eat_minus()) return -factor();
        ParamPoly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    ParamPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('(')) {
            ParamPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ParamPoly(Rational::parse(s_.substr(start, pos_ - start)));
        }
        std::size_t probe = pos_;
        if (auto p = match_param(s_, probe)) {
            pos_ = probe;
            return ParamPoly::var(*p);
        }
        std::size_t end = pos_;
        while (end < s_.size() && (is_ident_char(s_[end]) || static_cast<unsigned char>(s_[end]) >= 0x80)) ++end;
        throw ParseError("unknown parameter '" + std::string(s_.substr(pos_, std::max<std::size_t>(end - pos_, 1))) +
                         "'; allowed: alpha beta gamma delta s u");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

std::string_view param_name(Param p) {
    switch (p) {
        case Param::alpha: return "\xCE\xB1";
        case Param::beta: return "\xCE\xB2";
        case Param::gamma: return "\xCE\xB3";
        case Param::delta: return "\xCE\xB4";
        case Param::s: return "s";
        case Param::u: return "u";
    }
    return "?";
}

std::optional<Param> match_param(std::string_view text, std::size_t& pos) {
    for (const auto& sp : kSpellings) {
        if (text.substr(pos, sp.text.size()) != sp.text) continue;
        std::size_t end = pos + sp.text.size();
        bool ascii_word = std::isalpha(static_cast<unsigned char>(sp.text[0])) != 0;
        if (ascii_word && end < text.size() && is_ident_char(text[end])) continue;
        pos = end;
        return sp.param;
    }
    return std::nullopt;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    return a > b;
}

ParamPoly::ParamPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

ParamPoly ParamPoly::var(Param p) {
    ParamPoly r;
    Exponents e{};
    e[static_cast<std::size_t>(p)] = 1;
    r.terms_.emplace(e, Rational(1));
    return r;
}

ParamPoly ParamPoly::parse(std::string_view text) { return PolyParser(text).run(); }

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational ParamPoly::constant_value() const {
    if (!is_constant()) throw SymbolicParameterError();
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int ParamPoly::degree(Param p) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<std::size_t>(p)]);
    return d;
}

int ParamPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.begin()->first); }

ParamPoly ParamPoly::coefficient(Param p, int k) const {
    ParamPoly r;
    auto idx = static_cast<std::size_t>(p);
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Exponents f = e;
        f[idx] = 0;
        r.add_term(f, c);
    }
    return r;
}

ParamPoly ParamPoly::specialize(const ParamAssignment& values) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        ParamPoly t(c);
        Exponents rest = e;
        for (const auto& [p, v] : values) {
            auto idx = static_cast<std::size_t>(p);
            if (rest[idx] == 0) continue;
            Rational f(1);
            for (int i = 0; i < rest[idx]; ++i) f *= v;
            t *= f;
            rest[idx] = 0;
        }
        ParamPoly mono;
        if (!t.is_zero()) mono.terms_.emplace(rest, t.constant_value());
        r += mono;
    }
    return r;
}

Rational ParamPoly::evaluate(const ParamAssignment& values) const {
    ParamPoly r = specialize(values);
    if (!r.is_constant()) throw PreconditionError("evaluate: unassigned parameter in " + str());
    return r.constant_value();
}

ParamPoly ParamPoly::substitute(Param p, const ParamPoly& value) const {
    ParamPoly r;
    int d = degree(p);
    for (int k = 0; k <= d; ++k) {
        ParamPoly c = coefficient(p, k);
        if (!c.is_zero()) r += c * value.pow(static_cast<unsigned>(k));
    }
    return r;
}

ParamPoly ParamPoly::pow(unsigned k) const {
    ParamPoly r(1);
    ParamPoly b = *this;
    while (k != 0) {
        if ((k & 1U) != 0) r *= b;
        k >>= 1U;
        if (k != 0) b *= b;
    }
    return r;
}

void ParamPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{};
            for (std::size_t i = 0; i < kParamCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

ParamPoly& ParamPoly::operator/=(const Rational& c) { return *this *= c.inverse(); }

ParamPoly operator-(const ParamPoly& a) {
    ParamPoly r = a;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool constant = total(e) == 0;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (constant || !mag.is_one()) {
            os << mag.str();
            wrote = true;
        }
        for (std::size_t i = 0; i < kParamCount; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << param_name(static_cast<Param>(i));
            if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

} // namespace novikov
