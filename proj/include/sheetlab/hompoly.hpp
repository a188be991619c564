#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace sheetlab {

/// Bivariate polynomial in the two free parameters c0, c1 over the rationals.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(long long v) { add_term(0, 0, Rational(v)); }
    ParamPoly(const Rational& v) { add_term(0, 0, v); }
    static ParamPoly c0() {
        ParamPoly p;
        p.add_term(1, 0, Rational(1));
        return p;
    }
    static ParamPoly c1() {
        ParamPoly p;
        p.add_term(0, 1, Rational(1));
        return p;
    }

    void add_term(int i, int j, const Rational& c) {
        if (i < 0 || j < 0) throw validation_error("ParamPoly: negative exponent");
        auto key = std::make_pair(i, j);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    Rational coeff(int i, int j) const {
        auto it = terms_.find(std::make_pair(i, j));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }

    bool is_homogeneous() const {
        int d = total_degree();
        for (const auto& [e, c] : terms_)
            if (e.first + e.second != d) return false;
        return true;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }
    ParamPoly operator-() const {
        ParamPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly pow(int e) const {
        if (e < 0) throw validation_error("ParamPoly: negative power");
        ParamPoly r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    Rational eval(const Rational& v0, const Rational& v1) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_)
            acc += c * v0.pow(e.first) * v1.pow(e.second);
        return acc;
    }

    /// For a homogeneous P of degree d, the univariate image P(1, t) with t = c1/c0.
    Poly<Rational> dehomogenized() const {
        if (!is_homogeneous()) throw validation_error("ParamPoly: not homogeneous");
        int d = total_degree();
        if (d < 0) return Poly<Rational>();
        std::vector<Rational> coeffs(d + 1, Rational(0));
        for (const auto& [e, c] : terms_) coeffs[e.second] = c;
        return Poly<Rational>(coeffs);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            std::string mono;
            if (it->first.first > 0)
                mono += "c0" + (it->first.first > 1 ? "^" + std::to_string(it->first.first) : "");
            if (it->first.second > 0) {
                if (!mono.empty()) mono += "*";
                mono += "c1" + (it->first.second > 1 ? "^" + std::to_string(it->first.second) : "");
            }
            if (mono.empty())
                out += it->second.to_string();
            else
                out += it->second.to_string() + "*" + mono;
        }
        return out;
    }

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

namespace detail {

inline void collect_rationals(const Rational& c, std::vector<Rational>& out) { out.push_back(c); }
inline void collect_rationals(const ParamPoly& c, std::vector<Rational>& out) {
    for (const auto& [e, r] : c.terms()) out.push_back(r);
}

inline int lead_sign(const Rational& c) { return c.is_zero() ? 0 : (c.num() > 0 ? 1 : -1); }
inline int lead_sign(const ParamPoly& c) {
    if (c.is_zero()) return 0;
    return lead_sign(c.terms().rbegin()->second);
}

inline Rational coeff_pow(const Rational& c, int e) { return c.pow(e); }
inline ParamPoly coeff_pow(const ParamPoly& c, int e) { return c.pow(e); }

/// gcd of the absolute values of a nonempty rational list (positive result).
inline Rational rational_content(const std::vector<Rational>& v) {
    using boost::multiprecision::cpp_int;
    cpp_int g = 0, l = 1;
    for (const Rational& r : v) {
        cpp_int n = r.num() < 0 ? cpp_int(-r.num()) : r.num();
        g = boost::multiprecision::gcd(g, n);
        l = boost::multiprecision::lcm(l, r.den());
    }
    if (g == 0) return Rational(1);
    return Rational(g, l);
}

}  // namespace detail

/// Homogeneous polynomial over coefficient ring C in named variables.
/// The zero polynomial is allowed; any other value has all exponent vectors
/// summing to the same total degree.
template <class C>
class HomPoly {
public:
    explicit HomPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.empty()) throw validation_error("HomPoly: needs at least one variable");
    }

    static HomPoly monomial(std::vector<std::string> vars, const std::vector<int>& exps,
                            const C& coeff) {
        HomPoly p(std::move(vars));
        p.add_term(exps, coeff);
        return p;
    }
    static HomPoly variable(std::vector<std::string> vars, std::size_t idx) {
        std::vector<int> exps(vars.size(), 0);
        exps.at(idx) = 1;
        return monomial(std::move(vars), exps, C(1));
    }

    void add_term(const std::vector<int>& exps, const C& coeff) {
        if (exps.size() != vars_.size()) throw validation_error("HomPoly: exponent arity mismatch");
        for (int e : exps)
            if (e < 0) throw validation_error("HomPoly: negative exponent");
        if (!terms_.empty()) {
            int d = term_degree(terms_.begin()->first);
            if (term_degree(exps) != d && !coeff_is_zero(coeff))
                throw validation_error("HomPoly: mixed total degrees");
        }
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (!coeff_is_zero(coeff)) terms_.emplace(exps, coeff);
        } else {
            C s = it->second + coeff;
            if (coeff_is_zero(s))
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::size_t index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw parse_error("HomPoly: unknown variable " + name);
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : term_degree(terms_.begin()->first); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, C>& terms() const { return terms_; }

    C coeff(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? C(0) : it->second;
    }

    std::pair<std::vector<int>, C> lead_term() const {
        if (terms_.empty()) throw validation_error("HomPoly: zero polynomial has no lead term");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    friend HomPoly operator+(const HomPoly& a, const HomPoly& b) {
        a.check_same_space(b);
        HomPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-b); }
    HomPoly operator-() const {
        HomPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
        a.check_same_space(b);
        HomPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    HomPoly scaled(const C& s) const {
        HomPoly r(vars_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }
    HomPoly pow(int n) const {
        if (n < 0) throw validation_error("HomPoly: negative power");
        HomPoly r = constant(vars_, C(1));
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }
    static HomPoly constant(std::vector<std::string> vars, const C& c) {
        HomPoly p(std::move(vars));
        p.add_term(std::vector<int>(p.vars_.size(), 0), c);
        return p;
    }
    HomPoly& operator+=(const HomPoly& o) { return *this = *this + o; }
    HomPoly& operator-=(const HomPoly& o) { return *this = *this - o; }
    HomPoly& operator*=(const HomPoly& o) { return *this = *this * o; }

    friend bool operator==(const HomPoly& a, const HomPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

    /// Degree in one variable.
    int degree_in(std::size_t v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
        return d;
    }

    /// Coefficient of var^k: the terms with exponent k in var, with that
    /// exponent set to zero (variable list unchanged).
    HomPoly coeff_in(std::size_t v, int k) const {
        HomPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[v] == k) {
                std::vector<int> f = e;
                f[v] = 0;
                r.add_term(f, c);
            }
        return r;
    }

    HomPoly derivative(std::size_t v) const {
        HomPoly r(vars_);
        for (const auto& [e, c] : terms_)
            if (e[v] > 0) {
                std::vector<int> f = e;
                f[v] -= 1;
                r.add_term(f, c * C(e[v]));
            }
        return r;
    }

    /// Removes a variable that no term uses.
    HomPoly drop_variable(std::size_t v) const {
        for (const auto& [e, c] : terms_)
            if (e[v] != 0) throw validation_error("HomPoly: variable still occurs");
        std::vector<std::string> nv;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (i != v) nv.push_back(vars_[i]);
        HomPoly r(nv);
        for (const auto& [e, c] : terms_) {
            std::vector<int> f;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != v) f.push_back(e[i]);
            r.add_term(f, c);
        }
        return r;
    }

    template <class K>
    K eval(const std::vector<K>& point) const {
        if (point.size() != vars_.size()) throw validation_error("HomPoly: evaluation arity");
        K acc = K(0);
        for (const auto& [e, c] : terms_) {
            K t = K(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    /// Divides out the rational content and normalises the lead sign to +.
    HomPoly primitive() const {
        if (terms_.empty()) return *this;
        std::vector<Rational> leaves;
        for (const auto& [e, c] : terms_) detail::collect_rationals(c, leaves);
        Rational content = detail::rational_content(leaves);
        if (detail::lead_sign(lead_term().second) < 0) content = -content;
        HomPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * C(content.inverse()));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string mono;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            append_term(out, it->second, mono);
        }
        return out;
    }

private:
    static int term_degree(const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    static bool coeff_is_zero(const C& c) { return c.is_zero(); }
    void check_same_space(const HomPoly& o) const {
        if (vars_ != o.vars_) throw validation_error("HomPoly: variable lists differ");
    }
    static void append_term(std::string& out, const Rational& c, const std::string& mono) {
        Rational a = c;
        if (out.empty()) {
            if (a.num() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.num() < 0 ? " - " : " + ";
            if (a.num() < 0) a = -a;
        }
        if (mono.empty())
            out += a.to_string();
        else if (a == Rational(1))
            out += mono;
        else
            out += a.to_string() + "*" + mono;
    }
    static void append_term(std::string& out, const ParamPoly& c, const std::string& mono) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (!mono.empty()) out += "*" + mono;
    }

    std::vector<std::string> vars_;
    std::map<std::vector<int>, C> terms_;
};

/// Exact quotient F / G when it exists (single-divisor long division).
template <class C>
inline std::optional<HomPoly<C>> divide_exact(const HomPoly<C>& f, const HomPoly<C>& g) {
    if (g.is_zero()) throw validation_error("HomPoly: division by zero polynomial");
    HomPoly<C> q(f.vars()), r = f;
    auto [ge, gc] = g.lead_term();
    while (!r.is_zero()) {
        auto [re, rc] = r.lead_term();
        std::vector<int> diff(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            diff[i] = re[i] - ge[i];
            if (diff[i] < 0) return std::nullopt;
        }
        HomPoly<C> t = HomPoly<C>::monomial(f.vars(), diff, rc * gc.inverse());
        q += t;
        r -= t * g;
    }
    return q;
}

/// Substitutes exact parameter values, collapsing ParamPoly coefficients.
inline HomPoly<Rational> eval_params(const HomPoly<ParamPoly>& f, const Rational& v0,
                                     const Rational& v1) {
    HomPoly<Rational> r(f.vars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, c.eval(v0, v1));
    return r;
}

inline HomPoly<ParamPoly> with_params(const HomPoly<Rational>& f) {
    HomPoly<ParamPoly> r(f.vars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, ParamPoly(c));
    return r;
}

/// Parses `p/q*x0^a*x1^b + ...` (signs, `*` separators, `^` powers; exponent 1
/// and unit coefficients may be omitted).
inline HomPoly<Rational> parse_hompoly(const std::string& text,
                                       const std::vector<std::string>& vars) {
    HomPoly<Rational> out(vars);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw parse_error("empty polynomial");
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw parse_error("expected + or - between terms");
        }
        if (i == text.size()) throw parse_error("dangling sign");
        Rational coeff(1);
        bool saw_coeff = false;
        std::vector<int> exps(vars.size(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
                std::size_t j = i;
                while (j < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                    ++j;
                if (saw_coeff) throw parse_error("two numeric factors in one term");
                coeff = Rational::parse(text.substr(i, j - i));
                saw_coeff = true;
                saw_factor = true;
                i = j;
            } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                                           text[i] == '_')) {
                std::size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                           text[j] == '_'))
                    ++j;
                std::string name = text.substr(i, j - i);
                i = j;
                int e = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws();
                    std::size_t k = i;
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                        ++k;
                    if (k == i) throw parse_error("missing exponent");
                    e = std::stoi(text.substr(i, k - i));
                    i = k;
                }
                exps[out.index(name)] += e;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw parse_error("empty term");
        out.add_term(exps, sign < 0 ? -coeff : coeff);
        any = true;
        skip_ws();
    }
    return out;
}

}  // namespace sheetlab
