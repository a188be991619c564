#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "quadratic.hpp"
#include "rational.hpp"

namespace sheetlab {

/// Dense univariate polynomial over an exact field K; coeff[i] multiplies x^i.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(K c) : c_{std::move(c)} { trim(); }
    Poly(long long c) : c_{K(c)} { trim(); }
    Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    /// Degree, with deg(0) = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0);
    }
    const K& lead() const {
        if (c_.empty()) throw error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<K> r(std::max(p.c_.size(), q.c_.size()), K(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
        for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = K(0) - v;
        return r;
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<K> r(p.c_.size() + q.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const K& s) const {
        Poly r = *this;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
        if (q.is_zero()) throw error("Poly: division by zero polynomial");
        Poly rem = p, quot;
        quot.c_.assign(std::max(0, p.degree() - q.degree() + 1), K(0));
        while (!rem.is_zero() && rem.degree() >= q.degree()) {
            K f = rem.lead() / q.lead();
            int shift = rem.degree() - q.degree();
            quot.c_[shift] = f;
            for (int i = 0; i <= q.degree(); ++i) rem.c_[i + shift] -= f * q.c_[i];
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }

    friend Poly operator/(const Poly& p, const Poly& q) { return divmod(p, q).first; }
    friend Poly operator%(const Poly& p, const Poly& q) { return divmod(p, q).second; }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long long>(i));
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Substitution p(q(x)).
    Poly compose(const Poly& q) const {
        Poly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Poly(*it);
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (K(1) / lead());
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Resultant of two univariate polynomials via the Sylvester determinant.
template <class K>
K resultant(const Poly<K>& p, const Poly<K>& q) {
    int m = p.degree(), n = q.degree();
    if (m < 0 || n < 0) return K(0);
    if (m == 0 || n == 0) {
        K base = (m == 0) ? p.coeff(0) : q.coeff(0);
        int e = (m == 0) ? n : m;
        K r(1);
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }
    Mat<K> s(m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(i, i + j) = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(n + i, i + j) = q.coeff(n - j);
    return s.det();
}

/// Scales a rational polynomial to coprime integer coefficients with positive lead.
inline Poly<Rational> integer_primitive(const Poly<Rational>& p) {
    if (p.is_zero()) return p;
    bigint l = 1, g = 0;
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, c.den());
    for (const auto& c : p.coeffs()) {
        bigint n = c.num() * (l / c.den());
        g = boost::multiprecision::gcd(g, n < 0 ? bigint(-n) : n);
    }
    if (g == 0) g = 1;
    Rational scale(l, g);
    Poly<Rational> r = p * scale;
    if (r.lead().sign() < 0) r = -r;
    return r;
}

/// All divisors of |n|, complete whenever trial division up to 10^6 suffices.
inline std::vector<bigint> divisors_of(bigint n) {
    if (n < 0) n = -n;
    std::vector<std::pair<bigint, int>> fac;
    for (bigint p = 2; p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) fac.push_back({p, e});
    }
    if (n > 1) fac.push_back({n, 1});
    std::vector<bigint> divs{1};
    for (auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        bigint pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

/// All rational roots of p, each listed once (exact).
inline std::vector<Rational> rational_roots(const Poly<Rational>& p) {
    std::vector<Rational> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    Poly<Rational> q = integer_primitive(p);
    // Strip x^k first: zero is a root when the constant term vanishes.
    int low = 0;
    while (q.coeff(low) == Rational(0)) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> shifted(q.coeffs().begin() + low, q.coeffs().end());
        q = Poly<Rational>(shifted);
    }
    if (q.degree() < 1) return roots;
    for (const bigint& pn : divisors_of(q.coeff(0).num()))
        for (const bigint& qn : divisors_of(q.lead().num())) {
            for (int s : {1, -1}) {
                Rational cand(s * pn, qn);
                if (q.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Exact roots of a*x^2 + b*x + c (a != 0) in a real quadratic field.
/// Returns nothing when the discriminant is negative.
inline std::optional<std::pair<QuadNum, QuadNum>> quadratic_roots(const Rational& a,
                                                                  const Rational& b,
                                                                  const Rational& c) {
    Rational disc = b * b - Rational(4) * a * c;
    if (disc.sign() < 0) return std::nullopt;
    QuadNum root_disc;
    if (auto r = rational_sqrt(disc)) {
        root_disc = QuadNum(*r);
    } else {
        // disc = (f^2 * s) / den^2 * den... write disc = num/den, sqrt = sqrt(num*den)/den.
        bigint nd = disc.num() * disc.den();
        auto [f, s] = squarefree_split(nd);
        root_disc = QuadNum(0, Rational(f, disc.den()), s.convert_to<long long>());
    }
    QuadNum inv2a = QuadNum(Rational(1) / (Rational(2) * a));
    QuadNum r1 = (QuadNum(-b) + root_disc) * inv2a;
    QuadNum r2 = (QuadNum(-b) - root_disc) * inv2a;
    return std::make_pair(r1, r2);
}

template <class K>
std::string Poly<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        K c = coeff(i);
        if (c == K(0)) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = (cs == "1");
        if (i == 0) {
            out += cs;
        } else {
            if (!unit) out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace sheetlab
