#pragma once

#include <complex>
#include <cmath>
#include <optional>
#include <string>

#include "rational.hpp"

namespace sheetlab {

/// Exact square root of a non-negative rational, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    bigint sn = boost::multiprecision::sqrt(r.num());
    bigint sd = boost::multiprecision::sqrt(r.den());
    if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
    return Rational(sn, sd);
}

/// Splits n > 0 as f^2 * s with s squarefree (trial division up to 10^6;
/// any leftover prime factors above that bound are assumed squarefree).
inline std::pair<bigint, bigint> squarefree_split(bigint n) {
    bigint f = 1, s = 1;
    for (bigint p = 2; p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) f *= p;
        if (e % 2 == 1) s *= p;
    }
    bigint r = boost::multiprecision::sqrt(n);
    if (r * r == n) {
        f *= r;
    } else {
        s *= n;
    }
    return {f, s};
}

/// Element a + b*sqrt(d) of a real quadratic field. A value with b = 0 is
/// plain rational and combines with any radicand; otherwise both operands
/// must carry the same squarefree d >= 2.
class QuadNum {
public:
    QuadNum() : a_(0), b_(0), d_(0) {}
    QuadNum(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadNum(long long a) : a_(a), b_(0), d_(0) {}
    QuadNum(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_.is_zero())
            d_ = 0;
        else if (d_ < 2)
            throw incompatible_field_error("QuadNum: radicand must be >= 2");
    }

    static QuadNum sqrt_of(long long d) { return QuadNum(0, 1, d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadNum conj() const { return QuadNum(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }

    friend QuadNum operator+(const QuadNum& x, const QuadNum& y) {
        long long d = merge_d(x, y);
        return QuadNum(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }
    friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
        long long d = merge_d(x, y);
        return QuadNum(x.a_ * y.a_ + Rational(d == 0 ? 0 : d) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * y.inverse(); }

    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
    QuadNum& operator/=(const QuadNum& o) { return *this = *this / o; }

    QuadNum inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw error("QuadNum: inverse of zero (or zero-norm) value");
        return QuadNum(a_ / n, -b_ / n, d_);
    }

    QuadNum pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadNum r(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    friend bool operator==(const QuadNum& x, const QuadNum& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

    /// Exact sign of the real embedding with sqrt(d) > 0.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 against d*b^2.
        Rational diff = a_ * a_ - Rational(d_) * b_ * b_;
        return diff.sign() == 0 ? 0 : diff.sign() * sa;
    }

    /// Exact square root within the same field, if one exists there.
    /// For plain rational values, ambient_d names the field to search in.
    std::optional<QuadNum> field_sqrt(long long ambient_d = 0) const {
        if (sign() < 0) return std::nullopt;
        if (b_.is_zero()) {
            if (auto r = rational_sqrt(a_)) return QuadNum(*r);
            if (ambient_d >= 2) {
                if (auto r = rational_sqrt(a_ / Rational(ambient_d)))
                    return QuadNum(0, *r, ambient_d);
            }
            return std::nullopt;
        }
        // Solve (u + v*sqrt(d))^2 = a + b*sqrt(d): u*v = b/2, u^2 + d v^2 = a.
        auto n = rational_sqrt(norm());
        if (!n) return std::nullopt;
        for (const Rational& n0 : {*n, -*n}) {
            Rational u2 = (a_ + n0) / Rational(2);
            if (auto u = rational_sqrt(u2); u && !u->is_zero()) {
                Rational v = b_ / (Rational(2) * *u);
                QuadNum cand(*u, v, d_);
                if (cand * cand == *this) return cand.sign() >= 0 ? cand : -cand;
            }
        }
        return std::nullopt;
    }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string root = "sqrt(" + std::to_string(d_) + ")";
        std::string bs;
        if (b_ == Rational(1))
            bs = root;
        else if (b_ == Rational(-1))
            bs = "-" + root;
        else
            bs = b_.to_string() + "*" + root;
        if (a_.is_zero()) return bs;
        return a_.to_string() + (bs[0] == '-' ? "" : "+") + bs;
    }

private:
    static long long merge_d(const QuadNum& x, const QuadNum& y) {
        if (x.b_.is_zero()) return y.d_;
        if (y.b_.is_zero()) return x.d_;
        if (x.d_ != y.d_)
            throw incompatible_field_error("QuadNum: mixing sqrt(" + std::to_string(x.d_) +
                                           ") with sqrt(" + std::to_string(y.d_) + ")");
        return x.d_;
    }

    Rational a_, b_;
    long long d_;
};

/// Maps a + b*sqrt(d) to the complex plane (real axis).
inline std::complex<double> quad_to_complex(const QuadNum& q) {
    return {q.to_double(), 0.0};
}

/// Exact complex number with quadratic-field components.
struct QuadComplex {
    QuadNum re, im;

    QuadComplex() = default;
    QuadComplex(QuadNum r) : re(std::move(r)) {}
    QuadComplex(QuadNum r, QuadNum i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    QuadComplex operator-() const { return {-re, -im}; }
    friend QuadComplex operator+(const QuadComplex& x, const QuadComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend QuadComplex operator-(const QuadComplex& x, const QuadComplex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend QuadComplex operator*(const QuadComplex& x, const QuadComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const QuadComplex& x, const QuadComplex& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const QuadComplex& x, const QuadComplex& y) { return !(x == y); }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    std::string to_string() const {
        if (im.is_zero()) return re.to_string();
        std::string i = "(" + im.to_string() + ")*i";
        if (re.is_zero()) return i;
        return "(" + re.to_string() + ")+" + i;
    }
};

}  // namespace sheetlab
