#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"

namespace sheetlab {

using bigint = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: gcd(num, den) = 1 and den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(bigint n) : num_(std::move(n)), den_(1) {}
    Rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        bigint lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (num_ == 0) throw error("Rational: inverse of zero");
        return Rational(unchecked{}, num_ > 0 ? den_ : -den_, boost::multiprecision::abs(num_));
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    double to_double() const {
        boost::multiprecision::cpp_rational r(num_, den_);
        return r.convert_to<double>();
    }

    /// "p/q", or just "p" for integers.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p", "-p/q" or "p/q" with optional surrounding whitespace.
    static Rational parse(const std::string& text);

private:
    struct unchecked {};
    Rational(unchecked, bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = boost::multiprecision::gcd(num_ < 0 ? bigint(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    bigint num_;
    bigint den_;
};

/// Reduces p/q to canonical form; q = 0 is a division-by-zero error.
inline std::pair<bigint, bigint> rat_normalize(const bigint& p, const bigint& q) {
    Rational r(p, q);
    return {r.num(), r.den()};
}

inline Rational Rational::parse(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw parse_error("Rational: empty string");
    std::string s = text.substr(b, e - b + 1);
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(bigint(s));
        return Rational(bigint(s.substr(0, slash)), bigint(s.substr(slash + 1)));
    } catch (const std::runtime_error& ex) {
        throw parse_error("Rational: cannot parse '" + s + "'");
    }
}

}  // namespace sheetlab
