#pragma once

#include <string>
#include <utility>

#include "poly.hpp"
#include "rational.hpp"

namespace sheetlab {

/// Quotient of two rational-coefficient polynomials in one formal variable,
/// kept coprime with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(long long c) : num_(Rational(c)), den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RationalFunction(Poly<Rational> p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(Poly<Rational> num, Poly<Rational> den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    /// The formal variable itself.
    static RationalFunction var() { return RationalFunction(Poly<Rational>::x()); }

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
        return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
        if (g.is_zero()) throw error("RationalFunction: division by zero");
        return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const RationalFunction& f, const RationalFunction& g) {
        return !(f == g);
    }

    RationalFunction inverse() const {
        if (is_zero()) throw error("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw error("RationalFunction: evaluated at a pole");
        return num_.eval(x) / d;
    }

    /// Substitutes g for the variable.
    RationalFunction compose(const RationalFunction& g) const {
        RationalFunction n = substitute(num_, g), d = substitute(den_, g);
        return n / d;
    }

    /// Horner evaluation of a polynomial at a rational-function argument.
    static RationalFunction substitute(const Poly<Rational>& p, const RationalFunction& x) {
        RationalFunction acc;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            acc = acc * x + RationalFunction(*it);
        return acc;
    }

    std::string to_string(const std::string& var = "n") const {
        if (den_ == Poly<Rational>(Rational(1))) return num_.to_string(var);
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<Rational>(Rational(1));
            return;
        }
        Poly<Rational> g = gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        Rational lead = den_.lead();
        num_ = num_ * (Rational(1) / lead);
        den_ = den_ * (Rational(1) / lead);
    }

    Poly<Rational> num_, den_;
};

}  // namespace sheetlab
