#pragma once

#include <string>
#include <utility>

#include "matrix.hpp"
#include "quadratic.hpp"
#include "rational.hpp"

namespace sheetlab {

/// A point of the projective line over a real quadratic field: num/den with
/// den = 0 encoding the point at infinity.  Always kept in canonical form
/// (den = 1, or num = 1 at infinity).
class ProjValue {
public:
    ProjValue() : num_(0), den_(1) {}
    ProjValue(QuadNum v) : num_(std::move(v)), den_(1) {}
    ProjValue(Rational v) : num_(QuadNum(std::move(v))), den_(1) {}
    ProjValue(long long v) : num_(QuadNum(v)), den_(1) {}
    ProjValue(QuadNum num, QuadNum den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) {
            if (num_.is_zero()) throw degenerate_map_error("projective point 0:0");
            num_ = QuadNum(1);
        } else {
            num_ = num_ / den_;
            den_ = QuadNum(1);
        }
    }

    static ProjValue infinity() { return ProjValue(QuadNum(1), QuadNum(0)); }

    bool is_infinite() const { return den_.is_zero(); }
    const QuadNum& value() const {
        if (is_infinite()) throw error("ProjValue: finite value requested at infinity");
        return num_;
    }
    const QuadNum& num() const { return num_; }
    const QuadNum& den() const { return den_; }

    ProjValue reciprocal() const { return ProjValue(den_, num_); }

    friend bool operator==(const ProjValue& x, const ProjValue& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const ProjValue& x, const ProjValue& y) { return !(x == y); }

    std::string to_string() const { return is_infinite() ? "inf" : num_.to_string(); }

private:
    QuadNum num_, den_;
};

enum class MobiusClass { identity, parabolic, elliptic, hyperbolic };

inline std::string to_string(MobiusClass c) {
    switch (c) {
        case MobiusClass::identity: return "identity";
        case MobiusClass::parabolic: return "parabolic";
        case MobiusClass::elliptic: return "elliptic";
        case MobiusClass::hyperbolic: return "hyperbolic";
    }
    return "?";
}

/// Invertible linear fractional map X -> (aX + b) / (cX + d), held as an
/// exact 2x2 matrix; equal projective maps may differ by a scalar.
struct MobiusMap {
    Mat<QuadNum> m;

    MobiusMap() : m(Mat<QuadNum>::identity(2)) {}
    explicit MobiusMap(Mat<QuadNum> mat) : m(std::move(mat)) {
        if (m.size() != 2) throw unsupported_dimension_error("MobiusMap needs a 2x2 matrix");
        if (m.det().is_zero()) throw degenerate_map_error("MobiusMap: determinant is zero");
    }
    MobiusMap(QuadNum a, QuadNum b, QuadNum c, QuadNum d)
        : MobiusMap(Mat<QuadNum>{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}) {}

    static MobiusMap from_rational(const Mat<Rational>& r) {
        if (r.size() != 2) throw unsupported_dimension_error("MobiusMap needs a 2x2 matrix");
        Mat<QuadNum> q(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) q(i, j) = QuadNum(r(i, j));
        return MobiusMap(q);
    }

    ProjValue apply(const ProjValue& x) const {
        QuadNum p = m(0, 0) * x.num() + m(0, 1) * x.den();
        QuadNum q = m(1, 0) * x.num() + m(1, 1) * x.den();
        return ProjValue(std::move(p), std::move(q));
    }

    MobiusMap compose(const MobiusMap& inner) const { return MobiusMap(m * inner.m); }

    MobiusMap inverse() const {
        return MobiusMap(Mat<QuadNum>{{m(1, 1), QuadNum(0) - m(0, 1)},
                                      {QuadNum(0) - m(1, 0), m(0, 0)}});
    }

    QuadNum trace() const { return m(0, 0) + m(1, 1); }

    /// Equality as projective maps: matrices proportional by a nonzero scalar.
    bool proj_equal(const MobiusMap& o) const {
        QuadNum s, t;
        for (int i = 0; i < 2 && s.is_zero(); ++i)
            for (int j = 0; j < 2; ++j)
                if (!m(i, j).is_zero()) {
                    s = m(i, j);
                    t = o.m(i, j);
                    break;
                }
        if (t.is_zero()) return false;
        return m * t == o.m * s;
    }

    std::string to_string() const {
        return "[[" + m(0, 0).to_string() + ", " + m(0, 1).to_string() + "], [" +
               m(1, 0).to_string() + ", " + m(1, 1).to_string() + "]]";
    }
};

/// Conjugacy class from the sign of trace^2 - 4 det (scale invariant).
inline MobiusClass mobius_classify(const MobiusMap& M) {
    const Mat<QuadNum>& m = M.m;
    if (m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1))
        return MobiusClass::identity;
    QuadNum disc = M.trace() * M.trace() - QuadNum(4) * m.det();
    int s = disc.sign();
    if (s == 0) return MobiusClass::parabolic;
    return s > 0 ? MobiusClass::hyperbolic : MobiusClass::elliptic;
}

namespace detail {

inline MobiusMap mobius_power_positive(const MobiusMap& M, long long n);

}  // namespace detail

/// Exact n-th power.  Parabolic maps use the unipotent closed form
/// M^n = lambda^n (I + n N); hyperbolic maps diagonalize over Q(sqrt(d));
/// elliptic maps fall back to exact binary exponentiation.
inline MobiusMap mobius_power(const MobiusMap& M, long long n) {
    if (n == 0) return MobiusMap();
    if (n < 0) return mobius_power(M.inverse(), -n);
    MobiusClass cls = mobius_classify(M);
    if (cls == MobiusClass::identity) return MobiusMap();
    if (cls == MobiusClass::parabolic) {
        // Double eigenvalue tr/2; N = M/lambda - I is nilpotent.
        QuadNum lam = M.trace() / QuadNum(2);
        QuadNum lam_inv = lam.inverse();
        Mat<QuadNum> nmat = M.m * lam_inv - Mat<QuadNum>::identity(2);
        Mat<QuadNum> p = Mat<QuadNum>::identity(2) + nmat * QuadNum(n);
        return MobiusMap(p * lam.pow(n));
    }
    if (cls == MobiusClass::hyperbolic) {
        const Mat<QuadNum>& m = M.m;
        QuadNum disc = M.trace() * M.trace() - QuadNum(4) * m.det();
        if (!disc.is_rational())
            return detail::mobius_power_positive(M, n);  // nested radical: iterate
        Rational dr = disc.a();
        QuadNum root;
        if (auto rs = rational_sqrt(dr)) {
            root = QuadNum(*rs);
        } else {
            bigint nd = dr.num() * dr.den();
            auto [f, s] = squarefree_split(nd);
            root = QuadNum(0, Rational(f, dr.den()), s.convert_to<long long>());
        }
        QuadNum lam1 = (M.trace() + root) / QuadNum(2);
        QuadNum lam2 = (M.trace() - root) / QuadNum(2);
        // Eigenvector columns; b != 0 or c != 0 (otherwise M is diagonal).
        Mat<QuadNum> p(2), pinv(2);
        if (!m(0, 1).is_zero()) {
            p = Mat<QuadNum>{{m(0, 1), m(0, 1)}, {lam1 - m(0, 0), lam2 - m(0, 0)}};
        } else if (!m(1, 0).is_zero()) {
            p = Mat<QuadNum>{{lam1 - m(1, 1), lam2 - m(1, 1)}, {m(1, 0), m(1, 0)}};
        } else {
            return MobiusMap(Mat<QuadNum>{{m(0, 0).pow(n), QuadNum(0)},
                                          {QuadNum(0), m(1, 1).pow(n)}});
        }
        pinv = p.inverse();
        Mat<QuadNum> d{{lam1.pow(n), QuadNum(0)}, {QuadNum(0), lam2.pow(n)}};
        return MobiusMap(p * d * pinv);
    }
    return detail::mobius_power_positive(M, n);
}

namespace detail {

inline MobiusMap mobius_power_positive(const MobiusMap& M, long long n) {
    Mat<QuadNum> r = Mat<QuadNum>::identity(2), base = M.m;
    for (long long e = n; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return MobiusMap(r);
}

}  // namespace detail

}  // namespace sheetlab
