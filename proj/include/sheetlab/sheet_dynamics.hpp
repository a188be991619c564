#pragma once

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "crossing.hpp"
#include "mobius.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "quadratic.hpp"

namespace sheetlab {

/// A column of channel values on a given sheet, evaluated at one point.
struct SheetColumn {
    std::vector<cd> values;
    int sheet = 0;
    cd z{};
};

/// Componentwise reciprocal; moves sheet p to 1 - p.
inline SheetColumn invert(const SheetColumn& s) {
    SheetColumn out = s;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (s.values[i] == cd(0.0, 0.0))
            throw pole_crossing_error(
                "component " + std::to_string(i) + " is zero under inversion",
                static_cast<int>(i), 0);
        out.values[i] = cd(1.0, 0.0) / s.values[i];
    }
    out.sheet = 1 - s.sheet;
    return out;
}

namespace detail {

inline std::vector<cd> apply_numeric(const Mat<Rational>& a, const std::vector<cd>& v) {
    int n = a.size();
    std::vector<cd> out(n, cd(0.0, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += a(i, j).to_double() * v[j];
    return out;
}

}  // namespace detail

/// Applies (IA)^p (or its inverse word (AI)^|p| for p < 0) to a sheet-0
/// column.  The caller supplies S0 already evaluated at z * (-1)^p.
inline SheetColumn continue_sheet(const SheetColumn& s0, const CrossingMatrix& a, int p) {
    if (s0.sheet != 0) throw validation_error("continue_sheet expects a sheet-0 column");
    if (static_cast<int>(s0.values.size()) != a.size())
        throw validation_error("column size does not match the crossing matrix");
    SheetColumn cur = s0;
    for (int step = 1; step <= (p >= 0 ? p : -p); ++step) {
        try {
            if (p >= 0) {
                cur.values = detail::apply_numeric(a.A, cur.values);
                cur = invert(cur);
            } else {
                cur = invert(cur);
                cur.values = detail::apply_numeric(a.A, cur.values);
            }
        } catch (const pole_crossing_error& e) {
            throw pole_crossing_error(std::string(e.what()) + " at continuation step " +
                                          std::to_string(step),
                                      e.index, step);
        }
    }
    cur.sheet = p;
    return cur;
}

/// The continuation law on the affine coordinate X = S1/S2: rows of A swapped.
inline MobiusMap induced_mobius(const CrossingMatrix& a) {
    if (a.size() != 2) throw unsupported_dimension_error("induced_mobius needs a 2x2 matrix");
    return MobiusMap(QuadNum(a.A(1, 0)), QuadNum(a.A(1, 1)), QuadNum(a.A(0, 0)),
                     QuadNum(a.A(0, 1)));
}

/// The crossing matrix acting directly on X (no row swap).
inline MobiusMap crossing_mobius(const CrossingMatrix& a) {
    if (a.size() != 2) throw unsupported_dimension_error("crossing_mobius needs a 2x2 matrix");
    return MobiusMap::from_rational(a.A);
}

struct X0Candidate {
    ProjValue X;
    QuadNum eigenvalue;
    bool trivial = false;  // the no-interaction (all-ones) direction
};

/// Admissible starting coordinates: eigendirections of A on the projective
/// line, the all-ones direction tagged as trivial.
inline std::vector<X0Candidate> x0_candidates(const CrossingMatrix& a) {
    if (a.size() != 2) throw unsupported_dimension_error("x0_candidates needs a 2x2 matrix");
    std::vector<X0Candidate> out;
    for (const EigenPair& p : eigen_exact(a.A))
        for (const auto& v : p.vectors) {
            X0Candidate c;
            c.X = v[1].is_zero() ? ProjValue::infinity() : ProjValue(v[0] / v[1]);
            c.eigenvalue = p.value;
            c.trivial = (v[0] == v[1]);
            out.push_back(std::move(c));
        }
    std::stable_partition(out.begin(), out.end(), [](const X0Candidate& c) { return c.trivial; });
    return out;
}

/// X^(n) for the coordinate started at X0, via the exact Moebius power.
inline ProjValue sheet_coordinate(const CrossingMatrix& a, const ProjValue& x0, long long n) {
    return mobius_power(induced_mobius(a), n).apply(x0);
}

/// An exact solution column of S_i * (A S)_i = 1.
struct RestPoint {
    std::vector<QuadComplex> column;
    std::string source;
};

/// Exact check of the defining equations S_i * (A S)_i = 1.
inline bool verify_rest_point(const Mat<Rational>& a, const std::vector<QuadComplex>& s) {
    int n = a.size();
    if (static_cast<int>(s.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        QuadComplex acc;
        for (int j = 0; j < n; ++j) acc = acc + s[j] * QuadComplex(QuadNum(a(i, j)));
        if (!(s[i] * acc == QuadComplex(QuadNum(1)))) return false;
    }
    return true;
}

namespace detail {

/// Solves the two-channel system: X = S1/S2 obeys a11 X^2 + (a12-a21) X - a22 = 0
/// and then S2^2 = 1 / (a21 X + a22).
inline std::vector<RestPoint> rest_points_2x2(const Mat<Rational>& a, const std::string& label) {
    std::vector<QuadNum> xs;
    Rational c2 = a(0, 0), c1 = a(0, 1) - a(1, 0), c0 = -a(1, 1);
    if (!c2.is_zero()) {
        auto roots = quadratic_roots(c2, c1, c0);
        if (!roots) throw incompatible_field_error("rest-point coordinates are not real");
        xs.push_back(roots->first);
        if (roots->second != roots->first) xs.push_back(roots->second);
    } else if (!c1.is_zero()) {
        xs.push_back(QuadNum(-c0 / c1));
    } else if (!c0.is_zero()) {
        // No finite X solves the ratio equation.
        xs.clear();
    } else {
        throw validation_error("rest points form a continuum for this matrix");
    }
    std::vector<RestPoint> out;
    for (const QuadNum& x : xs) {
        QuadNum denom = QuadNum(a(1, 0)) * x + QuadNum(a(1, 1));
        if (denom.is_zero()) continue;
        QuadNum s2sq = denom.inverse();
        long long ambient = x.d();
        bool imaginary = s2sq.sign() < 0;
        auto root = (imaginary ? (QuadNum(0) - s2sq) : s2sq).field_sqrt(ambient);
        if (!root)
            throw incompatible_field_error("rest-point component lies outside Q(sqrt(" +
                                           std::to_string(ambient) + ")) at X = " + x.to_string());
        for (int sign : {1, -1}) {
            QuadNum s2 = (sign > 0) ? *root : QuadNum(0) - *root;
            QuadNum s1 = x * s2;
            RestPoint rp;
            rp.source = label;
            if (imaginary) {
                rp.column = {QuadComplex(QuadNum(0), s1), QuadComplex(QuadNum(0), s2)};
            } else {
                rp.column = {QuadComplex(s1), QuadComplex(s2)};
            }
            out.push_back(std::move(rp));
        }
    }
    for (const RestPoint& rp : out)
        if (!verify_rest_point(a, rp.column))
            throw error("rest-point back-substitution failed for " + label);
    return out;
}

}  // namespace detail

/// All exact rest points.  N=2 is solved directly; N=3 either through the
/// invariant plane S2 + S3 = 0 or, for block matrices, channelwise.
inline std::vector<RestPoint> rest_points(const CrossingMatrix& m) {
    const Mat<Rational>& a = m.A;
    int n = m.size();
    if (n == 2) return detail::rest_points_2x2(a, m.label);
    if (n == 3) {
        bool plane = (a(1, 0) + a(2, 0) == Rational(0)) && (a(1, 1) + a(2, 1) == Rational(1)) &&
                     (a(1, 2) + a(2, 2) == Rational(1));
        if (plane) {
            std::vector<RestPoint> out;
            CrossingReport rep = validate(m);
            if (rep.unit_row_sums) {
                for (int sign : {1, -1}) {
                    RestPoint ones;
                    ones.source = m.label;
                    ones.column.assign(3, QuadComplex(QuadNum(sign)));
                    out.push_back(std::move(ones));
                }
            }
            Mat<Rational> b{{a(0, 0), a(0, 1) - a(0, 2)}, {a(1, 0), a(1, 1) - a(1, 2)}};
            for (RestPoint rp : detail::rest_points_2x2(b, m.label)) {
                rp.column.push_back(-rp.column[1]);
                rp.source = m.label;
                if (!verify_rest_point(a, rp.column))
                    throw error("lifted rest point fails the three-channel equations");
                out.push_back(std::move(rp));
            }
            return out;
        }
        bool block = true;
        for (int i = 0; i < 2; ++i)
            if (!a(2, i).is_zero() || !a(i, 2).is_zero()) block = false;
        if (block && a(2, 2) == Rational(1)) {
            Mat<Rational> inner{{a(0, 0), a(0, 1)}, {a(1, 0), a(1, 1)}};
            std::vector<RestPoint> out;
            for (const RestPoint& rp : detail::rest_points_2x2(inner, m.label))
                for (int sign : {1, -1}) {
                    RestPoint ext = rp;
                    ext.column.push_back(QuadComplex(QuadNum(sign)));
                    out.push_back(std::move(ext));
                }
            return out;
        }
        throw unsupported_dimension_error(
            "three-channel rest points need the invariant plane S2 + S3 = 0 or block form");
    }
    throw unsupported_dimension_error("rest points implemented for N <= 3");
}

}  // namespace sheetlab
