#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"
#include "quadratic.hpp"
#include "rational.hpp"

namespace sheetlab {

/// A named crossing matrix acting on columns of sheet values.
struct CrossingMatrix {
    std::string label;
    Mat<Rational> A;

    int size() const { return A.size(); }
};

/// Two-channel matrix 1/(2l+1) * [[-1, 2l+2], [2l, 1]] for integer l >= 1.
inline CrossingMatrix su2_two_row(long long l) {
    if (l < 1) throw validation_error("su2 label requires l >= 1");
    Rational d(1, 2 * l + 1);
    Mat<Rational> a{{d * Rational(-1), d * Rational(2 * l + 2)},
                    {d * Rational(2 * l), d * Rational(1)}};
    return {"su2:l=" + std::to_string(l), a};
}

/// Three-channel matrix with rows (1/3,-1,5/3), (-1/3,1/2,5/6), (1/3,1/2,1/6).
inline CrossingMatrix three_row_p33() {
    Mat<Rational> a{{Rational(1, 3), Rational(-1), Rational(5, 3)},
                    {Rational(-1, 3), Rational(1, 2), Rational(5, 6)},
                    {Rational(1, 3), Rational(1, 2), Rational(1, 6)}};
    return {"p33", a};
}

/// Two-channel reduction of p33 to the invariant plane x2 = -x1:
/// 1/3 * [[1, -8], [-1, -1]].  Involutive, but its row sums are -7/3 and -2/3.
inline CrossingMatrix reduced_two_row() {
    Mat<Rational> a{{Rational(1, 3), Rational(-8, 3)},
                    {Rational(-1, 3), Rational(-1, 3)}};
    return {"p33-reduced", a};
}

/// Extends a crossing matrix by one decoupled channel with trivial crossing.
inline CrossingMatrix extend_block(const CrossingMatrix& inner) {
    int n = inner.size();
    Mat<Rational> a(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = inner.A(i, j);
    a(n, n) = Rational(1);
    return {"block:" + inner.label, a};
}

/// Parses catalog labels: "su2:l=<k>", "p33", "p33-reduced", "block:<inner>".
inline CrossingMatrix crossing_from_label(const std::string& label) {
    if (label == "p33") return three_row_p33();
    if (label == "p33-reduced") return reduced_two_row();
    const std::string su2_prefix = "su2:l=";
    if (label.rfind(su2_prefix, 0) == 0) {
        std::string num = label.substr(su2_prefix.size());
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad su2 label: " + label);
        return su2_two_row(std::stoll(num));
    }
    const std::string block_prefix = "block:";
    if (label.rfind(block_prefix, 0) == 0)
        return extend_block(crossing_from_label(label.substr(block_prefix.size())));
    throw parse_error("unknown crossing label: " + label);
}

struct CrossingReport {
    bool involution = false;
    bool unit_row_sums = false;
    std::vector<Rational> row_sums;
    std::string first_failure;
};

/// Checks A*A = I and per-row sums, all in exact arithmetic.
inline CrossingReport validate(const CrossingMatrix& m) {
    CrossingReport rep;
    int n = m.size();
    rep.involution = (m.A * m.A == Mat<Rational>::identity(n));
    if (!rep.involution) rep.first_failure = "A*A != I";
    rep.unit_row_sums = true;
    for (int i = 0; i < n; ++i) {
        Rational s(0);
        for (int j = 0; j < n; ++j) s += m.A(i, j);
        rep.row_sums.push_back(s);
        if (s != Rational(1)) {
            rep.unit_row_sums = false;
            if (rep.first_failure.empty())
                rep.first_failure = "row " + std::to_string(i) + " sums to " + s.to_string();
        }
    }
    return rep;
}

struct EigenPair {
    QuadNum value;
    std::vector<std::vector<QuadNum>> vectors;  // basis of the eigenspace
};

namespace detail {

inline Poly<Rational> charpoly(const Mat<Rational>& a) {
    int n = a.size();
    if (n == 1) return Poly<Rational>({-a(0, 0), Rational(1)});
    if (n == 2) {
        Rational tr = a(0, 0) + a(1, 1);
        return Poly<Rational>({a.det(), -tr, Rational(1)});
    }
    if (n == 3) {
        Rational tr = a(0, 0) + a(1, 1) + a(2, 2);
        Rational c2(0);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) c2 += a(i, i) * a(j, j) - a(i, j) * a(j, i);
        return Poly<Rational>({-a.det(), c2, -tr, Rational(1)});
    }
    throw unsupported_dimension_error("exact eigensystem supports sizes 1..3");
}

inline std::vector<std::vector<QuadNum>> eigvectors_for(const Mat<Rational>& a,
                                                        const QuadNum& lambda) {
    int n = a.size();
    Mat<QuadNum> shifted(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            shifted(i, j) = QuadNum(a(i, j));
            if (i == j) shifted(i, j) = shifted(i, j) - lambda;
        }
    return shifted.kernel();
}

/// Scales: all-rational vectors to coprime integers with positive first entry,
/// otherwise divides by the first nonzero entry.
inline std::vector<QuadNum> normalize_direction(std::vector<QuadNum> v) {
    bool all_rational = true;
    for (const auto& e : v)
        if (!e.is_rational()) all_rational = false;
    if (all_rational) {
        bigint l = 1, g = 0;
        for (const auto& e : v) l = boost::multiprecision::lcm(l, e.a().den());
        for (const auto& e : v) {
            bigint num = e.a().num() * (l / e.a().den());
            g = boost::multiprecision::gcd(g, num < 0 ? bigint(-num) : num);
        }
        if (g == 0) g = 1;
        Rational scale(l, g);
        for (auto& e : v) e = e * QuadNum(scale);
        for (const auto& e : v) {
            int s = e.a().sign();
            if (s > 0) break;
            if (s < 0) {
                for (auto& f : v) f = QuadNum(0) - f;
                break;
            }
        }
        return v;
    }
    for (const auto& e : v)
        if (!(e == QuadNum(0))) {
            QuadNum inv = e.inverse();
            for (auto& f : v) f = f * inv;
            break;
        }
    return v;
}

}  // namespace detail

/// Exact eigenvalues and eigenspace bases for matrices of size <= 3 whose
/// spectrum lies in a real quadratic field.
inline std::vector<EigenPair> eigen_exact(const Mat<Rational>& a) {
    Poly<Rational> p = detail::charpoly(a);
    std::vector<QuadNum> values;
    for (const Rational& r : rational_roots(p)) {
        values.push_back(QuadNum(r));
        Poly<Rational> lin({-r, Rational(1)});
        while (divmod(p, lin).second.is_zero()) p = p / lin;
    }
    if (p.degree() == 2) {
        auto roots = quadratic_roots(p.coeff(2), p.coeff(1), p.coeff(0));
        if (!roots) throw error("complex eigenvalues are not supported");
        values.push_back(roots->first);
        values.push_back(roots->second);
    } else if (p.degree() > 0) {
        throw error("eigenvalues lie outside a quadratic extension");
    }
    std::vector<EigenPair> out;
    for (const QuadNum& lam : values) {
        EigenPair pair;
        pair.value = lam;
        for (auto& v : detail::eigvectors_for(a, lam))
            pair.vectors.push_back(detail::normalize_direction(std::move(v)));
        out.push_back(std::move(pair));
    }
    return out;
}

/// True when v is a nonzero vector with a*v proportional to v.
inline bool is_eigendirection(const Mat<Rational>& a, const std::vector<Rational>& v) {
    int n = a.size();
    if (static_cast<int>(v.size()) != n) throw validation_error("vector size mismatch");
    std::vector<Rational> w = a.apply(v);
    int pivot = -1;
    for (int i = 0; i < n; ++i)
        if (!v[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) return false;
    Rational ratio = w[pivot] / v[pivot];
    for (int i = 0; i < n; ++i)
        if (w[i] != ratio * v[i]) return false;
    return true;
}

}  // namespace sheetlab
