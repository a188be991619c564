#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "mobius.hpp"
#include "ratfunc.hpp"
#include "sheet_dynamics.hpp"

namespace sheetlab {

/// Finite-product solution for the two-channel family with parameter l:
/// phi(n) = prod_{m=1}^{l} (n - 1/2 - (-1)^m (1/2 + l - m))
///                       / (n - 1/2 + (-1)^m (1/2 + l - m)), in lowest terms.
inline RationalFunction solve_parabolic_family(long long l) {
    if (l < 1) throw validation_error("parabolic family requires l >= 1");
    RationalFunction phi(1);
    RationalFunction n = RationalFunction::var();
    for (long long m = 1; m <= l; ++m) {
        Rational alpha = Rational(1, 2) + Rational(l - m);
        Rational s = (m % 2 == 0) ? alpha : -alpha;
        RationalFunction factor =
            (n - RationalFunction(Rational(1, 2)) - RationalFunction(s)) /
            (n - RationalFunction(Rational(1, 2)) + RationalFunction(s));
        phi = phi * factor;
    }
    return phi;
}

/// Exact residuals of the two functional equations:
/// first  = phi(n) * phi(1-n) - 1
/// second = phi(n) * (n - l) - phi(-n) * (n + l)
/// Both are identically zero for a valid solution.
inline std::pair<RationalFunction, RationalFunction> verify_parabolic(
    const RationalFunction& phi, long long l) {
    RationalFunction n = RationalFunction::var();
    RationalFunction one_minus = RationalFunction(1) - n;
    RationalFunction first = phi * phi.compose(one_minus) - RationalFunction(1);
    RationalFunction second =
        phi * (n - RationalFunction(Rational(l))) -
        phi.compose(-n) * (n + RationalFunction(Rational(l)));
    return {first, second};
}

/// Invariant curve of the two-channel family with parameter l: eliminating
/// the sheet index between the coordinate ladder x0/x1 = (n-(l+1))/(n+l) and
/// the channel ratio x1/x2 = phi_l(n) leaves a homogeneous polynomial of
/// degree l+1.  For l = 1 this is the invariant conic.
inline HomPoly<Rational> two_row_invariant_curve(long long l) {
    RationalFunction phi = solve_parabolic_family(l);
    const Poly<Rational>& r = phi.num();
    const Poly<Rational>& d = phi.den();
    std::vector<std::string> vars{"x0", "x1", "x2"};
    using HP = HomPoly<Rational>;
    auto lin = [&](const Rational& a0, const Rational& a1, const Rational& a2) {
        HP p(vars);
        p.add_term({1, 0, 0}, a0);
        p.add_term({0, 1, 0}, a1);
        p.add_term({0, 0, 1}, a2);
        return p;
    };
    // Sylvester matrix in the sheet index n of
    //   f1 = x0 (n + l) - x1 (n - (l+1))      (degree 1)
    //   f2 = x1 d(n) - x2 r(n)                (degree l)
    std::size_t m = static_cast<std::size_t>(l) + 1;
    std::vector<std::vector<HP>> syl(m, std::vector<HP>(m, HP(vars)));
    HP c1 = lin(Rational(1), Rational(-1), Rational(0));
    HP c0 = lin(Rational(l), Rational(l + 1), Rational(0));
    for (std::size_t row = 0; row + 1 < m; ++row) {
        syl[row][row] = c1;
        syl[row][row + 1] = c0;
    }
    for (std::size_t k = 0; k < m; ++k) {
        int e = static_cast<int>(l - static_cast<long long>(k));
        syl[m - 1][k] = lin(Rational(0), d.coeff(e), -r.coeff(e));
    }
    std::vector<std::size_t> cols(m);
    for (std::size_t i = 0; i < m; ++i) cols[i] = i;
    return detail::hom_det(syl, cols, 0, vars).primitive();
}

/// tan(pi/2 (n + 1/2)): the degenerate solution of xi(n+1)xi(n) = -1,
/// xi(n)xi(-n) = 1.  Poles at n = 1/2 + 2k.
inline double xi(double n) {
    double k = n + 0.5;
    if (std::abs(k) < 4.5e15 && k == std::rint(k) &&
        (static_cast<long long>(std::llrint(k)) % 2 + 2) % 2 == 1)
        throw pole_crossing_error("xi pole at n = " + std::to_string(n),
                                  static_cast<int>(std::llrint(k)), 0);
    return std::tan(M_PI / 2.0 * k);
}

enum class HyperBranch { cosh_branch, sinh_branch };

inline std::string to_string(HyperBranch b) {
    return b == HyperBranch::cosh_branch ? "cosh" : "sinh";
}

/// Series parameters for the hyperbolic difference equation.
struct HyperbolicSeriesSpec {
    HyperBranch branch = HyperBranch::cosh_branch;
    double L = std::log((3.0 + std::sqrt(5.0)) / 2.0);  // log y_plus
    double eps = 1e-12;
    int max_terms = 200;
};

/// X(0) value selected by the branch.
inline Rational branch_x0(HyperBranch b) {
    return b == HyperBranch::cosh_branch ? Rational(2) : Rational(-4);
}

namespace detail {

inline double log_cosh(double x) {
    x = std::abs(x);
    if (x < 20.0) return std::log(std::cosh(x));
    return x - std::log(2.0) + std::log1p(std::exp(-2.0 * x));
}

/// log |sinh x|; the sign is sign(x).
inline double log_abs_sinh(double x) {
    x = std::abs(x);
    if (x < 20.0) return std::log(std::sinh(x));
    return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
}

}  // namespace detail

/// One evaluation of g(n) = g_inf(n) + sum_m G_m(n): the log-magnitude, the
/// accumulated sign of the (sinh-branch) factor products, and the certified
/// first omitted term.
struct SeriesEval {
    double value = 0.0;
    int sign = 1;
    int terms_used = 0;
    double tail_bound = 0.0;
};

inline SeriesEval g_series(double n, const HyperbolicSeriesSpec& spec) {
    SeriesEval out;
    out.value = n * spec.L;
    bool use_sinh = (spec.branch == HyperBranch::sinh_branch);
    for (int m = 0; m <= spec.max_terms; ++m) {
        double args[4] = {n + 1.0 + 2.0 * m, n - 2.0 * (m + 1.0),   // numerator
                          n - 1.0 - 2.0 * m, n + 2.0 * (m + 1.0)};  // denominator
        double term = 0.0;
        int tsign = 1;
        for (int i = 0; i < 4; ++i) {
            double contribution;
            if (use_sinh) {
                if (args[i] == 0.0)
                    throw singular_term_error(
                        "sinh factor vanishes at term m = " + std::to_string(m), m);
                contribution = detail::log_abs_sinh(args[i] * spec.L);
                if (args[i] < 0.0) tsign = -tsign;
            } else {
                contribution = detail::log_cosh(args[i] * spec.L);
            }
            term += (i < 2) ? contribution : -contribution;
        }
        if (tsign > 0 && std::abs(term) < spec.eps) {
            out.terms_used = m;
            out.tail_bound = std::abs(term);
            return out;
        }
        out.value += term;
        out.sign *= tsign;
    }
    throw validation_error("hyperbolic series did not converge within the term cap");
}

/// g(n) as a real number (the log-magnitude part).
inline double g_hyperbolic(double n, const HyperbolicSeriesSpec& spec) {
    return g_series(n, spec).value;
}

/// Phi(n) = xi(n-1/2) e^{g(n-1/2)} on the cosh branch; the sinh branch
/// carries the required -1 factors in the series signs, so xi is not used.
inline double phi_hyperbolic(double n, const HyperbolicSeriesSpec& spec) {
    SeriesEval g = g_series(n - 0.5, spec);
    if (spec.branch == HyperBranch::cosh_branch) return xi(n - 0.5) * std::exp(g.value);
    return g.sign * std::exp(g.value);
}

/// One sheet of the z = 0 value table.
struct SheetValueRow {
    long long n = 0;
    ProjValue X;         // exact S1/S2 on sheet n
    double s1 = 0.0;     // X * Phi(n)
    double s2 = 0.0;     // Phi(n)
    double unitarity_residual = 0.0;
    double crossing_residual = 0.0;
};

/// Tabulates (S1, S2) = Phi(n) (X(n), 1) over an integer range of sheets.
///
/// The residual columns evaluate the two functional-equation ladders in ratio
/// form, so the exact parts (the xi pairs xi(t)xi(-t) = 1, xi(t)xi(t+1) = -1
/// and the exact coordinate ladder) are substituted analytically and only the
/// transcendental series enters numerically.  This keeps the checks finite on
/// the cosh branch, where Phi itself is 0 or a pole at every integer sheet.
inline std::vector<SheetValueRow> assemble_sheet_values(long long n_lo, long long n_hi,
                                                        const HyperbolicSeriesSpec& spec) {
    if (n_lo > n_hi) throw validation_error("empty sheet range");
    CrossingMatrix a2 = reduced_two_row();
    ProjValue x0{QuadNum(branch_x0(spec.branch))};
    bool is_cosh = (spec.branch == HyperBranch::cosh_branch);
    std::vector<SheetValueRow> rows;
    for (long long n = n_lo; n <= n_hi; ++n) {
        SheetValueRow row;
        row.n = n;
        row.X = sheet_coordinate(a2, x0, n);
        double t = static_cast<double>(n) - 0.5;
        SeriesEval gt = g_series(t, spec);
        SeriesEval gmt = g_series(-t, spec);
        SeriesEval gt1 = g_series(t + 1.0, spec);

        if (is_cosh) {
            double x;
            try {
                x = xi(t);
            } catch (const pole_crossing_error&) {
                x = std::numeric_limits<double>::infinity();
            }
            row.s2 = x * std::exp(gt.value);
        } else {
            row.s2 = gt.sign * std::exp(gt.value);
        }
        row.s1 = row.X.is_infinite() ? std::numeric_limits<double>::infinity()
                                     : row.X.value().to_double() * row.s2;

        // Phi(n) Phi(1-n) = 1: the xi pair contributes exactly 1.
        row.unitarity_residual =
            std::abs(gt.sign * gmt.sign * std::exp(gt.value + gmt.value) - 1.0);

        // Phi(n)/Phi(-n) = 1 / (a21 X + a22): the xi pair contributes -1.
        QuadNum coef = QuadNum(a2.A(1, 0)) * row.X.value() + QuadNum(a2.A(1, 1));
        double ratio = std::exp(gt.value + gt1.value);
        ratio *= is_cosh ? -1.0 : gt.sign * gt1.sign;
        row.crossing_residual = std::abs(ratio * coef.to_double() - 1.0);

        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sheetlab
