#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "crossing.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "sheet_dynamics.hpp"

namespace sheetlab {

/// Principal sheet map w = asin(z) / pi; Re w stays in [-1/2, 1/2].
inline cd w_of_z(const cd& z) {
    if (z == cd(1.0, 0.0) || z == cd(-1.0, 0.0))
        throw branch_point_error("w(z) has branch points at z = 1 and z = -1");
    return std::asin(z) / M_PI;
}

/// Disk variable zeta = (1 - sqrt(1 - z^2)) / z with the principal root,
/// realizing i*sqrt(z^2 - 1) as -sqrt(1 - z^2); maps the cut plane into the
/// closed unit disk.  The removable point z = 0 evaluates to 0.
inline cd zeta_of_z(const cd& z) {
    if (z == cd(0.0, 0.0)) return {};
    cd zeta = (1.0 - std::sqrt(1.0 - z * z)) / z;
    if (std::abs(zeta) > 1.0 + tolerance())
        throw validation_error("disk variable left the closed unit disk");
    return zeta;
}

/// Blaschke data: the order of the zero at the origin plus the off-origin
/// zero set, which must be symmetric in the origin and both axes.
struct BlaschkeSpec {
    int order = 0;
    std::vector<cd> zeros;
};

namespace detail {

/// Collapses signed zeros so symmetric partners compare equal.
inline std::pair<double, double> zero_key(const cd& z) {
    double re = z.real() == 0.0 ? 0.0 : z.real();
    double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return {re, im};
}

}  // namespace detail

inline void validate_blaschke(const BlaschkeSpec& spec) {
    if (spec.order < 0) throw validation_error("Blaschke order must be non-negative");
    for (const cd& zn : spec.zeros) {
        double m = std::abs(zn);
        if (m == 0.0)
            throw validation_error("Blaschke zeros at the origin belong to the order parameter");
        if (m >= 1.0 - tolerance())
            throw validation_error("Blaschke zero " + format_double(zn.real()) + "+" +
                                   format_double(zn.imag()) + "i is not inside the unit disk");
    }
    std::vector<std::pair<double, double>> base;
    for (const cd& zn : spec.zeros) base.push_back(detail::zero_key(zn));
    std::sort(base.begin(), base.end());
    const char* names[3] = {"-zeta", "conj(zeta)", "-conj(zeta)"};
    for (int t = 0; t < 3; ++t) {
        std::vector<std::pair<double, double>> image;
        for (const cd& zn : spec.zeros) {
            cd w = t == 0 ? -zn : t == 1 ? std::conj(zn) : -std::conj(zn);
            image.push_back(detail::zero_key(w));
        }
        std::sort(image.begin(), image.end());
        if (image == base) continue;
        for (std::size_t i = 0; i < image.size(); ++i)
            if (i >= base.size() || image[i] != base[i])
                throw validation_error("Blaschke zero set is missing the partner " +
                                       format_double(image[i].first) + "+" +
                                       format_double(image[i].second) + "i under " + names[t]);
    }
}

/// Finite Blaschke product evaluated through the disk variable.
inline cd blaschke_eval(const BlaschkeSpec& spec, const cd& z) {
    validate_blaschke(spec);
    cd zeta = zeta_of_z(z);
    cd d(1.0, 0.0);
    for (int k = 0; k < spec.order; ++k) d *= zeta;
    for (const cd& zn : spec.zeros)
        d *= (std::abs(zn) / zn) * (zn - zeta) / (1.0 - std::conj(zn) * zeta);
    return d;
}

/// Odd rational function with real coefficients; coeff[k] multiplies z^k.
/// Oddness is structural: odd numerator over even denominator, or even
/// numerator over odd denominator.
struct OddRationalFn {
    std::vector<double> num;
    std::vector<double> den{1.0};

    static OddRationalFn zero() { return {{}, {1.0}}; }
};

inline void validate_odd_rational(const OddRationalFn& f) {
    auto pure = [](const std::vector<double>& c, std::size_t parity) {
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0.0 && k % 2 != parity) return false;
        return true;
    };
    auto nonzero = [](const std::vector<double>& c) {
        for (double x : c)
            if (x != 0.0) return true;
        return false;
    };
    if (!nonzero(f.den)) throw validation_error("odd rational function needs a denominator");
    bool odd_over_even = pure(f.num, 1) && pure(f.den, 0);
    bool even_over_odd = pure(f.num, 0) && pure(f.den, 1);
    if (!odd_over_even && !even_over_odd)
        throw validation_error("coefficients do not define an odd rational function");
}

inline cd eval_odd_rational(const OddRationalFn& f, const cd& z) {
    validate_odd_rational(f);
    auto horner = [&](const std::vector<double>& c) {
        cd acc(0.0, 0.0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    };
    cd de = horner(f.den);
    if (de == cd(0.0, 0.0)) throw pole_crossing_error("odd rational function pole", -1, 0);
    return horner(f.num) / de;
}

/// Sheet-index function n(z) = asin(z)/pi + i*sqrt(z^2 - 1)*beta(z), with the
/// branch fixed so i*sqrt(z^2 - 1) = -sqrt(1 - z^2).
inline cd n_of_z(const cd& z, const OddRationalFn& beta) {
    return w_of_z(z) - std::sqrt(1.0 - z * z) * eval_odd_rational(beta, z);
}

/// The two-row column at a given sheet coordinate W (unit Blaschke factor):
/// components W(W-2)/(W^2-1) and W(W+1)/(W^2-1).
inline std::pair<cd, cd> two_row_closed_form(const cd& w) {
    cd den = w * w - 1.0;
    if (std::abs(den) < 1e-12)
        throw pole_crossing_error("two-row column has poles at W = 1 and W = -1", -1, 0);
    return {w * (w - 2.0) / den, w * (w + 1.0) / den};
}

struct TwoRowEval {
    SheetColumn column;
    cd W{};
};

/// Physical-sheet two-row solution with sheet coordinate W = n(z) and
/// Blaschke factor D(z).
inline TwoRowEval s_two_row(const cd& z, const OddRationalFn& beta, const BlaschkeSpec& spec) {
    cd w = n_of_z(z, beta);
    auto [s1, s2] = two_row_closed_form(w);
    cd d = blaschke_eval(spec, z);
    TwoRowEval out;
    out.W = w;
    out.column.values = {s1 * d, s2 * d};
    out.column.sheet = 0;
    out.column.z = z;
    return out;
}

/// Rectangular z-plane grid that keeps a margin delta away from the cuts
/// (-inf, -1] and [1, inf).
struct GridSpec {
    double re_min = -2.0;
    double re_max = 2.0;
    double im_min = -2.0;
    double im_max = 2.0;
    int n_re = 40;
    int n_im = 40;
    double delta = 1e-3;
};

/// Distance from z to the union of the two cuts.
inline double cut_distance(const cd& z) {
    double right = std::hypot(std::max(1.0 - z.real(), 0.0), z.imag());
    double left = std::hypot(std::max(z.real() + 1.0, 0.0), z.imag());
    return std::min(left, right);
}

inline std::vector<cd> grid_points(const GridSpec& g) {
    if (g.n_re < 1 || g.n_im < 1) throw validation_error("grid needs at least one point per axis");
    if (g.delta <= 0.0) throw validation_error("grid margin must be positive");
    if (g.re_max < g.re_min || g.im_max < g.im_min)
        throw validation_error("grid rectangle is empty");
    std::vector<cd> pts;
    pts.reserve(static_cast<std::size_t>(g.n_re) * g.n_im);
    for (int i = 0; i < g.n_re; ++i) {
        double x = g.n_re == 1 ? g.re_min
                               : g.re_min + (g.re_max - g.re_min) * i / double(g.n_re - 1);
        for (int j = 0; j < g.n_im; ++j) {
            double y = g.n_im == 1 ? g.im_min
                                   : g.im_min + (g.im_max - g.im_min) * j / double(g.n_im - 1);
            cd z{x, y};
            if (cut_distance(z) >= g.delta) pts.push_back(z);
        }
    }
    return pts;
}

/// Maximum residual of one analyticity condition over a scan, with the
/// location of the maximum and the number of points skipped at poles.
struct ConditionResidual {
    std::string condition;
    double max_residual = 0.0;
    cd at_z{};
    long long samples = 0;
    long long skipped_near_poles = 0;
};

using ColumnEvaluator = std::function<std::vector<cd>(const cd&)>;

/// Scans reflection (1B), boundary unitarity (1C), and crossing (1D)
/// residuals of a column evaluator.  Boundary values S(omega + i0) use a
/// one-sided limit with a single Richardson step.  Points where the
/// evaluator reports a pole are skipped and counted.
inline std::vector<ConditionResidual> condition_residuals(const ColumnEvaluator& s,
                                                          const CrossingMatrix& a,
                                                          const GridSpec& grid) {
    std::vector<cd> pts = grid_points(grid);
    ConditionResidual rb{"1B"}, rc{"1C"}, rd{"1D"};

    auto record = [](ConditionResidual& r, double v, const cd& z) {
        ++r.samples;
        if (v > r.max_residual) {
            r.max_residual = v;
            r.at_z = z;
        }
    };

    for (const cd& z : pts) {
        try {
            std::vector<cd> sz = s(z);
            std::vector<cd> szc = s(std::conj(z));
            double v = 0.0;
            for (std::size_t i = 0; i < sz.size(); ++i)
                v = std::max(v, std::abs(std::conj(sz[i]) - szc[i]));
            record(rb, v, z);
        } catch (const pole_crossing_error&) {
            ++rb.skipped_near_poles;
        }
    }

    const double step = 1e-8;
    if (grid.re_max > 1.0 + grid.delta) {
        for (int j = 0; j < grid.n_re; ++j) {
            double omega = 1.0 + grid.delta +
                           (grid.re_max - 1.0 - grid.delta) * (j + 1) / double(grid.n_re);
            try {
                std::vector<cd> far = s(cd(omega, step));
                std::vector<cd> near = s(cd(omega, step / 2.0));
                double v = 0.0;
                for (std::size_t i = 0; i < far.size(); ++i) {
                    cd limit = 2.0 * near[i] - far[i];
                    v = std::max(v, std::abs(std::abs(limit) - 1.0));
                }
                record(rc, v, cd(omega, 0.0));
            } catch (const pole_crossing_error&) {
                ++rc.skipped_near_poles;
            }
        }
    }

    for (const cd& z : pts) {
        try {
            std::vector<cd> sz = s(z);
            std::vector<cd> smz = s(-z);
            if (static_cast<int>(sz.size()) != a.A.size())
                throw validation_error("column size does not match the crossing matrix");
            std::vector<cd> az = detail::apply_numeric(a.A, sz);
            double v = 0.0;
            for (std::size_t i = 0; i < sz.size(); ++i)
                v = std::max(v, std::abs(smz[i] - az[i]));
            record(rd, v, z);
        } catch (const pole_crossing_error&) {
            ++rd.skipped_near_poles;
        }
    }

    return {rb, rc, rd};
}

inline ColumnEvaluator two_row_evaluator(const OddRationalFn& beta, const BlaschkeSpec& spec) {
    return [beta, spec](const cd& z) { return s_two_row(z, beta, spec).column.values; };
}

/// The trivial solution: both channels equal to the same Blaschke function.
inline ColumnEvaluator trivial_blaschke_evaluator(const BlaschkeSpec& spec) {
    return [spec](const cd& z) {
        cd d = blaschke_eval(spec, z);
        return std::vector<cd>{d, d};
    };
}

/// Deliberately wrong column used as a negative control in residual scans.
inline ColumnEvaluator broken_evaluator() {
    return [](const cd& z) { return std::vector<cd>{z, cd(1.0, 0.0)}; };
}

}  // namespace sheetlab
