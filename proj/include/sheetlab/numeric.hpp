#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

namespace sheetlab {

using cd = std::complex<double>;

/// Global comparison tolerance, set once at startup (CLI flag --tolerance).
inline double& tolerance() {
    static double tol = 1e-10;
    return tol;
}

inline bool approx_equal(double x, double y, double tol) { return std::abs(x - y) <= tol; }
inline bool approx_equal(double x, double y) { return approx_equal(x, y, tolerance()); }
inline bool approx_equal(const cd& x, const cd& y, double tol) { return std::abs(x - y) <= tol; }
inline bool approx_equal(const cd& x, const cd& y) { return approx_equal(x, y, tolerance()); }

inline bool is_finite(const cd& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Shortest round-trip decimal form (17 significant digits).
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace sheetlab
