#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossing.hpp"
#include "hompoly.hpp"
#include "matrix.hpp"

namespace sheetlab {

/// Invertible linear change of projective coordinates.
struct Collineation {
    Mat<Rational> m;

    explicit Collineation(Mat<Rational> matrix) : m(std::move(matrix)) {
        if (m.det().is_zero()) throw degenerate_map_error("collineation is singular");
    }
    std::size_t size() const { return m.size(); }
    Collineation inverse() const { return Collineation(m.inverse()); }
};

/// x0 = s - 2a, x1 = s + a, x2 = c: substituting this matrix rewrites a
/// polynomial in the symmetric/antisymmetric coordinates (s, a, c).
inline Collineation sac_basis() {
    Mat<Rational> b(3);
    b(0, 0) = Rational(1);
    b(0, 1) = Rational(-2);
    b(1, 0) = Rational(1);
    b(1, 1) = Rational(1);
    b(2, 2) = Rational(1);
    return Collineation(b);
}

/// F composed with the linear action x_i -> sum_j L_ij x_j.
template <class C>
inline HomPoly<C> act_linear(const HomPoly<C>& f, const Collineation& l) {
    if (l.size() != f.nvars())
        throw unsupported_dimension_error("collineation size does not match variable count");
    std::vector<HomPoly<C>> rows;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        HomPoly<C> row(f.vars());
        for (std::size_t j = 0; j < f.nvars(); ++j) {
            std::vector<int> e(f.nvars(), 0);
            e[j] = 1;
            row.add_term(e, C(l.m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    HomPoly<C> out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        HomPoly<C> t = HomPoly<C>::constant(f.vars(), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * rows[i];
        out += t;
    }
    return out;
}

/// The monomial involution x_i -> prod_{j != i} x_j; on a degree-d term the
/// exponent vector maps to (d - e_0, ..., d - e_m).
template <class C>
inline HomPoly<C> act_inversion(const HomPoly<C>& f) {
    if (f.nvars() < 3)
        throw unsupported_dimension_error("monomial inversion needs at least three variables");
    HomPoly<C> out(f.vars());
    int d = f.degree();
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> g(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) g[i] = d - e[i];
        out.add_term(g, c);
    }
    return out;
}

template <class C>
struct InvarianceCertificate {
    bool invariant = false;
    HomPoly<C> cofactor;
    HomPoly<C> image;
};

/// Does F divide T(F) exactly?  The hypersurface F = 0 is fixed as a set by T
/// precisely when the image is F times a cofactor.
template <class C, class T>
inline InvarianceCertificate<C> is_invariant_hypersurface(const HomPoly<C>& f, T&& t) {
    HomPoly<C> image = t(f);
    auto q = divide_exact(image, f);
    if (q)
        return {true, *q, image};
    return {false, HomPoly<C>(f.vars()), image};
}

/// Even/odd split of F with respect to one variable's sign flip.
template <class C>
inline std::pair<HomPoly<C>, HomPoly<C>> parity_split(const HomPoly<C>& f, std::size_t v) {
    HomPoly<C> even(f.vars()), odd(f.vars());
    for (const auto& [e, c] : f.terms())
        (e[v] % 2 == 0 ? even : odd).add_term(e, c);
    return {even, odd};
}

/// One eigenvalue's worth of planes fixed (as sets) by a collineation.
struct PlaneFamily {
    Rational eigenvalue;
    std::vector<std::string> vars;
    std::vector<std::vector<Rational>> basis;  // coefficient vectors of planes

    HomPoly<Rational> member(const std::vector<Rational>& c) const {
        if (c.size() != basis.size()) throw validation_error("PlaneFamily: coefficient arity");
        HomPoly<Rational> p(vars);
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t i = 0; i < vars.size(); ++i) {
                std::vector<int> e(vars.size(), 0);
                e[i] = 1;
                p.add_term(e, c[k] * basis[k][i]);
            }
        return p;
    }
};

/// Families of invariant planes of a 4x4 block-extended catalog matrix,
/// grouped by the (rational) eigenvalue of the transpose action and sorted by
/// descending dimension.
inline std::vector<PlaneFamily> invariant_planes(const Collineation& a) {
    if (a.size() != 4) throw unsupported_dimension_error("invariant_planes expects a 4x4 action");
    for (std::size_t i = 0; i < 3; ++i)
        if (!a.m(i, 3).is_zero() || !a.m(3, i).is_zero())
            throw unsupported_dimension_error("invariant_planes expects a block extension");
    if (a.m(3, 3) != Rational(1))
        throw unsupported_dimension_error("invariant_planes expects a trivial last channel");

    Mat<Rational> inner(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) inner(i, j) = a.m(i, j);

    std::vector<Rational> values{Rational(1)};
    for (const EigenPair& p : eigen_exact(inner))
        if (p.value.is_rational() && std::find(values.begin(), values.end(), p.value.a()) ==
                                         values.end())
            values.push_back(p.value.a());

    std::vector<std::string> vars{"x0", "x1", "x2", "x3"};
    Mat<Rational> at = a.m.transpose();
    std::vector<PlaneFamily> out;
    for (const Rational& mu : values) {
        Mat<Rational> shifted = at;
        for (std::size_t i = 0; i < 4; ++i) shifted(i, i) -= mu;
        auto basis = shifted.kernel();
        if (basis.empty()) continue;
        out.push_back(PlaneFamily{mu, vars, std::move(basis)});
    }
    std::sort(out.begin(), out.end(), [](const PlaneFamily& x, const PlaneFamily& y) {
        if (x.basis.size() != y.basis.size()) return x.basis.size() > y.basis.size();
        return x.eigenvalue > y.eigenvalue;
    });
    return out;
}

/// Imposes incidence with the rest point (1,1,1,1) on a three-dimensional
/// family and returns the two-parameter plane c0*w0 + c1*w1 whose x0 and x1
/// coefficients are exactly c0 and c1.
inline HomPoly<ParamPoly> restrict_to_rest_point(const PlaneFamily& fam) {
    if (fam.basis.size() != 3)
        throw validation_error("rest-point restriction expects a three-dimensional family");
    std::size_t n = fam.vars.size();
    auto solve_member = [&](const Rational& want0, const Rational& want1) {
        Mat<Rational> m(3);
        for (std::size_t k = 0; k < 3; ++k) {
            Rational sum(0);
            for (std::size_t i = 0; i < n; ++i) sum += fam.basis[k][i];
            m(0, k) = sum;
            m(1, k) = fam.basis[k][0];
            m(2, k) = fam.basis[k][1];
        }
        std::vector<Rational> rhs{Rational(0), want0, want1};
        std::vector<Rational> u;
        try {
            u = m.inverse().apply(rhs);
        } catch (const degenerate_map_error&) {
            throw validation_error("family does not restrict to a two-parameter form");
        }
        std::vector<Rational> w(n, Rational(0));
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t i = 0; i < n; ++i) w[i] += u[k] * fam.basis[k][i];
        return w;
    };
    std::vector<Rational> w0 = solve_member(Rational(1), Rational(0));
    std::vector<Rational> w1 = solve_member(Rational(0), Rational(1));

    HomPoly<ParamPoly> plane(fam.vars);
    for (std::size_t i = 0; i < n; ++i) {
        ParamPoly coeff = ParamPoly::c0() * ParamPoly(w0[i]) + ParamPoly::c1() * ParamPoly(w1[i]);
        std::vector<int> e(n, 0);
        e[i] = 1;
        plane.add_term(e, coeff);
    }
    return plane;
}

/// Substitutes the solved variable of a degree-1 plane into a surface,
/// clears the denominator and returns the primitive result without that
/// variable.
template <class C>
inline HomPoly<C> eliminate_linear(const HomPoly<C>& plane, const HomPoly<C>& surface,
                                   const std::string& var) {
    if (plane.degree() != 1) throw validation_error("eliminate_linear expects a degree-1 plane");
    std::size_t v = plane.index(var);
    HomPoly<C> acoef = plane.coeff_in(v, 1);
    if (acoef.is_zero())
        throw cannot_eliminate_error("plane has zero coefficient of " + var);
    C a = acoef.terms().begin()->second;
    HomPoly<C> rest = plane.coeff_in(v, 0);
    int e = surface.degree_in(v);
    HomPoly<C> out(plane.vars());
    HomPoly<C> neg_rest_pow = HomPoly<C>::constant(plane.vars(), C(1));
    for (int i = 0; i <= e; ++i) {
        HomPoly<C> si = surface.coeff_in(v, i);
        out += (si * neg_rest_pow).scaled(detail::coeff_pow(a, e - i));
        neg_rest_pow = neg_rest_pow * (-rest);
    }
    return out.primitive().drop_variable(v);
}

namespace detail {

template <class C>
inline HomPoly<C> hom_det(const std::vector<std::vector<HomPoly<C>>>& m,
                          std::vector<std::size_t> cols, std::size_t row,
                          const std::vector<std::string>& vars) {
    if (cols.empty()) return HomPoly<C>::constant(vars, C(1));
    HomPoly<C> acc(vars);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const HomPoly<C>& entry = m[row][cols[k]];
        if (!entry.is_zero()) {
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) rest.push_back(cols[j]);
            HomPoly<C> minor = hom_det(m, rest, row + 1, vars);
            HomPoly<C> term = entry * minor;
            acc += (sign > 0) ? term : -term;
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace detail

/// Sylvester resultant of F and G with respect to one variable; the result
/// does not involve that variable.
template <class C>
inline HomPoly<C> hom_resultant(const HomPoly<C>& f, const HomPoly<C>& g,
                                const std::string& var) {
    std::size_t v = f.index(var);
    int p = f.degree_in(v), q = g.degree_in(v);
    if (p < 1 || q < 1)
        throw validation_error("resultant needs positive degree in " + var);
    std::size_t n = static_cast<std::size_t>(p + q);
    std::vector<std::vector<HomPoly<C>>> m(n, std::vector<HomPoly<C>>(n, HomPoly<C>(f.vars())));
    for (int r = 0; r < q; ++r)
        for (int k = 0; k <= p; ++k) m[r][r + k] = f.coeff_in(v, p - k);
    for (int r = 0; r < p; ++r)
        for (int k = 0; k <= q; ++k) m[q + r][r + k] = g.coeff_in(v, q - k);
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return detail::hom_det(m, cols, 0, f.vars());
}

/// Candidate (c0, c1) ratios, coprime integers, sign fixed by c1 > 0 when
/// c1 != 0 and by c0 > 0 otherwise.
inline std::pair<Rational, Rational> canonical_ratio(const Rational& c0, const Rational& c1) {
    if (c0.is_zero() && c1.is_zero()) throw validation_error("zero ratio");
    using boost::multiprecision::cpp_int;
    cpp_int l = boost::multiprecision::lcm(c0.den(), c1.den());
    cpp_int n0 = c0.num() * (l / c0.den()), n1 = c1.num() * (l / c1.den());
    cpp_int g = boost::multiprecision::gcd(n0 < 0 ? cpp_int(-n0) : n0,
                                           n1 < 0 ? cpp_int(-n1) : n1);
    n0 /= g;
    n1 /= g;
    bool flip = n1 != 0 ? n1 < 0 : n0 < 0;
    if (flip) {
        n0 = -n0;
        n1 = -n1;
    }
    return {Rational(n0), Rational(n1)};
}

namespace detail {

/// Rational roots t of f at (x_va, x_vb, x_vz) = (t, 1, 0): each corresponds
/// to the linear factor x_va - t * x_vb of the restricted binary form.
inline std::vector<Rational> binary_restriction_roots(const HomPoly<Rational>& f, std::size_t va,
                                                      std::size_t vb, std::size_t vzero) {
    int d = f.degree();
    std::vector<Rational> coeffs(d + 1, Rational(0));
    bool nonzero = false;
    for (const auto& [e, c] : f.terms()) {
        if (e[vzero] != 0) continue;
        coeffs[e[va]] = c;
        nonzero = true;
    }
    if (!nonzero) return {};
    return rational_roots(Poly<Rational>(coeffs));
}

}  // namespace detail

/// Splits a trivariate form of degree <= 3 into rational linear factors and
/// an irreducible-over-the-rationals cofactor; the product of the returned
/// list equals the input exactly.
inline std::vector<HomPoly<Rational>> factor_low_degree(const HomPoly<Rational>& f) {
    if (f.nvars() != 3) throw unsupported_dimension_error("factoring expects three variables");
    if (f.degree() > 3) throw validation_error("factoring expects total degree at most 3");
    if (f.is_zero() || f.degree() == 0) return {f};

    std::vector<HomPoly<Rational>> factors;
    HomPoly<Rational> rest = f;

    // Monomial variable factors first.
    for (std::size_t v = 0; v < 3; ++v) {
        int low = rest.degree();
        for (const auto& [e, c] : rest.terms()) low = std::min(low, e[v]);
        for (int k = 0; k < low; ++k) {
            HomPoly<Rational> x = HomPoly<Rational>::variable(rest.vars(), v);
            factors.push_back(x);
            rest = *divide_exact(rest, x);
        }
    }

    bool progress = true;
    while (rest.degree() >= 1 && progress) {
        progress = false;
        std::vector<HomPoly<Rational>> candidates;
        auto add_candidate = [&](const Rational& a, const Rational& b, const Rational& c) {
            HomPoly<Rational> l(rest.vars());
            l.add_term({1, 0, 0}, a);
            l.add_term({0, 1, 0}, b);
            l.add_term({0, 0, 1}, c);
            candidates.push_back(l.primitive());
        };
        // x0 + b*x1 + c*x2: the restrictions x2 = 0 and x1 = 0 pin b and c.
        auto betas = detail::binary_restriction_roots(rest, 0, 1, 2);
        auto gammas = detail::binary_restriction_roots(rest, 0, 2, 1);
        for (const Rational& rb : betas)
            for (const Rational& rg : gammas) add_candidate(Rational(1), -rb, -rg);
        // x1 + c*x2: c from the x0 = 0 restriction.
        for (const Rational& rg : detail::binary_restriction_roots(rest, 1, 2, 0))
            add_candidate(Rational(0), Rational(1), -rg);

        for (const auto& cand : candidates) {
            auto q = divide_exact(rest, cand);
            if (q) {
                factors.push_back(cand);
                rest = *q;
                progress = true;
                break;
            }
        }
    }
    if (!factors.empty() && rest.degree() == 0)
        factors.back() = factors.back().scaled(rest.terms().begin()->second);
    else
        factors.push_back(rest);
    return factors;
}

/// Runs the full invariant-curve pipeline for the three-row system: the
/// rest-point plane family, its monomial-involution image, elimination of x3,
/// and the resultant criterion solved by exact common roots in (c0 : c1).
/// The resultant also vanishes at parameter directions where the plane
/// section collapses onto repeated or fully split lines; only the directions
/// whose section carries an irreducible conic component survive, since that
/// conic is what the reduced dynamics lives on.  Directions that zero the
/// eliminated coefficient are invalid substitutions and are excluded first.
inline std::vector<std::pair<Rational, Rational>> solve_invariance_params() {
    CrossingMatrix big = extend_block(three_row_p33());
    Collineation action(big.A);
    auto families = invariant_planes(action);
    const PlaneFamily* fam = nullptr;
    for (const auto& f : families)
        if (f.eigenvalue == Rational(1) && f.basis.size() == 3) fam = &f;
    if (!fam) throw validation_error("no three-dimensional invariant plane family found");

    HomPoly<ParamPoly> plane = restrict_to_rest_point(*fam);
    HomPoly<ParamPoly> surface = act_inversion(plane);
    HomPoly<ParamPoly> g3 = eliminate_linear(plane, surface, "x3");
    HomPoly<ParamPoly> gp = g3.derivative(g3.index("x1"));
    HomPoly<ParamPoly> res = hom_resultant(g3, gp, "x0");
    if (res.is_zero()) throw validation_error("resultant vanished identically");

    Poly<Rational> common;
    bool first = true;
    bool infinite_direction = true;
    for (const auto& [e, c] : res.terms()) {
        if (!c.is_homogeneous())
            throw validation_error("resultant coefficient lost parameter homogeneity");
        if (!c.coeff(0, c.total_degree()).is_zero()) infinite_direction = false;
        Poly<Rational> p = c.dehomogenized();
        common = first ? p : gcd(common, p);
        first = false;
    }

    ParamPoly pivot(0);
    std::size_t x3 = plane.index("x3");
    std::vector<int> e3(plane.nvars(), 0);
    e3[x3] = 1;
    pivot = plane.coeff(e3);

    std::vector<std::pair<Rational, Rational>> candidates;
    if (infinite_direction && !pivot.eval(Rational(0), Rational(1)).is_zero())
        candidates.emplace_back(Rational(0), Rational(1));
    if (common.degree() >= 1)
        for (const Rational& t : rational_roots(common)) {
            if (pivot.eval(Rational(1), t).is_zero()) continue;
            candidates.emplace_back(Rational(1), t);
        }

    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& [a, b] : candidates) {
        HomPoly<Rational> section = eval_params(g3, a, b);
        if (section.is_zero()) continue;
        bool conic = false;
        for (const auto& f : factor_low_degree(section)) conic = conic || f.degree() == 2;
        if (conic) out.push_back(canonical_ratio(a, b));
    }
    return out;
}

/// Solves a conic that is linear in its third variable for x1/x2, given the
/// ratio X = x0/x1, over any exact scalar field K.
template <class K>
inline K ratio_from_conic(const HomPoly<Rational>& f, const K& x) {
    if (f.nvars() != 3) throw unsupported_dimension_error("conic ratio expects three variables");
    if (f.degree() != 2) throw validation_error("conic ratio expects a degree-2 form");
    std::size_t v = 2;
    int d = f.degree_in(v);
    if (d >= 2)
        throw ambiguous_branch_error("conic is quadratic in x2: branch choice is ambiguous");
    if (d == 0) throw cannot_eliminate_error("conic does not involve x2");
    HomPoly<Rational> a = f.coeff_in(v, 0);
    HomPoly<Rational> b = f.coeff_in(v, 1);
    std::vector<K> pt{x, K(1), K(0)};
    K av = a.eval(pt), bv = b.eval(pt);
    return (-bv) * av.inverse();
}

template <class K>
struct AffinePoint {
    K x, y;
};

/// Second intersection of the conic with the line of slope k through a base
/// point lying on the conic; affine chart x = x0/x2, y = x1/x2.
template <class K>
inline AffinePoint<K> bundle_second_intersection(const HomPoly<Rational>& f,
                                                 const AffinePoint<K>& base, const K& k) {
    if (f.nvars() != 3 || f.degree() != 2)
        throw validation_error("bundle construction expects a trivariate conic");
    // Affine coefficients c_ij of x^i y^j with i + j <= 2.
    auto c = [&](int i, int j) {
        std::vector<int> e{i, j, 2 - i - j};
        return f.coeff(e);
    };
    K q0 = K(0), dx = K(0), dy = K(0), q2 = K(0);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j) {
            Rational cij = c(i, j);
            if (cij.is_zero()) continue;
            K xi = K(1), yj = K(1);
            for (int t = 0; t < i; ++t) xi = xi * base.x;
            for (int t = 0; t < j; ++t) yj = yj * base.y;
            q0 = q0 + K(cij) * xi * yj;
            if (i > 0) {
                K xim = K(1);
                for (int t = 0; t < i - 1; ++t) xim = xim * base.x;
                dx = dx + K(cij * Rational(i)) * xim * yj;
            }
            if (j > 0) {
                K yjm = K(1);
                for (int t = 0; t < j - 1; ++t) yjm = yjm * base.y;
                dy = dy + K(cij * Rational(j)) * xi * yjm;
            }
            if (i + j == 2) {
                K kj = K(1);
                for (int t = 0; t < j; ++t) kj = kj * k;
                q2 = q2 + K(cij) * kj;
            }
        }
    if (!q0.is_zero()) throw validation_error("base point does not lie on the conic");
    if (q2.is_zero())
        throw degenerate_map_error("line meets the conic only once (tangent or at infinity)");
    K q1 = dx + k * dy;
    K step = -(q1 * q2.inverse());
    K x2 = base.x + step;
    K y2 = base.y + k * step;
    return {x2, y2};
}

/// The invariant conic of the two-row system: x1^2 + 2 x0 x1 - 2 x1 x2 - x0 x2.
inline HomPoly<Rational> two_row_invariant_conic() {
    return parse_hompoly("x1^2 + 2*x0*x1 - 2*x1*x2 - x0*x2", {"x0", "x1", "x2"});
}

/// The same conic written for the affine bundle chart x = x0/x2, y = x1/x2,
/// where it reads x^2 + 2xy - 2x - y = 0 (the first two coordinates swap
/// roles relative to two_row_invariant_conic).
inline HomPoly<Rational> bundle_chart_conic() {
    return parse_hompoly("x0^2 + 2*x0*x1 - 2*x0*x2 - x1*x2", {"x0", "x1", "x2"});
}

}  // namespace sheetlab
