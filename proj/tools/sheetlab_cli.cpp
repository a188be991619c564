#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "sheetlab/analytic.hpp"
#include "sheetlab/funcsolve.hpp"

using nlohmann::ordered_json;
using namespace sheetlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    double tol = 1e-9;
    std::string output;
    std::string format = "json";
    bool no_header = false;

    std::string matrix = "su2:l=1";
    std::string n_range = "0..10";
    std::string branch = "cosh";
    std::string what;
    long long l = 1;
    std::string beta = "0";
    std::string blaschke = "none";
    std::string omega = "1.01..3";
    double step = 0.01;
    int grid_n = 40;
    double delta = 1e-3;
    unsigned seed = 20260814;
    int points = 20;
    std::string solution;
    std::string catalog_label;
};

std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::pair<long long, long long> parse_int_range(const std::string& s) {
    std::size_t dots = s.find("..", 1);
    if (dots == std::string::npos) throw parse_error("range must look like lo..hi: " + s);
    std::size_t pos = 0;
    long long lo = std::stoll(s.substr(0, dots), &pos);
    if (pos != dots) throw parse_error("bad range bound in " + s);
    long long hi = std::stoll(s.substr(dots + 2), &pos);
    if (pos != s.size() - dots - 2) throw parse_error("bad range bound in " + s);
    if (lo > hi) throw validation_error("empty range " + s);
    return {lo, hi};
}

std::pair<double, double> parse_double_range(const std::string& s) {
    std::size_t dots = s.find("..", 1);
    if (dots == std::string::npos) throw parse_error("range must look like lo..hi: " + s);
    std::size_t pos = 0;
    double lo = std::stod(s.substr(0, dots), &pos);
    if (pos != dots) throw parse_error("bad range bound in " + s);
    double hi = std::stod(s.substr(dots + 2), &pos);
    if (pos != s.size() - dots - 2) throw parse_error("bad range bound in " + s);
    if (lo > hi) throw validation_error("empty range " + s);
    return {lo, hi};
}

HyperBranch parse_branch(const std::string& s) {
    if (s == "cosh" || s == "x0=2") return HyperBranch::cosh_branch;
    if (s == "sinh" || s == "x0=-4") return HyperBranch::sinh_branch;
    throw parse_error("branch must be cosh|sinh|x0=2|x0=-4, got " + s);
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
        if (item.empty()) throw parse_error("empty entry in list: " + s);
        std::size_t pos = 0;
        out.push_back(std::stod(item, &pos));
        if (pos != item.size()) throw parse_error("bad number in list: " + item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

/// "0" or "n0,n1,...:d0,d1,..." (denominator defaults to 1).
OddRationalFn parse_beta(const std::string& s) {
    if (s == "0" || s == "none") return OddRationalFn::zero();
    OddRationalFn fn;
    std::size_t colon = s.find(':');
    fn.num = parse_double_list(s.substr(0, colon));
    fn.den = colon == std::string::npos ? std::vector<double>{1.0}
                                        : parse_double_list(s.substr(colon + 1));
    validate_odd_rational(fn);
    return fn;
}

cd parse_complex(const std::string& s) {
    if (s.empty()) throw parse_error("empty complex number");
    if (s.back() != 'i') {
        std::size_t pos = 0;
        double re = std::stod(s, &pos);
        if (pos != s.size()) throw parse_error("bad complex number: " + s);
        return {re, 0.0};
    }
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = body.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
        if (body.empty() || body == "+" || body == "-") body += "1";
        return {0.0, std::stod(body)};
    }
    std::string im = body.substr(split);
    if (im == "+" || im == "-") im += "1";
    return {std::stod(body.substr(0, split)), std::stod(im)};
}

/// "none" or ";"-separated "order=k" / "zeros=z1,z2,..." fields.
BlaschkeSpec parse_blaschke(const std::string& s) {
    BlaschkeSpec spec;
    if (s == "none" || s.empty()) return spec;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t semi = s.find(';', start);
        std::string field = s.substr(start, semi == std::string::npos ? semi : semi - start);
        std::size_t eq = field.find('=');
        if (eq == std::string::npos) throw parse_error("blaschke field needs key=value: " + field);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "order") {
            spec.order = std::stoi(value);
        } else if (key == "zeros") {
            std::size_t zs = 0;
            while (zs <= value.size()) {
                std::size_t comma = value.find(',', zs);
                spec.zeros.push_back(parse_complex(
                    value.substr(zs, comma == std::string::npos ? comma : comma - zs)));
                if (comma == std::string::npos) break;
                zs = comma + 1;
            }
        } else {
            throw parse_error("unknown blaschke key: " + key);
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    validate_blaschke(spec);
    return spec;
}

long long su2_l_from_label(const std::string& label) {
    const std::string prefix = "su2:l=";
    if (label.rfind(prefix, 0) != 0)
        throw unsupported_dimension_error("this command needs an su2:l=<k> matrix");
    return std::stoll(label.substr(prefix.size()));
}

int write_output(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output path: " << o.output << "\n";
        return kExitIo;
    }
    f << text;
    f.flush();
    if (!f) {
        std::cerr << "write failed: " << o.output << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int emit_json(const Options& o, ordered_json j) {
    if (!o.no_header) j["generated_at"] = timestamp_utc();
    return write_output(o, j.dump(2) + "\n");
}

int emit_csv(const Options& o, const std::string& command, const std::string& columns,
             const std::vector<std::string>& rows) {
    std::string text;
    if (!o.no_header) text += "# sheetlab " + command + " " + timestamp_utc() + "\n";
    text += columns + "\n";
    for (const std::string& r : rows) text += r + "\n";
    return write_output(o, text);
}

ordered_json matrix_json(const Mat<Rational>& a) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < a.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < a.size(); ++j) row.push_back(a(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_catalog(const Options& o) {
    CrossingMatrix m = crossing_from_label(o.catalog_label.empty() ? o.matrix : o.catalog_label);
    CrossingReport rep = validate(m);
    auto eigen = eigen_exact(m.A);

    if (o.format == "csv") {
        std::vector<std::string> rows;
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j)
                rows.push_back(std::to_string(i) + "," + std::to_string(j) + "," +
                               format_double(m.A(i, j).to_double()));
        return emit_csv(o, "catalog", "i,j,value", rows);
    }

    ordered_json j;
    j["command"] = "catalog";
    j["label"] = m.label;
    j["size"] = m.size();
    j["matrix"] = matrix_json(m.A);
    j["involution"] = rep.involution;
    j["unit_row_sums"] = rep.unit_row_sums;
    ordered_json sums = ordered_json::array();
    for (const Rational& s : rep.row_sums) sums.push_back(s.to_string());
    j["row_sums"] = std::move(sums);
    if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
    ordered_json evs = ordered_json::array();
    for (const EigenPair& p : eigen) {
        ordered_json e;
        e["value"] = p.value.to_string();
        ordered_json vecs = ordered_json::array();
        for (const auto& v : p.vectors) {
            ordered_json vec = ordered_json::array();
            for (const QuadNum& q : v) vec.push_back(q.to_string());
            vecs.push_back(std::move(vec));
        }
        e["vectors"] = std::move(vecs);
        evs.push_back(std::move(e));
    }
    j["eigenvalues"] = std::move(evs);
    if (m.size() == 2) j["mobius_class"] = to_string(mobius_classify(induced_mobius(m)));
    return emit_json(o, std::move(j));
}

int cmd_sheets(const Options& o) {
    auto [lo, hi] = parse_int_range(o.n_range);
    CrossingMatrix m = crossing_from_label(o.matrix);
    if (m.label == "p33-reduced") {
        HyperbolicSeriesSpec spec;
        spec.branch = parse_branch(o.branch);
        auto rows = assemble_sheet_values(lo, hi, spec);
        if (o.format == "csv") {
            std::vector<std::string> lines;
            for (const auto& r : rows) {
                double x = r.X.is_infinite() ? std::numeric_limits<double>::infinity()
                                             : r.X.value().to_double();
                lines.push_back(std::to_string(r.n) + "," + to_string(spec.branch) + "," +
                                format_double(x) + "," + format_double(r.s1) + "," +
                                format_double(r.s2) + "," + format_double(r.unitarity_residual) +
                                "," + format_double(r.crossing_residual));
            }
            return emit_csv(o, "sheets",
                            "n,branch,X,s1,s2,unitarity_residual,crossing_residual", lines);
        }
        ordered_json j;
        j["command"] = "sheets";
        j["matrix"] = m.label;
        j["branch"] = to_string(spec.branch);
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["n"] = r.n;
            row["X"] = r.X.to_string();
            row["s1"] = format_double(r.s1);
            row["s2"] = format_double(r.s2);
            row["unitarity_residual"] = format_double(r.unitarity_residual);
            row["crossing_residual"] = format_double(r.crossing_residual);
            out.push_back(std::move(row));
        }
        j["rows"] = std::move(out);
        return emit_json(o, std::move(j));
    }
    if (m.size() != 2) throw unsupported_dimension_error("sheets needs a two-channel matrix");

    long long l = su2_l_from_label(m.label);
    ProjValue x0{QuadNum(Rational(-(l + 1), l))};
    RationalFunction phi = solve_parabolic_family(l);
    auto ratio_str = [&](long long n) -> std::string {
        Rational dv = phi.den().eval(Rational(n));
        if (dv.is_zero()) return "inf";
        return (phi.num().eval(Rational(n)) / dv).to_string();
    };
    if (o.format == "csv") {
        std::vector<std::string> lines;
        for (long long n = lo; n <= hi; ++n) {
            ProjValue x = sheet_coordinate(m, x0, n);
            double xv = x.is_infinite() ? std::numeric_limits<double>::infinity()
                                        : x.value().to_double();
            Rational dv = phi.den().eval(Rational(n));
            std::string rv = dv.is_zero()
                                 ? "inf"
                                 : format_double((phi.num().eval(Rational(n)) / dv).to_double());
            lines.push_back(std::to_string(n) + "," + format_double(xv) + "," + rv);
        }
        return emit_csv(o, "sheets", "n,X,x1_over_x2", lines);
    }
    ordered_json j;
    j["command"] = "sheets";
    j["matrix"] = m.label;
    ordered_json out = ordered_json::array();
    for (long long n = lo; n <= hi; ++n) {
        ordered_json row;
        row["n"] = n;
        row["X"] = sheet_coordinate(m, x0, n).to_string();
        row["x1_over_x2"] = ratio_str(n);
        out.push_back(std::move(row));
    }
    j["rows"] = std::move(out);
    return emit_json(o, std::move(j));
}

ordered_json certificate_json(const HomPoly<Rational>& f) {
    ordered_json c;
    c["poly"] = f.to_string();
    c["degree"] = f.degree();
    auto inv = is_invariant_hypersurface(
        f, [](const HomPoly<Rational>& g) { return act_inversion(g); });
    c["inversion_invariant"] = inv.invariant;
    if (inv.invariant) c["inversion_cofactor"] = inv.cofactor.to_string();
    return c;
}

int cmd_invariants(const Options& o) {
    CrossingMatrix m = crossing_from_label(o.matrix);
    ordered_json j;
    j["command"] = "invariants";
    j["matrix"] = m.label;

    if (m.label == "p33") {
        Collineation ext{extend_block(m).A};
        auto families = invariant_planes(ext);
        ordered_json fams = ordered_json::array();
        const PlaneFamily* plus = nullptr;
        for (const auto& fam : families) {
            ordered_json f;
            f["eigenvalue"] = fam.eigenvalue.to_string();
            f["dimension"] = fam.basis.size();
            fams.push_back(std::move(f));
            if (fam.eigenvalue == Rational(1)) plus = &fam;
        }
        j["plane_families"] = std::move(fams);
        if (plus == nullptr) throw error("missing eigenvalue-1 plane family");
        HomPoly<ParamPoly> pencil = restrict_to_rest_point(*plus);
        j["pencil"] = pencil.to_string();
        auto sols = solve_invariance_params();
        ordered_json sol_list = ordered_json::array();
        for (const auto& [c0, c1] : sols) {
            ordered_json s;
            s["c0"] = c0.to_string();
            s["c1"] = c1.to_string();
            sol_list.push_back(std::move(s));
        }
        j["solutions"] = std::move(sol_list);
        if (sols.empty()) throw error("invariance parameters not found");
        HomPoly<Rational> plane = eval_params(pencil, sols[0].first, sols[0].second);
        j["plane"] = plane.to_string();
        HomPoly<Rational> image = act_inversion(plane);
        HomPoly<Rational> g = eliminate_linear(plane, image, "x3");
        j["surface"] = g.to_string();
        ordered_json facs = ordered_json::array();
        for (const auto& f : factor_low_degree(g)) facs.push_back(certificate_json(f));
        j["factors"] = std::move(facs);
    } else if (m.label.rfind("su2:l=", 0) == 0) {
        long long l = su2_l_from_label(m.label);
        HomPoly<Rational> curve = two_row_invariant_curve(l);
        j["curve"] = curve.to_string();
        j["degree"] = curve.degree();
        Collineation ext{extend_block(m).A};
        auto lin = is_invariant_hypersurface(
            curve, [&](const HomPoly<Rational>& f) { return act_linear(f, ext); });
        j["linear_invariant"] = lin.invariant;
        if (lin.invariant) j["linear_cofactor"] = lin.cofactor.to_string();
        j["certificate"] = certificate_json(curve);
    } else {
        throw unsupported_dimension_error("invariants supports p33 and su2:l=<k> matrices");
    }

    if (o.format == "csv") {
        std::vector<std::string> rows;
        for (const auto& [key, value] : j.items()) {
            if (value.is_string())
                rows.push_back(key + "," + value.get<std::string>());
            else if (value.is_primitive())
                rows.push_back(key + "," + value.dump());
        }
        return emit_csv(o, "invariants", "key,value", rows);
    }
    return emit_json(o, std::move(j));
}

int cmd_fixed_points(const Options& o) {
    CrossingMatrix m = crossing_from_label(o.matrix);
    auto points = rest_points(m);
    ordered_json j;
    j["command"] = "fixed-points";
    j["matrix"] = m.label;
    ordered_json out = ordered_json::array();
    std::vector<std::string> csv_rows;
    for (const RestPoint& rp : points) {
        ordered_json p;
        ordered_json col = ordered_json::array();
        bool constant = true;
        for (const QuadComplex& q : rp.column) {
            col.push_back(q.to_string());
            if (!(q == rp.column[0])) constant = false;
        }
        p["column"] = std::move(col);
        p["verified"] = verify_rest_point(m.A, rp.column);
        p["no_interaction"] = constant;
        const QuadComplex& s1 = rp.column[0];
        const QuadComplex& s2 = rp.column[1];
        if (s1.im.is_zero() && s2.im.is_zero() && !s2.re.is_zero())
            p["x_ratio"] = (s1.re / s2.re).to_string();
        else if (s1.re.is_zero() && s2.re.is_zero() && !s2.im.is_zero())
            p["x_ratio"] = (s1.im / s2.im).to_string();
        if (rp.column.size() == 3)
            p["in_plane_s2_plus_s3"] = (rp.column[1] + rp.column[2] == QuadComplex());
        out.push_back(std::move(p));

        std::string row;
        for (const QuadComplex& q : rp.column) row += (row.empty() ? "" : ";") + q.to_string();
        csv_rows.push_back("\"" + row + "\"," + (constant ? "1" : "0"));
    }
    j["count"] = points.size();
    j["points"] = std::move(out);
    if (o.format == "csv") return emit_csv(o, "fixed-points", "column,no_interaction", csv_rows);
    return emit_json(o, std::move(j));
}

ordered_json residual_json(const ConditionResidual& r) {
    ordered_json c;
    c["condition"] = r.condition;
    c["max_residual"] = format_double(r.max_residual);
    c["at_z"] = ordered_json::array({format_double(r.at_z.real()), format_double(r.at_z.imag())});
    c["samples"] = r.samples;
    c["skipped_near_poles"] = r.skipped_near_poles;
    return c;
}

int cmd_verify(const Options& o) {
    CrossingMatrix a = su2_two_row(1);
    GridSpec g;
    g.n_re = g.n_im = o.grid_n;
    g.delta = o.delta;

    OddRationalFn beta = parse_beta(o.beta);
    BlaschkeSpec spec = parse_blaschke(o.blaschke);

    ColumnEvaluator ev;
    std::vector<ConditionResidual> conditions;
    if (o.solution == "two-row") {
        if (o.l != 1)
            throw validation_error("the closed two-row column is implemented for l = 1");
        ev = two_row_evaluator(beta, spec);
    } else if (o.solution == "trivial") {
        ev = trivial_blaschke_evaluator(spec);
    } else if (o.solution == "broken-demo") {
        ev = broken_evaluator();
    } else {
        throw parse_error("solution must be two-row|trivial|broken-demo, got " + o.solution);
    }
    conditions = condition_residuals(ev, a, g);

    if (o.solution == "two-row") {
        ConditionResidual shift;
        shift.condition = "shift";
        std::mt19937 rng(o.seed);
        std::uniform_real_distribution<double> u(0.1, 0.7);
        for (int i = 0; i < o.points; ++i) {
            cd z(u(rng), u(rng));
            try {
                TwoRowEval at = s_two_row(z, beta, spec);
                std::vector<cd> as = detail::apply_numeric(a.A, at.column.values);
                cd d = blaschke_eval(spec, z);
                auto [t1, t2] = two_row_closed_form(at.W + 1.0);
                double r = std::max(std::abs(1.0 / as[0] - t1 / d),
                                    std::abs(1.0 / as[1] - t2 / d));
                ++shift.samples;
                if (r > shift.max_residual) {
                    shift.max_residual = r;
                    shift.at_z = z;
                }
            } catch (const pole_crossing_error&) {
                ++shift.skipped_near_poles;
            }
        }
        conditions.push_back(std::move(shift));
    }

    bool pass = true;
    const ConditionResidual* worst = nullptr;
    for (const ConditionResidual& r : conditions) {
        if (r.max_residual >= o.tol) pass = false;
        if (worst == nullptr || r.max_residual > worst->max_residual) worst = &r;
    }

    int code = pass ? kExitOk : kExitVerifyFail;
    if (!pass && worst != nullptr)
        std::cerr << "FAIL: condition " << worst->condition << " max residual "
                  << format_double(worst->max_residual) << " at z = ("
                  << format_double(worst->at_z.real()) << ", "
                  << format_double(worst->at_z.imag()) << ")\n";

    if (o.format == "csv") {
        std::vector<std::string> rows;
        for (const ConditionResidual& r : conditions)
            rows.push_back(r.condition + "," + format_double(r.max_residual) + "," +
                           format_double(r.at_z.real()) + "," + format_double(r.at_z.imag()) +
                           "," + std::to_string(r.samples) + "," +
                           std::to_string(r.skipped_near_poles));
        int io = emit_csv(o, "verify",
                          "condition,max_residual,at_re,at_im,samples,skipped_near_poles", rows);
        return io != kExitOk ? io : code;
    }
    ordered_json j;
    j["command"] = "verify";
    j["solution"] = o.solution;
    j["matrix"] = a.label;
    j["tolerance"] = format_double(o.tol);
    j["pass"] = pass;
    ordered_json list = ordered_json::array();
    for (const ConditionResidual& r : conditions) list.push_back(residual_json(r));
    j["conditions"] = std::move(list);
    int io = emit_json(o, std::move(j));
    return io != kExitOk ? io : code;
}

int cmd_plot_data(const Options& o) {
    if (o.what == "xn") {
        auto [lo, hi] = parse_int_range(o.n_range);
        CrossingMatrix m = crossing_from_label(o.matrix);
        ProjValue x0{QuadNum(0)};
        if (m.label == "p33-reduced")
            x0 = ProjValue(QuadNum(branch_x0(parse_branch(o.branch))));
        else
            x0 = ProjValue(QuadNum(Rational(-(su2_l_from_label(m.label) + 1),
                                            su2_l_from_label(m.label))));
        std::vector<std::string> rows;
        for (long long n = lo; n <= hi; ++n) {
            ProjValue x = sheet_coordinate(m, x0, n);
            double xv = x.is_infinite() ? std::numeric_limits<double>::infinity()
                                        : x.value().to_double();
            rows.push_back(std::to_string(n) + "," + format_double(xv));
        }
        return emit_csv(o, "plot-data xn", "n,x", rows);
    }
    if (o.what == "phi") {
        auto [lo, hi] = parse_int_range(o.n_range);
        HyperbolicSeriesSpec spec;
        spec.branch = parse_branch(o.branch);
        std::vector<std::string> rows;
        for (const auto& r : assemble_sheet_values(lo, hi, spec))
            rows.push_back(std::to_string(r.n) + "," + to_string(spec.branch) + "," +
                           format_double(r.s2) + "," + format_double(r.s1) + "," +
                           format_double(r.unitarity_residual) + "," +
                           format_double(r.crossing_residual));
        return emit_csv(o, "plot-data phi",
                        "n,branch,phi,s1,unitarity_residual,crossing_residual", rows);
    }
    if (o.what == "unitarity") {
        auto [lo, hi] = parse_double_range(o.omega);
        if (o.step <= 0.0) throw validation_error("step must be positive");
        if (lo <= 1.0) throw validation_error("omega range must start above the branch point 1");
        OddRationalFn beta = parse_beta(o.beta);
        BlaschkeSpec spec = parse_blaschke(o.blaschke);
        auto ev = two_row_evaluator(beta, spec);
        const double probe = 1e-8;
        std::vector<std::string> rows;
        for (double w = lo; w <= hi + 1e-12; w += o.step) {
            try {
                std::vector<cd> half = ev(cd(w, probe / 2.0));
                std::vector<cd> full = ev(cd(w, probe));
                double r = 0.0;
                for (std::size_t i = 0; i < half.size(); ++i)
                    r = std::max(r, std::abs(std::abs(2.0 * half[i] - full[i]) - 1.0));
                rows.push_back(format_double(w) + "," + format_double(r));
            } catch (const pole_crossing_error&) {
            }
        }
        return emit_csv(o, "plot-data unitarity", "omega,residual", rows);
    }
    if (o.what == "zeta") {
        GridSpec g;
        g.n_re = g.n_im = o.grid_n;
        g.delta = o.delta;
        std::vector<std::string> rows;
        for (const cd& z : grid_points(g))
            rows.push_back(format_double(z.real()) + "," + format_double(z.imag()) + "," +
                           format_double(std::abs(zeta_of_z(z))));
        return emit_csv(o, "plot-data zeta", "re,im,abs_zeta", rows);
    }
    throw parse_error("what must be xn|phi|unitarity|zeta, got " + o.what);
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Crossing-symmetric sheet dynamics toolkit"};
    app.option_defaults()->always_capture_default();

    app.add_option("--tolerance", o.tol, "Residual tolerance for verification");
    app.add_option("--output", o.output, "Write the report to this path instead of stdout");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-header", o.no_header, "Suppress the timestamp header");
    app.set_config("--config", "", "Flat key=value config file (# comments)");
    app.allow_config_extras(CLI::config_extras_mode::error);

    app.add_option("--matrix", o.matrix, "Crossing matrix label (su2:l=<k>, p33, p33-reduced)");
    app.add_option("--n", o.n_range, "Integer sheet range lo..hi");
    app.add_option("--branch", o.branch, "Hyperbolic branch: cosh|sinh|x0=2|x0=-4");
    app.add_option("--l", o.l, "Two-channel label l");
    app.add_option("--beta", o.beta, "Odd rational slope: 0 or n0,n1,..:d0,d1,..");
    app.add_option("--blaschke", o.blaschke, "Blaschke data: none or order=k;zeros=z1,z2,..");
    app.add_option("--omega", o.omega, "Boundary range lo..hi");
    app.add_option("--step", o.step, "Boundary step width");
    app.add_option("--grid-n", o.grid_n, "Grid points per axis");
    app.add_option("--delta", o.delta, "Cut avoidance margin");
    app.add_option("--seed", o.seed, "Random probe seed");
    app.add_option("--points", o.points, "Number of random probes");

    CLI::App* catalog = app.add_subcommand("catalog", "Inspect a crossing matrix");
    catalog->add_option("label", o.catalog_label, "Matrix label");
    CLI::App* sheets = app.add_subcommand("sheets", "Tabulate sheet values over n");
    CLI::App* invariants =
        app.add_subcommand("invariants", "Invariant planes, curves, and certificates");
    CLI::App* fixed = app.add_subcommand("fixed-points", "Exact rest points of the dynamics");
    CLI::App* verify = app.add_subcommand("verify", "Residual scan of a solution column");
    verify->add_option("--solution", o.solution, "two-row|trivial|broken-demo")->required();
    CLI::App* plot = app.add_subcommand("plot-data", "CSV series for plotting");
    plot->add_option("--what", o.what, "xn|phi|unitarity|zeta")->required();
    for (CLI::App* sub : {catalog, sheets, invariants, fixed, verify, plot}) sub->fallthrough();
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    tolerance() = o.tol;
    try {
        if (catalog->parsed()) return cmd_catalog(o);
        if (sheets->parsed()) return cmd_sheets(o);
        if (invariants->parsed()) return cmd_invariants(o);
        if (fixed->parsed()) return cmd_fixed_points(o);
        if (verify->parsed()) return cmd_verify(o);
        if (plot->parsed()) return cmd_plot_data(o);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
