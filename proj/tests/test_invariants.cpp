#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "sheetlab/crossing.hpp"
#include "sheetlab/hompoly.hpp"
#include "sheetlab/invariants.hpp"
#include "sheetlab/ratfunc.hpp"

using sheetlab::AffinePoint;
using sheetlab::Collineation;
using sheetlab::HomPoly;
using sheetlab::Mat;
using sheetlab::ParamPoly;
using sheetlab::Rational;
using sheetlab::RationalFunction;

using P = HomPoly<Rational>;
using PP = HomPoly<ParamPoly>;

namespace {

const std::vector<std::string> V3{"x0", "x1", "x2"};
const std::vector<std::string> V4{"x0", "x1", "x2", "x3"};

P pp(const std::string& text) { return sheetlab::parse_hompoly(text, V3); }
P pp4(const std::string& text) { return sheetlab::parse_hompoly(text, V4); }

/// Dense random homogeneous trivariate form of the given degree.
P random_form(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> num(-4, 4);
    P f(V3);
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            f.add_term({a, b, degree - a - b}, Rational(num(rng)));
    if (f.is_zero()) f.add_term({degree, 0, 0}, Rational(1));
    return f;
}

ParamPoly c0() { return ParamPoly::c0(); }
ParamPoly c1() { return ParamPoly::c1(); }

}  // namespace

TEST_CASE("parameter polynomials track both coefficients exactly") {
    ParamPoly q = (c0() + ParamPoly(2) * c1()) * (c0() + ParamPoly(2) * c1());
    CHECK(q.coeff(2, 0) == Rational(1));
    CHECK(q.coeff(1, 1) == Rational(4));
    CHECK(q.coeff(0, 2) == Rational(4));
    CHECK(q.total_degree() == 2);
    CHECK(q.is_homogeneous());
    CHECK(q.eval(Rational(1), Rational(2)) == Rational(25));

    ParamPoly mixed = c0() + ParamPoly(1);
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK_THROWS_AS(mixed.dehomogenized(), sheetlab::validation_error);
    CHECK(q.dehomogenized().eval(Rational(3)) == Rational(49));

    CHECK((c0() - c0()).is_zero());
    CHECK(c0().pow(3) * c1() == c0() * c0() * c0() * c1());
}

TEST_CASE("homogeneous polynomials parse, print, and round-trip") {
    P conic = sheetlab::two_row_invariant_conic();
    CHECK(conic.degree() == 2);
    CHECK(conic.coeff({0, 2, 0}) == Rational(1));
    CHECK(conic.coeff({1, 1, 0}) == Rational(2));
    CHECK(conic.coeff({0, 1, 1}) == Rational(-2));
    CHECK(conic.coeff({1, 0, 1}) == Rational(-1));
    CHECK(conic.coeff({2, 0, 0}) == Rational(0));

    CHECK(sheetlab::parse_hompoly(conic.to_string(), V3) == conic);
    CHECK(pp("1/2*x0^2 - x0*x1").scaled(Rational(2)) == pp("x0^2 - 2*x0*x1"));

    CHECK_THROWS_AS(sheetlab::parse_hompoly("", V3), sheetlab::parse_error);
    CHECK_THROWS_AS(sheetlab::parse_hompoly("x0 + ", V3), sheetlab::parse_error);
    CHECK_THROWS_AS(sheetlab::parse_hompoly("x0 + zebra", V3), sheetlab::parse_error);
    CHECK_THROWS_AS(sheetlab::parse_hompoly("x0 x1", V3), sheetlab::parse_error);

    P zero(V3);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.to_string() == "0");
}

TEST_CASE("homogeneity is enforced") {
    CHECK_THROWS_AS(sheetlab::parse_hompoly("x0 + x0*x1", V3), sheetlab::validation_error);
    P f(V3);
    f.add_term({1, 0, 0}, Rational(1));
    CHECK_THROWS_AS(f.add_term({1, 1, 0}, Rational(1)), sheetlab::validation_error);
    CHECK_THROWS_AS(pp("x0") + pp("x0*x1"), sheetlab::validation_error);
    CHECK_THROWS_AS(pp("x0").eval(std::vector<Rational>{Rational(1)}),
                    sheetlab::validation_error);
}

TEST_CASE("arithmetic and exact division") {
    P s = pp("x0 + x1");
    CHECK(s * s == pp("x0^2 + 2*x0*x1 + x1^2"));
    CHECK(s.pow(3) == pp("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"));

    auto q = sheetlab::divide_exact(pp("x0^2 - x1^2"), pp("x0 - x1"));
    REQUIRE(q.has_value());
    CHECK(*q == s);
    CHECK_FALSE(sheetlab::divide_exact(pp("x0^2 + x1^2"), pp("x0 - x1")).has_value());
    CHECK_THROWS_AS(sheetlab::divide_exact(s, P(V3)), sheetlab::validation_error);

    CHECK(pp("2*x0 - 4*x1").primitive() == pp("x0 - 2*x1"));
    CHECK(pp("-x0 + x2").primitive() == pp("x0 - x2"));
    CHECK(pp("2/3*x0 + 4/9*x1").primitive() == pp("3*x0 + 2*x1"));

    std::mt19937 rng(4417);
    for (int rep = 0; rep < 6; ++rep) {
        P a = random_form(rng, 2), b = random_form(rng, 1);
        auto back = sheetlab::divide_exact(a * b, b);
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}

TEST_CASE("derivatives, coefficient extraction, and parity split") {
    P conic = sheetlab::two_row_invariant_conic();
    CHECK(conic.derivative(conic.index("x1")) == pp("2*x1 + 2*x0 - 2*x2"));
    CHECK(conic.degree_in(2) == 1);
    CHECK(conic.coeff_in(2, 1) == pp("-2*x1 - x0"));
    CHECK(conic.coeff_in(2, 0) == pp("x1^2 + 2*x0*x1"));

    CHECK_THROWS_AS(conic.drop_variable(2), sheetlab::validation_error);
    P noz = pp("x0^2 - x0*x1");
    CHECK(noz.drop_variable(2).vars() == std::vector<std::string>{"x0", "x1"});

    auto vars_sac = std::vector<std::string>{"s", "a", "c"};
    P g = sheetlab::parse_hompoly("s^2 - a^2 - s*c + s*a", vars_sac);
    auto [even, odd] = sheetlab::parity_split(g, g.index("a"));
    CHECK(even == sheetlab::parse_hompoly("s^2 - a^2 - s*c", vars_sac));
    CHECK(odd == sheetlab::parse_hompoly("s*a", vars_sac));
}

TEST_CASE("linear substitution matches the catalog action") {
    auto vars2 = std::vector<std::string>{"x0", "x1"};
    P x0 = P::variable(vars2, 0);
    Collineation two(sheetlab::su2_two_row(1).A);
    CHECK(sheetlab::act_linear(x0, two) ==
          sheetlab::parse_hompoly("-1/3*x0 + 4/3*x1", vars2));

    // Change of variables to (s - 2a, s + a, c) triples the symmetric form.
    P sym = pp("x0^2 - x1^2 - x0*x2");
    CHECK(sheetlab::act_linear(sheetlab::two_row_invariant_conic(), sheetlab::sac_basis()) ==
          sym.scaled(Rational(3)));

    // Involutions act as involutions on forms.
    std::mt19937 rng(90210);
    for (const auto& cm : {sheetlab::extend_block(sheetlab::su2_two_row(1)),
                           sheetlab::extend_block(sheetlab::su2_two_row(3)),
                           sheetlab::three_row_p33()}) {
        Collineation act(cm.A);
        for (int d = 1; d <= 3; ++d) {
            P f = random_form(rng, d);
            CHECK(sheetlab::act_linear(sheetlab::act_linear(f, act), act) == f);
        }
    }

    CHECK_THROWS_AS(sheetlab::act_linear(x0, sheetlab::sac_basis()),
                    sheetlab::unsupported_dimension_error);
    Mat<Rational> sing(3);
    sing(0, 0) = Rational(1);
    CHECK_THROWS_AS(Collineation(sing), sheetlab::degenerate_map_error);
}

TEST_CASE("monomial inversion") {
    CHECK(sheetlab::act_inversion(pp("x0")) == pp("x1*x2"));
    P conic = sheetlab::two_row_invariant_conic();
    CHECK(sheetlab::act_inversion(conic) == pp("-x0*x2") * conic);

    std::mt19937 rng(5150);
    for (int d = 1; d <= 3; ++d) {
        P f = random_form(rng, d);
        CHECK(sheetlab::act_inversion(sheetlab::act_inversion(f)) ==
              pp("x0*x1*x2").pow(d) * f);
    }

    auto vars2 = std::vector<std::string>{"x0", "x1"};
    CHECK_THROWS_AS(sheetlab::act_inversion(P::variable(vars2, 0)),
                    sheetlab::unsupported_dimension_error);
}

TEST_CASE("hypersurface invariance certificates") {
    auto inv = [](const P& f) { return sheetlab::act_inversion(f); };

    auto cert = sheetlab::is_invariant_hypersurface(sheetlab::two_row_invariant_conic(), inv);
    CHECK(cert.invariant);
    CHECK(cert.cofactor == pp("-x0*x2"));
    CHECK(cert.image == cert.cofactor * sheetlab::two_row_invariant_conic());

    auto line = sheetlab::is_invariant_hypersurface(pp("x0 + x1"), inv);
    CHECK(line.invariant);
    CHECK(line.cofactor == pp("x2"));

    auto skew = sheetlab::is_invariant_hypersurface(pp("x0 + 2*x1"), inv);
    CHECK_FALSE(skew.invariant);

    Mat<Rational> flip = Mat<Rational>::identity(3);
    flip(1, 1) = Rational(-1);
    auto parity = sheetlab::is_invariant_hypersurface(
        pp("x0^2 - x1^2 - x0*x2"), [&](const P& f) { return act_linear(f, Collineation(flip)); });
    CHECK(parity.invariant);
    CHECK(parity.cofactor == P::constant(V3, Rational(1)));

    // The quadric x1 x3 - x0 x2 is fixed by inversion in four variables.
    P quad = pp4("x1*x3 - x0*x2");
    auto cert4 = sheetlab::is_invariant_hypersurface(quad, inv);
    CHECK(cert4.invariant);
    CHECK(cert4.cofactor == pp4("-x0*x1*x2*x3"));
}

TEST_CASE("the two-row conic is fixed by the first crossing action only") {
    P conic = sheetlab::two_row_invariant_conic();
    Collineation a1(sheetlab::extend_block(sheetlab::su2_two_row(1)).A);
    CHECK(sheetlab::act_linear(conic, a1) == conic);

    Collineation a2(sheetlab::extend_block(sheetlab::su2_two_row(2)).A);
    auto cert = sheetlab::is_invariant_hypersurface(
        conic, [&](const P& f) { return act_linear(f, a2); });
    CHECK_FALSE(cert.invariant);
}

TEST_CASE("invariant plane families of the three-row action") {
    Collineation action(sheetlab::extend_block(sheetlab::three_row_p33()).A);
    auto families = sheetlab::invariant_planes(action);
    REQUIRE(families.size() == 2);
    CHECK(families[0].eigenvalue == Rational(1));
    CHECK(families[0].basis.size() == 3);
    CHECK(families[1].eigenvalue == Rational(-1));
    CHECK(families[1].basis.size() == 1);

    for (const auto& fam : families) {
        std::vector<Rational> c(fam.basis.size(), Rational(1));
        for (std::size_t pick = 0; pick <= fam.basis.size(); ++pick) {
            P member = fam.member(c);
            if (!member.is_zero())
                CHECK(sheetlab::act_linear(member, action) == member.scaled(fam.eigenvalue));
            if (pick < c.size()) c[pick] = Rational(2 + static_cast<long long>(pick));
        }
    }

    // Fixed planes satisfy k2 = 2 k0 + k1.
    std::vector<Rational> c{Rational(3), Rational(-2), Rational(5)};
    P member = families[0].member(c);
    CHECK(member.coeff({0, 0, 1, 0}) ==
          Rational(2) * member.coeff({1, 0, 0, 0}) + member.coeff({0, 1, 0, 0}));

    CHECK_THROWS_AS(families[0].member({Rational(1)}), sheetlab::validation_error);
    CHECK_THROWS_AS(sheetlab::invariant_planes(sheetlab::sac_basis()),
                    sheetlab::unsupported_dimension_error);
    Mat<Rational> off = Mat<Rational>::identity(4);
    off(0, 3) = Rational(1);
    CHECK_THROWS_AS(sheetlab::invariant_planes(Collineation(off)),
                    sheetlab::unsupported_dimension_error);
}

namespace {

/// The fixed-plane pencil through the unit rest point, with the first two
/// coefficients as the parameters.
PP pencil_plane() {
    Collineation action(sheetlab::extend_block(sheetlab::three_row_p33()).A);
    auto families = sheetlab::invariant_planes(action);
    for (const auto& fam : families)
        if (fam.eigenvalue == Rational(1) && fam.basis.size() == 3)
            return sheetlab::restrict_to_rest_point(fam);
    throw std::logic_error("missing family");
}

}  // namespace

TEST_CASE("rest-point restriction pins the plane pencil") {
    PP plane = pencil_plane();
    CHECK(plane.degree() == 1);
    CHECK(plane.coeff({1, 0, 0, 0}) == c0());
    CHECK(plane.coeff({0, 1, 0, 0}) == c1());
    CHECK(plane.coeff({0, 0, 1, 0}) == ParamPoly(2) * c0() + c1());
    CHECK(plane.coeff({0, 0, 0, 1}) == ParamPoly(-3) * c0() + ParamPoly(-2) * c1());

    // Vanishes identically at the unit rest point.
    CHECK(plane.eval(std::vector<ParamPoly>(4, ParamPoly(1))).is_zero());

    CHECK(sheetlab::eval_params(plane, Rational(-1), Rational(3)) ==
          pp4("-x0 + 3*x1 + x2 - 3*x3"));
    CHECK(sheetlab::eval_params(plane, Rational(0), Rational(1)) == pp4("x1 + x2 - 2*x3"));
}

TEST_CASE("plane elimination substitutes one variable exactly") {
    P surface = pp4("x0*x1*x3");
    P plane = pp4("x3 - x0");
    P out = sheetlab::eliminate_linear(plane, surface, "x3");
    CHECK(out == sheetlab::parse_hompoly("x0^2*x1", out.vars()));

    CHECK(sheetlab::eliminate_linear(plane, plane, "x3").is_zero());
    CHECK_THROWS_AS(sheetlab::eliminate_linear(pp4("x0 - x1"), surface, "x3"),
                    sheetlab::cannot_eliminate_error);
    CHECK_THROWS_AS(sheetlab::eliminate_linear(pp4("x0^2 - x1^2"), surface, "x3"),
                    sheetlab::validation_error);
}

TEST_CASE("the eliminated surface form matches the hand expansion") {
    PP plane = pencil_plane();
    PP surface = sheetlab::act_inversion(plane);
    PP g = sheetlab::eliminate_linear(plane, surface, "x3");

    PP expect(V3);
    ParamPoly p2 = ParamPoly(2) * c0() + c1();
    expect.add_term({1, 1, 1}, ParamPoly(4) * c0() * c0() + ParamPoly(8) * c0() * c1() +
                                   ParamPoly(2) * c1() * c1());
    expect.add_term({2, 1, 0}, -(c0() * p2));
    expect.add_term({2, 0, 1}, -(c0() * c1()));
    expect.add_term({1, 2, 0}, -(c1() * p2));
    expect.add_term({0, 2, 1}, -(c0() * c1()));
    expect.add_term({1, 0, 2}, -(c1() * p2));
    expect.add_term({0, 1, 2}, -(c0() * p2));
    CHECK(g == expect.primitive());

    // At the solved ratio the surface section factors through the fixed conic.
    P at = sheetlab::eval_params(g, Rational(-1), Rational(3));
    P prod = pp("x0*x1 + 3*x0*x2 - 3*x1^2 - x1*x2") * pp("-x0 + x2");
    CHECK(at.primitive() == prod.primitive());

    // At the complementary direction the section collapses onto a double line.
    P deg = sheetlab::eval_params(g, Rational(0), Rational(1));
    CHECK(deg.primitive() == pp("x0*x1^2 - 2*x0*x1*x2 + x0*x2^2"));

    // Another reducible direction splits into three distinct lines, so no
    // conic component survives there.
    P split = sheetlab::eval_params(g, Rational(-1), Rational(1));
    CHECK(split.primitive() == (pp("x0 + x2") * pp("x0 - x1") * pp("x1 - x2")).primitive());
}

TEST_CASE("resultants detect shared factors") {
    auto vab = std::vector<std::string>{"x", "a", "b"};
    P f = sheetlab::parse_hompoly("x - a", vab);
    P g = sheetlab::parse_hompoly("x - b", vab);
    CHECK(sheetlab::hom_resultant(f, g, "x") == sheetlab::parse_hompoly("a - b", vab));

    auto vxy = std::vector<std::string>{"x", "y"};
    CHECK(sheetlab::hom_resultant(sheetlab::parse_hompoly("x^2 - y^2", vxy),
                                  sheetlab::parse_hompoly("x - y", vxy), "x")
              .is_zero());

    CHECK(sheetlab::hom_resultant(pp("x0 + x1"), pp("x0 + x2"), "x0") == pp("-x1 + x2"));
    CHECK_THROWS_AS(sheetlab::hom_resultant(pp("x1^2"), pp("x0 + x1"), "x0"),
                    sheetlab::validation_error);

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int rep = 0; rep < 8; ++rep) {
        auto line = [&] {
            P l(V3);
            l.add_term({1, 0, 0}, Rational(1 + std::abs(num(rng))));
            l.add_term({0, 1, 0}, Rational(num(rng)));
            l.add_term({0, 0, 1}, Rational(num(rng)));
            return l;
        };
        P a = line(), b = line(), h = line();
        CHECK(sheetlab::hom_resultant(a * h, b * h, "x0").is_zero());
    }

    // The solved surface section is tangent to its own first derivative sheaf.
    PP g3 = sheetlab::eliminate_linear(pencil_plane(),
                                       sheetlab::act_inversion(pencil_plane()), "x3");
    P at = sheetlab::eval_params(g3, Rational(-1), Rational(3));
    CHECK(sheetlab::hom_resultant(at, at.derivative(at.index("x1")), "x0").is_zero());
}

TEST_CASE("the invariance parameter solve finds the unique ratio") {
    auto sols = sheetlab::solve_invariance_params();
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].first == Rational(-1));
    CHECK(sols[0].second == Rational(3));

    CHECK(sheetlab::canonical_ratio(Rational(-2), Rational(6)) ==
          std::pair<Rational, Rational>(Rational(-1), Rational(3)));
    CHECK(sheetlab::canonical_ratio(Rational(4), Rational(-6)) ==
          std::pair<Rational, Rational>(Rational(-2), Rational(3)));
    CHECK(sheetlab::canonical_ratio(Rational(5), Rational(0)) ==
          std::pair<Rational, Rational>(Rational(1), Rational(0)));
    CHECK(sheetlab::canonical_ratio(Rational(0), Rational(-7)) ==
          std::pair<Rational, Rational>(Rational(0), Rational(1)));
    CHECK(sheetlab::canonical_ratio(Rational(1, 2), Rational(-3, 4)) ==
          std::pair<Rational, Rational>(Rational(-2), Rational(3)));
    CHECK_THROWS_AS(sheetlab::canonical_ratio(Rational(0), Rational(0)),
                    sheetlab::validation_error);
}

TEST_CASE("low-degree factorisation over the rationals") {
    PP g3 = sheetlab::eliminate_linear(pencil_plane(),
                                       sheetlab::act_inversion(pencil_plane()), "x3");
    P at = sheetlab::eval_params(g3, Rational(-1), Rational(3));
    auto factors = sheetlab::factor_low_degree(at);
    REQUIRE(factors.size() == 2);
    P prod = factors[0] * factors[1];
    CHECK(prod == at);
    bool linear_seen = false, conic_seen = false;
    for (const auto& f : factors) {
        if (f.degree() == 1) linear_seen = (f.primitive() == pp("x0 - x2"));
        if (f.degree() == 2)
            conic_seen = (f.primitive() == pp("x0*x1 + 3*x0*x2 - 3*x1^2 - x1*x2"));
    }
    CHECK(linear_seen);
    CHECK(conic_seen);

    auto two = sheetlab::factor_low_degree(pp("x0^2 - x1^2"));
    REQUIRE(two.size() == 2);
    CHECK(two[0] * two[1] == pp("x0^2 - x1^2"));
    CHECK(two[0].degree() == 1);
    CHECK(two[1].degree() == 1);

    auto irr = sheetlab::factor_low_degree(sheetlab::two_row_invariant_conic());
    REQUIRE(irr.size() == 1);
    CHECK(irr[0] == sheetlab::two_row_invariant_conic());

    auto mono = sheetlab::factor_low_degree(pp("x0^2*x2"));
    REQUIRE(mono.size() == 3);
    CHECK(mono[0] * mono[1] * mono[2] == pp("x0^2*x2"));

    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int rep = 0; rep < 8; ++rep) {
        P prod3 = P::constant(V3, Rational(1));
        for (int j = 0; j < 3; ++j) {
            P l(V3);
            l.add_term({1, 0, 0}, Rational(num(rng)));
            l.add_term({0, 1, 0}, Rational(num(rng)));
            l.add_term({0, 0, 1}, Rational(num(rng)));
            if (l.is_zero()) l.add_term({1, 0, 0}, Rational(1));
            prod3 *= l;
        }
        auto fs = sheetlab::factor_low_degree(prod3);
        P back = P::constant(V3, Rational(1));
        for (const auto& f : fs) back *= f;
        CHECK(back == prod3);
        for (const auto& f : fs) CHECK(f.degree() <= 1);
    }

    CHECK_THROWS_AS(sheetlab::factor_low_degree(pp4("x0*x1*x2*x3")),
                    sheetlab::unsupported_dimension_error);
    CHECK_THROWS_AS(sheetlab::factor_low_degree(pp("x0^4")), sheetlab::validation_error);
}

TEST_CASE("ratio recovery from the conic") {
    P conic = sheetlab::two_row_invariant_conic();
    CHECK(sheetlab::ratio_from_conic<Rational>(conic, Rational(0)) == Rational(2));
    CHECK(sheetlab::ratio_from_conic<Rational>(conic, Rational(1)) == Rational(1));
    CHECK(sheetlab::ratio_from_conic<Rational>(conic, Rational(1, 2)) == Rational(5, 4));

    RationalFunction n = RationalFunction::var();
    RationalFunction x = (n - RationalFunction(2)) / (n + RationalFunction(1));
    RationalFunction law = n / (n - RationalFunction(1));
    CHECK(sheetlab::ratio_from_conic<RationalFunction>(conic, x) == law);

    CHECK_THROWS_AS(sheetlab::ratio_from_conic<Rational>(pp("x2^2 - x0*x1"), Rational(1)),
                    sheetlab::ambiguous_branch_error);
    CHECK_THROWS_AS(sheetlab::ratio_from_conic<Rational>(pp("x0^2 - x1^2"), Rational(1)),
                    sheetlab::cannot_eliminate_error);
    CHECK_THROWS_AS(sheetlab::ratio_from_conic<Rational>(pp("x0 - x1"), Rational(1)),
                    sheetlab::validation_error);
    CHECK_THROWS_AS(sheetlab::ratio_from_conic<Rational>(pp4("x0*x1"), Rational(1)),
                    sheetlab::unsupported_dimension_error);
}

TEST_CASE("line bundle through a base point on the conic") {
    P b = sheetlab::bundle_chart_conic();
    AffinePoint<Rational> origin{Rational(0), Rational(0)};

    auto p1 = sheetlab::bundle_second_intersection(b, origin, Rational(1));
    CHECK(p1.x == Rational(1));
    CHECK(p1.y == Rational(1));

    auto p0 = sheetlab::bundle_second_intersection(b, origin, Rational(0));
    CHECK(p0.x == Rational(2));
    CHECK(p0.y == Rational(0));

    AffinePoint<Rational> right{Rational(2), Rational(0)};
    auto p2 = sheetlab::bundle_second_intersection(b, right, Rational(1));
    CHECK(p2.x == Rational(1, 3));
    CHECK(p2.y == Rational(-5, 3));

    AffinePoint<Rational> diag{Rational(1), Rational(1)};
    auto p3 = sheetlab::bundle_second_intersection(b, diag, Rational(0));
    CHECK(p3.x == Rational(-1));
    CHECK(p3.y == Rational(1));

    CHECK_THROWS_AS(sheetlab::bundle_second_intersection(b, origin, Rational(-1, 2)),
                    sheetlab::degenerate_map_error);
    AffinePoint<Rational> off{Rational(1), Rational(0)};
    CHECK_THROWS_AS(sheetlab::bundle_second_intersection(b, off, Rational(1)),
                    sheetlab::validation_error);

    for (long long kk : {2, 3, -1, 5, -3}) {
        auto p = sheetlab::bundle_second_intersection(b, origin, Rational(kk));
        CHECK(b.eval(std::vector<Rational>{p.x, p.y, Rational(1)}).is_zero());
    }
}

TEST_CASE("the bundle slope parametrisation recovers the sheet law") {
    P b = sheetlab::bundle_chart_conic();
    RationalFunction n = RationalFunction::var();
    RationalFunction k = (n - RationalFunction(2)) / (n + RationalFunction(1));
    AffinePoint<RationalFunction> origin{RationalFunction(0), RationalFunction(0)};
    auto p = sheetlab::bundle_second_intersection(b, origin, k);
    CHECK(p.x == n / (n - RationalFunction(1)));
    CHECK(p.y == k * p.x);
    CHECK(b.eval(std::vector<RationalFunction>{p.x, p.y, RationalFunction(1)}).is_zero());
}

TEST_CASE("the chart conic is the coordinate swap of the invariant conic") {
    Mat<Rational> swap(3);
    swap(0, 1) = Rational(1);
    swap(1, 0) = Rational(1);
    swap(2, 2) = Rational(1);
    CHECK(sheetlab::act_linear(sheetlab::two_row_invariant_conic(), Collineation(swap)) ==
          sheetlab::bundle_chart_conic());
}

TEST_CASE("degenerate quadric splits into swapped fixed lines") {
    P f1 = pp("-x0 + x2");
    P f2 = pp("-x1 + x2");
    P quad = f1 * f2;

    auto inv = sheetlab::is_invariant_hypersurface(
        quad, [](const P& f) { return sheetlab::act_inversion(f); });
    CHECK(inv.invariant);
    CHECK(inv.cofactor == pp("x0*x1"));

    Collineation three(sheetlab::three_row_p33().A);
    CHECK(sheetlab::act_linear(f1, three) == f2.scaled(Rational(-3, 2)));
    CHECK(sheetlab::act_linear(f2, three) == f1.scaled(Rational(-2, 3)));
    CHECK(sheetlab::act_linear(quad, three) == quad);
}

TEST_CASE("the fixed plane maps to a cubic surface under inversion") {
    P plane = pp4("-x0 + 3*x1 + x2 - 3*x3");
    CHECK(sheetlab::act_inversion(plane) ==
          pp4("-x1*x2*x3 + 3*x0*x2*x3 + x0*x1*x3 - 3*x0*x1*x2"));
}
