#include <catch2/catch_amalgamated.hpp>

#include "sheetlab/quadratic.hpp"

using sheetlab::bigint;
using sheetlab::QuadComplex;
using sheetlab::QuadNum;
using sheetlab::Rational;

TEST_CASE("rational_sqrt recognises exact squares") {
    CHECK(sheetlab::rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(sheetlab::rational_sqrt(Rational(0)) == Rational(0));
    CHECK(sheetlab::rational_sqrt(Rational(49)) == Rational(7));
    CHECK(!sheetlab::rational_sqrt(Rational(2)).has_value());
    CHECK(!sheetlab::rational_sqrt(Rational(-4)).has_value());
    CHECK(!sheetlab::rational_sqrt(Rational(8, 9)).has_value());
}

TEST_CASE("squarefree_split factors out the square part") {
    auto check = [](long long n, long long f, long long s) {
        auto [gf, gs] = sheetlab::squarefree_split(bigint(n));
        CHECK(gf == f);
        CHECK(gs == s);
    };
    check(45, 3, 5);
    check(12, 2, 3);
    check(49, 7, 1);
    check(5, 1, 5);
    check(1, 1, 1);
    check(360, 6, 10);
}

TEST_CASE("quadratic field arithmetic") {
    QuadNum r5 = QuadNum::sqrt_of(5);
    CHECK(r5 * r5 == QuadNum(5));
    QuadNum phi = (QuadNum(1) + r5) / QuadNum(2);
    CHECK(phi * phi == phi + QuadNum(1));  // golden ratio equation
    CHECK(phi.inverse() == phi - QuadNum(1));
    CHECK(phi.norm() == Rational(-1));
    CHECK(phi.conj() == (QuadNum(1) - r5) / QuadNum(2));
    CHECK(phi.pow(2) - phi.pow(-2) == r5);
}

TEST_CASE("incompatible radicands are rejected") {
    QuadNum a = QuadNum::sqrt_of(2), b = QuadNum::sqrt_of(3);
    CHECK_THROWS_AS(a + b, sheetlab::incompatible_field_error);
    CHECK_THROWS_AS(a * b, sheetlab::incompatible_field_error);
    CHECK_NOTHROW(a + QuadNum(Rational(1, 2)));  // rationals join any field
    CHECK_THROWS_AS(QuadNum(0, 1, 1), sheetlab::incompatible_field_error);
}

TEST_CASE("exact sign of quadratic numbers") {
    CHECK(QuadNum(Rational(7, 5), Rational(-1), 2).sign() == -1);  // 7/5 < sqrt(2)
    CHECK(QuadNum(Rational(3, 2), Rational(-1), 2).sign() == 1);   // 3/2 > sqrt(2)
    CHECK((QuadNum::sqrt_of(5) - QuadNum(2)).sign() == 1);
    CHECK((QuadNum(2) - QuadNum::sqrt_of(5)).sign() == -1);
    CHECK(QuadNum(0).sign() == 0);
    CHECK((QuadNum(Rational(1, 2)) * QuadNum::sqrt_of(5) - QuadNum(1)).sign() == 1);
}

TEST_CASE("numeric value agrees with an integer square root oracle") {
    // sqrt(5) to 16 digits from pure integer arithmetic.
    bigint scaled = boost::multiprecision::sqrt(bigint(5) * boost::multiprecision::pow(bigint(10), 32));
    double oracle = scaled.convert_to<double>() / 1e16;
    CHECK(QuadNum::sqrt_of(5).to_double() == Catch::Approx(oracle).epsilon(1e-14));

    QuadNum y_plus(Rational(3, 2), Rational(1, 2), 5);
    QuadNum y_minus(Rational(3, 2), Rational(-1, 2), 5);
    CHECK(y_plus.to_double() == Catch::Approx(2.618033988749895).epsilon(1e-15));
    CHECK(y_minus.to_double() == Catch::Approx(0.3819660112501051).epsilon(1e-14));
    CHECK(y_plus * y_minus == QuadNum(1));
    CHECK(y_plus + y_minus == QuadNum(3));
}

TEST_CASE("field square roots") {
    QuadNum y_minus(Rational(3, 2), Rational(-1, 2), 5);
    auto r = y_minus.field_sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == y_minus);
    CHECK(*r == QuadNum(Rational(-1, 2), Rational(1, 2), 5));  // (sqrt(5)-1)/2

    QuadNum y_plus(Rational(3, 2), Rational(1, 2), 5);
    auto rp = y_plus.field_sqrt();
    REQUIRE(rp.has_value());
    CHECK(*rp == QuadNum(Rational(1, 2), Rational(1, 2), 5));  // (sqrt(5)+1)/2

    CHECK(!QuadNum(Rational(2)).field_sqrt().has_value());
    CHECK(QuadNum(Rational(9, 4)).field_sqrt() == QuadNum(Rational(3, 2)));
    // 5/4 * 5 = 25/4 is a square, so sqrt(5*(5/4)^... ) lives in Q(sqrt(5)).
    CHECK(QuadNum(Rational(5, 4)).field_sqrt(5) == QuadNum(0, Rational(1, 2), 5));
    CHECK((QuadNum::sqrt_of(5) - QuadNum(3)).field_sqrt() == std::nullopt);
}

TEST_CASE("complex pairs over a quadratic field") {
    QuadNum r5 = QuadNum::sqrt_of(5);
    QuadComplex z(QuadNum(Rational(1, 2)), r5);
    QuadComplex w = z * z;
    CHECK(w.re == QuadNum(Rational(1, 4)) - QuadNum(5));
    CHECK(w.im == r5);
    QuadComplex conj(z.re, -z.im);
    QuadComplex mod2 = z * conj;
    CHECK(mod2.re == QuadNum(Rational(21, 4)));
    CHECK(mod2.im == QuadNum(0));
    auto c = z.to_complex();
    CHECK(c.real() == Catch::Approx(0.5));
    CHECK(c.imag() == Catch::Approx(2.23606797749979).epsilon(1e-14));
}
