#include <catch2/catch_amalgamated.hpp>

#include "sheetlab/matrix.hpp"
#include "sheetlab/rational.hpp"

using sheetlab::Mat;
using sheetlab::Rational;

namespace {
Mat<Rational> hilbert3() {
    return {{Rational(1), Rational(1, 2), Rational(1, 3)},
            {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
            {Rational(1, 3), Rational(1, 4), Rational(1, 5)}};
}
}  // namespace

TEST_CASE("matrix basics") {
    Mat<Rational> a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    Mat<Rational> b{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(a * Mat<Rational>::identity(2) == a);
    CHECK((a * b) == Mat<Rational>{{Rational(2), Rational(1)}, {Rational(4), Rational(3)}});
    CHECK((a + b) == Mat<Rational>{{Rational(1), Rational(3)}, {Rational(4), Rational(4)}});
    CHECK(a.transpose()(0, 1) == Rational(3));
    CHECK(a.det() == Rational(-2));
    auto v = a.apply({Rational(1), Rational(1)});
    CHECK(v[0] == Rational(3));
    CHECK(v[1] == Rational(7));
    CHECK_THROWS_AS((Mat<Rational>{{Rational(1)}, {Rational(2), Rational(3)}}), sheetlab::error);
}

TEST_CASE("exact determinant and inverse of the 3x3 Hilbert matrix") {
    Mat<Rational> h = hilbert3();
    CHECK(h.det() == Rational(1, 2160));
    Mat<Rational> inv = h.inverse();
    CHECK(inv(0, 0) == Rational(9));
    CHECK(inv(0, 1) == Rational(-36));
    CHECK(inv(2, 2) == Rational(180));
    CHECK(h * inv == Mat<Rational>::identity(3));
}

TEST_CASE("singular matrices are rejected by inverse and measured by det") {
    Mat<Rational> s{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(s.det() == Rational(0));
    CHECK_THROWS_AS(s.inverse(), sheetlab::degenerate_map_error);
}

TEST_CASE("kernel of a rank one matrix") {
    Mat<Rational> m{{Rational(1), Rational(2), Rational(3)},
                    {Rational(2), Rational(4), Rational(6)},
                    {Rational(-1), Rational(-2), Rational(-3)}};
    auto basis = m.kernel();
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        auto w = m.apply(v);
        for (const auto& e : w) CHECK(e == Rational(0));
    }
    CHECK(Mat<Rational>::identity(3).kernel().empty());
}
