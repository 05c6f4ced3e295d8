#include <doctest.h>

#include "ratell/errors.hpp"
#include "ratell/falsifier.hpp"
#include "support.hpp"

using ratell::Box;
using ratell::Rational;
using ratell::TriPoly;
using ratell::UniPoly;
using testsupport::tpi;
using testsupport::upi;

TEST_SUITE("falsifier") {

TEST_CASE("ray: immediate failure at epsilon") {
    const auto res = ratell::grid_falsifier(upi({{0, 2}, {1, -1}}), Rational(3));
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->point[0] == Rational(3));
    CHECK(res.witness->value == Rational(-1));
    CHECK(res.samples_checked == 1);
}

TEST_CASE("ray: dip between roots is found") {
    // (t-3)^2 - 1/4 is negative exactly on (5/2, 7/2).
    const UniPoly p = UniPoly::from_terms(
        {{2u, Rational(1)}, {1u, Rational(-6)}, {0u, Rational::parse("35/4")}});
    const auto res = ratell::grid_falsifier(p, Rational(1), 512);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->point[0] > Rational::parse("5/2"));
    CHECK(res.witness->point[0] < Rational::parse("7/2"));
    CHECK(p.evaluate(res.witness->point[0]) == res.witness->value);
    CHECK(res.witness->value.sign() <= 0);
}

TEST_CASE("ray: positive polynomial yields no witness and a full sweep") {
    const auto res = ratell::grid_falsifier(upi({{1, 1}, {0, -2}}), Rational(3), 64);
    CHECK(!res.witness.has_value());
    CHECK(res.samples_checked >= 64);
}

TEST_CASE("ray: deterministic across repeated runs") {
    const UniPoly p = upi({{2, 1}, {1, -6}, {0, 9}});  // (t-3)^2, touches zero at 3
    const auto a = ratell::grid_falsifier(p, Rational(1), 256);
    const auto b = ratell::grid_falsifier(p, Rational(1), 256);
    CHECK(a.samples_checked == b.samples_checked);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) {
        CHECK(a.witness->point == b.witness->point);
        CHECK(a.witness->value == b.witness->value);
    }
}

TEST_CASE("box: corner failure is found in the corner pass") {
    const Box box{{{Rational(1), Rational(3)}, {Rational(1), Rational(3)},
                   {Rational(1), Rational(3)}}};
    // t u v - 27 vanishes at the (3,3,3) corner.
    const auto res = ratell::grid_falsifier(tpi({{1, 1, 1, 1}, {0, 0, 0, -27}}), box, 64);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->value.sign() <= 0);
    CHECK(res.samples_checked <= 9);
}

TEST_CASE("box: interior dip is found") {
    // (t-2)^2 + (u-2)^2 + (v-2)^2 - 1/10: negative only in a small ball
    // around (2,2,2), the box center.
    TriPoly p;
    for (unsigned axis = 0; axis < 3; ++axis) {
        p = p + tpi({{axis == 0 ? 2u : 0u, axis == 1 ? 2u : 0u, axis == 2 ? 2u : 0u, 1},
                     {axis == 0 ? 1u : 0u, axis == 1 ? 1u : 0u, axis == 2 ? 1u : 0u, -4}});
    }
    p = p + TriPoly(Rational(12) - Rational::parse("1/10"));
    const Box box{{{Rational(1), Rational(3)}, {Rational(1), Rational(3)},
                   {Rational(1), Rational(3)}}};
    const auto res = ratell::grid_falsifier(p, box, 128);
    REQUIRE(res.witness.has_value());
    CHECK(p.evaluate(res.witness->point[0], res.witness->point[1], res.witness->point[2]) ==
          res.witness->value);
    CHECK(res.witness->value.sign() <= 0);
}

TEST_CASE("box: positive polynomial reports the samples it checked") {
    const Box box{{{Rational(1), Rational(2)}, {Rational(1), Rational(2)},
                   {Rational(1), Rational(2)}}};
    const auto res = ratell::grid_falsifier(tpi({{1, 1, 1, 1}, {0, 0, 0, 1}}), box, 100);
    CHECK(!res.witness.has_value());
    CHECK(res.samples_checked >= 100);
}

TEST_CASE("error contract matches the certifiers") {
    CHECK_THROWS_AS(ratell::grid_falsifier(UniPoly(), Rational(1)), ratell::ZeroPolynomialError);
    CHECK_THROWS_AS(ratell::grid_falsifier(upi({{0, 1}}), Rational(0)),
                    ratell::ParameterOutOfRangeError);
    Box bad;
    bad.iv = {{Rational(0), Rational(1)}};
    CHECK_THROWS_AS(ratell::grid_falsifier(TriPoly(Rational(1)), bad),
                    ratell::ParameterOutOfRangeError);
}

}  // TEST_SUITE
