#include <doctest.h>

#include <vector>

#include "ratell/errors.hpp"
#include "ratell/tripoly.hpp"
#include "support.hpp"

using ratell::BiPoly;
using ratell::Rational;
using ratell::TriExp;
using ratell::TriPoly;
using ratell::UniPoly;
using testsupport::tpi;
using testsupport::upi;

TEST_SUITE("tripoly") {

TEST_CASE("terms iterate in lexicographic exponent order") {
    const TriPoly p = tpi({{2, 0, 1, 1}, {0, 1, 0, 1}, {2, 0, 0, 1}, {0, 0, 0, 5}});
    std::vector<TriExp> order;
    for (const auto& [e, c] : p.terms()) order.push_back(e);
    REQUIRE(order.size() == 4);
    CHECK(order[0] == TriExp{0, 0, 0});
    CHECK(order[1] == TriExp{0, 1, 0});
    CHECK(order[2] == TriExp{2, 0, 0});
    CHECK(order[3] == TriExp{2, 0, 1});
}

TEST_CASE("arithmetic identities") {
    const TriPoly one(Rational(1));
    const TriPoly tuv = TriPoly::monomial({1, 1, 1}, Rational(1));
    CHECK((one + tuv) * (one - tuv) == one - tuv * tuv);
    CHECK((one + tuv).pow(3) ==
          tpi({{0, 0, 0, 1}, {1, 1, 1, 3}, {2, 2, 2, 3}, {3, 3, 3, 1}}));
    CHECK(tuv - tuv == TriPoly());
    CHECK(TriPoly().is_zero());
}

TEST_CASE("evaluate agrees with specialize_t") {
    const TriPoly p = tpi({{0, 0, 0, 2}, {1, 1, 1, -3}, {3, 2, 1, 5}});
    const Rational t0 = Rational::parse("-4/3"), u0 = Rational::parse("1/2"), v0 = Rational(3);
    const TriPoly pt = p.specialize_t(t0);
    CHECK(pt.degrees()[0] == 0u);
    // Once t is gone, the t argument of evaluate is irrelevant.
    CHECK(pt.evaluate(Rational(99), u0, v0) == p.evaluate(t0, u0, v0));
}

TEST_CASE("specialize_uv_one matches evaluation at u = v = 1") {
    const TriPoly p = tpi({{0, 0, 0, 1}, {2, 1, 1, 4}, {5, 3, 3, -2}});
    const UniPoly q = p.specialize_uv_one();
    for (const char* ts : {"0", "1", "-1", "7/5"}) {
        const Rational t = Rational::parse(ts);
        CHECK(q.evaluate(t) == p.evaluate(t, Rational(1), Rational(1)));
    }
}

TEST_CASE("collapse_uv round-trips through expand_uv when u and v agree") {
    const TriPoly p = tpi({{0, 0, 0, 1}, {2, 1, 1, 4}, {5, 3, 3, -2}});
    const BiPoly b = p.collapse_uv();
    CHECK(b.expand_uv() == p);
}

TEST_CASE("collapse_uv rejects asymmetric exponents with the offending term") {
    const TriPoly p = tpi({{1, 2, 1, 1}});  // t u^2 v
    CHECK_THROWS_AS(p.collapse_uv(), ratell::NotCollapsibleError);
}

TEST_CASE("from_unipoly_in_t embeds with zero u, v exponents") {
    const UniPoly q = upi({{0, 1}, {3, -2}});
    const TriPoly p = TriPoly::from_unipoly_in_t(q);
    CHECK(p == tpi({{0, 0, 0, 1}, {3, 0, 0, -2}}));
    CHECK(p.specialize_uv_one() == q);
}

TEST_CASE("degrees reports per-variable maxima") {
    const TriPoly p = tpi({{2, 0, 1, 1}, {1, 5, 0, 1}});
    const auto d = p.degrees();
    CHECK(d[0] == 2u);
    CHECK(d[1] == 5u);
    CHECK(d[2] == 1u);
}

TEST_CASE("coefficient flag helpers") {
    CHECK(tpi({{1, 1, 1, 2}, {0, 0, 0, 1}}).has_nonnegative_coefficients());
    CHECK(!tpi({{1, 1, 1, -2}}).has_nonnegative_coefficients());
    CHECK(tpi({{1, 1, 1, 2}}).has_integer_coefficients());
    CHECK(!TriPoly(Rational::parse("1/2")).has_integer_coefficients());
}

}  // TEST_SUITE
