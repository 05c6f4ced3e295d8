#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "ratell/errors.hpp"
#include "ratell/sturm.hpp"
#include "ratell/unipoly.hpp"
#include "oracle.hpp"
#include "support.hpp"

using ratell::Rational;
using ratell::UniPoly;
using ratell::Verdict;
using testsupport::upi;

namespace {

// t - r for rational r.
UniPoly linear_root(const Rational& r) {
    return UniPoly::from_terms({{1u, Rational(1)}, {0u, -r}});
}

}  // namespace

TEST_SUITE("sturm") {

TEST_CASE("chain of t^2 - 2 matches the textbook chain up to positive scalars") {
    const auto chain = ratell::sturm_chain(upi({{2, 1}, {0, -2}})).chain;
    const std::vector<UniPoly> textbook = {upi({{2, 1}, {0, -2}}), upi({{1, 2}}), upi({{0, 2}})};
    REQUIRE(chain.size() == textbook.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        REQUIRE(!chain[i].is_zero());
        CHECK(chain[i].degree() == textbook[i].degree());
        // Proportional with a positive ratio: sign data is what matters.
        const Rational ratio = textbook[i].leading_coefficient() / chain[i].leading_coefficient();
        CHECK(ratio > Rational(0));
        std::vector<std::pair<unsigned, Rational>> scaled_terms;
        for (const auto& [d, c] : chain[i].terms()) scaled_terms.emplace_back(d, c * ratio);
        CHECK(UniPoly::from_terms(scaled_terms) == textbook[i]);
    }
}

TEST_CASE("chain reduces multiple roots to the square-free part") {
    const auto chain = ratell::sturm_chain(upi({{1, 1}, {0, -1}}).pow(2)).chain;
    REQUIRE(!chain.empty());
    CHECK(chain.front() == upi({{1, 1}, {0, -1}}));
}

TEST_CASE("count_roots_in on pinned polynomials") {
    // (t^3 - 1)(t + 1) = t^4 + t^3 - t - 1: real roots 1 and -1.
    const UniPoly p = upi({{4, 1}, {3, 1}, {1, -1}, {0, -1}});
    CHECK(ratell::count_roots_in(p, Rational(-2), Rational(2)) == 2);
    CHECK(ratell::count_roots_in(p, Rational(0)) == 1);
    CHECK(ratell::count_roots_in(upi({{2, 1}, {0, -2}}), Rational(1)) == 1);
    CHECK(ratell::count_roots_in(upi({{2, 1}, {0, 1}}), Rational(-10)) == 0);
    // (1 + t^2)^3 - 3(t^2 + t^3) has no root in (1, inf).
    const UniPoly d3 = upi({{0, 1}, {2, 3}, {4, 3}, {6, 1}}) - upi({{2, 3}, {3, 3}});
    CHECK(ratell::count_roots_in(d3, Rational(1)) == 0);
    // Multiplicities collapse: (t-1)^2 (t-3) has two distinct roots in (0, 4].
    CHECK(ratell::count_roots_in(upi({{1, 1}, {0, -1}}).pow(2) * upi({{1, 1}, {0, -3}}),
                                 Rational(0), Rational(4)) == 2);
    // Right endpoint is included.
    CHECK(ratell::count_roots_in(upi({{1, 1}, {0, -4}}), Rational(0), Rational(4)) == 1);
}

TEST_CASE("count_roots_in error contract") {
    CHECK_THROWS_AS(ratell::count_roots_in(UniPoly(), Rational(0)), ratell::ZeroPolynomialError);
    CHECK_THROWS_AS(ratell::count_roots_in(upi({{1, 1}}), Rational(0)),
                    ratell::RootAtLeftEndpointError);
    // A multiple root at lo is still a root of the square-free part.
    CHECK_THROWS_AS(ratell::count_roots_in(upi({{1, 1}, {0, -1}}).pow(2), Rational(1)),
                    ratell::RootAtLeftEndpointError);
    CHECK_THROWS_AS(ratell::count_roots_in(upi({{1, 1}}), Rational(2), Rational(1)),
                    ratell::ParameterOutOfRangeError);
}

TEST_CASE("random polynomials: Sturm counts equal the Descartes bisection oracle") {
    std::mt19937_64 rng(20260814);
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
        std::vector<std::pair<unsigned, Rational>> terms;
        const unsigned deg = 1 + static_cast<unsigned>(rng() % 8);
        for (unsigned d = 0; d <= deg; ++d) {
            const long c = static_cast<long>(rng() % 19) - 9;
            if (c != 0 || d == deg) terms.emplace_back(d, Rational(c == 0 ? 3 : c));
        }
        const UniPoly p = UniPoly::from_terms(terms);
        for (int j = 0; j < 8; ++j) {
            const long a = static_cast<long>(rng() % 41) - 20;
            const long w = 1 + static_cast<long>(rng() % 10);
            const long den = 1 + static_cast<long>(rng() % 4);
            const Rational lo{ratell::Int(a), ratell::Int(den)};
            const Rational hi = lo + Rational{ratell::Int(w), ratell::Int(den)};
            if (p.evaluate(lo).is_zero()) continue;
            CAPTURE(p.to_string());
            CAPTURE(lo.to_string());
            CAPTURE(hi.to_string());
            CHECK(ratell::count_roots_in(p, lo, hi) == testsupport::count_roots_oracle(p, lo, hi));
            CHECK(ratell::count_roots_in(p, lo) == testsupport::count_roots_oracle(p, lo));
            ++compared;
        }
    }
    CHECK(compared > 400);
}

TEST_CASE("constructed roots are counted exactly") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 25; ++i) {
        // Product of distinct rational linear factors times a rootless factor.
        std::vector<Rational> roots;
        UniPoly p = upi({{2, 1}, {0, 1}});
        for (int j = 0, m = 1 + static_cast<int>(rng() % 4); j < m; ++j) {
            const Rational r(ratell::Int(static_cast<long>(rng() % 21) - 10),
                             ratell::Int(1 + static_cast<long>(rng() % 3)));
            bool dup = false;
            for (const auto& s : roots) dup = dup || s == r;
            if (dup) continue;
            roots.push_back(r);
            p = p * linear_root(r);
        }
        const Rational lo(ratell::Int(static_cast<long>(rng() % 21) - 10), ratell::Int(2));
        const Rational hi = lo + Rational(1 + static_cast<long>(rng() % 12));
        if (p.evaluate(lo).is_zero()) continue;
        int expected = 0;
        for (const auto& r : roots)
            if (lo < r && r <= hi) ++expected;
        CAPTURE(p.to_string());
        CHECK(ratell::count_roots_in(p, lo, hi) == expected);
    }
}

TEST_CASE("certify_positive_on_ray: Positive through the Sturm path") {
    const auto cert = ratell::certify_positive_on_ray(upi({{2, 1}, {1, -3}, {0, 3}}), Rational(1));
    CHECK(cert.verdict == Verdict::Positive);
    CHECK(cert.sturm_ran);
    CHECK(cert.value_at_epsilon == Rational(1));
    CHECK(cert.variations_at_epsilon == cert.variations_at_infinity);
}

TEST_CASE("certify_positive_on_ray: termwise-nonnegative fast path skips Sturm") {
    const auto cert = ratell::certify_positive_on_ray(upi({{2, 1}, {0, 1}}), Rational(1));
    CHECK(cert.verdict == Verdict::Positive);
    CHECK(!cert.sturm_ran);
    CHECK(cert.value_at_epsilon == Rational(2));
}

TEST_CASE("certify_positive_on_ray: failure at epsilon itself") {
    const auto cert = ratell::certify_positive_on_ray(upi({{1, 1}, {0, -5}}), Rational(1));
    CHECK(cert.verdict == Verdict::NonPositive);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->point == std::vector<Rational>{Rational(1)});
    CHECK(cert.witness->value == Rational(-4));
}

TEST_CASE("certify_positive_on_ray: sign change beyond epsilon yields an exact witness") {
    // (t-2)(t-3): positive at 1, negative between the roots.
    const auto cert = ratell::certify_positive_on_ray(upi({{2, 1}, {1, -5}, {0, 6}}), Rational(1));
    CHECK(cert.verdict == Verdict::NonPositive);
    REQUIRE(cert.witness.has_value());
    REQUIRE(cert.witness->point.size() == 1);
    CHECK(cert.witness->point[0] > Rational(1));
    CHECK(cert.witness->value.sign() <= 0);
    const UniPoly p = upi({{2, 1}, {1, -5}, {0, 6}});
    CHECK(p.evaluate(cert.witness->point[0]) == cert.witness->value);
}

TEST_CASE("certify_positive_on_ray: rational touch point is found exactly") {
    const auto cert = ratell::certify_positive_on_ray(upi({{1, 1}, {0, -2}}).pow(2), Rational(1));
    CHECK(cert.verdict == Verdict::NonPositive);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->point[0] == Rational(2));
    CHECK(cert.witness->value == Rational(0));
}

TEST_CASE("certify_positive_on_ray: irrational touch point yields an isolating bracket") {
    // (t^2 - 2)^2 vanishes only at sqrt(2) on the ray; no rational witness exists.
    const auto cert = ratell::certify_positive_on_ray(upi({{2, 1}, {0, -2}}).pow(2), Rational(1));
    CHECK(cert.verdict == Verdict::NonPositive);
    CHECK(!cert.witness.has_value());
    REQUIRE(cert.touch_bracket.has_value());
    const auto& br = *cert.touch_bracket;
    CHECK(br.lo >= Rational(1));
    CHECK(br.lo < br.hi);
    // The bracket isolates sqrt(2): lo^2 < 2 < hi^2.
    CHECK(br.lo * br.lo < Rational(2));
    CHECK(br.hi * br.hi > Rational(2));
}

TEST_CASE("certify_positive_on_ray error contract") {
    CHECK_THROWS_AS(ratell::certify_positive_on_ray(UniPoly(), Rational(1)),
                    ratell::ZeroPolynomialError);
    CHECK_THROWS_AS(ratell::certify_positive_on_ray(upi({{0, 1}}), Rational(0)),
                    ratell::ParameterOutOfRangeError);
    CHECK_THROWS_AS(ratell::certify_positive_on_ray(upi({{0, 1}}), Rational(-1)),
                    ratell::ParameterOutOfRangeError);
}

}  // TEST_SUITE
