#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "ratell/bernstein.hpp"
#include "ratell/errors.hpp"
#include "support.hpp"

using ratell::BernsteinTensor;
using ratell::Box;
using ratell::BoxStatus;
using ratell::Interval;
using ratell::Rational;
using ratell::TriPoly;
using ratell::UniPoly;
using ratell::Verdict;
using testsupport::tpi;
using testsupport::upi;

namespace {

Rational rnd_rat(std::mt19937_64& rng, long span) {
    return Rational(ratell::Int(static_cast<long>(rng() % (2 * span + 1)) - span),
                    ratell::Int(1 + static_cast<long>(rng() % 4)));
}

TriPoly random_tri(std::mt19937_64& rng) {
    TriPoly p;
    for (int i = 0, m = 2 + static_cast<int>(rng() % 6); i < m; ++i) {
        const unsigned k = static_cast<unsigned>(rng() % 4);
        const unsigned pu = static_cast<unsigned>(rng() % 4);
        const unsigned qv = static_cast<unsigned>(rng() % 4);
        const long c = static_cast<long>(rng() % 11) - 5;
        p = p + TriPoly::monomial({k, pu, qv}, Rational(c == 0 ? 1 : c));
    }
    if (p.is_zero()) p = TriPoly(Rational(1));
    return p;
}

Box random_box(std::mt19937_64& rng) {
    Box box;
    for (int axis = 0; axis < 3; ++axis) {
        const Rational lo = rnd_rat(rng, 4);
        box.iv.push_back({lo, lo + Rational(1 + static_cast<long>(rng() % 3))});
    }
    return box;
}

Rational sample_in(std::mt19937_64& rng, const Interval& iv) {
    // lo + width * j/16 for j in [0, 16].
    return iv.lo + iv.width() * Rational(ratell::Int(static_cast<long>(rng() % 17)), ratell::Int(16));
}

}  // namespace

TEST_SUITE("bernstein") {

TEST_CASE("pinned univariate coefficients on [0,1]") {
    CHECK(ratell::bernstein_coefficients(upi({{1, 1}}), {Rational(0), Rational(1)}) ==
          std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(ratell::bernstein_coefficients(upi({{0, 1}, {1, 1}}), {Rational(0), Rational(1)}) ==
          std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(ratell::bernstein_coefficients(upi({{2, 1}, {1, -1}, {0, 1}}),
                                         {Rational(0), Rational(1)}) ==
          std::vector<Rational>{Rational(1), Rational::parse("1/2"), Rational(1)});
}

TEST_CASE("univariate endpoints interpolate") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        std::vector<std::pair<unsigned, Rational>> terms;
        for (unsigned d = 0; d <= 4; ++d) terms.emplace_back(d, rnd_rat(rng, 6));
        const UniPoly p = UniPoly::from_terms(terms);
        if (p.is_zero()) continue;
        const Rational lo = rnd_rat(rng, 3);
        const Interval iv{lo, lo + Rational(2)};
        const auto b = ratell::bernstein_coefficients(p, iv);
        REQUIRE(!b.empty());
        CHECK(b.front() == p.evaluate(iv.lo));
        CHECK(b.back() == p.evaluate(iv.hi));
    }
}

TEST_CASE("univariate enclosure brackets sampled values") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 20; ++i) {
        std::vector<std::pair<unsigned, Rational>> terms;
        for (unsigned d = 0; d <= 5; ++d) terms.emplace_back(d, rnd_rat(rng, 5));
        const UniPoly p = UniPoly::from_terms(terms);
        if (p.is_zero()) continue;
        const Rational lo = rnd_rat(rng, 3);
        const Interval iv{lo, lo + Rational(3)};
        const auto b = ratell::bernstein_coefficients(p, iv);
        Rational bmin = b.front(), bmax = b.front();
        for (const auto& c : b) {
            if (c < bmin) bmin = c;
            if (c > bmax) bmax = c;
        }
        for (int j = 0; j < 25; ++j) {
            const Rational x = sample_in(rng, iv);
            const Rational val = p.evaluate(x);
            CHECK(bmin <= val);
            CHECK(val <= bmax);
        }
    }
}

TEST_CASE("error contract") {
    CHECK_THROWS_AS(ratell::bernstein_coefficients(UniPoly(), {Rational(0), Rational(1)}),
                    ratell::ZeroPolynomialError);
    CHECK_THROWS_AS(ratell::bernstein_coefficients(upi({{1, 1}}), {Rational(1), Rational(0)}),
                    ratell::ParameterOutOfRangeError);
    Box bad;
    bad.iv = {{Rational(0), Rational(1)}, {Rational(0), Rational(1)}};
    CHECK_THROWS_AS(ratell::bernstein_coefficients(TriPoly(Rational(1)), bad),
                    ratell::ParameterOutOfRangeError);
    CHECK_THROWS_AS(ratell::bernstein_coefficients(TriPoly(), Box{{{Rational(0), Rational(1)},
                                                                   {Rational(0), Rational(1)},
                                                                   {Rational(0), Rational(1)}}}),
                    ratell::ZeroPolynomialError);
}

TEST_CASE("tensor corners equal polynomial values at box corners") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        const TriPoly p = random_tri(rng);
        const Box box = random_box(rng);
        const BernsteinTensor t = ratell::bernstein_coefficients(p, box);
        const auto d = t.degrees();
        for (int ci = 0; ci < 2; ++ci)
            for (int cj = 0; cj < 2; ++cj)
                for (int ck = 0; ck < 2; ++ck) {
                    const Rational x = ci ? box.iv[0].hi : box.iv[0].lo;
                    const Rational y = cj ? box.iv[1].hi : box.iv[1].lo;
                    const Rational z = ck ? box.iv[2].hi : box.iv[2].lo;
                    CHECK(t.at(ci ? d[0] : 0, cj ? d[1] : 0, ck ? d[2] : 0) ==
                          p.evaluate(x, y, z));
                }
    }
}

TEST_CASE("tensor enclosure brackets sampled values and tightens under split") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        const TriPoly p = random_tri(rng);
        const Box box = random_box(rng);
        const BernsteinTensor t = ratell::bernstein_coefficients(p, box);
        const auto [lo, hi] = t.coefficient_range();
        for (int j = 0; j < 20; ++j) {
            const Rational val = p.evaluate(sample_in(rng, box.iv[0]), sample_in(rng, box.iv[1]),
                                            sample_in(rng, box.iv[2]));
            CHECK(lo <= val);
            CHECK(val <= hi);
        }
        for (unsigned axis = 0; axis < 3; ++axis) {
            const auto [left, right] = t.split(axis);
            for (const auto* half : {&left, &right}) {
                const auto [hlo, hhi] = half->coefficient_range();
                CHECK(hlo >= lo);
                CHECK(hhi <= hi);
            }
        }
    }
}

TEST_CASE("split halves reproduce the tensors of the half-boxes") {
    std::mt19937_64 rng(9);
    const TriPoly p = random_tri(rng);
    Box box;
    box.iv = {{Rational(1), Rational(3)}, {Rational(0), Rational(2)}, {Rational(2), Rational(4)}};
    const BernsteinTensor whole = ratell::bernstein_coefficients(p, box);
    for (unsigned axis = 0; axis < 3; ++axis) {
        const auto [left, right] = whole.split(axis);
        Box lo_box = box, hi_box = box;
        const Rational mid = box.iv[axis].midpoint();
        lo_box.iv[axis].hi = mid;
        hi_box.iv[axis].lo = mid;
        const BernsteinTensor expect_lo = ratell::bernstein_coefficients(p, lo_box);
        const BernsteinTensor expect_hi = ratell::bernstein_coefficients(p, hi_box);
        const auto d = whole.degrees();
        for (unsigned i = 0; i <= d[0]; ++i)
            for (unsigned j = 0; j <= d[1]; ++j)
                for (unsigned k = 0; k <= d[2]; ++k) {
                    CHECK(left.at(i, j, k) == expect_lo.at(i, j, k));
                    CHECK(right.at(i, j, k) == expect_hi.at(i, j, k));
                }
    }
}

TEST_CASE("certify_positive_on_box: positive coefficients certify at the root") {
    const Box box{{{Rational(1), Rational(10)}, {Rational(1), Rational(10)},
                   {Rational(1), Rational(10)}}};
    const auto cert = ratell::certify_positive_on_box(tpi({{0, 0, 0, 1}, {2, 1, 1, 1}}), box, 0);
    CHECK(cert.verdict == Verdict::Positive);
    REQUIRE(cert.root != nullptr);
    CHECK(cert.root->status == BoxStatus::CertifiedLeaf);
    CHECK(cert.node_count == 1);
}

TEST_CASE("certify_positive_on_box: corner witness is found before any split") {
    const Box box{{{Rational(0), Rational(1)}, {Rational(0), Rational(1)},
                   {Rational(0), Rational(1)}}};
    // t u v - 1 <= 0 on the whole box, = 0 at the (1,1,1) corner.
    const auto cert =
        ratell::certify_positive_on_box(tpi({{1, 1, 1, 1}, {0, 0, 0, -1}}), box, 8);
    CHECK(cert.verdict == Verdict::NonPositive);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->value.sign() <= 0);
}

TEST_CASE("certify_positive_on_box: interior dip is refuted by center sampling") {
    // 4(t^2-t) + 4(u^2-u) + 4(v^2-v) + 3: value 3 at every corner of
    // [0,1]^3 but exactly 0 at the center, and 0 is a strictness failure.
    const TriPoly p =
        tpi({{2, 0, 0, 4}, {1, 0, 0, -4}, {0, 2, 0, 4}, {0, 1, 0, -4},
             {0, 0, 2, 4}, {0, 0, 1, -4}, {0, 0, 0, 3}});
    const Box box{{{Rational(0), Rational(1)}, {Rational(0), Rational(1)},
                   {Rational(0), Rational(1)}}};
    const auto cert = ratell::certify_positive_on_box(p, box, 16);
    CHECK(cert.verdict == Verdict::NonPositive);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->value.sign() <= 0);
    CHECK(p.evaluate(cert.witness->point[0], cert.witness->point[1], cert.witness->point[2]) ==
          cert.witness->value);
}

TEST_CASE("certify_positive_on_box: Undecided at depth 0 for a positive but untight input") {
    // (t - 1/2)^2 + 1/100 on [0,1]: strictly positive, but the degree-2
    // Bernstein coefficients on the whole box dip negative, so depth 0
    // cannot decide and sampling finds no witness.
    const TriPoly p = tpi({{2, 0, 0, 100}, {1, 0, 0, -100}}) + TriPoly(Rational(26));
    const Box box{{{Rational(0), Rational(1)}, {Rational(0), Rational(1)},
                   {Rational(0), Rational(1)}}};
    const auto cert = ratell::certify_positive_on_box(p, box, 0);
    CHECK(cert.verdict == Verdict::Undecided);
    CHECK(!cert.witness.has_value());
    const auto deeper = ratell::certify_positive_on_box(p, box, 8);
    CHECK(deeper.verdict == Verdict::Positive);
    CHECK(deeper.node_count > 1);
}

TEST_CASE("certificate tree structure is consistent") {
    const TriPoly p = tpi({{2, 0, 0, 100}, {1, 0, 0, -100}}) + TriPoly(Rational(26));
    const Box box{{{Rational(0), Rational(1)}, {Rational(0), Rational(1)},
                   {Rational(0), Rational(1)}}};
    const auto cert = ratell::certify_positive_on_box(p, box, 8);
    REQUIRE(cert.root != nullptr);
    unsigned nodes = 0, max_depth_seen = 0;
    const std::function<void(const ratell::BoxNode&)> walk = [&](const ratell::BoxNode& n) {
        ++nodes;
        if (n.depth > max_depth_seen) max_depth_seen = n.depth;
        if (n.status == BoxStatus::Split) {
            REQUIRE(n.lower != nullptr);
            REQUIRE(n.upper != nullptr);
            CHECK(n.split_axis >= 0);
            walk(*n.lower);
            walk(*n.upper);
        } else {
            CHECK(n.lower == nullptr);
            CHECK(n.upper == nullptr);
            if (n.status == BoxStatus::CertifiedLeaf) {
                REQUIRE(n.coeff_min.has_value());
                CHECK(*n.coeff_min > Rational(0));
            }
        }
    };
    walk(*cert.root);
    CHECK(nodes == cert.node_count);
    CHECK(max_depth_seen == cert.deepest_depth);
}

}  // TEST_SUITE
