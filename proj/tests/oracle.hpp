#pragma once

// Independent root-counting oracle used to cross-check the Sturm kernel.
//
// Counts distinct real roots in (lo, hi] by Descartes-style bisection on
// exact Bernstein coefficients: with b the Bernstein coefficients of a
// square-free q on [a, b] and V the number of sign changes in b (zeros
// skipped), the root count of q in the open interval (a, b) is at most V and
// has the same parity when q(a), q(b) != 0 -- so V = 0 decides "none" and
// V = 1 decides "exactly one", and anything else bisects at the midpoint.
// Termination for square-free inputs is the classical Vincent property.
//
// Deliberately disjoint machinery from src/sturm.cpp: square-free reduction
// goes through UniPoly::square_free_part (monic Euclidean gcd), the counting
// through bernstein_coefficients.

#include <optional>

#include "ratell/bernstein.hpp"
#include "ratell/rational.hpp"
#include "ratell/unipoly.hpp"

namespace testsupport {

inline int sign_variations(const std::vector<ratell::Rational>& b) {
    int v = 0;
    int last = 0;
    for (const auto& c : b) {
        const int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Roots of square-free q in the open interval (a, b); requires q(a), q(b) != 0
// (the V = 1 => exactly-one conclusion rests on the endpoint-sign parity).
inline int count_open(const ratell::UniPoly& q, const ratell::Rational& a,
                      const ratell::Rational& b) {
    const int v = sign_variations(ratell::bernstein_coefficients(q, {a, b}));
    if (v <= 1) return v;
    const ratell::Rational m = (a + b) / ratell::Rational(2);
    if (q.evaluate(m).is_zero()) {
        // Peel the midpoint root so both half-interval endpoints are
        // nonroots again; q is square-free, so one division removes it.
        const auto [quot, rem] = ratell::UniPoly::div_rem(
            q, ratell::UniPoly::from_terms({{1u, ratell::Rational(1)}, {0u, -m}}));
        return count_open(quot, a, m) + 1 + count_open(quot, m, b);
    }
    return count_open(q, a, m) + count_open(q, m, b);
}

// Distinct real roots of p in (lo, hi]; requires p(lo) != 0.  hi = nullopt
// counts (lo, +inf) via the Cauchy root bound.
inline int count_roots_oracle(const ratell::UniPoly& p, const ratell::Rational& lo,
                              const std::optional<ratell::Rational>& hi = std::nullopt) {
    ratell::UniPoly q = p.square_free_part();
    ratell::Rational top;
    if (hi) {
        top = *hi;
    } else {
        // Every real root r has |r| <= root_bound(), so (lo, B) with any
        // larger B captures the whole ray.
        top = q.root_bound() + ratell::Rational(1);
        if (top <= lo) return 0;
    }
    int extra = 0;
    if (q.evaluate(top).is_zero()) {
        // Simple root exactly at the right endpoint: peel it off so the open
        // count below has nonvanishing endpoints.
        const auto [quot, rem] =
            ratell::UniPoly::div_rem(q, ratell::UniPoly::from_terms({{1u, ratell::Rational(1)},
                                                                     {0u, -top}}));
        q = quot;
        extra = hi ? 1 : 0;  // +inf counts the open ray only
        if (q.is_zero()) return extra;
        if (q.degree() == 0u) return extra;
    }
    return extra + count_open(q, lo, top);
}

}  // namespace testsupport
