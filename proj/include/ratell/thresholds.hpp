#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ratell/bernstein.hpp"
#include "ratell/certificate.hpp"
#include "ratell/falsifier.hpp"
#include "ratell/spaces.hpp"
#include "ratell/sturm.hpp"

namespace ratell {

// D_n = p_coh^n - n p_pi, the polynomial whose strict positivity on
// [eps, inf) is the defining inequality of the stabilization threshold.
UniPoly difference_poly(const EllipticSpace& X, unsigned n);

// Mixed Hodge analog mh_coh^n - n mh_pi.  Throws MissingHodgeDataError.
TriPoly mh_difference_poly(const EllipticSpace& X, unsigned n);

// Does n p_pi(t) < p_coh(t)^n hold for every t >= eps?  Decided exactly via
// certify_positive_on_ray(D_n, eps).
struct RayCheck {
    bool holds = false;
    RayCertificate certificate;
};
RayCheck inequality_holds(const EllipticSpace& X, unsigned n, const Rational& eps);

// Least M >= 1 with M (p_coh(eps) - 1) >= 1.  Contract: if the inequality
// holds at some m >= M, it holds at every n >= m (induction on n, using
// min_{t >= eps} p_coh(t) = p_coh(eps) by nonnegativity of coefficients).
// Throws DegenerateSpaceError when p_coh = 1 (the point; thresholds are 1
// outright) and CapExceededError if M does not fit in an unsigned long.
unsigned long stability_bound(const EllipticSpace& X, const Rational& eps);

// Box analog of inequality_holds; holds is nullopt when the subdivision hit
// max_depth undecided.  Throws MissingHodgeDataError, and
// ParameterOutOfRangeError unless the box is three intervals in the strictly
// positive orthant.
struct BoxCheck {
    std::optional<bool> holds;
    BoxCertificate certificate;
};
BoxCheck mhp_inequality_holds(const EllipticSpace& X, unsigned n, const Box& box,
                              unsigned max_depth = 64);

// Once the per-n search reaches a success at n >= anchor, all larger n are
// covered.  The anchor is min(M, N_tail): M is stability_bound's induction
// argument; N_tail, when one exists below M, is certified by two
// fixed-degree positivity certificates with z := coh - 1 >= 0:
//     G_N = 1 + N z + binom(N,2) z^2 - N pi   > 0 on the region,
//     H_N = (N - 1/2) z^2 + z - pi            > 0 on the region.
// For fixed point x, phi(nu) = 1 + nu z + nu(nu-1)/2 z^2 - nu pi is convex
// in nu with phi(N) = G_N(x) > 0 and phi'(N) = H_N(x) > 0, so phi(n) > 0
// for all n >= N; and coh^n = (1+z)^n >= 1 + n z + binom(n,2) z^2 termwise,
// hence D_n >= phi(n) > 0.  This replaces up to M per-n certifications of
// unbounded degree by two of degree <= max(2 deg coh, deg pi).
template <typename Certificate>
struct TailCertificate {
    unsigned long n_from = 0;
    Certificate g;
    Certificate h;
};

// One record of the search: was the inequality certified at this n?
struct PerN {
    unsigned long n = 0;
    std::optional<bool> holds;  // nullopt = undecided (box searches only)
    std::variant<RayCertificate, BoxCertificate> certificate;
};

struct RayRegion {
    Rational epsilon;
};
struct BoxRegion {
    Box box;  // [a,r] x [b,r] x [c,r]
};

// Deterministic counterexample sweep beyond the certified box (the defining
// region is unbounded; the certificate covers the box, and the gap is
// probed, not ignored).
struct UnboundedProbe {
    Box box;
    unsigned long n = 0;
    FalsifierResult result;
};

// Full evidence of a threshold computation.  threshold is nullopt only when
// a box search left some n undecided above the largest failure.  Invariants
// (when decided): holds is false at n = threshold - 1 if threshold > 1,
// holds is true at every recorded n >= threshold, and the record contains a
// success at some n >= stability_bound.  stability_bound is the anchor
// actually used; induction_bound is the bound M of the stability_bound
// operation (anchor <= M; they differ exactly when a tail certificate
// tightened the search).
struct ThresholdReport {
    std::optional<unsigned long> threshold;
    unsigned long stability_bound = 1;
    unsigned long induction_bound = 1;
    std::vector<PerN> per_n;
    std::variant<RayRegion, BoxRegion> region;
    std::optional<TailCertificate<RayCertificate>> ray_tail;
    std::optional<TailCertificate<BoxCertificate>> box_tail;
    std::optional<UnboundedProbe> probe;
};

// Smallest n0 such that the inequality holds for every n >= n0 and t >= eps.
// Checks n = 1, 2, ... exhaustively until a success at n >= anchor;
// threshold = 1 + the largest failing n (1 when none fail).  The point has
// threshold 1 outright.  Throws ParameterOutOfRangeError (eps <= 0),
// DegenerateSpaceError (p_coh = 1 with p_pi != 0: no threshold exists), and
// CapExceededError past n_cap.
ThresholdReport pp_threshold(const EllipticSpace& X, const Rational& eps,
                             unsigned long n_cap = 10000);

// Box-certified mixed Hodge threshold on [a,r] x [b,r] x [c,r]; the same
// search with mhp_inequality_holds deciding each n and M computed from
// mh_coh(a,b,c).  Undecided box outcomes above the largest failure make the
// result Undecided (threshold = nullopt), never a value.  A decided run adds
// an UnboundedProbe of D_threshold on [a,4r] x [b,4r] x [c,4r] (2048
// samples).  Throws MissingHodgeDataError, DegenerateSpaceError
// (mh_coh(a,b,c) = 1), ParameterOutOfRangeError (a,b,c <= 0 or
// r <= max(a,b,c)), and CapExceededError.
ThresholdReport mhp_threshold(const EllipticSpace& X, const Rational& a, const Rational& b,
                              const Rational& c, const Rational& r, unsigned max_depth = 64,
                              unsigned long n_cap = 10000);

// One monomial a_l t^l of p_pi worked through the analytic recipe:
// with q = deg p_coh, b_q its top coefficient, m = #monomials of p_pi and
// K = m a_l:
//   s       = least integer with s >= 2 and s q > l
//   n_hat   = least n >= s with K / b_q^s <= binom(n,s) / n
//   n_tilde = (only eps <= 1) an integer exceeding every root of
//             K y = (1 + b_q eps^q)^y, certified by (1+c)^Y > K Y and
//             c (1+c)^{Y-1} >= K with c = b_q eps^q.  For c >= 1/1024 the
//             least such Y is found exactly (the conditions are monotone;
//             doubling + bisection).  For smaller c the exact powers of
//             1+c near the crossing grow astronomically wide, so a sound
//             over-approximation Y = B 2^k with (1+c)^B >= 2 is returned
//             instead; u stays a valid upper bound either way.
//   u       = max(n_hat, n_tilde) for eps <= 1, n_hat for eps > 1
struct MonomialBound {
    unsigned degree = 0;
    Int coefficient;
    Int K;
    unsigned long s = 0;
    unsigned long n_hat = 0;
    std::optional<unsigned long> n_tilde;
    unsigned long u = 0;
};

struct UpperBoundReport {
    unsigned long u = 0;
    bool case_b = false;  // eps > 1
    std::vector<MonomialBound> monomials;
};

// Analytic upper bound: pp_threshold(X, eps) <= u, proved monomial by
// monomial.  Throws ParameterOutOfRangeError (eps <= 0) and
// DegenerateSpaceError (p_pi = 0 or p_coh = 1).  NoFiniteBoundError is
// declared by the n_hat step but unreachable: s >= 2 makes binom(n,s)/n
// strictly increasing and unbounded.
UpperBoundReport analytic_upper_bound(const EllipticSpace& X, const Rational& eps);

}  // namespace ratell
