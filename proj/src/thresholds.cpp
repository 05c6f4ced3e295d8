#include "ratell/thresholds.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "ratell/errors.hpp"

namespace ratell {

namespace {

Rational rational_of(unsigned long n) { return Rational(Int(n)); }

// Least M >= 1 with M * gap >= 1, as an unsigned long.
unsigned long least_multiplier(const Rational& gap, const char* who) {
    Int M = (Rational(1) / gap).ceil();
    if (M < 1) M = 1;
    if (!M.fits_ulong_p())
        throw CapExceededError(std::string(who) + ": induction bound " + M.get_str() +
                               " does not fit in an unsigned long");
    return M.get_ui();
}

void check_search_n(unsigned long n) {
    if (n > std::numeric_limits<unsigned>::max())
        throw CapExceededError("threshold search reached n = " + std::to_string(n) +
                               ", beyond the largest supported exponent");
}

// Tail search shared by the ray and box protocols.  Certify is
// (poly, name) -> optional<Certificate>, returning the certificate only on a
// Positive verdict.  Returns the first N in [1, min(M-1, 64)] whose G_N and
// H_N both certify; past that point every per-n check from N on must
// succeed, so N replaces M as the search anchor.
template <typename Poly, typename Certificate, typename CertifyFn>
std::optional<TailCertificate<Certificate>> find_tail(const Poly& pi, const Poly& coh,
                                                      unsigned long M, CertifyFn certify) {
    if (M <= 1) return std::nullopt;
    const Poly one(Rational(1));
    const Poly z = coh - one;
    // Soundness of D_n >= phi(n) needs z >= 0 pointwise on the region, which
    // termwise nonnegativity supplies (the region lies in the positive
    // orthant).  Univariate z always passes this by the space invariants.
    if (!z.has_nonnegative_coefficients()) return std::nullopt;
    const Poly z2 = z * z;
    const unsigned long n_max = std::min<unsigned long>(M - 1, 64);
    for (unsigned long N = 1; N <= n_max; ++N) {
        const Rational rn = rational_of(N);
        const Poly g = one + rn * z + Rational(binomial(N, 2)) * z2 - rn * pi;
        const Poly h = Rational(Int(2 * N - 1), Int(2)) * z2 + z - pi;
        if (g.is_zero() || h.is_zero()) continue;
        std::optional<Certificate> cg = certify(g);
        if (!cg) continue;
        std::optional<Certificate> ch = certify(h);
        if (!ch) continue;
        return TailCertificate<Certificate>{N, std::move(*cg), std::move(*ch)};
    }
    return std::nullopt;
}

std::optional<TailCertificate<RayCertificate>> find_ray_tail(const EllipticSpace& X,
                                                             const Rational& eps,
                                                             unsigned long M) {
    auto certify = [&](const UniPoly& p) -> std::optional<RayCertificate> {
        RayCertificate c = certify_positive_on_ray(p, eps);
        if (c.verdict != Verdict::Positive) return std::nullopt;
        return c;
    };
    return find_tail<UniPoly, RayCertificate>(X.p_pi, X.p_coh, M, certify);
}

std::optional<TailCertificate<BoxCertificate>> find_box_tail(const EllipticSpace& X,
                                                             const Box& box, unsigned long M,
                                                             unsigned max_depth) {
    auto certify = [&](const TriPoly& p) -> std::optional<BoxCertificate> {
        BoxCertificate c = certify_positive_on_box(p, box, max_depth);
        if (c.verdict != Verdict::Positive) return std::nullopt;
        return c;
    };
    return find_tail<TriPoly, BoxCertificate>(*X.mh_pi, *X.mh_coh, M, certify);
}

}  // namespace

UniPoly difference_poly(const EllipticSpace& X, unsigned n) {
    if (n == 0) throw ParameterOutOfRangeError("difference_poly: n must be >= 1");
    return X.p_coh.pow(n) - rational_of(n) * X.p_pi;
}

TriPoly mh_difference_poly(const EllipticSpace& X, unsigned n) {
    if (n == 0) throw ParameterOutOfRangeError("mh_difference_poly: n must be >= 1");
    if (!X.has_hodge())
        throw MissingHodgeDataError("mh_difference_poly: space '" + X.name +
                                    "' carries no mixed Hodge polynomials");
    return X.mh_coh->pow(n) - rational_of(n) * *X.mh_pi;
}

RayCheck inequality_holds(const EllipticSpace& X, unsigned n, const Rational& eps) {
    RayCheck out;
    out.certificate = certify_positive_on_ray(difference_poly(X, n), eps);
    out.holds = (out.certificate.verdict == Verdict::Positive);
    return out;
}

unsigned long stability_bound(const EllipticSpace& X, const Rational& eps) {
    if (eps.sign() <= 0)
        throw ParameterOutOfRangeError("stability_bound: eps must be positive, got " +
                                       eps.to_string());
    const Rational gap = X.p_coh.evaluate(eps) - Rational(1);
    if (gap.sign() <= 0)
        throw DegenerateSpaceError("stability_bound: p_coh(eps) = " +
                                   (gap + Rational(1)).to_string() +
                                   " <= 1; no stability bound exists (threshold 1 outright)");
    return least_multiplier(gap, "stability_bound");
}

BoxCheck mhp_inequality_holds(const EllipticSpace& X, unsigned n, const Box& box,
                              unsigned max_depth) {
    const TriPoly d = mh_difference_poly(X, n);
    if (box.dims() != 3)
        throw ParameterOutOfRangeError("mhp box must have exactly three intervals, got " +
                                       std::to_string(box.dims()));
    for (const Interval& iv : box.iv)
        if (iv.lo.sign() <= 0)
            throw ParameterOutOfRangeError(
                "mhp box must lie in the strictly positive orthant; interval starts at " +
                iv.lo.to_string());
    BoxCheck out;
    out.certificate = certify_positive_on_box(d, box, max_depth);
    switch (out.certificate.verdict) {
        case Verdict::Positive: out.holds = true; break;
        case Verdict::NonPositive: out.holds = false; break;
        case Verdict::Undecided: out.holds = std::nullopt; break;
    }
    return out;
}

ThresholdReport pp_threshold(const EllipticSpace& X, const Rational& eps, unsigned long n_cap) {
    if (eps.sign() <= 0)
        throw ParameterOutOfRangeError("pp_threshold: eps must be positive, got " +
                                       eps.to_string());
    ThresholdReport rep;
    rep.region = RayRegion{eps};

    if (X.p_coh == UniPoly(Rational(1))) {
        if (!X.p_pi.is_zero())
            throw DegenerateSpaceError(
                "pp_threshold: p_coh = 1 with p_pi != 0, so n p_pi < 1 fails for all large n");
        // The point: D_n = 1 identically, threshold 1 outright.
        RayCheck rc = inequality_holds(X, 1, eps);
        rep.per_n.push_back(PerN{1, rc.holds, std::move(rc.certificate)});
        rep.threshold = 1;
        return rep;
    }

    const unsigned long M = stability_bound(X, eps);
    rep.induction_bound = M;
    rep.ray_tail = find_ray_tail(X, eps, M);
    const unsigned long anchor = rep.ray_tail ? rep.ray_tail->n_from : M;
    rep.stability_bound = anchor;

    unsigned long largest_fail = 0;
    for (unsigned long n = 1;; ++n) {
        if (n > n_cap)
            throw CapExceededError("pp_threshold: no success at n >= " + std::to_string(anchor) +
                                   " within n_cap = " + std::to_string(n_cap));
        check_search_n(n);
        RayCheck rc = inequality_holds(X, static_cast<unsigned>(n), eps);
        rep.per_n.push_back(PerN{n, rc.holds, std::move(rc.certificate)});
        if (!rc.holds)
            largest_fail = n;
        else if (n >= anchor)
            break;
    }
    rep.threshold = largest_fail + 1;
    return rep;
}

ThresholdReport mhp_threshold(const EllipticSpace& X, const Rational& a, const Rational& b,
                              const Rational& c, const Rational& r, unsigned max_depth,
                              unsigned long n_cap) {
    if (!X.has_hodge())
        throw MissingHodgeDataError("mhp_threshold: space '" + X.name +
                                    "' carries no mixed Hodge polynomials");
    for (const Rational* v : {&a, &b, &c})
        if (v->sign() <= 0)
            throw ParameterOutOfRangeError("mhp_threshold: corner must be strictly positive, got (" +
                                           a.to_string() + ", " + b.to_string() + ", " +
                                           c.to_string() + ")");
    const Rational corner_max = std::max({a, b, c});
    if (r <= corner_max)
        throw ParameterOutOfRangeError("mhp_threshold: r = " + r.to_string() +
                                       " must exceed max(a, b, c) = " + corner_max.to_string());

    const Rational gap = X.mh_coh->evaluate(a, b, c) - Rational(1);
    if (gap.sign() <= 0)
        throw DegenerateSpaceError("mhp_threshold: MH_coh(a, b, c) = " +
                                   (gap + Rational(1)).to_string() + " <= 1");

    ThresholdReport rep;
    const Box box{{Interval{a, r}, Interval{b, r}, Interval{c, r}}};
    rep.region = BoxRegion{box};

    const unsigned long M = least_multiplier(gap, "mhp_threshold");
    rep.induction_bound = M;
    rep.box_tail = find_box_tail(X, box, M, max_depth);
    const unsigned long anchor = rep.box_tail ? rep.box_tail->n_from : M;
    rep.stability_bound = anchor;

    unsigned long largest_fail = 0;
    bool undecided_seen = false;
    unsigned long largest_undecided = 0;
    for (unsigned long n = 1;; ++n) {
        if (n > n_cap)
            throw CapExceededError("mhp_threshold: no success at n >= " + std::to_string(anchor) +
                                   " within n_cap = " + std::to_string(n_cap));
        check_search_n(n);
        BoxCheck bc = mhp_inequality_holds(X, static_cast<unsigned>(n), box, max_depth);
        const std::optional<bool> holds = bc.holds;
        rep.per_n.push_back(PerN{n, holds, std::move(bc.certificate)});
        if (!holds.has_value()) {
            undecided_seen = true;
            largest_undecided = n;
        } else if (!*holds) {
            largest_fail = n;
        } else if (n >= anchor) {
            break;
        }
    }

    // An undecided n below the largest failure is moot (that n is below the
    // threshold regardless); an undecided n above it could hide a failure,
    // so the outcome is Undecided, never a guessed value.
    if (undecided_seen && largest_undecided > largest_fail) {
        rep.threshold = std::nullopt;
        return rep;
    }
    rep.threshold = largest_fail + 1;

    // The certified region is the box; the defining region is unbounded.
    // Probe the gap deterministically rather than silently ignoring it.
    const Rational probe_hi = Rational(4) * r;
    const Box probe_box{{Interval{a, probe_hi}, Interval{b, probe_hi}, Interval{c, probe_hi}}};
    const TriPoly d = mh_difference_poly(X, static_cast<unsigned>(*rep.threshold));
    rep.probe = UnboundedProbe{probe_box, *rep.threshold, grid_falsifier(d, probe_box, 2048)};
    return rep;
}

namespace {

// Least n >= s with n K <= bq^s binom(n, s); the right side grows like
// n^s / n, strictly increasing and unbounded for s >= 2, so the predicate is
// monotone and eventually true.  Doubling then binary search.
unsigned long least_n_hat(const Int& K, const Int& bq_pow_s, unsigned long s) {
    auto ok = [&](unsigned long n) { return Int(n) * K <= bq_pow_s * binomial(n, s); };
    if (ok(s)) return s;
    unsigned long hi = s;
    do {
        if (hi > (1UL << 40))
            throw NoFiniteBoundError("analytic_upper_bound: n_hat search passed 2^40");
        hi *= 2;
    } while (!ok(hi));
    unsigned long lo = hi / 2;  // failed in the previous round
    while (hi - lo > 1) {
        const unsigned long mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

// An integer Y beyond every root of K y = (1+c)^y, certified by
// (1+c)^Y > K Y together with c (1+c)^{Y-1} >= K.  The pair is monotone in
// Y: if both hold at Y then
// (1+c)^{Y+1} - K(Y+1) > c(1+c)^Y - K >= c(1+c)^{Y-1} - K >= 0.
//
// Two regimes.  For c >= 1/1024 the least such Y is found exactly
// (doubling + binary search); the crossing sits near ln(K Y)/ln(1+c), so
// every exact power involved stays small.  For smaller c the exact powers
// would be astronomically wide (Y ~ 1/c scales the bit size of (1+c)^Y by
// 1/c as well), so a sound over-approximation is returned instead: with
// B = ceil(ln2_ub (1+c)/c) we have (1+c)^B >= e^{B c/(1+c)} >= 2, hence at
// Y = B 2^k the pure powers of two 2^{2^k} > K Y and c 2^{2^k - 1} >= K
// imply both conditions.  Any Y satisfying the pair keeps the upper-bound
// contract; only its minimality is relaxed, and only in this regime.
unsigned long least_n_tilde(const Int& K, const Rational& c) {
    const Rational rk{K};
    if (c >= Rational(Int(1), Int(1024))) {
        const Rational base = Rational(1) + c;
        auto ok = [&](unsigned long y) {
            const Rational p = base.pow(y - 1);
            return c * p >= rk && p * base > rk * rational_of(y);
        };
        if (ok(1)) return 1;
        unsigned long hi = 1;
        do {
            if (hi > (1UL << 40))
                throw CapExceededError("analytic_upper_bound: n_tilde search passed 2^40");
            hi *= 2;
        } while (!ok(hi));
        unsigned long lo = hi / 2;
        while (hi - lo > 1) {
            const unsigned long mid = lo + (hi - lo) / 2;
            (ok(mid) ? hi : lo) = mid;
        }
        return hi;
    }

    // 2^e > x for integers e >= 0, x >= 1, decided by bit length alone:
    // x lies in [2^(L-1), 2^L) for L = sizeinbase(x, 2), so e >= L implies
    // 2^e >= 2^L > x and e <= L-1 implies 2^e <= 2^(L-1) <= x.
    auto pow2_gt = [](const Int& e, const Int& x) {
        if (x <= 0) return true;
        return e >= Int(static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2)));
    };
    // ln 2 <= 693147180559946 / 10^15, so B c/(1+c) >= ln 2.
    const Rational ln2_ub(Int("693147180559946"), Int("1000000000000000"));
    const Int B = (ln2_ub * (Rational(1) + c) / c).ceil();
    // c 2^m >= K  <=>  2^m >= ceil(K q / p)  <=>  2^m > floor((K q - 1)/p),
    // writing c = p/q in lowest terms.  K >= 1 and p, q >= 1 keep the
    // truncated mpz division equal to the floor.
    const Int cond2_rhs = (K * c.denominator() - 1) / c.numerator();
    for (unsigned k = 0;; ++k) {
        if (k > 40) throw CapExceededError("analytic_upper_bound: n_tilde tail passed 2^40 blocks");
        const Int e = Int(1) << k;  // exponent: (1+c)^(B 2^k) >= 2^(2^k)
        const Int y = B << k;
        if (!pow2_gt(e, K * y)) continue;         // 2^(2^k) > K y
        if (!pow2_gt(e - 1, cond2_rhs)) continue;  // c 2^(2^k - 1) >= K
        if (!y.fits_ulong_p())
            throw CapExceededError("analytic_upper_bound: n_tilde " + y.get_str() +
                                   " does not fit in an unsigned long");
        return y.get_ui();
    }
}

}  // namespace

UpperBoundReport analytic_upper_bound(const EllipticSpace& X, const Rational& eps) {
    if (eps.sign() <= 0)
        throw ParameterOutOfRangeError("analytic_upper_bound: eps must be positive, got " +
                                       eps.to_string());
    if (X.p_pi.is_zero())
        throw DegenerateSpaceError("analytic_upper_bound: p_pi = 0 (threshold 1 outright)");
    if (X.p_coh == UniPoly(Rational(1)))
        throw DegenerateSpaceError("analytic_upper_bound: p_coh = 1");

    const unsigned q = X.p_coh.degree().value();
    const Int bq = X.p_coh.leading_coefficient().numerator();
    const Int m = Int(static_cast<unsigned long>(X.p_pi.term_count()));

    UpperBoundReport rep;
    rep.case_b = (eps > Rational(1));
    const Rational c = Rational(bq) * eps.pow(q);

    for (const auto& [l, coeff] : X.p_pi.terms()) {
        MonomialBound mb;
        mb.degree = l;
        mb.coefficient = coeff.numerator();
        mb.K = m * mb.coefficient;
        mb.s = std::max<unsigned long>(2, l / q + 1);
        Int bq_pow_s;
        mpz_pow_ui(bq_pow_s.get_mpz_t(), bq.get_mpz_t(), mb.s);
        mb.n_hat = least_n_hat(mb.K, bq_pow_s, mb.s);
        if (rep.case_b) {
            mb.u = mb.n_hat;
        } else {
            mb.n_tilde = least_n_tilde(mb.K, c);
            mb.u = std::max(mb.n_hat, *mb.n_tilde);
        }
        rep.u = std::max(rep.u, mb.u);
        rep.monomials.push_back(std::move(mb));
    }
    return rep;
}

}  // namespace ratell
