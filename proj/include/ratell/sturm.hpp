#pragma once

#include <optional>
#include <vector>

#include "ratell/certificate.hpp"
#include "ratell/unipoly.hpp"

namespace ratell {

// Sturm chain of the square-free part of a polynomial.
//
// chain[0] is the square-free part (primitive integer, leading sign matching
// the input), chain[1] its derivative, and each later element the negated
// Euclidean remainder of the two before it.  Every element is scaled to a
// primitive integer polynomial; the scalings are positive, so all signs --
// and therefore all variation counts -- agree with the textbook rational
// chain.  The last element is a nonzero constant.
struct SturmChain {
    std::vector<UniPoly> chain;

    const UniPoly& square_free() const { return chain.front(); }

    // Sign variations of the chain evaluated at x (exact; zeros skipped).
    int variations_at(const Rational& x) const;
    // Sign variations as x -> +inf (signs of the leading coefficients).
    int variations_at_infinity() const;
};

// Builds the chain.  Throws ZeroPolynomialError on the zero polynomial.
SturmChain sturm_chain(const UniPoly& p);

// Number of distinct real roots of p in (lo, hi]; hi = nullopt means +inf.
// Throws ZeroPolynomialError on the zero polynomial, RootAtLeftEndpointError
// when p(lo) = 0, and ParameterOutOfRangeError when hi < lo.
int count_roots_in(const UniPoly& p, const Rational& lo,
                   const std::optional<Rational>& hi = std::nullopt);

// Decides strict positivity of p on the closed ray [eps, +inf).
//
// Positive iff p(eps) > 0 and p has no root in (eps, +inf).  Two paths: a
// termwise-nonnegative p with p(eps) > 0 is certified directly (sturm_ran
// stays false); otherwise the Sturm chain runs and the certificate carries
// the exact value at eps and the two variation counts.  On NonPositive, an
// exact witness (a rational point where p <= 0) is found by root isolation
// whenever one exists, or an isolating touch bracket when p vanishes only at
// irrational points of the ray (see RayCertificate).
// Throws ZeroPolynomialError on the zero polynomial and
// ParameterOutOfRangeError when eps <= 0.
RayCertificate certify_positive_on_ray(const UniPoly& p, const Rational& eps);

}  // namespace ratell
