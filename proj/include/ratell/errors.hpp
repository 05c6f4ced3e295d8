#pragma once

#include <stdexcept>
#include <string>

namespace ratell {

// Base class for all domain errors raised by this library.  Plumbing errors
// (bad JSON, bad flags) and mathematical precondition violations both derive
// from it so callers can catch one type at the boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires a nonzero polynomial (e.g. Sturm chains, leading term).
class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

// count_roots_in was asked to count on (lo, hi] but p(lo) = 0, which Sturm
// theory does not cover; the caller must perturb or handle the endpoint.
class RootAtLeftEndpointError : public Error {
public:
    using Error::Error;
};

// collapse_uv met a monomial t^k u^p v^q with p != q.  Carries the first
// offending exponent triple in term order.
class NotCollapsibleError : public Error {
public:
    NotCollapsibleError(const std::string& what, unsigned k, unsigned p, unsigned q)
        : Error(what), k(k), p(p), q(q) {}
    unsigned k, p, q;
};

// Catalog constructor or threshold search called with an out-of-range
// parameter (sphere dimension < 2, empty toric tuple, r <= corner, ...).
class ParameterOutOfRangeError : public Error {
public:
    using Error::Error;
};

// A structural invariant of EllipticSpace data was violated (non-integer
// dimension counts, missing constant term, mh inconsistent with p, ...).
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

// Unparseable input: bad rational literal, malformed JSON document, unknown
// space specifier.
class MalformedInputError : public Error {
public:
    using Error::Error;
};

// A mixed-Hodge operation was requested on a space without mh data.
class MissingHodgeDataError : public Error {
public:
    using Error::Error;
};

// Threshold machinery requires p_coh(eps) > 1 (resp. MH(corner) > 1); for
// the point space the threshold is 1 outright and no bound exists.
class DegenerateSpaceError : public Error {
public:
    using Error::Error;
};

// The threshold search exceeded its n_cap without concluding.
class CapExceededError : public Error {
public:
    using Error::Error;
};

// The analytic upper bound of a monomial admits no finite n.  Unreachable
// when step (1) enforces s >= 2; kept so the condition is named if a future
// caller relaxes that step.
class NoFiniteBoundError : public Error {
public:
    using Error::Error;
};

}  // namespace ratell
