#pragma once

#include <string>

#include "ratell/spaces.hpp"
#include "ratell/tripoly.hpp"

namespace ratell {

// Homotopical E-function E^pi(X, u, v) = MH^pi_X(-1, u, v): the t = -1
// specialization of the mixed Hodge homotopy polynomial.  Stored as a
// TriPoly whose t-exponents are all zero (coefficients may be negative);
// serialized with the t column dropped.
struct EFunction {
    TriPoly poly;

    friend bool operator==(const EFunction& a, const EFunction& b) { return a.poly == b.poly; }
    friend bool operator!=(const EFunction& a, const EFunction& b) { return !(a == b); }
};

// Exact specialization at t = -1.  Throws MissingHodgeDataError when the
// space carries no mh_pi.
EFunction e_pi(const EllipticSpace& X);

// Carrier of MH^pi alone, for fibration-additivity checks.  The one object
// that needs this quarantine is C^x = punctured_affine at n = 0, whose
// mh_pi = t uv lives on pi_1 and which the EllipticSpace constructors
// reject (not simply connected).  Admitting it here and nowhere else keeps
// every EllipticSpace invariant intact while still covering the additivity
// triple C^x -> C^{n+1} \ {0} -> CP^n.
struct HodgeObject {
    std::string name;
    TriPoly mh_pi;

    // Throws MissingHodgeDataError when the space carries no mh_pi.
    static HodgeObject from_space(const EllipticSpace& X);

    // C^x with mh_pi = t uv.
    static HodgeObject c_star();
};

EFunction e_pi(const HodgeObject& X);

// difference = e_pi(E) - e_pi(F) - e_pi(B); additive iff it is zero.
struct FibrationCheck {
    bool additive = false;
    TriPoly difference;
};

FibrationCheck check_fibration_additivity(const HodgeObject& F, const HodgeObject& E,
                                          const HodgeObject& B);

// Convenience overload converting through HodgeObject::from_space; throws
// MissingHodgeDataError if any of the three lacks mh_pi.
FibrationCheck check_fibration_additivity(const EllipticSpace& F, const EllipticSpace& E,
                                          const EllipticSpace& B);

}  // namespace ratell
