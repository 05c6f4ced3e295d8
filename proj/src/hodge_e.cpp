#include "ratell/hodge_e.hpp"

#include "ratell/errors.hpp"

namespace ratell {

namespace {

const TriPoly& require_mh_pi(const EllipticSpace& X, const char* who) {
    if (!X.mh_pi)
        throw MissingHodgeDataError(std::string(who) + ": space '" + X.name +
                                    "' carries no mixed Hodge polynomials");
    return *X.mh_pi;
}

}  // namespace

EFunction e_pi(const EllipticSpace& X) {
    return EFunction{require_mh_pi(X, "e_pi").specialize_t(Rational(-1))};
}

HodgeObject HodgeObject::from_space(const EllipticSpace& X) {
    return HodgeObject{X.name, require_mh_pi(X, "HodgeObject::from_space")};
}

HodgeObject HodgeObject::c_star() {
    return HodgeObject{"cstar", TriPoly::monomial(TriExp{1, 1, 1}, Rational(1))};
}

EFunction e_pi(const HodgeObject& X) {
    return EFunction{X.mh_pi.specialize_t(Rational(-1))};
}

FibrationCheck check_fibration_additivity(const HodgeObject& F, const HodgeObject& E,
                                          const HodgeObject& B) {
    const TriPoly diff = e_pi(E).poly - e_pi(F).poly - e_pi(B).poly;
    return FibrationCheck{diff.is_zero(), diff};
}

FibrationCheck check_fibration_additivity(const EllipticSpace& F, const EllipticSpace& E,
                                          const EllipticSpace& B) {
    return check_fibration_additivity(HodgeObject::from_space(F), HodgeObject::from_space(E),
                                      HodgeObject::from_space(B));
}

}  // namespace ratell
