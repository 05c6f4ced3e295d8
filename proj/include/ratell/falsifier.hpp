#pragma once

#include <optional>

#include "ratell/certificate.hpp"
#include "ratell/tripoly.hpp"
#include "ratell/unipoly.hpp"

namespace ratell {

// Outcome of a deterministic counterexample sweep.  A witness is an exact
// rational point with value <= 0; absence of a witness proves nothing.
struct FalsifierResult {
    std::optional<Witness> witness;
    unsigned samples_checked = 0;
};

// Samples p on [eps, +inf): eps itself, a van der Corput (base 2) sweep of
// [eps, R] where R is the Cauchy root bound (at least eps + 1), then a short
// geometric tail beyond R.  Fully deterministic; stops at the first witness.
// Throws ZeroPolynomialError / ParameterOutOfRangeError as certify does.
FalsifierResult grid_falsifier(const UniPoly& p, const Rational& eps, unsigned samples = 256);

// Samples p on a closed box: corners, center, then Halton points with bases
// (2, 3, 5) scaled into the box.  Same determinism and error contract.
FalsifierResult grid_falsifier(const TriPoly& p, const Box& box, unsigned samples = 256);

}  // namespace ratell
