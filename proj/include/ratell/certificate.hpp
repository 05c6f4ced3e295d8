#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ratell/rational.hpp"

namespace ratell {

enum class Verdict { Positive, NonPositive, Undecided };

// Closed interval [lo, hi] with lo <= hi.
struct Interval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

// Axis-aligned box: one closed interval per variable (three for (t, u, v)).
struct Box {
    std::vector<Interval> iv;
    std::size_t dims() const { return iv.size(); }
};

// Exact refutation: a rational point (one coordinate per variable) whose
// value under the polynomial is <= 0; the value is stored so it can be
// re-evaluated and checked bit-for-bit.
struct Witness {
    std::vector<Rational> point;
    Rational value;
};

// Certificate returned by certify_positive_on_ray.  Positive evidence is the
// exact value at epsilon plus the two Sturm sign-variation counts whose
// difference is the number of roots in (epsilon, +inf).  NonPositive evidence
// is an exact witness whenever one exists; when p >= 0 on the ray and
// vanishes only at irrational points there is no rational witness, and the
// certificate instead carries an isolating bracket [lo, hi] around such a
// root (sign change of the square-free part, p > 0 at both endpoints).
struct RayCertificate {
    Verdict verdict = Verdict::Undecided;
    Rational epsilon;
    Rational value_at_epsilon;
    int variations_at_epsilon = 0;
    int variations_at_infinity = 0;
    bool sturm_ran = false;
    std::optional<Witness> witness;
    std::optional<Interval> touch_bracket;
};

enum class BoxStatus { CertifiedLeaf, WitnessLeaf, UndecidedLeaf, Split };

// One node of the branch-and-bound tree.  Leaves record the exact Bernstein
// coefficient range that decided them (certified leaves have coeff_min > 0).
struct BoxNode {
    Box box;
    BoxStatus status = BoxStatus::UndecidedLeaf;
    unsigned depth = 0;
    std::optional<Rational> coeff_min, coeff_max;
    int split_axis = -1;
    std::unique_ptr<BoxNode> lower, upper;
};

struct BoxCertificate {
    Verdict verdict = Verdict::Undecided;
    unsigned max_depth = 0;
    unsigned deepest_depth = 0;
    unsigned node_count = 0;
    std::optional<Witness> witness;
    std::unique_ptr<BoxNode> root;
};

}  // namespace ratell
