#include "ratell/falsifier.hpp"

namespace ratell {

namespace {

// n-th term of the van der Corput sequence in the given base (n >= 1),
// exactly as a rational in (0, 1).
Rational radical_inverse(unsigned n, unsigned base) {
    Rational r(0);
    Rational f(Int(1), Int(base));
    while (n > 0) {
        r += f * Rational(n % base);
        n /= base;
        f = f / Rational(base);
    }
    return r;
}

bool check(const UniPoly& p, const Rational& x, FalsifierResult& result) {
    ++result.samples_checked;
    const Rational value = p.evaluate(x);
    if (value.sign() <= 0) {
        result.witness = Witness{{x}, value};
        return true;
    }
    return false;
}

bool check(const TriPoly& p, const std::array<Rational, 3>& x, FalsifierResult& result) {
    ++result.samples_checked;
    const Rational value = p.evaluate(x[0], x[1], x[2]);
    if (value.sign() <= 0) {
        result.witness = Witness{{x[0], x[1], x[2]}, value};
        return true;
    }
    return false;
}

}  // namespace

FalsifierResult grid_falsifier(const UniPoly& p, const Rational& eps, unsigned samples) {
    if (p.is_zero()) throw ZeroPolynomialError("grid_falsifier on the zero polynomial");
    if (eps.sign() <= 0) throw ParameterOutOfRangeError("grid_falsifier: eps must be > 0");

    FalsifierResult result;
    if (check(p, eps, result)) return result;

    Rational hi = p.root_bound();
    if (hi < eps + Rational(1)) hi = eps + Rational(1);
    const Rational width = hi - eps;
    unsigned n = 1;
    // Reserve a short geometric tail beyond the root bound; negative leading
    // behavior shows up there even though no further sign change can.
    const unsigned tail = 8;
    while (result.samples_checked + tail < samples) {
        const Rational x = eps + width * radical_inverse(n++, 2);
        if (check(p, x, result)) return result;
    }
    Rational x = hi;
    for (unsigned i = 0; i < tail && result.samples_checked < samples; ++i) {
        x = x * Rational(2);
        if (check(p, x, result)) return result;
    }
    return result;
}

FalsifierResult grid_falsifier(const TriPoly& p, const Box& box, unsigned samples) {
    if (p.is_zero()) throw ZeroPolynomialError("grid_falsifier on the zero polynomial");
    if (box.dims() != 3)
        throw ParameterOutOfRangeError("grid_falsifier: box must have exactly three intervals");
    for (const Interval& iv : box.iv)
        if (iv.lo > iv.hi) throw ParameterOutOfRangeError("grid_falsifier: interval with lo > hi");

    FalsifierResult result;
    for (int mask = 0; mask < 8 && result.samples_checked < samples; ++mask) {
        std::array<Rational, 3> pt{(mask & 1) ? box.iv[0].hi : box.iv[0].lo,
                                   (mask & 2) ? box.iv[1].hi : box.iv[1].lo,
                                   (mask & 4) ? box.iv[2].hi : box.iv[2].lo};
        if (check(p, pt, result)) return result;
    }
    if (result.samples_checked < samples) {
        std::array<Rational, 3> center{box.iv[0].midpoint(), box.iv[1].midpoint(),
                                       box.iv[2].midpoint()};
        if (check(p, center, result)) return result;
    }
    const std::array<unsigned, 3> bases{2, 3, 5};
    for (unsigned n = 1; result.samples_checked < samples; ++n) {
        std::array<Rational, 3> pt;
        for (unsigned a = 0; a < 3; ++a)
            pt[a] = box.iv[a].lo + box.iv[a].width() * radical_inverse(n, bases[a]);
        if (check(p, pt, result)) return result;
    }
    return result;
}

}  // namespace ratell
