#pragma once

// Shared helpers for the test suites: terse constructors for exact values and
// the catalog enumeration used by the property suites.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ratell/rational.hpp"
#include "ratell/spaces.hpp"
#include "ratell/tripoly.hpp"
#include "ratell/unipoly.hpp"

namespace testsupport {

inline ratell::Rational rat(const std::string& text) { return ratell::Rational::parse(text); }

inline ratell::UniPoly up(std::initializer_list<std::pair<unsigned, ratell::Rational>> terms) {
    return ratell::UniPoly::from_terms(terms);
}

// Integer-coefficient shorthand: {{degree, coeff}, ...}.
inline ratell::UniPoly upi(std::initializer_list<std::pair<unsigned, long>> terms) {
    std::vector<std::pair<unsigned, ratell::Rational>> v;
    for (const auto& [d, c] : terms) v.emplace_back(d, ratell::Rational(c));
    return ratell::UniPoly::from_terms(v);
}

// {{k, p, q, coeff}, ...} with integer coefficients.
struct TriTerm {
    unsigned k, p, q;
    long c;
};
inline ratell::TriPoly tpi(std::initializer_list<TriTerm> terms) {
    ratell::TriPoly r;
    for (const auto& t : terms)
        r = r + ratell::TriPoly::monomial({t.k, t.p, t.q}, ratell::Rational(t.c));
    return r;
}

// All ordered tuples (n_1..n_k) with 1 <= k <= max_k and 1 <= n_i <= max_n.
inline std::vector<std::vector<unsigned>> tuples_up_to(unsigned max_k, unsigned max_n) {
    std::vector<std::vector<unsigned>> out;
    for (unsigned k = 1; k <= max_k; ++k) {
        std::vector<unsigned> t(k, 1);
        while (true) {
            out.push_back(t);
            unsigned i = k;
            while (i > 0 && t[i - 1] == max_n) t[--i] = 1;
            if (i == 0) break;
            ++t[i - 1];
        }
    }
    return out;
}

// The catalog base spaces of the property suites: spheres S^2..S^12,
// CP^1..CP^6, all toric and arrangement-complement tuples with k <= 3 and
// n_i <= 3.  95 spaces.
inline std::vector<ratell::EllipticSpace> catalog_bases() {
    std::vector<ratell::EllipticSpace> out;
    for (unsigned k = 2; k <= 12; ++k) out.push_back(ratell::sphere(k));
    for (unsigned n = 1; n <= 6; ++n) out.push_back(ratell::complex_projective(n));
    for (const auto& t : tuples_up_to(3, 3)) out.push_back(ratell::toric(t));
    for (const auto& t : tuples_up_to(3, 3)) out.push_back(ratell::arrangement_complement(t));
    return out;
}

}  // namespace testsupport
