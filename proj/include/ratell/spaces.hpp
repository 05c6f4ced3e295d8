#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratell/tripoly.hpp"
#include "ratell/unipoly.hpp"

namespace ratell {

// A rationally elliptic space presented by its Poincaré polynomials:
// p_pi = sum a_k t^k (ranks of rational homotopy groups) and
// p_coh = sum b_k t^k (Betti numbers), plus optional mixed Hodge
// refinements mh_pi / mh_coh in (t, u, v) with mh(t, 1, 1) = p(t).
//
// Invariants (enforced by make_space): simple connectivity (a_0 = a_1 = 0,
// b_0 = 1, b_1 = 0), all coefficients nonnegative integers, mh fields
// present both or neither and consistent with the univariate polynomials,
// and formal_dim = deg p_coh (always derived, never user-supplied).
struct EllipticSpace {
    std::string name;
    UniPoly p_pi;
    UniPoly p_coh;
    std::optional<TriPoly> mh_pi;
    std::optional<TriPoly> mh_coh;
    unsigned formal_dim = 0;

    bool has_hodge() const { return mh_pi.has_value(); }
};

// Validates every invariant above and derives formal_dim.
// Throws InvariantViolationError with the first violated condition.
EllipticSpace make_space(std::string name, UniPoly p_pi, UniPoly p_coh,
                         std::optional<TriPoly> mh_pi = std::nullopt,
                         std::optional<TriPoly> mh_coh = std::nullopt);

// Catalog constructors.  Parameter bounds guard simple connectivity;
// violations throw ParameterOutOfRangeError.

// The one-point space: p_pi = 0, p_coh = 1 (with trivial Hodge data), the
// identity for product_space.
EllipticSpace point_space();

// S^k, k >= 2.  Odd: p_pi = t^k, p_coh = 1 + t^k.  Even k = 2m:
// p_pi = t^{2m} + t^{4m-1}, p_coh = 1 + t^{2m}.  No mh fields: spheres
// carry no algebraic mixed Hodge data here (see punctured_affine for the
// odd-sphere-like objects that do).
EllipticSpace sphere(unsigned k);

// CP^n, n >= 1: p_pi = t^2 + t^{2n+1}, p_coh = 1 + t^2 + ... + t^{2n},
// mh_pi = t^2 uv + t^{2n+1}(uv)^{n+1}, mh_coh = sum_j t^{2j}(uv)^j.
EllipticSpace complex_projective(unsigned n);

// C^{n+1} minus the origin, n >= 1: mh_pi = t^{2n+1}(uv)^{n+1},
// mh_coh = 1 + t^{2n+1}(uv)^{n+1}; univariate polynomials by u = v = 1.
EllipticSpace punctured_affine(unsigned n);

// Rationally elliptic toric manifold with Bott-tower data (n_1, ..., n_k),
// all n_i >= 1, k >= 1: mh_pi = k t^2 uv + sum_i t^{2n_i+1}(uv)^{n_i+1},
// mh_coh = prod_i (1 + t^2 uv + ... + t^{2n_i}(uv)^{n_i}).
EllipticSpace toric(const std::vector<unsigned>& n);

// Simply connected rationally elliptic hyperplane-arrangement complement
// with data (n_1, ..., n_k), all n_i >= 1:
// mh_pi = sum_i t^{2n_i+1}(uv)^{n_i+1}, mh_coh = prod_i (1 + t^{2n_i+1}(uv)^{n_i+1}).
EllipticSpace arrangement_complement(const std::vector<unsigned>& n);

// X x Y: p_pi adds, p_coh multiplies; mh fields likewise when present on
// both factors, absent otherwise.  Name concatenates with " x ".
EllipticSpace product_space(const EllipticSpace& X, const EllipticSpace& Y);

// X^n, n >= 1: p_coh -> p_coh^n, p_pi -> n p_pi, mh fields likewise.
// power_space(X, 1) returns X unchanged.
EllipticSpace power_space(const EllipticSpace& X, unsigned n);

// One structural constraint, with the exact numbers that decided it.
struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

// Outcome of validate_structure: every check listed exactly once, in the
// fixed order a, b, c, d, e, f, g, hurewicz, ell_bound, total_pi_bound.
struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    // Lookup by id; throws ParameterOutOfRangeError on an unknown id.
    const CheckResult& check(const std::string& id) const;
};

// Checks the arithmetic constraints on a rationally elliptic space
// (n = formal_dim, a_k from p_pi, b_m from p_coh, binom = binomial):
//   a: sum_{k odd} k a_k <= 2n-1 and sum_{k even} k a_k <= n
//   b: n = sum_{k odd} k a_k - sum_{k even} (k-1) a_k
//   c: chi^pi = sum_{even} a_k - sum_{odd} a_k <= 0
//   d: chi = p_coh(-1) >= 0
//   e: chi > 0 iff chi^pi = 0
//   f: Poincaré duality b_m = b_{n-m}, with b_n = 1 and b_1 = b_{n-1} = 0
//   g: b_m <= binom(n,m)/2 for 0 < m < n, and p_coh(1) <= 2^{n-1} + 1
//   hurewicz: a_2 = b_2
//   ell_bound: deg p_pi <= 2n - 1
//   total_pi_bound: p_pi(1) <= n
// Failures are report entries, never exceptions.
ValidationReport validate_structure(const EllipticSpace& X);

// p_pi(1) <= p_coh(1), with both exact totals.
struct HilaliResult {
    bool holds = false;
    Int pi_total;
    Int coh_total;
};
HilaliResult hilali_holds(const EllipticSpace& X);

}  // namespace ratell
