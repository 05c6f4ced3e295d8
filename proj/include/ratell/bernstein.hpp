#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ratell/certificate.hpp"
#include "ratell/tripoly.hpp"
#include "ratell/unipoly.hpp"

namespace ratell {

// Exact Bernstein coefficients of p over [iv.lo, iv.hi] at degree d = deg p.
// b_0 = p(lo) and b_d = p(hi); every value of p on the interval lies between
// min(b) and max(b), so b_min > 0 certifies strict positivity.
// Throws ZeroPolynomialError on the zero polynomial and
// ParameterOutOfRangeError when iv.lo > iv.hi.
std::vector<Rational> bernstein_coefficients(const UniPoly& p, const Interval& iv);

// Trivariate Bernstein coefficients over a box, stored as a dense tensor.
// entry(i, j, k) multiplies B_i^{d0} B_j^{d1} B_k^{d2} in the parametrization
// of the box by [0,1]^3; the eight extreme entries equal the polynomial's
// values at the matching box corners.
class BernsteinTensor {
public:
    explicit BernsteinTensor(std::array<unsigned, 3> degrees);

    const std::array<unsigned, 3>& degrees() const { return deg_; }

    Rational& at(unsigned i, unsigned j, unsigned k) { return entries_[index(i, j, k)]; }
    const Rational& at(unsigned i, unsigned j, unsigned k) const { return entries_[index(i, j, k)]; }

    // Exact minimum and maximum entry.
    std::pair<Rational, Rational> coefficient_range() const;

    // de Casteljau subdivision at the parameter midpoint of one axis; the
    // two results are the exact tensors of the polynomial on the lower and
    // upper half-boxes.
    std::pair<BernsteinTensor, BernsteinTensor> split(unsigned axis) const;

private:
    std::size_t index(unsigned i, unsigned j, unsigned k) const {
        return (static_cast<std::size_t>(i) * (deg_[1] + 1) + j) * (deg_[2] + 1) + k;
    }

    std::array<unsigned, 3> deg_;
    std::vector<Rational> entries_;
};

// Tensor for p over the box (three intervals, in variable order t, u, v).
// Throws ZeroPolynomialError on the zero polynomial and
// ParameterOutOfRangeError when the box is not three valid intervals.
BernsteinTensor bernstein_coefficients(const TriPoly& p, const Box& box);

// Decides strict positivity of p on a closed box by branch and bound.
//
// Each node first samples p exactly at the box corners and center (a value
// <= 0 is a witness and stops the search), then computes the Bernstein
// tensor: an all-positive tensor certifies the node.  Otherwise the box is
// bisected at the midpoint of its widest axis (ties: lowest axis index) via
// de Casteljau, lower half first.  Nodes at max_depth that remain unresolved
// make the verdict Undecided.  The returned certificate keeps the whole
// tree, so every leaf can be re-checked independently.
BoxCertificate certify_positive_on_box(const TriPoly& p, const Box& box,
                                       unsigned max_depth = 64);

}  // namespace ratell
