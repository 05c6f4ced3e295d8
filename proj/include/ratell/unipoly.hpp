#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratell/rational.hpp"

namespace ratell {

// Sparse univariate polynomial over the exact rationals, indexed by degree.
// Terms are held in increasing degree order and zero coefficients are never
// stored, so equality is termwise equality.  The zero polynomial has no
// terms; its degree is the distinguished "none" marker (never -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& constant);

    static UniPoly monomial(unsigned degree, const Rational& coeff);
    // Accumulates duplicate degrees and drops zeros.
    static UniPoly from_terms(std::initializer_list<std::pair<unsigned, Rational>> terms);
    static UniPoly from_terms(const std::vector<std::pair<unsigned, Rational>>& terms);

    bool is_zero() const { return terms_.empty(); }
    // Degree of the zero polynomial is "none", not -1.
    std::optional<unsigned> degree() const;
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(unsigned degree) const;
    // Throws ZeroPolynomialError on the zero polynomial.
    Rational leading_coefficient() const;
    const std::map<unsigned, Rational>& terms() const { return terms_; }

    bool has_nonnegative_coefficients() const;
    bool has_integer_coefficients() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Exponentiation by repeated squaring; pow(0) is the constant 1.
    UniPoly pow(unsigned n) const;

    Rational evaluate(const Rational& x) const;
    UniPoly derivative() const;

    // Euclidean division by a nonzero divisor: a = q*b + r with
    // deg r < deg b.  Throws ZeroPolynomialError when b = 0.
    static std::pair<UniPoly, UniPoly> div_rem(const UniPoly& a, const UniPoly& b);

    // Monic greatest common divisor; gcd(0, 0) = 0.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    // p / gcd(p, p'): same distinct roots, all simple.  Normalized to a
    // primitive integer polynomial whose leading sign matches p's.
    // Throws ZeroPolynomialError on the zero polynomial.
    UniPoly square_free_part() const;

    // Yun decomposition: returns [A_1, A_2, ...] with
    // p = c * prod_i A_i^i for a rational constant c (returned separately),
    // the A_i primitive integer, square-free, pairwise coprime, positive
    // leading coefficient.  Throws ZeroPolynomialError on the zero poly.
    std::pair<Rational, std::vector<UniPoly>> yun_decomposition() const;

    // Smallest positive multiplier making all coefficients integers, applied;
    // then divides by the (positive) integer content.  The result is a
    // primitive integer polynomial equal to p times a positive rational.
    UniPoly primitive_integer() const;

    // An upper bound B > 0 such that every real root r of p has |r| < B
    // (Cauchy bound).  Throws ZeroPolynomialError on the zero polynomial;
    // returns 1 for nonzero constants.
    Rational root_bound() const;

    // Human-readable form like "1 - 2*t^3 + t^4" (diagnostics only).
    std::string to_string(const std::string& var = "t") const;

private:
    void add_term(unsigned degree, const Rational& coeff);
    std::map<unsigned, Rational> terms_;
};

}  // namespace ratell
