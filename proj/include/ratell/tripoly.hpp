#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ratell/rational.hpp"
#include "ratell/unipoly.hpp"

namespace ratell {

// Exponent triple of a monomial t^k u^p v^q, ordered lexicographically by
// (k, p, q).  This order is the canonical term order everywhere (storage,
// serialization, error reporting).
struct TriExp {
    unsigned k = 0, p = 0, q = 0;
    friend auto operator<=>(const TriExp&, const TriExp&) = default;
};

// Exponent pair of a bivariate monomial t^k w^j.
struct BiExp {
    unsigned k = 0, j = 0;
    friend auto operator<=>(const BiExp&, const BiExp&) = default;
};

class BiPoly;

// Sparse trivariate polynomial in (t, u, v) over the exact rationals, with
// the same normalization rules as UniPoly: canonical term order, no stored
// zeros, termwise equality.
class TriPoly {
public:
    TriPoly() = default;
    explicit TriPoly(const Rational& constant);

    static TriPoly monomial(TriExp e, const Rational& coeff);
    static TriPoly from_terms(std::initializer_list<std::pair<TriExp, Rational>> terms);
    // Embeds a univariate polynomial in t (u-, v-exponents zero).
    static TriPoly from_unipoly_in_t(const UniPoly& p);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(TriExp e) const;
    const std::map<TriExp, Rational>& terms() const { return terms_; }
    // Per-variable degree bounds (max exponent of t, u, v); (0,0,0) for the
    // zero polynomial.
    std::array<unsigned, 3> degrees() const;

    bool has_nonnegative_coefficients() const;
    bool has_integer_coefficients() const;

    TriPoly operator-() const;
    friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const Rational& c, const TriPoly& p);
    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    TriPoly pow(unsigned n) const;

    Rational evaluate(const Rational& t, const Rational& u, const Rational& v) const;

    // Substitutes t = value; the result has every t-exponent zero, with
    // coefficients collected by (p, q).
    TriPoly specialize_t(const Rational& value) const;

    // Substitutes u = v = 1, producing a univariate polynomial in t.
    UniPoly specialize_uv_one() const;

    // Rewrites each monomial t^k (uv)^j as t^k w^j.  Throws
    // NotCollapsibleError carrying the first (term-order) monomial with
    // p != q.
    BiPoly collapse_uv() const;

    std::string to_string() const;

private:
    void add_term(TriExp e, const Rational& coeff);
    std::map<TriExp, Rational> terms_;
};

// Sparse bivariate polynomial in (t, w), the image of collapse_uv.
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly monomial(BiExp e, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<BiExp, Rational>& terms() const { return terms_; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    Rational evaluate(const Rational& t, const Rational& w) const;

    // Inverse of collapse_uv: substitutes w = uv.
    TriPoly expand_uv() const;

private:
    friend class TriPoly;
    std::map<BiExp, Rational> terms_;
};

}  // namespace ratell
