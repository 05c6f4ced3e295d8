#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "ratell/errors.hpp"

namespace ratell {

// Arbitrary-precision integer.
using Int = mpz_class;

// Exact rational number.  Always stored in lowest terms with a positive
// denominator (GMP canonical form); every operation is exact.  No implicit
// conversion from floating point exists anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(unsigned n) : v_(static_cast<unsigned long>(n)) {}
    Rational(unsigned long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}

    // num/den, canonicalized.  Throws ParameterOutOfRangeError on den == 0.
    Rational(const Int& num, const Int& den);

    // Parses "p/q" or "p" with optional leading '-'.  Decimal points and
    // exponents are rejected: inputs are exact by construction.
    static Rational parse(const std::string& text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Largest integer <= value / smallest integer >= value.
    Int floor() const;
    Int ceil() const;

    Rational abs() const { return Rational(static_cast<mpq_class>(::abs(v_))); }

    // Exact power with nonnegative integer exponent.
    Rational pow(unsigned long e) const;

    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ParameterOutOfRangeError("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

// Exact binomial coefficient C(n, k); 0 when k > n.
Int binomial(unsigned long n, unsigned long k);

}  // namespace ratell
