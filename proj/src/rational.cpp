#include "ratell/rational.hpp"

#include <cctype>
#include <ostream>

namespace ratell {

namespace {

Int parse_integer(const std::string& text, const std::string& whole) {
    if (text.empty()) throw MalformedInputError("empty integer in rational literal '" + whole + "'");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw MalformedInputError("sign without digits in rational literal '" + whole + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw MalformedInputError("invalid character in rational literal '" + whole + "'");
    return Int(text, 10);
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0) throw ParameterOutOfRangeError("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text, text));
    Int num = parse_integer(text.substr(0, slash), text);
    Int den = parse_integer(text.substr(slash + 1), text);
    if (sgn(den) == 0) throw MalformedInputError("zero denominator in rational literal '" + text + "'");
    return Rational(num, den);
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    // num/den already coprime, so the powers are too; no canonicalize needed.
    return Rational(r);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace ratell
