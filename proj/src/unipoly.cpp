#include "ratell/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace ratell {

UniPoly::UniPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(0u, constant);
}

UniPoly UniPoly::monomial(unsigned degree, const Rational& coeff) {
    UniPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(degree, coeff);
    return p;
}

UniPoly UniPoly::from_terms(std::initializer_list<std::pair<unsigned, Rational>> terms) {
    UniPoly p;
    for (const auto& [d, c] : terms) p.add_term(d, c);
    return p;
}

UniPoly UniPoly::from_terms(const std::vector<std::pair<unsigned, Rational>>& terms) {
    UniPoly p;
    for (const auto& [d, c] : terms) p.add_term(d, c);
    return p;
}

void UniPoly::add_term(unsigned degree, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(degree, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<unsigned> UniPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Rational UniPoly::coefficient(unsigned degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational UniPoly::leading_coefficient() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading_coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

bool UniPoly::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.sign() >= 0; });
}

bool UniPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
}

UniPoly UniPoly::operator-() const {
    UniPoly r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, -c);
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    return r;
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    UniPoly r;
    if (c.is_zero()) return r;
    for (const auto& [d, pc] : p.terms_) r.terms_.emplace(d, c * pc);
    return r;
}

UniPoly UniPoly::pow(unsigned n) const {
    UniPoly result(Rational(1));
    UniPoly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

Rational UniPoly::evaluate(const Rational& x) const {
    // Sparse Horner: walk terms from the highest degree down, raising x by
    // the degree gap at each step.
    Rational acc(0);
    unsigned prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (first) {
            acc = it->second;
            first = false;
        } else {
            acc = acc * x.pow(prev - it->first) + it->second;
        }
        prev = it->first;
    }
    if (first) return Rational(0);
    return acc * x.pow(prev);
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    for (const auto& [d, c] : terms_)
        if (d > 0) r.terms_.emplace(d - 1, Rational(static_cast<unsigned long>(d)) * c);
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::div_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw ZeroPolynomialError("polynomial division by zero");
    UniPoly q, r = a;
    const unsigned db = *b.degree();
    const Rational lb = b.leading_coefficient();
    while (!r.is_zero() && *r.degree() >= db) {
        const unsigned d = *r.degree() - db;
        const Rational c = r.leading_coefficient() / lb;
        q.add_term(d, c);
        r = r - UniPoly::monomial(d, c) * b;
    }
    return {q, r};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = div_rem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return (Rational(1) / x.leading_coefficient()) * x;  // monic
}

UniPoly UniPoly::primitive_integer() const {
    if (terms_.empty()) return *this;
    Int den_lcm(1);
    for (const auto& [d, c] : terms_) {
        Int den = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    Int content(0);
    for (const auto& [d, c] : terms_) {
        Int n = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    return Rational(den_lcm, content) * (*this);
}

UniPoly UniPoly::square_free_part() const {
    if (is_zero()) throw ZeroPolynomialError("square_free_part of the zero polynomial");
    if (*degree() == 0) return primitive_integer();
    UniPoly g = gcd(*this, derivative());
    UniPoly sf = div_rem(*this, g).first;
    return sf.primitive_integer();
}

std::pair<Rational, std::vector<UniPoly>> UniPoly::yun_decomposition() const {
    if (is_zero()) throw ZeroPolynomialError("yun_decomposition of the zero polynomial");
    std::vector<UniPoly> parts;
    if (*degree() == 0) return {coefficient(0), parts};

    // Yun's algorithm over Q[t]; parts are normalized to primitive integer
    // with positive leading coefficient at the end, and c absorbs the scale.
    UniPoly g = gcd(*this, derivative());
    UniPoly w = div_rem(*this, g).first;   // product of distinct factors
    UniPoly y = div_rem(derivative(), g).first;
    while (true) {
        UniPoly z = y - w.derivative();
        if (z.is_zero()) {
            parts.push_back(w);
            break;
        }
        UniPoly a = gcd(w, z);
        parts.push_back(a);
        w = div_rem(w, a).first;
        y = div_rem(z, a).first;
    }
    for (auto& part : parts) {
        UniPoly prim = part.primitive_integer();
        if (!prim.is_zero() && prim.leading_coefficient().sign() < 0) prim = -prim;
        part = prim;
    }
    // p = c * prod parts[i]^(i+1); the parts are monic up to positive integer
    // content, so c carries the overall scale and sign.
    UniPoly prod(Rational(1));
    for (std::size_t i = 0; i < parts.size(); ++i) prod = prod * parts[i].pow(static_cast<unsigned>(i + 1));
    Rational c = leading_coefficient() / prod.leading_coefficient();
    return {c, parts};
}

Rational UniPoly::root_bound() const {
    if (is_zero()) throw ZeroPolynomialError("root_bound of the zero polynomial");
    if (*degree() == 0) return Rational(1);
    const Rational lead = leading_coefficient().abs();
    Rational max_ratio(0);
    for (const auto& [d, c] : terms_) {
        if (d == *degree()) continue;
        Rational ratio = c.abs() / lead;
        if (ratio > max_ratio) max_ratio = ratio;
    }
    return Rational(1) + max_ratio;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational a = c.abs();
        if (d == 0) {
            os << a.to_string();
        } else {
            if (a != Rational(1)) os << a.to_string() << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace ratell
