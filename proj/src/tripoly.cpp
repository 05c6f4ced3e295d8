#include "ratell/tripoly.hpp"

#include <algorithm>
#include <sstream>

namespace ratell {

TriPoly::TriPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(TriExp{0, 0, 0}, constant);
}

TriPoly TriPoly::monomial(TriExp e, const Rational& coeff) {
    TriPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
    return p;
}

TriPoly TriPoly::from_terms(std::initializer_list<std::pair<TriExp, Rational>> terms) {
    TriPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

TriPoly TriPoly::from_unipoly_in_t(const UniPoly& p) {
    TriPoly r;
    for (const auto& [d, c] : p.terms()) r.terms_.emplace(TriExp{d, 0, 0}, c);
    return r;
}

void TriPoly::add_term(TriExp e, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational TriPoly::coefficient(TriExp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::array<unsigned, 3> TriPoly::degrees() const {
    std::array<unsigned, 3> d{0, 0, 0};
    for (const auto& [e, c] : terms_) {
        d[0] = std::max(d[0], e.k);
        d[1] = std::max(d[1], e.p);
        d[2] = std::max(d[2], e.q);
    }
    return d;
}

bool TriPoly::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.sign() >= 0; });
}

bool TriPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
}

TriPoly TriPoly::operator-() const {
    TriPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    TriPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) {
    TriPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(TriExp{ea.k + eb.k, ea.p + eb.p, ea.q + eb.q}, ca * cb);
    return r;
}

TriPoly operator*(const Rational& c, const TriPoly& p) {
    TriPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

TriPoly TriPoly::pow(unsigned n) const {
    TriPoly result(Rational(1));
    TriPoly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

Rational TriPoly::evaluate(const Rational& t, const Rational& u, const Rational& v) const {
    // Power tables avoid recomputing t^k for every term.
    const auto d = degrees();
    std::vector<Rational> pt(d[0] + 1), pu(d[1] + 1), pv(d[2] + 1);
    pt[0] = pu[0] = pv[0] = Rational(1);
    for (unsigned i = 1; i <= d[0]; ++i) pt[i] = pt[i - 1] * t;
    for (unsigned i = 1; i <= d[1]; ++i) pu[i] = pu[i - 1] * u;
    for (unsigned i = 1; i <= d[2]; ++i) pv[i] = pv[i - 1] * v;
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * pt[e.k] * pu[e.p] * pv[e.q];
    return acc;
}

TriPoly TriPoly::specialize_t(const Rational& value) const {
    TriPoly r;
    for (const auto& [e, c] : terms_) r.add_term(TriExp{0, e.p, e.q}, c * value.pow(e.k));
    return r;
}

UniPoly TriPoly::specialize_uv_one() const {
    std::vector<std::pair<unsigned, Rational>> terms;
    terms.reserve(terms_.size());
    for (const auto& [e, c] : terms_) terms.emplace_back(e.k, c);
    return UniPoly::from_terms(terms);
}

BiPoly TriPoly::collapse_uv() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.p != e.q)
            throw NotCollapsibleError("collapse_uv: monomial t^" + std::to_string(e.k) + " u^" +
                                          std::to_string(e.p) + " v^" + std::to_string(e.q) +
                                          " has unequal u-, v-exponents",
                                      e.k, e.p, e.q);
        r.terms_.emplace(BiExp{e.k, e.p}, c);
    }
    return r;
}

std::string TriPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational a = c.abs();
        std::string vars;
        auto append = [&vars](const char* name, unsigned exp) {
            if (exp == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (exp > 1) vars += "^" + std::to_string(exp);
        };
        append("t", e.k);
        append("u", e.p);
        append("v", e.q);
        if (vars.empty()) {
            os << a.to_string();
        } else {
            if (a != Rational(1)) os << a.to_string() << "*";
            os << vars;
        }
    }
    return os.str();
}

BiPoly BiPoly::monomial(BiExp e, const Rational& coeff) {
    BiPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
    return p;
}

Rational BiPoly::evaluate(const Rational& t, const Rational& w) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * t.pow(e.k) * w.pow(e.j);
    return acc;
}

TriPoly BiPoly::expand_uv() const {
    TriPoly r;
    for (const auto& [e, c] : terms_) r = r + TriPoly::monomial(TriExp{e.k, e.j, e.j}, c);
    return r;
}

}  // namespace ratell
