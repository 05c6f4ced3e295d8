#include "ratell/spaces.hpp"

#include <algorithm>
#include <sstream>

#include "ratell/errors.hpp"

namespace ratell {

namespace {

void require_nonneg_integer_coeffs(const UniPoly& p, const std::string& what) {
    for (const auto& [k, c] : p.terms())
        if (!c.is_integer() || c.sign() < 0)
            throw InvariantViolationError(what + ": coefficient of t^" + std::to_string(k) +
                                          " is " + c.to_string() +
                                          ", expected a nonnegative integer");
}

void require_nonneg_integer_coeffs(const TriPoly& p, const std::string& what) {
    for (const auto& [e, c] : p.terms())
        if (!c.is_integer() || c.sign() < 0)
            throw InvariantViolationError(what + ": coefficient of t^" + std::to_string(e.k) +
                                          " u^" + std::to_string(e.p) + " v^" +
                                          std::to_string(e.q) + " is " + c.to_string() +
                                          ", expected a nonnegative integer");
}

std::string join(const std::vector<unsigned>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

// 1 + t^2 uv + t^4 (uv)^2 + ... + t^{2n}(uv)^n, the mixed Hodge cohomology
// polynomial of CP^n.
TriPoly projective_mh_coh(unsigned n) {
    TriPoly sum;
    for (unsigned j = 0; j <= n; ++j) sum = sum + TriPoly::monomial({2 * j, j, j}, Rational(1));
    return sum;
}

}  // namespace

EllipticSpace make_space(std::string name, UniPoly p_pi, UniPoly p_coh,
                         std::optional<TriPoly> mh_pi, std::optional<TriPoly> mh_coh) {
    if (p_coh.coefficient(0) != Rational(1))
        throw InvariantViolationError("p_coh: constant term is " +
                                      p_coh.coefficient(0).to_string() + ", expected 1");
    if (!p_coh.coefficient(1).is_zero())
        throw InvariantViolationError("p_coh: coefficient of t^1 is " +
                                      p_coh.coefficient(1).to_string() +
                                      ", expected 0 (simple connectivity)");
    if (!p_pi.coefficient(0).is_zero() || !p_pi.coefficient(1).is_zero())
        throw InvariantViolationError(
            "p_pi: coefficients of t^0 and t^1 must vanish (simple connectivity)");
    require_nonneg_integer_coeffs(p_pi, "p_pi");
    require_nonneg_integer_coeffs(p_coh, "p_coh");

    if (mh_pi.has_value() != mh_coh.has_value())
        throw InvariantViolationError(
            "mixed Hodge polynomials must be present both or neither (got only one)");
    if (mh_pi) {
        require_nonneg_integer_coeffs(*mh_pi, "mh_pi");
        require_nonneg_integer_coeffs(*mh_coh, "mh_coh");
        if (mh_pi->specialize_uv_one() != p_pi)
            throw InvariantViolationError("mh_pi(t,1,1) != p_pi");
        if (mh_coh->specialize_uv_one() != p_coh)
            throw InvariantViolationError("mh_coh(t,1,1) != p_coh");
    }

    EllipticSpace X;
    X.name = std::move(name);
    X.p_pi = std::move(p_pi);
    X.p_coh = std::move(p_coh);
    X.mh_pi = std::move(mh_pi);
    X.mh_coh = std::move(mh_coh);
    X.formal_dim = X.p_coh.degree().value();  // p_coh != 0: constant term is 1
    return X;
}

EllipticSpace point_space() {
    return make_space("point", UniPoly(), UniPoly(Rational(1)), TriPoly(),
                      TriPoly(Rational(1)));
}

EllipticSpace sphere(unsigned k) {
    if (k < 2)
        throw ParameterOutOfRangeError("sphere: dimension must be >= 2, got " +
                                       std::to_string(k));
    UniPoly p_pi, p_coh;
    if (k % 2 == 1) {
        p_pi = UniPoly::from_terms({{k, Rational(1)}});
    } else {
        p_pi = UniPoly::from_terms({{k, Rational(1)}, {2 * k - 1, Rational(1)}});
    }
    p_coh = UniPoly::from_terms({{0, Rational(1)}, {k, Rational(1)}});
    return make_space("sphere:" + std::to_string(k), std::move(p_pi), std::move(p_coh));
}

EllipticSpace complex_projective(unsigned n) {
    if (n < 1)
        throw ParameterOutOfRangeError("complex_projective: n must be >= 1, got " +
                                       std::to_string(n));
    UniPoly p_pi = UniPoly::from_terms({{2, Rational(1)}, {2 * n + 1, Rational(1)}});
    std::vector<std::pair<unsigned, Rational>> coh;
    for (unsigned j = 0; j <= n; ++j) coh.emplace_back(2 * j, Rational(1));
    TriPoly mh_pi = TriPoly::monomial({2, 1, 1}, Rational(1)) +
                    TriPoly::monomial({2 * n + 1, n + 1, n + 1}, Rational(1));
    return make_space("cpn:" + std::to_string(n), std::move(p_pi), UniPoly::from_terms(coh),
                      std::move(mh_pi), projective_mh_coh(n));
}

EllipticSpace punctured_affine(unsigned n) {
    if (n < 1)
        throw ParameterOutOfRangeError("punctured_affine: n must be >= 1, got " +
                                       std::to_string(n));
    TriPoly top = TriPoly::monomial({2 * n + 1, n + 1, n + 1}, Rational(1));
    TriPoly mh_coh = TriPoly(Rational(1)) + top;
    return make_space("punctured:" + std::to_string(n), top.specialize_uv_one(),
                      mh_coh.specialize_uv_one(), top, mh_coh);
}

EllipticSpace toric(const std::vector<unsigned>& n) {
    if (n.empty()) throw ParameterOutOfRangeError("toric: need at least one factor");
    for (unsigned ni : n)
        if (ni < 1) throw ParameterOutOfRangeError("toric: every n_i must be >= 1");
    TriPoly mh_pi = Rational(static_cast<long>(n.size())) * TriPoly::monomial({2, 1, 1}, Rational(1));
    TriPoly mh_coh(Rational(1));
    for (unsigned ni : n) {
        mh_pi = mh_pi + TriPoly::monomial({2 * ni + 1, ni + 1, ni + 1}, Rational(1));
        mh_coh = mh_coh * projective_mh_coh(ni);
    }
    UniPoly p_pi = mh_pi.specialize_uv_one();
    UniPoly p_coh = mh_coh.specialize_uv_one();
    return make_space("toric:" + join(n), std::move(p_pi), std::move(p_coh), std::move(mh_pi),
                      std::move(mh_coh));
}

EllipticSpace arrangement_complement(const std::vector<unsigned>& n) {
    if (n.empty())
        throw ParameterOutOfRangeError("arrangement_complement: need at least one factor");
    for (unsigned ni : n)
        if (ni < 1)
            throw ParameterOutOfRangeError(
                "arrangement_complement: every n_i must be >= 1 (simple connectivity)");
    TriPoly mh_pi;
    TriPoly mh_coh(Rational(1));
    for (unsigned ni : n) {
        TriPoly top = TriPoly::monomial({2 * ni + 1, ni + 1, ni + 1}, Rational(1));
        mh_pi = mh_pi + top;
        mh_coh = mh_coh * (TriPoly(Rational(1)) + top);
    }
    UniPoly p_pi = mh_pi.specialize_uv_one();
    UniPoly p_coh = mh_coh.specialize_uv_one();
    return make_space("arrangement:" + join(n), std::move(p_pi), std::move(p_coh),
                      std::move(mh_pi), std::move(mh_coh));
}

EllipticSpace product_space(const EllipticSpace& X, const EllipticSpace& Y) {
    std::optional<TriPoly> mh_pi, mh_coh;
    if (X.has_hodge() && Y.has_hodge()) {
        mh_pi = *X.mh_pi + *Y.mh_pi;
        mh_coh = *X.mh_coh * *Y.mh_coh;
    }
    return make_space(X.name + " x " + Y.name, X.p_pi + Y.p_pi, X.p_coh * Y.p_coh,
                      std::move(mh_pi), std::move(mh_coh));
}

EllipticSpace power_space(const EllipticSpace& X, unsigned n) {
    if (n < 1) throw ParameterOutOfRangeError("power_space: n must be >= 1");
    if (n == 1) return X;
    const Rational count(static_cast<long>(n));
    std::optional<TriPoly> mh_pi, mh_coh;
    if (X.has_hodge()) {
        mh_pi = count * *X.mh_pi;
        mh_coh = X.mh_coh->pow(n);
    }
    return make_space("(" + X.name + ")^" + std::to_string(n), count * X.p_pi, X.p_coh.pow(n),
                      std::move(mh_pi), std::move(mh_coh));
}

namespace {

Int coeff_int(const UniPoly& p, unsigned k) { return p.coefficient(k).numerator(); }

std::string s(const Int& v) { return v.get_str(); }

}  // namespace

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& ValidationReport::check(const std::string& id) const {
    for (const CheckResult& c : checks)
        if (c.id == id) return c;
    throw ParameterOutOfRangeError("no such check: " + id);
}

ValidationReport validate_structure(const EllipticSpace& X) {
    const Int n(X.formal_dim);

    Int odd_weighted(0), even_weighted(0), odd_count(0), even_count(0), even_correction(0);
    for (const auto& [k, c] : X.p_pi.terms()) {
        const Int a = c.numerator();
        if (k % 2 == 1) {
            odd_weighted += Int(k) * a;
            odd_count += a;
        } else {
            even_weighted += Int(k) * a;
            even_count += a;
            even_correction += Int(k - 1) * a;
        }
    }
    const Int chi_pi = even_count - odd_count;
    const Int chi = X.p_coh.evaluate(Rational(-1)).numerator();

    std::vector<Int> betti(X.formal_dim + 1, Int(0));
    for (const auto& [k, c] : X.p_coh.terms()) betti[k] = c.numerator();

    ValidationReport report;
    auto add = [&report](std::string id, bool pass, std::string detail) {
        report.checks.push_back({std::move(id), pass, std::move(detail)});
    };

    if (X.p_pi.is_zero())
        add("a", true, "no homotopy generators (vacuous)");
    else
        add("a", odd_weighted <= 2 * n - 1 && even_weighted <= n,
            "sum_odd k*a_k = " + s(odd_weighted) + " vs 2n-1 = " + s(2 * n - 1) +
                "; sum_even k*a_k = " + s(even_weighted) + " vs n = " + s(n));
    add("b", n == odd_weighted - even_correction,
        s(odd_weighted) + " - " + s(even_correction) + " = " + s(odd_weighted - even_correction) +
            " vs n = " + s(n));
    add("c", chi_pi <= 0, "chi^pi = " + s(even_count) + " - " + s(odd_count) + " = " + s(chi_pi));
    add("d", chi >= 0, "chi = p_coh(-1) = " + s(chi));
    add("e", (chi > 0) == (chi_pi == 0),
        "chi = " + s(chi) + ", chi^pi = " + s(chi_pi) + " (chi > 0 iff chi^pi = 0)");

    {
        bool pass = betti[X.formal_dim] == 1;
        std::string detail = "b_n = " + s(betti[X.formal_dim]);
        if (X.formal_dim >= 2) {
            pass = pass && betti[1] == 0 && betti[X.formal_dim - 1] == 0;
            detail += ", b_1 = " + s(betti[1]) + ", b_{n-1} = " + s(betti[X.formal_dim - 1]);
        }
        for (unsigned m = 0; m <= X.formal_dim / 2; ++m)
            if (betti[m] != betti[X.formal_dim - m]) {
                pass = false;
                detail += ", b_" + std::to_string(m) + " = " + s(betti[m]) +
                          " != b_" + std::to_string(X.formal_dim - m) + " = " +
                          s(betti[X.formal_dim - m]);
                break;
            }
        add("f", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        for (unsigned m = 1; m < X.formal_dim; ++m)
            if (2 * betti[m] > binomial(X.formal_dim, m)) {
                pass = false;
                detail = "b_" + std::to_string(m) + " = " + s(betti[m]) + " > binom(n," +
                         std::to_string(m) + ")/2 = " + s(binomial(X.formal_dim, m)) + "/2";
                break;
            }
        const Int total = X.p_coh.evaluate(Rational(1)).numerator();
        // 2^{n-1} + 1 as an exact rational (3/2 for n = 0).
        Int two_pow_n(1);
        mpz_ui_pow_ui(two_pow_n.get_mpz_t(), 2, X.formal_dim);
        const Rational cap = Rational(two_pow_n, Int(2)) + Rational(1);
        if (pass && Rational(total) > cap) {
            pass = false;
            detail = "dim H^* = " + s(total) + " > 2^{n-1}+1 = " + cap.to_string();
        }
        if (pass)
            detail = "all b_m <= binom(n,m)/2; dim H^* = " + s(total) +
                     " <= 2^{n-1}+1 = " + cap.to_string();
        add("g", pass, detail);
    }

    {
        const Int a2 = coeff_int(X.p_pi, 2);
        const Int b2 = X.formal_dim >= 2 ? betti[2] : Int(0);
        add("hurewicz", a2 == b2, "a_2 = " + s(a2) + ", b_2 = " + s(b2));
    }

    {
        const bool trivial = X.p_pi.is_zero();
        const Int ell = trivial ? Int(0) : Int(*X.p_pi.degree());
        add("ell_bound", trivial || ell <= 2 * n - 1,
            trivial ? "p_pi = 0 (no generators)"
                    : "ell = " + s(ell) + " vs 2n-1 = " + s(2 * n - 1));
    }

    {
        const Int total_pi = X.p_pi.evaluate(Rational(1)).numerator();
        add("total_pi_bound", total_pi <= n, "P^pi(1) = " + s(total_pi) + " vs n = " + s(n));
    }

    return report;
}

HilaliResult hilali_holds(const EllipticSpace& X) {
    HilaliResult r;
    r.pi_total = X.p_pi.evaluate(Rational(1)).numerator();
    r.coh_total = X.p_coh.evaluate(Rational(1)).numerator();
    r.holds = r.pi_total <= r.coh_total;
    return r;
}

}  // namespace ratell
