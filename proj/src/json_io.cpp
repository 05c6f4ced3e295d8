#include "ratell/json_io.hpp"

#include <utility>
#include <vector>

#include "ratell/errors.hpp"

namespace ratell {

namespace {

std::string int_to_string(const Int& n) { return n.get_str(); }

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Positive: return "positive";
        case Verdict::NonPositive: return "non_positive";
        case Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

const char* status_name(BoxStatus s) {
    switch (s) {
        case BoxStatus::CertifiedLeaf: return "certified_leaf";
        case BoxStatus::WitnessLeaf: return "witness_leaf";
        case BoxStatus::UndecidedLeaf: return "undecided_leaf";
        case BoxStatus::Split: return "split";
    }
    return "split";
}

Json box_node_to_json(const BoxNode& node) {
    Json j;
    j["box"] = to_json(node.box);
    j["status"] = status_name(node.status);
    j["depth"] = node.depth;
    if (node.coeff_min) j["coeff_min"] = node.coeff_min->to_string();
    if (node.coeff_max) j["coeff_max"] = node.coeff_max->to_string();
    if (node.status == BoxStatus::Split) {
        j["split_axis"] = node.split_axis;
        Json children = Json::array();
        if (node.lower) children.push_back(box_node_to_json(*node.lower));
        if (node.upper) children.push_back(box_node_to_json(*node.upper));
        j["children"] = std::move(children);
    }
    return j;
}

// The t column is zero by the EFunction invariant; emit [p, q, num, den].
Json t_collapsed_to_json(const TriPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        arr.push_back(Json::array(
            {e.p, e.q, int_to_string(c.numerator()), int_to_string(c.denominator())}));
    }
    return arr;
}

// Accepts a decimal string (canonical) or a JSON integer (hand-authored
// convenience); everything else is malformed.
Int int_from_json(const Json& j, const char* what) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw MalformedInputError(std::string(what) + ": not a decimal integer: \"" + s +
                                      "\"");
        }
    }
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    throw MalformedInputError(std::string(what) + ": expected a decimal string or integer, got " +
                              j.dump());
}

unsigned exponent_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw MalformedInputError(std::string(what) + ": expected a nonnegative integer, got " +
                                  j.dump());
    const long long v = j.get<long long>();
    if (v > 0xffffffffLL)
        throw MalformedInputError(std::string(what) + ": exponent too large: " + j.dump());
    return static_cast<unsigned>(v);
}

Rational coeff_from_json(const Json& num, const Json& den, const char* what) {
    const Int n = int_from_json(num, what);
    const Int d = int_from_json(den, what);
    if (sgn(d) == 0) throw MalformedInputError(std::string(what) + ": zero denominator");
    return Rational(n, d);
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& [deg, c] : p.terms())
        arr.push_back(
            Json::array({deg, int_to_string(c.numerator()), int_to_string(c.denominator())}));
    return arr;
}

Json to_json(const TriPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(Json::array(
            {e.k, e.p, e.q, int_to_string(c.numerator()), int_to_string(c.denominator())}));
    return arr;
}

Json to_json(const EFunction& e) { return t_collapsed_to_json(e.poly); }

Json to_json(const Interval& iv) {
    Json j;
    j["lo"] = iv.lo.to_string();
    j["hi"] = iv.hi.to_string();
    return j;
}

Json to_json(const Box& box) {
    Json arr = Json::array();
    for (const Interval& iv : box.iv) arr.push_back(to_json(iv));
    return arr;
}

Json to_json(const Witness& w) {
    Json j;
    Json point = Json::array();
    for (const Rational& x : w.point) point.push_back(x.to_string());
    j["point"] = std::move(point);
    j["value"] = w.value.to_string();
    return j;
}

Json to_json(const RayCertificate& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    j["epsilon"] = c.epsilon.to_string();
    j["value_at_epsilon"] = c.value_at_epsilon.to_string();
    j["variations_at_epsilon"] = c.variations_at_epsilon;
    j["variations_at_infinity"] = c.variations_at_infinity;
    j["sturm_ran"] = c.sturm_ran;
    if (c.witness) j["witness"] = to_json(*c.witness);
    if (c.touch_bracket) j["touch_bracket"] = to_json(*c.touch_bracket);
    return j;
}

Json to_json(const BoxCertificate& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    j["max_depth"] = c.max_depth;
    j["deepest_depth"] = c.deepest_depth;
    j["node_count"] = c.node_count;
    if (c.witness) j["witness"] = to_json(*c.witness);
    if (c.root) j["tree"] = box_node_to_json(*c.root);
    return j;
}

Json to_json(const EllipticSpace& X) {
    Json j;
    j["name"] = X.name;
    j["p_pi"] = to_json(X.p_pi);
    j["p_coh"] = to_json(X.p_coh);
    j["mh_pi"] = X.mh_pi ? to_json(*X.mh_pi) : Json(nullptr);
    j["mh_coh"] = X.mh_coh ? to_json(*X.mh_coh) : Json(nullptr);
    j["formal_dim"] = X.formal_dim;
    return j;
}

Json to_json(const ValidationReport& r) {
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
        Json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    Json j;
    j["all_pass"] = r.all_pass();
    j["checks"] = std::move(checks);
    return j;
}

Json to_json(const HilaliResult& r) {
    Json j;
    j["holds"] = r.holds;
    j["pi_total"] = int_to_string(r.pi_total);
    j["coh_total"] = int_to_string(r.coh_total);
    return j;
}

Json to_json(const ThresholdReport& r, bool include_certificates) {
    Json j;
    j["threshold"] = r.threshold ? Json(*r.threshold) : Json(nullptr);
    j["stability_bound"] = r.stability_bound;
    j["induction_bound"] = r.induction_bound;

    if (std::holds_alternative<RayRegion>(r.region)) {
        Json region;
        region["type"] = "ray";
        region["epsilon"] = std::get<RayRegion>(r.region).epsilon.to_string();
        j["region"] = std::move(region);
    } else {
        Json region;
        region["type"] = "box";
        region["box"] = to_json(std::get<BoxRegion>(r.region).box);
        j["region"] = std::move(region);
    }

    Json per_n = Json::array();
    for (const PerN& rec : r.per_n) {
        Json e;
        e["n"] = rec.n;
        e["holds"] = rec.holds ? Json(*rec.holds) : Json(nullptr);
        if (include_certificates) {
            if (std::holds_alternative<RayCertificate>(rec.certificate))
                e["certificate"] = to_json(std::get<RayCertificate>(rec.certificate));
            else
                e["certificate"] = to_json(std::get<BoxCertificate>(rec.certificate));
        }
        per_n.push_back(std::move(e));
    }
    j["per_n"] = std::move(per_n);

    if (r.ray_tail) {
        Json t;
        t["n_from"] = r.ray_tail->n_from;
        if (include_certificates) {
            t["g"] = to_json(r.ray_tail->g);
            t["h"] = to_json(r.ray_tail->h);
        }
        j["tail"] = std::move(t);
    }
    if (r.box_tail) {
        Json t;
        t["n_from"] = r.box_tail->n_from;
        if (include_certificates) {
            t["g"] = to_json(r.box_tail->g);
            t["h"] = to_json(r.box_tail->h);
        }
        j["tail"] = std::move(t);
    }
    if (r.probe) {
        Json p;
        p["box"] = to_json(r.probe->box);
        p["n"] = r.probe->n;
        p["samples_checked"] = r.probe->result.samples_checked;
        p["witness"] = r.probe->result.witness ? to_json(*r.probe->result.witness) : Json(nullptr);
        j["unbounded_probe"] = std::move(p);
    }
    return j;
}

Json to_json(const UpperBoundReport& r) {
    Json monomials = Json::array();
    for (const MonomialBound& m : r.monomials) {
        Json e;
        e["degree"] = m.degree;
        e["coefficient"] = int_to_string(m.coefficient);
        e["K"] = int_to_string(m.K);
        e["s"] = m.s;
        e["n_hat"] = m.n_hat;
        e["n_tilde"] = m.n_tilde ? Json(*m.n_tilde) : Json(nullptr);
        e["u"] = m.u;
        monomials.push_back(std::move(e));
    }
    Json j;
    j["u"] = r.u;
    j["case_b"] = r.case_b;
    j["monomials"] = std::move(monomials);
    return j;
}

Json to_json(const FibrationCheck& r) {
    Json j;
    j["additive"] = r.additive;
    j["difference"] = t_collapsed_to_json(r.difference);
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Int(static_cast<long>(j.get<long long>())));
    throw MalformedInputError("expected a rational as \"p/q\" string, got " + j.dump());
}

UniPoly unipoly_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInputError("UniPoly: expected an array, got " + j.dump());
    std::vector<std::pair<unsigned, Rational>> terms;
    terms.reserve(j.size());
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.size() != 3)
            throw MalformedInputError("UniPoly term: expected [degree, num, den], got " +
                                      entry.dump());
        terms.emplace_back(exponent_from_json(entry[0], "UniPoly degree"),
                           coeff_from_json(entry[1], entry[2], "UniPoly coefficient"));
    }
    return UniPoly::from_terms(terms);
}

TriPoly tripoly_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInputError("TriPoly: expected an array, got " + j.dump());
    TriPoly p;
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.size() != 5)
            throw MalformedInputError("TriPoly term: expected [k, p, q, num, den], got " +
                                      entry.dump());
        const TriExp e{exponent_from_json(entry[0], "TriPoly k"),
                       exponent_from_json(entry[1], "TriPoly p"),
                       exponent_from_json(entry[2], "TriPoly q")};
        p = p + TriPoly::monomial(e, coeff_from_json(entry[3], entry[4], "TriPoly coefficient"));
    }
    return p;
}

LoadedSpace parse_space(const std::string& json_text, const LoadPolicy& policy) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw MalformedInputError(std::string("space document: ") + e.what());
    }
    if (!j.is_object())
        throw MalformedInputError("space document: expected a JSON object, got " + j.dump());
    if (!j.contains("name") || !j.at("name").is_string())
        throw MalformedInputError("space document: missing string field \"name\"");
    for (const char* key : {"p_pi", "p_coh"})
        if (!j.contains(key))
            throw MalformedInputError(std::string("space document: missing field \"") + key +
                                      "\"");

    auto optional_tri = [&](const char* key) -> std::optional<TriPoly> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return tripoly_from_json(j.at(key));
    };

    EllipticSpace X =
        make_space(j.at("name").get<std::string>(), unipoly_from_json(j.at("p_pi")),
                   unipoly_from_json(j.at("p_coh")), optional_tri("mh_pi"),
                   optional_tri("mh_coh"));

    LoadedSpace out{std::move(X), {}};
    for (const CheckResult& c : validate_structure(out.space).checks) {
        if (c.pass) continue;
        if (policy.enforce_poincare_duality && c.id == "f")
            throw InvariantViolationError("space document: Poincaré duality enforced by policy: " +
                                          c.detail);
        out.warnings.push_back("check (" + c.id + ") failed: " + c.detail);
    }
    return out;
}

}  // namespace ratell
