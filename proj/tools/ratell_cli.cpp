// ratell: certified stabilization thresholds for rationally elliptic spaces.
//
// Every numeric flag is an exact rational ("p/q" or an integer literal;
// decimals are rejected).  Reports are JSON on stdout with lexicographically
// sorted keys, byte-identical across runs; errors are structured JSON on
// stderr.  Exit codes: 0 success, 1 failed --assert-threshold, 2 input or
// precondition errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ratell/errors.hpp"
#include "ratell/hodge_e.hpp"
#include "ratell/json_io.hpp"
#include "ratell/spaces.hpp"
#include "ratell/thresholds.hpp"

namespace {

using ratell::EllipticSpace;
using ratell::Json;
using ratell::Rational;

// ---------------------------------------------------------------- specifiers

unsigned long parse_unsigned(const std::string& s, const std::string& context) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ratell::MalformedInputError(context + ": expected a nonnegative integer, got \"" +
                                          s + "\"");
    try {
        return std::stoul(s);
    } catch (const std::exception&) {
        throw ratell::MalformedInputError(context + ": integer out of range: \"" + s + "\"");
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<unsigned> parse_tuple(const std::string& args, const std::string& context) {
    std::vector<unsigned> out;
    std::stringstream ss(args);
    std::string part;
    while (std::getline(ss, part, ','))
        out.push_back(static_cast<unsigned>(parse_unsigned(trim(part), context)));
    if (out.empty())
        throw ratell::MalformedInputError(context + ": expected a comma-separated tuple, got \"" +
                                          args + "\"");
    return out;
}

EllipticSpace parse_specifier(const std::string& text);

// One product factor: either "(inner)^n", "(inner)", or "family[:args]".
EllipticSpace parse_factor(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ratell::MalformedInputError("empty space specifier");

    if (s.front() == '(') {
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close == std::string::npos)
            throw ratell::MalformedInputError("unbalanced parentheses in specifier \"" + s + "\"");
        const EllipticSpace inner = parse_specifier(s.substr(1, close - 1));
        const std::string rest = trim(s.substr(close + 1));
        if (rest.empty()) return inner;
        if (rest.front() != '^')
            throw ratell::MalformedInputError("expected '^n' after ')' in specifier \"" + s +
                                              "\"");
        const unsigned long n = parse_unsigned(trim(rest.substr(1)), "power exponent");
        return ratell::power_space(inner, static_cast<unsigned>(n));
    }

    const std::size_t colon = s.find(':');
    const std::string family = colon == std::string::npos ? s : s.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);

    if (family == "point") {
        if (!args.empty())
            throw ratell::MalformedInputError("point takes no parameters, got \"" + s + "\"");
        return ratell::point_space();
    }
    if (family == "sphere")
        return ratell::sphere(static_cast<unsigned>(parse_unsigned(args, "sphere dimension")));
    if (family == "cpn")
        return ratell::complex_projective(
            static_cast<unsigned>(parse_unsigned(args, "projective dimension")));
    if (family == "punctured")
        return ratell::punctured_affine(
            static_cast<unsigned>(parse_unsigned(args, "punctured-affine parameter")));
    if (family == "toric") return ratell::toric(parse_tuple(args, "toric tuple"));
    if (family == "arrangement")
        return ratell::arrangement_complement(parse_tuple(args, "arrangement tuple"));
    throw ratell::MalformedInputError(
        "unknown space specifier \"" + s +
        "\" (families: point, sphere:k, cpn:n, punctured:n, toric:n1,n2,..., "
        "arrangement:n1,n2,...; products with ' x '; powers as (A)^n)");
}

// Splits on " x " at parenthesis depth zero and folds with product_space.
EllipticSpace parse_specifier(const std::string& text) {
    std::vector<std::string> factors;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (depth == 0 && text.compare(i, 3, " x ") == 0) {
            factors.push_back(text.substr(start, i - start));
            start = i + 3;
            i += 2;
        }
    }
    factors.push_back(text.substr(start));
    EllipticSpace X = parse_factor(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i)
        X = ratell::product_space(X, parse_factor(factors[i]));
    return X;
}

// ---------------------------------------------------------------- plumbing

struct SpaceInput {
    std::string specifier;
    std::string json_file;
    bool enforce_duality = false;
};

void add_space_flags(CLI::App* sub, SpaceInput& in) {
    sub->add_option("--space", in.specifier,
                    "Catalog specifier, e.g. sphere:3, cpn:2, toric:1,2, cpn:1 x sphere:4");
    sub->add_option("--json-file", in.json_file, "Space-definition JSON document to load");
    sub->add_flag("--enforce-duality", in.enforce_duality,
                  "Reject loaded spaces that fail Poincaré duality (check f)");
}

ratell::LoadedSpace resolve_space(const SpaceInput& in) {
    if (in.specifier.empty() == in.json_file.empty())
        throw ratell::MalformedInputError("exactly one of --space or --json-file is required");
    if (!in.specifier.empty()) return ratell::LoadedSpace{parse_specifier(in.specifier), {}};
    std::ifstream f(in.json_file);
    if (!f) throw ratell::MalformedInputError("cannot open file: " + in.json_file);
    std::stringstream buf;
    buf << f.rdbuf();
    return ratell::parse_space(buf.str(), ratell::LoadPolicy{in.enforce_duality});
}

Json space_envelope(const std::string& command, const ratell::LoadedSpace& loaded) {
    Json j;
    j["command"] = command;
    j["space"] = ratell::to_json(loaded.space);
    j["warnings"] = loaded.warnings;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Applies --assert-threshold: 0 on match, 1 on mismatch (recorded in the
// report either way).
int apply_assertion(Json& out, const ratell::ThresholdReport& rep, const CLI::Option* opt,
                    unsigned long expected) {
    if (opt->count() == 0) return 0;
    const bool matched = rep.threshold.has_value() && *rep.threshold == expected;
    Json a;
    a["expected"] = expected;
    a["actual"] = rep.threshold ? Json(*rep.threshold) : Json(nullptr);
    a["matched"] = matched;
    out["assert_threshold"] = std::move(a);
    return matched ? 0 : 1;
}

// ---------------------------------------------------------------- catalog

Json catalog_json() {
    auto family = [](const char* spec, const char* constraint, const char* note) {
        Json f;
        f["specifier"] = spec;
        f["constraint"] = constraint;
        f["note"] = note;
        return f;
    };
    Json j;
    j["command"] = "catalog";
    j["families"] = Json::array({
        family("point", "none", "one-point space; identity for products"),
        family("sphere:k", "k >= 2", "rational sphere S^k; no mixed Hodge data"),
        family("cpn:n", "n >= 1", "complex projective space CP^n"),
        family("punctured:n", "n >= 1", "C^{n+1} minus the origin"),
        family("toric:n1,n2,...", "all n_i >= 1",
               "rationally elliptic toric manifold with Bott-tower data"),
        family("arrangement:n1,n2,...", "all n_i >= 1",
               "simply connected elliptic hyperplane-arrangement complement"),
        family("A x B", "both factors valid", "product space; combine any specifiers"),
        family("(A)^n", "n >= 1", "n-fold power of A"),
    });
    j["examples"] = Json::array({"sphere:2", "sphere:3", "cpn:1", "cpn:2", "punctured:1",
                                 "toric:1,2", "arrangement:1,1,2", "cpn:1 x sphere:4",
                                 "(sphere:3)^2"});
    return j;
}

// ---------------------------------------------------------------- sweeps

std::vector<std::string> sweep_specifiers(const std::string& family, unsigned max_k,
                                          unsigned max_n) {
    std::vector<std::string> out;
    auto tuples = [&](const char* prefix) {
        for (unsigned len = 1; len <= max_k; ++len) {
            std::vector<unsigned> t(len, 1);
            while (true) {
                std::string s = prefix;
                for (unsigned i = 0; i < len; ++i)
                    s += (i ? "," : ":") + std::to_string(t[i]);
                out.push_back(s);
                unsigned i = len;
                while (i > 0 && t[i - 1] == max_n) t[--i] = 1;
                if (i == 0) break;
                ++t[i - 1];
            }
        }
    };
    if (family == "sphere") {
        for (unsigned k = 2; k <= max_k; ++k) out.push_back("sphere:" + std::to_string(k));
    } else if (family == "cpn") {
        for (unsigned n = 1; n <= max_k; ++n) out.push_back("cpn:" + std::to_string(n));
    } else if (family == "punctured") {
        for (unsigned n = 1; n <= max_k; ++n) out.push_back("punctured:" + std::to_string(n));
    } else if (family == "toric") {
        tuples("toric");
    } else if (family == "arrangement") {
        tuples("arrangement");
    } else {
        throw ratell::MalformedInputError(
            "unknown sweep family \"" + family +
            "\" (choose sphere, cpn, punctured, toric, arrangement)");
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += "\"";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified stabilization thresholds for rationally elliptic spaces"};
    app.require_subcommand(1);

    // catalog
    CLI::App* cat = app.add_subcommand("catalog", "List the built-in space families");

    // show / validate / hilali / epi
    SpaceInput show_in, val_in, hil_in, epi_in;
    CLI::App* show = app.add_subcommand("show", "Print a space's polynomials");
    add_space_flags(show, show_in);
    CLI::App* val = app.add_subcommand("validate", "Run every structural check on a space");
    add_space_flags(val, val_in);
    CLI::App* hil = app.add_subcommand("hilali", "Check total homotopy rank <= total Betti number");
    add_space_flags(hil, hil_in);
    CLI::App* epi = app.add_subcommand("epi", "Homotopical E-function E^pi(u,v) = MH^pi(-1,u,v)");
    add_space_flags(epi, epi_in);

    // pp
    SpaceInput pp_in;
    std::string pp_eps = "1";
    unsigned long pp_cap = 10000, pp_assert = 0;
    bool pp_nocert = false;
    CLI::App* pp = app.add_subcommand("pp", "Stabilization threshold pp(X; eps) on [eps, inf)");
    add_space_flags(pp, pp_in);
    pp->add_option("--epsilon", pp_eps, "Ray start, exact rational p/q (default 1)");
    pp->add_option("--n-cap", pp_cap, "Abort the search past this n (default 10000)");
    CLI::Option* pp_assert_opt =
        pp->add_option("--assert-threshold", pp_assert, "Exit 1 unless the threshold equals N");
    pp->add_flag("--no-certificates", pp_nocert, "Elide certificate evidence from the report");

    // mhp
    SpaceInput mhp_in;
    std::string mhp_corner = "1,1,1", mhp_r = "10";
    unsigned mhp_depth = 64;
    unsigned long mhp_cap = 10000, mhp_assert = 0;
    bool mhp_nocert = false;
    CLI::App* mhp = app.add_subcommand(
        "mhp", "Mixed Hodge threshold mhp(X; a,b,c) certified on [a,r] x [b,r] x [c,r]");
    add_space_flags(mhp, mhp_in);
    mhp->add_option("--corner", mhp_corner, "Corner a,b,c as exact rationals (default 1,1,1)");
    mhp->add_option("--r", mhp_r, "Box upper edge r > max(a,b,c) (default 10)");
    mhp->add_option("--max-depth", mhp_depth, "Bernstein subdivision depth limit (default 64)");
    mhp->add_option("--n-cap", mhp_cap, "Abort the search past this n (default 10000)");
    CLI::Option* mhp_assert_opt =
        mhp->add_option("--assert-threshold", mhp_assert, "Exit 1 unless the threshold equals N");
    mhp->add_flag("--no-certificates", mhp_nocert, "Elide certificate evidence from the report");

    // upper-bound
    SpaceInput ub_in;
    std::string ub_eps = "1";
    CLI::App* ub =
        app.add_subcommand("upper-bound", "Analytic upper bound u with pp(X; eps) <= u");
    add_space_flags(ub, ub_in);
    ub->add_option("--epsilon", ub_eps, "Ray start, exact rational p/q (default 1)");

    // fibration-check
    std::string fc_fiber, fc_total, fc_base;
    CLI::App* fc = app.add_subcommand("fibration-check",
                                      "Check E^pi additivity for a fibration F -> E -> B");
    fc->add_option("--fiber", fc_fiber, "Fiber specifier (or 'cstar' for C^x)")->required();
    fc->add_option("--total", fc_total, "Total-space specifier (or 'cstar')")->required();
    fc->add_option("--base", fc_base, "Base specifier (or 'cstar')")->required();

    // pp-sweep
    std::string sw_family = "toric", sw_eps = "1", sw_format = "json";
    unsigned sw_max_k = 4, sw_max_n = 3;
    unsigned long sw_cap = 10000;
    CLI::App* sw = app.add_subcommand("pp-sweep", "Tabulate pp over a catalog family");
    sw->add_option("--family", sw_family, "sphere, cpn, punctured, toric or arrangement");
    sw->add_option("--max-k", sw_max_k, "Largest parameter / tuple length (default 4)");
    sw->add_option("--max-n", sw_max_n, "Largest tuple entry for tuple families (default 3)");
    sw->add_option("--epsilon", sw_eps, "Ray start, exact rational p/q (default 1)");
    sw->add_option("--n-cap", sw_cap, "Abort any single search past this n (default 10000)");
    sw->add_option("--format", sw_format, "json (default) or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json err;
        err["error"]["type"] = "bad_arguments";
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }

    try {
        if (cat->parsed()) {
            emit(catalog_json());
            return 0;
        }
        if (show->parsed()) {
            emit(space_envelope("show", resolve_space(show_in)));
            return 0;
        }
        if (val->parsed()) {
            const ratell::LoadedSpace loaded = resolve_space(val_in);
            Json out = space_envelope("validate", loaded);
            out["validation"] = ratell::to_json(ratell::validate_structure(loaded.space));
            emit(out);
            return 0;
        }
        if (hil->parsed()) {
            const ratell::LoadedSpace loaded = resolve_space(hil_in);
            Json out = space_envelope("hilali", loaded);
            out["hilali"] = ratell::to_json(ratell::hilali_holds(loaded.space));
            emit(out);
            return 0;
        }
        if (epi->parsed()) {
            const ratell::LoadedSpace loaded = resolve_space(epi_in);
            Json out = space_envelope("epi", loaded);
            out["e_pi"] = ratell::to_json(ratell::e_pi(loaded.space));
            emit(out);
            return 0;
        }
        if (pp->parsed()) {
            const ratell::LoadedSpace loaded = resolve_space(pp_in);
            const Rational eps = Rational::parse(pp_eps);
            const ratell::ThresholdReport rep =
                ratell::pp_threshold(loaded.space, eps, pp_cap);
            Json out = space_envelope("pp", loaded);
            out["report"] = ratell::to_json(rep, !pp_nocert);
            const int rc = apply_assertion(out, rep, pp_assert_opt, pp_assert);
            emit(out);
            return rc;
        }
        if (mhp->parsed()) {
            const ratell::LoadedSpace loaded = resolve_space(mhp_in);
            std::stringstream ss(mhp_corner);
            std::vector<Rational> corner;
            std::string part;
            while (std::getline(ss, part, ',')) corner.push_back(Rational::parse(trim(part)));
            if (corner.size() != 3)
                throw ratell::MalformedInputError("--corner expects exactly three rationals a,b,c");
            const ratell::ThresholdReport rep =
                ratell::mhp_threshold(loaded.space, corner[0], corner[1], corner[2],
                                      Rational::parse(mhp_r), mhp_depth, mhp_cap);
            Json out = space_envelope("mhp", loaded);
            out["report"] = ratell::to_json(rep, !mhp_nocert);
            const int rc = apply_assertion(out, rep, mhp_assert_opt, mhp_assert);
            emit(out);
            return rc;
        }
        if (ub->parsed()) {
            const ratell::LoadedSpace loaded = resolve_space(ub_in);
            Json out = space_envelope("upper-bound", loaded);
            out["epsilon"] = Rational::parse(ub_eps).to_string();
            out["report"] = ratell::to_json(
                ratell::analytic_upper_bound(loaded.space, Rational::parse(ub_eps)));
            emit(out);
            return 0;
        }
        if (fc->parsed()) {
            auto object = [](const std::string& spec) {
                if (trim(spec) == "cstar") return ratell::HodgeObject::c_star();
                return ratell::HodgeObject::from_space(parse_specifier(spec));
            };
            const ratell::HodgeObject F = object(fc_fiber), E = object(fc_total),
                                      B = object(fc_base);
            Json out;
            out["command"] = "fibration-check";
            for (const auto& [key, obj] :
                 {std::pair<const char*, const ratell::HodgeObject*>{"fiber", &F},
                  {"total", &E},
                  {"base", &B}}) {
                Json o;
                o["name"] = obj->name;
                o["mh_pi"] = ratell::to_json(obj->mh_pi);
                out[key] = std::move(o);
            }
            out["check"] = ratell::to_json(ratell::check_fibration_additivity(F, E, B));
            emit(out);
            return 0;
        }
        if (sw->parsed()) {
            const Rational eps = Rational::parse(sw_eps);
            const std::vector<std::string> specs = sweep_specifiers(sw_family, sw_max_k, sw_max_n);
            if (sw_format == "csv") {
                std::cout << "specifier,epsilon,threshold,stability_bound,induction_bound,"
                             "n_checked\n";
                for (const std::string& s : specs) {
                    const ratell::ThresholdReport rep =
                        ratell::pp_threshold(parse_specifier(s), eps, sw_cap);
                    std::cout << csv_quote(s) << "," << eps.to_string() << ","
                              << (rep.threshold ? std::to_string(*rep.threshold) : "") << ","
                              << rep.stability_bound << "," << rep.induction_bound << ","
                              << rep.per_n.size() << "\n";
                }
            } else if (sw_format == "json") {
                Json rows = Json::array();
                for (const std::string& s : specs) {
                    const ratell::ThresholdReport rep =
                        ratell::pp_threshold(parse_specifier(s), eps, sw_cap);
                    Json row;
                    row["specifier"] = s;
                    row["epsilon"] = eps.to_string();
                    row["threshold"] = rep.threshold ? Json(*rep.threshold) : Json(nullptr);
                    row["stability_bound"] = rep.stability_bound;
                    row["induction_bound"] = rep.induction_bound;
                    row["n_checked"] = rep.per_n.size();
                    rows.push_back(std::move(row));
                }
                Json out;
                out["command"] = "pp-sweep";
                out["epsilon"] = eps.to_string();
                out["family"] = sw_family;
                out["rows"] = std::move(rows);
                emit(out);
            } else {
                throw ratell::MalformedInputError("--format must be json or csv, got \"" +
                                                  sw_format + "\"");
            }
            return 0;
        }
    } catch (const ratell::Error& e) {
        const char* type = "error";
        if (dynamic_cast<const ratell::MalformedInputError*>(&e)) type = "malformed_input";
        else if (dynamic_cast<const ratell::InvariantViolationError*>(&e)) type = "invariant_violation";
        else if (dynamic_cast<const ratell::ParameterOutOfRangeError*>(&e)) type = "parameter_out_of_range";
        else if (dynamic_cast<const ratell::MissingHodgeDataError*>(&e)) type = "missing_hodge_data";
        else if (dynamic_cast<const ratell::DegenerateSpaceError*>(&e)) type = "degenerate_space";
        else if (dynamic_cast<const ratell::CapExceededError*>(&e)) type = "cap_exceeded";
        else if (dynamic_cast<const ratell::NotCollapsibleError*>(&e)) type = "not_collapsible";
        else if (dynamic_cast<const ratell::ZeroPolynomialError*>(&e)) type = "zero_polynomial";
        else if (dynamic_cast<const ratell::NoFiniteBoundError*>(&e)) type = "no_finite_bound";
        Json err;
        err["error"]["type"] = type;
        err["error"]["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 0;
}
