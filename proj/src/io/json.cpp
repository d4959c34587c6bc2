#include "dicrit/io/json.hpp"

#include "dicrit/algebra/expression.hpp"
#include "dicrit/error.hpp"

#include <regex>
#include <set>

namespace dicrit::io {

using algebra::Exponent;
using algebra::Field;
using algebra::Scalar;
using valuation::DivisorialValuation;
using valuation::QdtStep;
using valuation::Value;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& reason)
{
    throw ParseError(field, reason);
}

std::int64_t get_int(const Json& j, const std::string& field)
{
    if (!j.is_number_integer()) bad(field, "expected an integer");
    return j.get<std::int64_t>();
}

std::string normalize_minus(std::string s)
{
    static const std::string unicode_minus = "\xE2\x88\x92";
    for (std::size_t pos; (pos = s.find(unicode_minus)) != std::string::npos;) s.replace(pos, unicode_minus.size(), "-");
    return s;
}

Scalar parse_coefficient(const Json& j, const FieldPtr& field, const std::string& where)
{
    std::string text;
    if (j.is_number_integer()) text = std::to_string(j.get<std::int64_t>());
    else if (j.is_string()) text = normalize_minus(j.get<std::string>());
    else bad(where, "coefficient must be a string or integer");
    static const std::regex pattern(R"(\s*-?\d+(/\d+)?\s*)");
    if (!std::regex_match(text, pattern)) bad(where, "malformed coefficient '" + text + "'");
    mpq_class q(text);
    if (q.get_den() == 0) bad(where, "zero denominator");
    q.canonicalize();
    if (field->is_finite() && mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(field->characteristic())))
        bad(where, "denominator divisible by the characteristic");
    return Scalar::from_rational(field, q);
}

std::vector<std::string> parse_vars(const Json& j)
{
    const Json& v = require(j, "vars");
    if (!v.is_array() || v.empty()) bad("vars", "must be a nonempty list of names");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& x : v) {
        if (!x.is_string() || x.get<std::string>().empty()) bad("vars", "names must be nonempty strings");
        if (!seen.insert(x.get<std::string>()).second) bad("vars", "duplicate name " + x.get<std::string>());
        out.push_back(x.get<std::string>());
    }
    return out;
}

Exponent parse_exponent(const Json& j, std::size_t d, const std::string& where)
{
    if (!j.is_array()) bad(where, "exponent must be a list");
    if (j.size() != d) bad(where, "exponent length differs from the variable count");
    Exponent e;
    for (const auto& x : j) {
        auto k = get_int(x, where);
        if (k < 0 || k > 1000000) bad(where, "exponents must be nonnegative");
        e.push_back(static_cast<int>(k));
    }
    return e;
}

}  // namespace

const Json& require(const Json& j, const std::string& key)
{
    if (!j.is_object()) bad(key, "required (input is not an object)");
    auto it = j.find(key);
    if (it == j.end()) bad(key, "required");
    return *it;
}

Json parse_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad("input", std::string("invalid JSON: ") + e.what());
    }
}

FieldPtr parse_field(const Json& j)
{
    if (!j.is_object()) bad("field", "must be an object");
    const Json& t = require(j, "type");
    if (!t.is_string()) bad("type", "must be \"Q\" or \"Fp\"");
    const auto type = t.get<std::string>();
    if (type == "Q") return Field::rationals();
    if (type != "Fp") bad("type", "must be \"Q\" or \"Fp\"");
    auto p = get_int(require(j, "p"), "p");
    if (!algebra::is_prime(p) || p > (std::int64_t{1} << 31)) bad("p", "not prime");
    return Field::prime(p);
}

Json field_to_json(const FieldPtr& f)
{
    Json base = f->is_finite() ? Json{{"type", "Fp"}, {"p", f->characteristic()}} : Json{{"type", "Q"}};
    if (!f->is_extension()) return base;
    Json modulus = Json::array();
    for (const auto& c : f->modulus()) modulus.push_back(c.get_str());
    base["extension"] = modulus;  // generator a, coefficients low to high
    return base;
}

NamedPolynomial parse_polynomial(const Json& j)
{
    auto vars = parse_vars(j);
    FieldPtr field = j.contains("field") ? parse_field(j["field"]) : Field::rationals();
    if (j.contains("expr")) {
        if (!j["expr"].is_string()) bad("expr", "must be a string");
        try {
            return {algebra::parse_expression(j["expr"].get<std::string>(), field, vars), vars};
        } catch (const Error& e) {
            bad("expr", e.what());
        }
    }
    const Json& terms = require(j, "terms");
    if (!terms.is_array()) bad("terms", "must be a list");
    Polynomial p(field, vars.size());
    for (const auto& t : terms) {
        Scalar c = parse_coefficient(require(t, "c"), field, "c");
        p.add_term(parse_exponent(require(t, "e"), vars.size(), "e"), c);
    }
    return {p, vars};
}

Json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& vars)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"c", c.to_string()}, {"e", e}});
    return {{"vars", vars}, {"field", field_to_json(p.field())}, {"terms", terms}, {"text", p.to_string(vars)}};
}

std::vector<std::string> ideal_vars(const Json& j)
{
    return parse_vars(j);
}

monomial::MonomialIdeal parse_monomial_ideal(const Json& j)
{
    auto vars = parse_vars(j);
    const Json& gens = require(j, "gens");
    if (!gens.is_array() || gens.empty()) bad("gens", "must be a nonempty list of exponents");
    std::vector<Exponent> out;
    for (const auto& g : gens) out.push_back(parse_exponent(g, vars.size(), "gens"));
    return monomial::MonomialIdeal(vars.size(), out);
}

Json ideal_to_json(const monomial::MonomialIdeal& I, const std::vector<std::string>& vars)
{
    return {{"vars", vars}, {"gens", I.gens()}, {"text", I.to_string(vars)}};
}

valuation::Valuation parse_valuation(const Json& j, const FieldPtr& field)
{
    const Json& t = require(j, "type");
    if (!t.is_string()) bad("type", "must be \"monomial\" or \"qdt\"");
    if (t == "monomial") {
        const Json& w = require(j, "w");
        if (!w.is_array() || w.empty()) bad("w", "must be a nonempty list");
        std::vector<int> weights;
        for (const auto& x : w) {
            auto k = get_int(x, "w");
            if (k <= 0 || k > 1000000) bad("w", "weights must be positive");
            weights.push_back(static_cast<int>(k));
        }
        try {
            return valuation::Valuation(valuation::MonomialValuation(weights));
        } catch (const Error& e) {
            bad("w", e.what());
        }
    }
    if (t != "qdt") bad("type", "must be \"monomial\" or \"qdt\"");
    const Json& steps = require(j, "steps");
    if (!steps.is_array()) bad("steps", "must be a list");
    std::vector<QdtStep> out;
    for (const auto& s : steps) {
        auto chart = get_int(require(s, "chart"), "chart");
        if (chart != 0 && chart != 1) bad("chart", "must be 0 or 1");
        out.push_back({static_cast<int>(chart), parse_coefficient(require(s, "center"), field, "center")});
    }
    return valuation::Valuation(DivisorialValuation(field, out));
}

DivisorialValuation parse_divisorial(const Json& j, const FieldPtr& field)
{
    auto v = parse_valuation(j, field);
    if (!v.is_monomial()) return v.divisorial();
    const auto& w = v.monomial().weights();
    if (w.size() != 2) bad("w", "two weights expected in the plane");
    return DivisorialValuation::from_weights(field, w[0], w[1]);
}

Json divisorial_to_json(const DivisorialValuation& v)
{
    Json steps = Json::array();
    for (const auto& s : v.steps()) steps.push_back({{"chart", s.chart}, {"center", s.center.to_string()}});
    Json out{{"type", "qdt"}, {"steps", steps}};
    if (auto w = v.monomial_weights()) out["weights"] = {w->first, w->second};
    if (v.field()->is_extension()) out["field"] = field_to_json(v.field());
    return out;
}

Json valuation_to_json(const valuation::Valuation& v)
{
    if (v.is_monomial()) return {{"type", "monomial"}, {"w", v.monomial().weights()}};
    return divisorial_to_json(v.divisorial());
}

valuation::AuxLaurent parse_laurent(const Json& j, std::vector<std::string>* vars)
{
    const Json& comps = require(j, "components");
    if (!comps.is_array()) bad("components", "must be a list");
    valuation::AuxLaurent out;
    std::optional<NamedPolynomial> first;
    for (const auto& c : comps) {
        auto n = get_int(require(c, "n"), "n");
        auto f = parse_polynomial(require(c, "f"));
        if (first && (f.vars != first->vars || !algebra::same_field(f.poly.field(), first->poly.field())))
            bad("components", "all components must share variables and field");
        if (!first) first = f;
        auto [it, fresh] = out.emplace(static_cast<int>(n), f.poly);
        if (!fresh) it->second += f.poly;
    }
    if (vars && first) *vars = first->vars;
    return out;
}

Json laurent_to_json(const valuation::AuxLaurent& f, const std::vector<std::string>& vars)
{
    Json comps = Json::array();
    for (const auto& [n, p] : f) comps.push_back({{"n", n}, {"f", polynomial_to_json(p, vars)}});
    return {{"components", comps}};
}

pencil::Pencil parse_pencil(const Json& j, std::vector<std::string>* vars)
{
    auto a = parse_polynomial(require(j, "a"));
    auto b = parse_polynomial(require(j, "b"));
    if (a.vars.size() != 2) bad("a", "pencils live in two variables");
    if (a.vars != b.vars) bad("b", "variables differ from those of a");
    if (!algebra::same_field(a.poly.field(), b.poly.field())) bad("b", "field differs from that of a");
    if (vars) *vars = a.vars;
    return {a.poly, b.poly};
}

Json pencil_to_json(const pencil::Pencil& p, const std::vector<std::string>& vars)
{
    return {{"a", polynomial_to_json(p.a, vars)}, {"b", polynomial_to_json(p.b, vars)}};
}

Json value_to_json(const Value& v)
{
    if (v.is_infinite()) return "INFINITY";
    return v.get();
}

namespace {

Json coefficient_list(const algebra::UniPoly& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

}  // namespace

Json report_to_json(const pencil::PencilReport& r, const std::vector<std::string>& vars)
{
    Json points = Json::array();
    for (const auto& p : r.base_cluster.points) {
        Json q{{"parent", p.parent}, {"chart", p.chart}, {"center", p.center.to_string()},
               {"multiplicity", p.multiplicity}, {"depth", p.depth}, {"residue_degree", p.degree}};
        if (p.field && p.field->is_extension()) q["field"] = field_to_json(p.field);
        points.push_back(q);
    }
    Json dicriticals = Json::array();
    for (const auto& d : r.dicriticals) {
        Json rec{{"valuation", divisorial_to_json(d.valuation)},
                 {"Va", value_to_json(d.va)},
                 {"Vb", value_to_json(d.vb)},
                 {"residue", {{"num", coefficient_list(d.residue.num)},
                              {"den", coefficient_list(d.residue.den)},
                              {"text", "(" + d.residue.num.to_string() + ") / (" + d.residue.den.to_string() + ")"}}},
                 {"class", pencil::class_name(d.cls)},
                 {"point", d.point}};
        if (d.weights) rec["weights"] = {d.weights->first, d.weights->second};
        dicriticals.push_back(rec);
    }
    return {{"pencil", pencil_to_json(r.pencil, vars)},
            {"primary", r.primary},
            {"special", r.special},
            {"depth_used", r.depth_used},
            {"dicritical_count", r.dicriticals.size()},
            {"dicriticals", dicriticals},
            {"base_cluster", {{"points", points}, {"proximity", r.base_cluster.proximity}}}};
}

}  // namespace dicrit::io
