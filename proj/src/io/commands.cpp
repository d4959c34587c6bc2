#include "dicrit/io/commands.hpp"

#include "dicrit/algebra/expression.hpp"
#include "dicrit/error.hpp"
#include "dicrit/monomial/operations.hpp"
#include "dicrit/pencil/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dicrit::io {

using algebra::Field;
using monomial::MonomialIdeal;
using valuation::DivisorialValuation;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& reason)
{
    throw ParseError(field, reason);
}

int get_int(const Json& j, const std::string& key, std::optional<int> fallback = std::nullopt)
{
    if (!j.is_object() || !j.contains(key)) {
        if (fallback) return *fallback;
        bad(key, "required");
    }
    if (!j[key].is_number_integer()) bad(key, "expected an integer");
    auto v = j[key].get<std::int64_t>();
    if (v < -1000000 || v > 1000000) bad(key, "out of range");
    return static_cast<int>(v);
}

// A request is either the ideal literal itself or {"ideal": ..., params}.
const Json& ideal_part(const Json& input)
{
    if (input.is_object() && input.contains("ideal")) return input["ideal"];
    return input;
}

FieldPtr field_of(const Json& input)
{
    return input.is_object() && input.contains("field") ? parse_field(input["field"]) : Field::rationals();
}

Json facets_to_json(const monomial::NewtonPolyhedron& N)
{
    Json facets = Json::array();
    for (const auto& f : N.facets) facets.push_back({{"weights", f.weights}, {"value", f.value}});
    return facets;
}

std::vector<Polynomial> parse_polynomial_list(const Json& j, const std::string& key, std::vector<std::string>& vars)
{
    const Json& list = require(j, key);
    if (!list.is_array() || list.empty()) bad(key, "must be a nonempty list of polynomials");
    std::vector<Polynomial> out;
    for (const auto& x : list) {
        auto p = parse_polynomial(x);
        if (p.vars != vars) bad(key, "variables differ from those of the ideal");
        out.push_back(p.poly);
    }
    return out;
}

Polynomial parse_in_vars(const Json& j, const std::string& key, const std::vector<std::string>& vars,
                         const FieldPtr& field)
{
    auto p = parse_polynomial(require(j, key));
    if (p.vars != vars) bad(key, "variables differ from those of the ideal");
    if (!algebra::same_field(p.poly.field(), field)) bad(key, "field differs from the request field");
    return p.poly;
}

Json run_gauss(const std::string& action, const Json& input)
{
    if (action != "eval") bad("action", "unknown gauss action '" + action + "'");
    std::vector<std::string> vars;
    auto F = parse_laurent(require(input, "element"), &vars);
    FieldPtr field = F.empty() ? Field::rationals() : F.begin()->second.field();
    auto v = parse_valuation(require(input, "valuation"), field);
    return {{"valuation", valuation_to_json(v)}, {"value", value_to_json(valuation::gauss_eval(v, F))}};
}

Json run_mono(const std::string& action, const Json& input, const Options& o)
{
    const Json& ij = ideal_part(input);
    const auto vars = ideal_vars(ij);
    const MonomialIdeal I = parse_monomial_ideal(ij);
    const FieldPtr field = field_of(input);
    Json out{{"ideal", ideal_to_json(I, vars)}};

    if (action == "closure") {
        auto N = monomial::newton_polyhedron(I);
        out["closure"] = ideal_to_json(monomial::integral_closure(I, N), vars);
        out["facets"] = facets_to_json(N);
        out["vertices"] = N.vertices;
    } else if (action == "normal") {
        int bound = o.bound.value_or(monomial::default_normality_bound(I));
        out["bound"] = bound;
        out["normal"] = monomial::is_normal(I, bound);
    } else if (action == "rees-vals") {
        Json list = Json::array();
        for (const auto& r : monomial::rees_valuations(I)) list.push_back(Json::array({r.v.weights(), r.value}));
        out["h"] = list.size();
        out["rees_valuations"] = list;
    } else if (action == "decomp") {
        std::vector<int> ns;
        if (input.is_object() && input.contains("n")) {
            if (input["n"].is_array())
                for (const auto& x : input["n"]) ns.push_back(x.is_number_integer() ? x.get<int>() : -1);
            else ns.push_back(get_int(input, "n"));
        } else {
            ns = {0, 1, 2, 3};
        }
        bool guard = !(input.is_object() && input.value("skip_normality_guard", false));
        Json results = Json::array();
        for (int n : ns) {
            if (n < 0) bad("n", "must be nonnegative");
            results.push_back({{"n", n}, {"holds", monomial::verify_power_decomposition(I, n, guard)}});
        }
        out["decomposition"] = results;
    } else if (action == "fiber") {
        int n = get_int(input, "n", 1);
        if (n < 0) bad("n", "must be nonnegative");
        auto slice = monomial::fiber_hilbert(I, n);
        out["n"] = n;
        out["count"] = slice.basis.size();
        out["basis"] = slice.basis;
    } else if (action == "find-element") {
        std::set<std::size_t> js;
        if (input.is_object() && input.contains("j"))
            for (const auto& x : input["j"]) {
                if (!x.is_number_integer() || x.get<int>() < 1) bad("j", "indices are 1-based positive integers");
                js.insert(x.get<std::size_t>() - 1);
            }
        Polynomial x = monomial::find_element(I, js, o.seed, field);
        out["element"] = polynomial_to_json(x, vars);
        Json values = Json::array();
        auto rv = monomial::rees_valuations(I);
        for (std::size_t j = 0; j < rv.size(); ++j)
            values.push_back({{"j", j + 1},
                              {"value", value_to_json(valuation::mono_value(rv[j].v, x))},
                              {"criterion", monomial::value_criterion(I, x, j)}});
        out["values"] = values;
    } else if (action == "find-element-power") {
        int r = get_int(input, "r", 1);
        if (r <= 0) bad("r", "must be positive");
        int s_max = get_int(input, "s_max", 4);
        auto p = monomial::find_element_power(I, r, o.seed, field, s_max);
        out["r"] = r;
        out["s"] = p.s;
        out["element"] = polynomial_to_json(p.x, vars);
    } else if (action == "reduction") {
        int n_max = o.bound.value_or(monomial::default_reduction_bound(I));
        if (input.is_object() && input.contains("J")) {
            auto vs = vars;
            auto J = parse_polynomial_list(input, "J", vs);
            auto cert = monomial::certify_reduction(I, J, n_max);
            out["certified"] = cert.has_value();
            if (cert) out["certificate"] = {{"n", cert->n}, {"dim_power", cert->dim_power}, {"dim_product", cert->dim_product}};
        } else {
            std::optional<Polynomial> x1;
            if (input.is_object() && input.contains("x1")) x1 = parse_in_vars(input, "x1", vars, field);
            auto red = monomial::find_reduction(I, o.seed, field, x1, n_max);
            Json J = Json::array();
            for (const auto& p : red.J) J.push_back(polynomial_to_json(p, vars));
            out["J"] = J;
            out["certificate"] = {{"n", red.certificate.n},
                                  {"dim_power", red.certificate.dim_power},
                                  {"dim_product", red.certificate.dim_product}};
            out["attempts"] = red.attempts;
        }
    } else if (action == "ext-rees") {
        std::vector<std::string> fvars;
        auto f = parse_laurent(require(input, "element"), &fvars);
        if (!f.empty() && fvars != vars) bad("element", "variables differ from those of the ideal");
        auto rep = monomial::ext_rees_check(f, I);
        Json w = Json::array();
        for (const auto& v : rep.w_inverse) w.push_back(value_to_json(v));
        out["negative"] = laurent_to_json(rep.negative, vars);
        out["nonnegative"] = laurent_to_json(rep.nonnegative, vars);
        out["is_nonnegative"] = rep.is_nonnegative;
        if (rep.is_nonnegative) {
            out["z_times_in_ext"] = rep.z_times_in_ext;
            out["in_IE"] = rep.in_IE;
        }
        out["facet_values"] = rep.facet_values;
        out["w_inverse"] = w;
    } else {
        bad("action", "unknown mono action '" + action + "'");
    }
    return out;
}

struct DivisorSet {
    std::vector<DivisorialValuation> U;
    std::vector<int> n;
};

DivisorSet parse_divisor_set(const Json& input, const FieldPtr& field, bool with_n)
{
    const Json& U = require(input, "U");
    if (!U.is_array() || U.empty()) bad("U", "must be a nonempty list of valuations");
    DivisorSet out;
    for (const auto& v : U) out.U.push_back(parse_divisorial(v, field));
    if (with_n && input.contains("n")) {
        const Json& n = input["n"];
        if (n.is_number_integer()) {
            out.n.assign(out.U.size(), n.get<int>());
        } else {
            if (!n.is_array() || n.size() != out.U.size()) bad("n", "one multiplicity per valuation");
            for (const auto& k : n) {
                if (!k.is_number_integer()) bad("n", "multiplicities are integers");
                out.n.push_back(k.get<int>());
            }
        }
        for (int k : out.n)
            if (k <= 0) bad("n", "multiplicities must be positive");
    } else {
        out.n.assign(out.U.size(), 1);
    }
    return out;
}

Json run_pencil(const std::string& action, const Json& input, const Options& o)
{
    pencil::PrincipalizeOptions po{o.max_depth, o.extend};
    const std::vector<std::string> xy{"x", "y"};
    if (action == "normalize" || action == "dicriticals") {
        std::vector<std::string> vars;
        auto p = parse_pencil(input, &vars);
        if (action == "normalize") return pencil_to_json(pencil::pencil_normalize(p.a, p.b), vars);
        return report_to_json(pencil::principalize(p, po), vars);
    }
    const FieldPtr field = field_of(input);
    if (action == "construct-b") {
        auto D = parse_divisor_set(input, field, true);
        auto r = pencil::construct_b(D.U, D.n, o.seed);
        return {{"s", r.s}, {"b", polynomial_to_json(r.element, xy)}};
    }
    if (action == "special-reduction") {
        auto D = parse_divisor_set(input, field, true);
        Polynomial eta = parse_in_vars(input, "eta", xy, field);
        int m = get_int(input, "m");
        if (m <= 0) bad("m", "must be positive");
        auto r = pencil::construct_special_reduction(D.U, D.n, eta, m, o.seed);
        return {{"t", r.s}, {"a", polynomial_to_json(r.element, xy)},
                {"b_power", polynomial_to_json(eta.pow(static_cast<unsigned>(m * r.s)), xy)}};
    }
    if (action == "verify-reduction") {
        std::vector<std::string> vars;
        auto J = parse_pencil(require(input, "J"), &vars);
        auto D = parse_divisor_set(input, J.a.field(), true);
        int t = get_int(input, "t", 1);
        if (t <= 0) bad("t", "must be positive");
        return {{"holds", pencil::verify_reduction_2d(J, D.U, D.n, t, po)}};
    }
    if (action == "realize") {
        auto D = parse_divisor_set(input, field, false);
        auto z = pencil::construct_pencil_with_dicriticals(D.U, o.seed);
        return {{"pencil", pencil_to_json(z, xy)}, {"report", report_to_json(pencil::principalize(z, po), xy)}};
    }
    bad("action", "unknown pencil action '" + action + "'");
}

std::vector<std::string> split_forms(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
}

Json run_example83(const Json& input)
{
    const int m = get_int(input, "m");
    const FieldPtr field = field_of(input);
    const Json& forms = require(input, "forms");
    std::vector<std::string> texts;
    if (forms.is_string()) texts = split_forms(forms.get<std::string>());
    else if (forms.is_array())
        for (const auto& f : forms) {
            if (!f.is_string()) bad("forms", "forms are strings in X, Y");
            texts.push_back(f.get<std::string>());
        }
    else bad("forms", "must be a list or comma-separated string");
    std::vector<Polynomial> polys;
    for (const auto& t : texts) {
        try {
            polys.push_back(algebra::parse_expression(t, field, {"X", "Y"}));
        } catch (const Error& e) {
            bad("forms", e.what());
        }
    }
    auto r = pencil::normal_sing_dicriticals(m, polys);
    return {{"m", m}, {"n", polys.size()}, {"count", r.count}, {"prime_generators", r.prime_generators},
            {"chart_relation_verified", r.chart_relation}};
}

Json run_jacobian(const Json& input, const Options& o)
{
    auto f = parse_polynomial(input.is_object() && input.contains("f") ? input["f"] : input);
    if (f.vars.size() != 2) bad("vars", "two variables required");
    pencil::PrincipalizeOptions po{o.max_depth, o.extend};
    Json points = Json::array();
    const std::vector<std::string> uv{"u", "v"};
    for (const auto& p : pencil::jacobian_demo(f.poly, po))
        points.push_back({{"point", p.point}, {"local_pencil", pencil_to_json(p.pencil, uv)},
                          {"report", report_to_json(p.report, uv)}});
    return {{"f", polynomial_to_json(f.poly, f.vars)}, {"points", points}};
}

}  // namespace

const std::vector<std::pair<std::string, std::vector<std::string>>>& command_table()
{
    static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
        {"gauss", {"eval"}},
        {"mono",
         {"closure", "normal", "rees-vals", "decomp", "fiber", "find-element", "find-element-power", "reduction",
          "ext-rees"}},
        {"pencil", {"normalize", "dicriticals", "construct-b", "special-reduction", "verify-reduction", "realize"}},
        {"example83", {""}},
        {"jacobian-demo", {""}},
    };
    return table;
}

Json run_command(const std::string& command, const std::string& action, const Json& input, const Options& options)
{
    if (command == "gauss") return run_gauss(action, input);
    if (command == "mono") return run_mono(action, input, options);
    if (command == "pencil") return run_pencil(action, input, options);
    if (command == "example83") return run_example83(input);
    if (command == "jacobian-demo") return run_jacobian(input, options);
    bad("command", "unknown command '" + command + "'");
}

Json error_to_json(const Error& e)
{
    Json out{{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
        out["field"] = p->field();
        out["reason"] = p->reason();
    }
    return out;
}

}  // namespace dicrit::io
