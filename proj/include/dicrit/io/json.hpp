#pragma once

#include "dicrit/monomial/ideal.hpp"
#include "dicrit/pencil/pencil.hpp"
#include "dicrit/valuation/extension.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dicrit::io {

using Json = nlohmann::ordered_json;
using algebra::FieldPtr;
using algebra::Polynomial;

/// {"type":"Q"} or {"type":"Fp","p":7}. ParseError("p", "not prime").
FieldPtr parse_field(const Json& j);
Json field_to_json(const FieldPtr& f);

/// Polynomial plus the variable names it was written in.
struct NamedPolynomial {
    Polynomial poly;
    std::vector<std::string> vars;
};

/// {"vars":[...], "field":{...}, "terms":[{"c":"-1","e":[3,0]}, ...]}. The
/// field defaults to Q; "expr":"y^2-x^3" may replace "terms".
NamedPolynomial parse_polynomial(const Json& j);
Json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& vars);

/// {"vars":[...], "gens":[[2,0],[1,1]]}
monomial::MonomialIdeal parse_monomial_ideal(const Json& j);
Json ideal_to_json(const monomial::MonomialIdeal& I, const std::vector<std::string>& vars);
std::vector<std::string> ideal_vars(const Json& j);

/// {"type":"monomial","w":[2,3]} or {"type":"qdt","steps":[{"chart":0,"center":"0"}]}
valuation::Valuation parse_valuation(const Json& j, const FieldPtr& field);
/// Two-variable valuations as QDT sequences (monomial weights via the staircase).
valuation::DivisorialValuation parse_divisorial(const Json& j, const FieldPtr& field);
Json valuation_to_json(const valuation::Valuation& v);
Json divisorial_to_json(const valuation::DivisorialValuation& v);

/// {"components":[{"n":-1,"f":<poly>}, ...]}
valuation::AuxLaurent parse_laurent(const Json& j, std::vector<std::string>* vars = nullptr);
Json laurent_to_json(const valuation::AuxLaurent& f, const std::vector<std::string>& vars);

/// {"a":<poly>, "b":<poly>}; both in the same two variables and field.
pencil::Pencil parse_pencil(const Json& j, std::vector<std::string>* vars = nullptr);
Json pencil_to_json(const pencil::Pencil& p, const std::vector<std::string>& vars);
Json report_to_json(const pencil::PencilReport& r, const std::vector<std::string>& vars);

Json value_to_json(const valuation::Value& v);

/// Required member; ParseError(key, "required") when missing.
const Json& require(const Json& j, const std::string& key);
Json parse_text(const std::string& text);

}  // namespace dicrit::io
