#include "dicrit/valuation/extension.hpp"

#include "dicrit/error.hpp"

namespace dicrit::valuation {

using algebra::Exponent;

AuxLaurent normalized(AuxLaurent f)
{
    for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
    return f;
}

Value gauss_eval(const Valuation& v, const AuxLaurent& f)
{
    Value best = Value::infinity();
    for (const auto& [n, c] : f) best = min(best, v(c));
    return best;
}

bool is_monomial_ideal(const std::vector<Polynomial>& gens)
{
    for (const auto& g : gens)
        if (!g.is_monomial()) return false;
    return !gens.empty();
}

bool in_monomial_power(const Exponent& e, const std::vector<Exponent>& gens, int n)
{
    if (n <= 0) return true;
    for (const auto& g : gens) {
        bool divides = true;
        for (std::size_t i = 0; i < e.size() && divides; ++i) divides = g[i] <= e[i];
        if (!divides) continue;
        Exponent rest = e;
        for (std::size_t i = 0; i < e.size(); ++i) rest[i] -= g[i];
        if (in_monomial_power(rest, gens, n - 1)) return true;
    }
    return false;
}

void validate(const ReesElement& f)
{
    bool any = false;
    std::vector<Exponent> gens;
    const bool monomial = is_monomial_ideal(f.ideal);
    if (monomial)
        for (const auto& g : f.ideal) gens.push_back(g.leading_exponent());
    for (const auto& [n, c] : f.components) {
        if (n < 0) fail(ErrorKind::invalid_rees_element, "negative degree " + std::to_string(n));
        if (c.is_zero()) continue;
        any = true;
        if (!monomial) continue;
        for (const auto& [e, coeff] : c.terms())
            if (!in_monomial_power(e, gens, n))
                fail(ErrorKind::invalid_rees_element,
                     "component of degree " + std::to_string(n) + " has a term outside I^" + std::to_string(n));
    }
    if (!any) fail(ErrorKind::zero_element, "Rees element is zero");
}

Value rees_ext_eval(const Valuation& v, const Value& VI, const ReesElement& f)
{
    validate(f);
    if (VI.is_infinite()) fail(ErrorKind::invalid_argument, "V(I) must be finite");
    Value best = Value::infinity();
    for (const auto& [n, c] : f.components)
        if (!c.is_zero()) best = min(best, v(c) - n * VI.get());
    return best;
}

Value rees_ext_via_gauss(const Valuation& v, const ReesElement& f, const Polynomial& x)
{
    validate(f);
    const int top = f.components.rbegin()->first;
    AuxLaurent shifted;
    for (const auto& [n, c] : f.components) shifted[n] = c * x.pow(static_cast<unsigned>(top - n));
    return gauss_eval(v, normalized(shifted)) - top * v(x).get();
}

Value ext_rees_eval(const Valuation& v, const Value& VI, const AuxLaurent& f)
{
    if (VI.is_infinite()) fail(ErrorKind::invalid_argument, "V(I) must be finite");
    Value best = Value::infinity();
    for (const auto& [n, c] : f)
        if (!c.is_zero()) best = min(best, v(c) - n * VI.get());
    return best;
}

}  // namespace dicrit::valuation
