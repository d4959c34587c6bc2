#pragma once

#include "dicrit/valuation/valuation.hpp"

#include <map>

namespace dicrit::valuation {

/// sum_n f_n Y^n with f_n in R, n in Z. Zero components are dropped.
using AuxLaurent = std::map<int, Polynomial>;

AuxLaurent normalized(AuxLaurent f);

/// Gauss extension: min over components of v(f_n), the exponent of Y plays no role.
Value gauss_eval(const Valuation& v, const AuxLaurent& f);

/// sum_{n >= 0} f_n Z^n with f_n in I^n.
struct ReesElement {
    std::vector<Polynomial> ideal;
    std::map<int, Polynomial> components;
};

/// True iff every generator is a monomial.
bool is_monomial_ideal(const std::vector<Polynomial>& gens);

/// Membership of a monomial exponent in the n-th power of a monomial ideal.
bool in_monomial_power(const algebra::Exponent& e, const std::vector<algebra::Exponent>& gens, int n);

/// Throws InvalidReesElement for negative degrees or (monomial ideals only)
/// a component outside I^n; ZeroElement when every component is zero.
void validate(const ReesElement& f);

/// (R,I)-extension: min over nonzero components of v(f_n) - n * VI.
Value rees_ext_eval(const Valuation& v, const Value& VI, const ReesElement& f);

/// Same value through the Gauss extension with Y = xZ, for a monomial x in I
/// with v(x) = V(I): gauss_eval({f_n x^(N-n)}) - N v(x), N the top degree.
Value rees_ext_via_gauss(const Valuation& v, const ReesElement& f, const Polynomial& x);

/// Extension to R[Z^-1, IZ]: min over all n in Z of v(f_n) - n * VI.
Value ext_rees_eval(const Valuation& v, const Value& VI, const AuxLaurent& f);

}  // namespace dicrit::valuation
