#pragma once

#include "dicrit/algebra/polynomial.hpp"

namespace dicrit::algebra {

/// Greatest common divisor of multivariate polynomials over a field,
/// normalized to leading coefficient 1. gcd(0, 0) = 0.
///
/// Recursive on the last variable that occurs: contents are handled by
/// recursion, primitive parts by a primitive pseudo-remainder sequence.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Exact quotient; throws InvalidArgument when the division is not exact.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors, valid in every characteristic
/// (prime fields and their extensions are perfect).
Polynomial squarefree_kernel(const Polynomial& f);

}  // namespace dicrit::algebra
