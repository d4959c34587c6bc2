#pragma once

#include "dicrit/algebra/polynomial.hpp"

#include <optional>
#include <vector>

// Brute-force references used to cross-check the library. They share no
// code with the routines they check beyond polynomial arithmetic.
namespace dicrit::oracle {

using algebra::Exponent;

/// Minimal generators of I^n, by repeated products and pairwise comparison.
std::vector<Exponent> power_generators(const std::vector<Exponent>& gens, int n);

bool divisible_by_some(const Exponent& e, const std::vector<Exponent>& gens);

/// w in [0..W]^d \ {0} with <w,e> < min_g <w,g>, if any.
std::optional<std::vector<int>> separating_weight(const Exponent& e, const std::vector<Exponent>& gens, int W);

enum class Verdict { yes, no, unknown };

/// e in the integral closure of I: yes if k e in I^k for some k <= K, no if
/// a weight in [0..W]^d separates e from I.
class ClosureOracle {
public:
    ClosureOracle(std::vector<Exponent> gens, int K, int W);
    Verdict member(const Exponent& e) const;

private:
    std::vector<Exponent> gens_;
    std::vector<std::vector<Exponent>> powers_;  // powers_[k-1] = I^k
    int W_;
};

/// I^{n+1} is cut out by valuation inequalities: every lattice point of the
/// box outside I^{n+1} is separated from it by some weight in [0..W]^d.
bool power_is_valuation_ideal(const std::vector<Exponent>& gens, int n, int W);

/// Dicritical divisor predicted by weighted initial forms.
struct NewtonDicritical {
    int p = 0, q = 0;  // weights of x and y
    int degree = 0;    // degree of the residue map
    int poles = 0;     // distinct poles on the projective line
};

/// Weights w in [1..W]^2 (primitive) with w(a) = w(b) and in_w(a)/in_w(b)
/// nonconstant. Exact for monomial and quasi-homogeneous pencils over Q.
std::vector<NewtonDicritical> newton_dicriticals(const algebra::Polynomial& a, const algebra::Polynomial& b,
                                                 int W = 30);

}  // namespace dicrit::oracle
