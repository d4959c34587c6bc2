#pragma once

#include "dicrit/monomial/ideal.hpp"
#include "dicrit/valuation/extension.hpp"

#include <map>
#include <set>

namespace dicrit::monomial {

/// I^{n+1} equals the set of monomials of value >= (n+1) V_j(I) for every
/// Rees valuation. With `require_normal`, NotNormal unless is_normal(I).
bool verify_power_decomposition(const MonomialIdeal& I, int n, bool require_normal = true);

struct GradedMembership {
    std::vector<bool> per_j;  // f in the j-th valuation ideal P*_j-bar
    bool overall = false;
    bool closure_route = false;  // every f_n in closure(I^{n+1})
};

/// Components must satisfy f_n in I^n (InvalidReesElement) and not all vanish.
GradedMembership rees_graded_membership(const std::map<int, Polynomial>& f, const MonomialIdeal& I);

/// V_j(x) == V_j(I), j zero-based. NotInIdeal, ZeroPolynomial.
bool value_criterion(const MonomialIdeal& I, const Polynomial& x, std::size_t j);

struct FiberConeSlice {
    int n = 0;
    std::vector<Exponent> basis;
};

FiberConeSlice fiber_hilbert(const MonomialIdeal& I, int n);

/// Combination of the fewest generators reaching V_j(I) for every requested
/// j (all when `js` is empty), random nonzero coefficients, made monic.
Polynomial find_element(const MonomialIdeal& I, const std::set<std::size_t>& js, std::uint64_t seed,
                        const FieldPtr& field);

struct PowerElement {
    int s = 0;
    Polynomial x;
};

/// x in I^{rs} with V_j(x) = rs V_j(I) for all j, s = 1..s_max.
PowerElement find_element_power(const MonomialIdeal& I, int r, std::uint64_t seed, const FieldPtr& field,
                                int s_max = 4);

struct ReductionCertificate {
    int n = 0;
    std::size_t dim_power = 0;    // dim of I^{n+1} in degree (n+1)D
    std::size_t dim_product = 0;  // dim of J I^n in degree (n+1)D
};

/// Smallest n <= n_max with I^{n+1} = J I^n, compared in degree (n+1)D.
std::optional<ReductionCertificate> certify_reduction(const MonomialIdeal& I, const std::vector<Polynomial>& J,
                                                      int n_max);

struct Reduction {
    std::vector<Polynomial> J;
    ReductionCertificate certificate;
    int attempts = 0;
};

int default_reduction_bound(const MonomialIdeal& I);

/// d random combinations of the generators (x1 first when supplied),
/// certified by certify_reduction. FieldTooSmall over finite fields and
/// CertificationFailed over Q when the retry budget runs out.
Reduction find_reduction(const MonomialIdeal& I, std::uint64_t seed, const FieldPtr& field,
                         const std::optional<Polynomial>& x1 = std::nullopt, std::optional<int> n_max = std::nullopt);

struct ExtReesReport {
    valuation::AuxLaurent negative;     // R^- part
    valuation::AuxLaurent nonnegative;  // E part
    bool is_nonnegative = false;
    bool z_times_in_ext = false;  // Z f in the extended Rees ring
    bool in_IE = false;           // f_n in I^{n+1} for all n
    std::vector<valuation::Value> w_inverse;  // w_j(Z^-1)
    std::vector<std::int64_t> facet_values;   // V_j(I)
};

/// InvalidElement unless f_n in I^n for n >= 0.
ExtReesReport ext_rees_check(const valuation::AuxLaurent& f, const MonomialIdeal& I);

}  // namespace dicrit::monomial
