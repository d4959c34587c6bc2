#pragma once

#include "dicrit/pencil/pencil.hpp"

#include <vector>

namespace dicrit::pencil {

/// Cluster of a simple complete ideal together with its generators.
struct ZariskiIdeal {
    DivisorialValuation valuation;  // canonical form
    Cluster cluster;                // multiplicities filled from proximity
    std::int64_t self_value = 0;    // V(zeta(V)) = sum of squared multiplicities
    std::vector<Polynomial> generators;
};

/// Simple complete ideal zeta(V) of a divisorial valuation. NonRationalPoint
/// when a center lies outside the ground field.
ZariskiIdeal zariski_cluster(const DivisorialValuation& v);

/// c(V, W) = V(zeta(W)).
Value intersection_value(const DivisorialValuation& v, const DivisorialValuation& w);

/// V(prod zeta(W)^n(W)) = sum n(W) c(V, W).
Value divisor_value_on_cluster(const std::vector<DivisorialValuation>& U, const std::vector<int>& n,
                               const DivisorialValuation& v);

/// m * V(eta) == sum n(W) c(V, W) for every V in U. NotRegularParameter
/// unless eta has order 1.
bool check_intersection_formula(const std::vector<DivisorialValuation>& U, const std::vector<int>& n,
                                const Polynomial& eta, int m);

/// Generators of prod zeta(W)^(s n(W)), ordered by degree then leading term.
std::vector<Polynomial> product_ideal_generators(const std::vector<DivisorialValuation>& U,
                                                 const std::vector<int>& n, int s);

}  // namespace dicrit::pencil
