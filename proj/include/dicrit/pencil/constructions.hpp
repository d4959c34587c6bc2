#pragma once

#include "dicrit/pencil/zariski.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dicrit::pencil {

struct PowerWitness {
    int s = 0;
    Polynomial element;
};

/// b in I^s with V(b) = s V(I) for all V in U, where I = prod zeta(W)^n(W).
/// Tries s = 1..4. SearchExhausted, NonRationalPoint.
PowerWitness construct_b(const std::vector<DivisorialValuation>& U, const std::vector<int>& n, std::uint64_t seed);

/// (a, eta^(m t)) is a reduction of I^t. PreconditionFailed when the
/// intersection formula fails for (eta, m); SearchExhausted.
PowerWitness construct_special_reduction(const std::vector<DivisorialValuation>& U, const std::vector<int>& n,
                                         const Polynomial& eta, int m, std::uint64_t seed);

/// The closure of J is I^t: same dicritical set as U and V(J) = t V(I) on U.
bool verify_reduction_2d(const Pencil& J, const std::vector<DivisorialValuation>& U, const std::vector<int>& n, int t,
                         const PrincipalizeOptions& options = {});

/// Pencil whose dicritical set is exactly U. SearchExhausted, NonRationalPoint.
Pencil construct_pencil_with_dicriticals(const std::vector<DivisorialValuation>& U, std::uint64_t seed);

/// Set equality of the dicritical valuations of a report with U.
bool same_dicritical_set(const PencilReport& report, const std::vector<DivisorialValuation>& U);

/// Cone point of Z^m = f_1 ... f_n with distinct linear forms f_i in X, Y.
struct NormalSingularityReport {
    int count = 0;
    std::vector<std::string> prime_generators;  // "(z, f_i(x',y'))"
    bool chart_relation = false;                // g(x'z, y'z, z) = z^n (z^(m-n) - prod f_i(x', y'))
};

/// BadParameters unless m > n > 0, the forms are linear, pairwise coprime and
/// the characteristic does not divide m.
NormalSingularityReport normal_sing_dicriticals(int m, const std::vector<Polynomial>& forms);

/// Local pencil of f = const at one point at infinity.
struct InfinityPoint {
    std::string point;  // projective coordinates [X:Y:W]
    Pencil pencil;      // local coordinates (u, v), u = W
    PencilReport report;
};

/// Points at infinity of the closure of f = const, with their dicriticals.
std::vector<InfinityPoint> jacobian_demo(const Polynomial& f, const PrincipalizeOptions& options = {});

}  // namespace dicrit::pencil
