#pragma once

#include "dicrit/algebra/univariate.hpp"
#include "dicrit/valuation/valuation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dicrit::pencil {

using algebra::FieldPtr;
using algebra::Polynomial;
using algebra::Scalar;
using algebra::UniPoly;
using valuation::DivisorialValuation;
using valuation::Value;

/// z = a / b at the origin of K[x, y].
struct Pencil {
    Polynomial a, b;
};

/// Removes the common factor of a and b. ZeroPolynomial for zero input.
Pencil pencil_normalize(const Polynomial& a, const Polynomial& b);

/// Both a and b vanish at the origin.
bool is_primary(const Pencil& p);

/// b = unit * x^m for a regular parameter x (the factors of b through the
/// origin form a single smooth branch).
bool is_special(const Pencil& p);

/// An infinitely near point: the origin (parent -1) or a point on the
/// exceptional line of its parent, in the parent's chart coordinates.
struct ClusterPoint {
    int parent = -1;
    int chart = 0;
    Scalar center;
    FieldPtr field;       // residue field
    int degree = 1;       // residue degree over the ground field
    int multiplicity = 0;
    int depth = 0;        // 0 for the origin
    int u_divisor = -1;   // point whose exceptional line is {u = 0} here
    int v_divisor = -1;   // point whose exceptional line is {v = 0} here, if any
};

struct Cluster {
    std::vector<ClusterPoint> points;
    /// proximity[i][j] = 1 iff i == j or point i is proximate to point j.
    std::vector<std::vector<int>> proximity;

    /// Appends a point, filling divisors and proximity from its parent.
    int add(ClusterPoint p);
    /// QDT steps from the origin to point i.
    std::vector<valuation::QdtStep> path(int i) const;
};

enum class DicriticalClass { sharp, flat, plain };
std::string class_name(DicriticalClass c);

/// r(t) = num / den in lowest terms.
struct Residue {
    UniPoly num, den;
    bool is_constant() const;
    /// Distinct poles on the projective line over an algebraic closure.
    int pole_count() const;
    int degree() const;  // max(deg num, deg den)
};

DicriticalClass classify(const Residue& r);

struct DicriticalRecord {
    DivisorialValuation valuation;
    Value va, vb;
    Residue residue;
    DicriticalClass cls = DicriticalClass::plain;
    int point = 0;  // cluster point whose blowup creates the divisor
    std::optional<std::pair<int, int>> weights;
};

enum class ExtensionPolicy { none, quadratic };

struct PrincipalizeOptions {
    int max_depth = 24;
    ExtensionPolicy extend = ExtensionPolicy::quadratic;
};

struct PencilReport {
    Pencil pencil;  // normalized
    bool primary = false;
    Cluster base_cluster;
    std::vector<DicriticalRecord> dicriticals;
    bool special = false;
    int depth_used = 0;
};

/// Blows up every base point until the pencil is principal, recording the
/// dicritical divisors. DepthExceeded, NonRationalPoint.
PencilReport principalize(const Pencil& p, const PrincipalizeOptions& options = {});

}  // namespace dicrit::pencil
