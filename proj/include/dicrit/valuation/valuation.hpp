#pragma once

#include "dicrit/algebra/polynomial.hpp"
#include "dicrit/valuation/value.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace dicrit::valuation {

using algebra::FieldPtr;
using algebra::Polynomial;
using algebra::Scalar;

/// Weight functional e -> <w, e>, minimized over the support.
class MonomialValuation {
public:
    /// Weights must be positive with gcd 1; anything else is rejected.
    explicit MonomialValuation(std::vector<int> weights);

    const std::vector<int>& weights() const { return w_; }
    std::size_t nvars() const { return w_.size(); }
    std::int64_t pairing(const algebra::Exponent& e) const;

    friend bool operator==(const MonomialValuation&, const MonomialValuation&) = default;

private:
    std::vector<int> w_;
};

/// One quadratic transformation after the first: the next center sits on
/// the newest exceptional line, in the chart's coordinates (u, v).
///   chart 0: x = u, y = u(v + c)
///   chart 1: x = u(v + c), y = u
struct QdtStep {
    int chart = 0;
    Scalar center;
};

/// ord of the last local ring of a QDT sequence R_0 < R_1 < ... < R_N in
/// two variables. The blowup of the origin is implicit, `steps` holds the
/// centers of R_1..R_N. Centers live in `field` (the residue field, which
/// may be a one-step extension of the coefficient field).
class DivisorialValuation {
public:
    DivisorialValuation(FieldPtr field, std::vector<QdtStep> steps);

    static DivisorialValuation ord(const FieldPtr& field);
    /// Euclidean staircase realizing the monomial valuation with weights (a, b).
    static DivisorialValuation from_weights(const FieldPtr& field, int a, int b);

    const FieldPtr& field() const { return field_; }
    const std::vector<QdtStep>& steps() const { return steps_; }
    /// Number of points blown up (N + 1).
    std::size_t length() const { return steps_.size() + 1; }
    bool is_rational() const { return !field_->is_extension(); }

    /// Images of x and y in the coordinates (u, v) at R_N.
    const std::vector<Polynomial>& images() const { return images_; }
    /// Total transform of f in the coordinates at R_N.
    Polynomial pullback(const Polynomial& f) const;
    Value operator()(const Polynomial& f) const;

    /// ord of R_k: the first k steps.
    DivisorialValuation prefix(std::size_t k) const;
    /// Same valuation with every step in chart 0 or in chart 1 with center 0.
    DivisorialValuation canonical() const;
    bool is_canonical() const;
    /// Weights (a, b) when the valuation is monomial in x, y.
    std::optional<std::pair<int, int>> monomial_weights() const;

    std::string to_string() const;

    /// Same valuation (compared through canonical forms).
    friend bool operator==(const DivisorialValuation& a, const DivisorialValuation& b);

private:
    FieldPtr field_;
    std::vector<QdtStep> steps_;
    std::vector<Polynomial> images_;
};

/// Either kind of valuation.
class Valuation {
public:
    Valuation(MonomialValuation v) : v_(std::move(v)) {}  // NOLINT
    Valuation(DivisorialValuation v) : v_(std::move(v)) {}  // NOLINT

    bool is_monomial() const { return std::holds_alternative<MonomialValuation>(v_); }
    const MonomialValuation& monomial() const { return std::get<MonomialValuation>(v_); }
    const DivisorialValuation& divisorial() const { return std::get<DivisorialValuation>(v_); }

    Value operator()(const Polynomial& f) const;
    std::string to_string() const;

private:
    std::variant<MonomialValuation, DivisorialValuation> v_;
};

/// min over the support of <w, e>; INFINITY for zero. DimensionMismatch when
/// the variable counts differ.
Value mono_value(const MonomialValuation& v, const Polynomial& f);

/// Value of f under the QDT sequence; INFINITY for zero.
Value qdt_eval(const DivisorialValuation& v, const Polynomial& f);

/// V(I): minimum over the generators.
Value ideal_value(const Valuation& v, const std::vector<Polynomial>& gens);

/// Value of a quotient num/den (den nonzero).
Value fraction_value(const Valuation& v, const Polynomial& num, const Polynomial& den);

}  // namespace dicrit::valuation
