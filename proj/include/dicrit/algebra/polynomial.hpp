#pragma once

#include "dicrit/algebra/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace dicrit::algebra {

/// Exponent tuple of a monomial; its length is the ambient variable count.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in a map ordered lexicographically on exponent tuples,
/// which is also the serialization order. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Scalar>;

    Polynomial() = default;
    Polynomial(FieldPtr field, std::size_t nvars);

    static Polynomial constant(const FieldPtr& field, std::size_t nvars, const Scalar& c);
    static Polynomial constant(const FieldPtr& field, std::size_t nvars, long c);
    static Polynomial monomial(const FieldPtr& field, Exponent e, const Scalar& c);
    static Polynomial monomial(const FieldPtr& field, Exponent e);
    static Polynomial variable(const FieldPtr& field, std::size_t nvars, std::size_t index);

    const FieldPtr& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_homogeneous() const;

    Scalar coefficient(const Exponent& e) const;
    Scalar constant_term() const;
    /// Largest exponent in lex order and its coefficient.
    const Exponent& leading_exponent() const;
    const Scalar& leading_coefficient() const;

    /// Maximum total degree; -1 for zero.
    int degree() const;
    /// Minimum total degree of a term (order at the origin); -1 for zero.
    int order() const;
    int degree_in(std::size_t var) const;
    /// Lowest power of `var` dividing every term; -1 for zero.
    int order_in(std::size_t var) const;

    /// Sum of the terms of total degree `d`.
    Polynomial homogeneous_part(int d) const;
    /// Lowest-degree homogeneous part (tangent-cone form).
    Polynomial initial_form() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& c);

    Polynomial pow(unsigned e) const;
    Polynomial derivative(std::size_t var) const;

    /// Multiplies by a monomial.
    Polynomial shifted(const Exponent& e) const;
    /// Divides every term by x_var^k; every term must be divisible.
    Polynomial divide_by_variable(std::size_t var, int k) const;
    /// Exact division; returns false (and leaves `quotient` unspecified)
    /// when `divisor` does not divide this polynomial.
    bool divide_exact(const Polynomial& divisor, Polynomial& quotient) const;

    /// Substitutes images[i] for variable i. All images share field and
    /// variable count; that count becomes the result's.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Sets variable `var` to the value `c` (variable count is unchanged).
    Polynomial evaluate_at(std::size_t var, const Scalar& c) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Copy over a field that this one embeds into.
    Polynomial lift(const FieldPtr& to) const;
    /// Divides by the leading coefficient.
    Polynomial monic() const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

    void add_term(const Exponent& e, const Scalar& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void check_compatible(const Polynomial& rhs) const;

    FieldPtr field_;
    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Default variable names: x, y, z, w for up to four variables, x1.. beyond.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace dicrit::algebra
