#pragma once

#include "dicrit/algebra/polynomial.hpp"

#include <optional>
#include <vector>

namespace dicrit::algebra {

/// Dense univariate polynomial, coefficients low degree first, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
    UniPoly(FieldPtr field, std::vector<Scalar> coeffs);

    static UniPoly from_ints(const FieldPtr& field, const std::vector<long>& coeffs);
    static UniPoly x_minus(const Scalar& root);
    /// Reads a polynomial in one variable (or in variable `var` of a multivariate
    /// polynomial whose other exponents are all zero).
    static UniPoly from_polynomial(const Polynomial& p, std::size_t var = 0);

    const FieldPtr& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int i) const;
    const Scalar& leading() const { return c_.back(); }

    Scalar operator()(const Scalar& t) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division; divisor must be nonzero.
    UniPoly divmod(const UniPoly& divisor, UniPoly& remainder) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly lift(const FieldPtr& to) const;
    /// Reverses coefficients: t^deg * p(1/t).
    UniPoly reversed(int degree) const;

    Polynomial to_polynomial(std::size_t nvars = 1, std::size_t var = 0) const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    FieldPtr field_;
    std::vector<Scalar> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Squarefree kernel (product of distinct monic irreducible factors), valid in
/// every characteristic over perfect fields.
UniPoly radical(const UniPoly& p);

/// Number of distinct roots over an algebraic closure.
/// Number of distinct roots in an algebraic closure (degree of the radical).
int distinct_root_count(const UniPoly& p);

struct Root {
    Scalar value;
    int multiplicity = 0;
};

struct RootFactorization {
    std::vector<Root> roots;   // sorted by value, distinct
    UniPoly residual;          // no roots in the field; monic
};

/// All roots lying in the polynomial's field with multiplicity.
///
/// Finite fields are searched exhaustively. Over Q roots come from the
/// rational root theorem; over a quadratic extension of Q candidate roots are
/// read off the rational and quadratic factors of the norm polynomial.
/// Throws ZeroPolynomial for p == 0.
RootFactorization univariate_roots(const UniPoly& p);

/// Integer polynomial (primitive) proportional to a polynomial over Q.
std::vector<mpz_class> clear_denominators(const UniPoly& p);

/// Irreducible monic quadratic factors over Q (each listed once) of a
/// polynomial over Q, found by Kronecker interpolation at t = 0, 1, -1.
std::vector<UniPoly> rational_quadratic_factors(const UniPoly& p);

/// Smallest-degree monic irreducible factor of degree >= 2 of a rootless
/// polynomial over a base field (no extension). Over Q only quadratic factors
/// are searched; over F_p candidates are enumerated up to `max_candidates`.
std::optional<UniPoly> smallest_irreducible_factor(const UniPoly& p, std::uint64_t max_candidates = 2000000);

}  // namespace dicrit::algebra
