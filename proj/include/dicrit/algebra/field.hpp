#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dicrit::algebra {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact coefficient field: the rationals or a prime field, optionally
/// extended once by a monic irreducible polynomial.
///
/// Base-field elements are stored as mpq_class; over F_p they are kept as
/// integer representatives in [0, p).
class Field {
public:
    enum class Base { rationals, prime };

    static FieldPtr rationals();
    static FieldPtr prime(std::int64_t p);

    /// Adjoins a root of `modulus` (monic, coefficients low degree first,
    /// expressed over `base`). Over Q only degree <= 2 is accepted.
    /// Throws InvalidArgument if the modulus is reducible.
    static FieldPtr extension(const FieldPtr& base, std::vector<mpq_class> modulus);

    Base base() const { return base_; }
    std::int64_t characteristic() const { return p_; }
    int degree() const { return modulus_.empty() ? 1 : static_cast<int>(modulus_.size()) - 1; }
    bool is_extension() const { return !modulus_.empty(); }
    bool is_finite() const { return base_ == Base::prime; }
    const std::vector<mpq_class>& modulus() const { return modulus_; }

    /// The prime field or Q underneath any extension.
    FieldPtr base_field() const;

    /// Number of elements; throws when infinite or larger than `cap`.
    std::uint64_t order(std::uint64_t cap = (1ULL << 40)) const;

    /// Canonical representative of a base-field element.
    mpq_class reduce(const mpq_class& x) const;
    mpq_class base_inverse(const mpq_class& x) const;

    std::string describe() const;

    bool operator==(const Field& other) const;

private:
    Field(Base base, std::int64_t p, std::vector<mpq_class> modulus)
        : base_(base), p_(p), modulus_(std::move(modulus)) {}

    Base base_;
    std::int64_t p_;
    std::vector<mpq_class> modulus_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// True when `sub` embeds into `super` by the identity on the base
/// (equal fields, or `super` an extension of `sub`'s base).
bool embeds_into(const FieldPtr& sub, const FieldPtr& super);

/// Element of a Field, stored as coordinates over the base in the power
/// basis 1, a, a^2, ... of the adjoined root a.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldPtr field);

    static Scalar from_int(const FieldPtr& field, long value);
    static Scalar from_rational(const FieldPtr& field, const mpq_class& value);
    static Scalar from_coords(const FieldPtr& field, std::vector<mpq_class> coords);
    /// The adjoined root of an extension field.
    static Scalar generator(const FieldPtr& field);
    /// i-th element of a finite field in a fixed enumeration order.
    static Scalar enumerate(const FieldPtr& field, std::uint64_t index);

    const FieldPtr& field() const { return field_; }
    const std::vector<mpq_class>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool in_base() const;
    /// The base coordinate; only meaningful when in_base().
    const mpq_class& base_value() const { return coords_.front(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    /// Image in a field this one embeds into.
    Scalar lift(const FieldPtr& to) const;

    std::string to_string() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /// Arbitrary but fixed total order, used for deterministic output.
    friend bool operator<(const Scalar& a, const Scalar& b);

private:
    void check_same(const Scalar& rhs) const;

    FieldPtr field_;
    std::vector<mpq_class> coords_;
};

bool is_prime(std::int64_t n);

}  // namespace dicrit::algebra
