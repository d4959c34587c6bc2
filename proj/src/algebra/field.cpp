#include "dicrit/algebra/field.hpp"

#include "dicrit/error.hpp"

#include <numeric>
#include <sstream>

namespace dicrit::algebra {

namespace {

using Dense = std::vector<mpq_class>;

bool is_rational_square(const mpq_class& q)
{
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

// Dense polynomial helpers over the base field of `f` (no extension).
struct BaseRing {
    const Field& f;

    void trim(Dense& a) const
    {
        while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    }

    Dense mul(const Dense& a, const Dense& b) const
    {
        if (a.empty() || b.empty()) return {};
        Dense r(a.size() + b.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        for (auto& c : r) c = f.reduce(c);
        trim(r);
        return r;
    }

    // remainder of a modulo b (b nonzero)
    Dense rem(Dense a, const Dense& b) const
    {
        trim(a);
        mpq_class lead_inv = f.base_inverse(b.back());
        while (a.size() >= b.size()) {
            mpq_class q = f.reduce(a.back() * lead_inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = f.reduce(a[shift + i] - q * b[i]);
            trim(a);
        }
        return a;
    }

    Dense divide(Dense a, const Dense& b, Dense* remainder = nullptr) const
    {
        trim(a);
        mpq_class lead_inv = f.base_inverse(b.back());
        Dense q;
        if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
        while (a.size() >= b.size()) {
            mpq_class c = f.reduce(a.back() * lead_inv);
            std::size_t shift = a.size() - b.size();
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = f.reduce(a[shift + i] - c * b[i]);
            trim(a);
        }
        trim(q);
        if (remainder) *remainder = a;
        return q;
    }

    Dense sub(Dense a, const Dense& b) const
    {
        if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.reduce(a[i] - b[i]);
        trim(a);
        return a;
    }

    Dense gcd(Dense a, Dense b) const
    {
        trim(a);
        trim(b);
        while (!b.empty()) {
            Dense r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    Dense powmod(Dense base, mpz_class e, const Dense& m) const
    {
        Dense result{mpq_class(1)};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), m);
            e >>= 1;
            if (e > 0) base = rem(mul(base, base), m);
        }
        return result;
    }
};

}  // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldPtr Field::rationals()
{
    static const FieldPtr q(new Field(Base::rationals, 0, {}));
    return q;
}

FieldPtr Field::prime(std::int64_t p)
{
    if (!is_prime(p) || p > (std::int64_t{1} << 31))
        fail(ErrorKind::invalid_argument, "prime field order " + std::to_string(p) + " is not a prime <= 2^31");
    return FieldPtr(new Field(Base::prime, p, {}));
}

FieldPtr Field::extension(const FieldPtr& base, std::vector<mpq_class> modulus)
{
    if (base->is_extension())
        fail(ErrorKind::invalid_argument, "only one-step simple extensions are supported");
    for (auto& c : modulus) c = base->reduce(c);
    while (!modulus.empty() && sgn(modulus.back()) == 0) modulus.pop_back();
    if (modulus.size() < 3)
        fail(ErrorKind::invalid_argument, "extension modulus must have degree >= 2");
    if (modulus.back() != 1)
        fail(ErrorKind::invalid_argument, "extension modulus must be monic");
    const int k = static_cast<int>(modulus.size()) - 1;
    if (base->base() == Base::rationals) {
        if (k != 2)
            fail(ErrorKind::invalid_argument, "extensions of Q are limited to degree 2");
        mpq_class disc = modulus[1] * modulus[1] - 4 * modulus[0];
        if (is_rational_square(disc))
            fail(ErrorKind::invalid_argument, "extension modulus is reducible over Q");
    } else {
        // Ben-Or: no factor of degree i <= k/2 iff gcd(t^(p^i) - t, f) = 1.
        BaseRing ring{*base};
        Dense t{mpq_class(0), mpq_class(1)};
        Dense power = t;
        for (int i = 1; i <= k / 2; ++i) {
            power = ring.powmod(power, mpz_class(base->characteristic()), modulus);
            Dense g = ring.gcd(modulus, ring.sub(power, t));
            if (g.size() > 1)
                fail(ErrorKind::invalid_argument, "extension modulus is reducible over the prime field");
        }
    }
    return FieldPtr(new Field(base->base(), base->characteristic(), std::move(modulus)));
}

FieldPtr Field::base_field() const
{
    if (base_ == Base::rationals) return rationals();
    return FieldPtr(new Field(Base::prime, p_, {}));
}

std::uint64_t Field::order(std::uint64_t cap) const
{
    if (!is_finite()) fail(ErrorKind::invalid_argument, "the rationals are infinite");
    std::uint64_t n = 1;
    for (int i = 0; i < degree(); ++i) {
        if (n > cap / static_cast<std::uint64_t>(p_))
            fail(ErrorKind::field_too_small, "field order exceeds enumeration cap");
        n *= static_cast<std::uint64_t>(p_);
    }
    return n;
}

mpq_class Field::reduce(const mpq_class& x) const
{
    if (base_ == Base::rationals) return x;
    mpz_class p(static_cast<long>(p_));
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    if (x.get_den() == 1) return mpq_class(num);
    mpz_class den = x.get_den() % p, inv;
    if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        fail(ErrorKind::invalid_argument, "denominator divisible by the characteristic");
    mpz_class r = (num * inv) % p;
    return mpq_class(r);
}

mpq_class Field::base_inverse(const mpq_class& x) const
{
    if (sgn(x) == 0) fail(ErrorKind::invalid_argument, "division by zero");
    if (base_ == Base::rationals) return 1 / x;
    return reduce(mpq_class(1) / x);
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << (base_ == Base::rationals ? std::string("Q") : "F_" + std::to_string(p_));
    if (is_extension()) {
        os << "[a]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (sgn(modulus_[i]) == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << modulus_[i].get_str();
            if (i > 0) os << "*a^" << i;
        }
        os << ")";
    }
    return os.str();
}

bool Field::operator==(const Field& other) const
{
    return base_ == other.base_ && p_ == other.p_ && modulus_ == other.modulus_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b)
{
    return a == b || (a && b && *a == *b);
}

bool embeds_into(const FieldPtr& sub, const FieldPtr& super)
{
    if (same_field(sub, super)) return true;
    return !sub->is_extension() && sub->base() == super->base() &&
           sub->characteristic() == super->characteristic();
}

// ---------------------------------------------------------------------------

Scalar::Scalar(FieldPtr field) : field_(std::move(field)), coords_(field_->degree(), mpq_class(0)) {}

Scalar Scalar::from_int(const FieldPtr& field, long value)
{
    return from_rational(field, mpq_class(value));
}

Scalar Scalar::from_rational(const FieldPtr& field, const mpq_class& value)
{
    Scalar s(field);
    s.coords_[0] = field->reduce(value);
    return s;
}

Scalar Scalar::from_coords(const FieldPtr& field, std::vector<mpq_class> coords)
{
    if (coords.size() > static_cast<std::size_t>(field->degree()))
        fail(ErrorKind::invalid_argument, "too many coordinates for " + field->describe());
    Scalar s(field);
    for (std::size_t i = 0; i < coords.size(); ++i) s.coords_[i] = field->reduce(coords[i]);
    return s;
}

Scalar Scalar::generator(const FieldPtr& field)
{
    if (!field->is_extension()) fail(ErrorKind::invalid_argument, "field has no adjoined root");
    Scalar s(field);
    s.coords_[1] = 1;
    return s;
}

Scalar Scalar::enumerate(const FieldPtr& field, std::uint64_t index)
{
    Scalar s(field);
    const auto p = static_cast<std::uint64_t>(field->characteristic());
    for (int i = 0; i < field->degree(); ++i) {
        s.coords_[i] = mpq_class(static_cast<unsigned long>(index % p));
        index /= p;
    }
    return s;
}

bool Scalar::is_zero() const
{
    for (const auto& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Scalar::is_one() const
{
    if (coords_.empty() || coords_[0] != 1) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

bool Scalar::in_base() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

void Scalar::check_same(const Scalar& rhs) const
{
    if (!same_field(field_, rhs.field_))
        fail(ErrorKind::field_mismatch, "scalar fields differ: " + (field_ ? field_->describe() : "?") +
                                            " vs " + (rhs.field_ ? rhs.field_->describe() : "?"));
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    for (auto& c : r.coords_) c = field_->reduce(-c);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    check_same(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_->reduce(coords_[i] + rhs.coords_[i]);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    check_same(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = field_->reduce(coords_[i] - rhs.coords_[i]);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    check_same(rhs);
    if (!field_->is_extension()) {
        coords_[0] = field_->reduce(coords_[0] * rhs.coords_[0]);
        return *this;
    }
    BaseRing ring{*field_};
    Dense r = ring.rem(ring.mul(coords_, rhs.coords_), field_->modulus());
    r.resize(field_->degree(), mpq_class(0));
    coords_ = std::move(r);
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) fail(ErrorKind::invalid_argument, "division by zero");
    if (!field_->is_extension()) return from_rational(field_, field_->base_inverse(coords_[0]));
    // extended Euclid in base[t] against the modulus
    BaseRing ring{*field_};
    Dense r0 = field_->modulus(), r1 = coords_;
    ring.trim(r1);
    Dense s0{}, s1{mpq_class(1)};
    while (!r1.empty()) {
        Dense rem;
        Dense q = ring.divide(r0, r1, &rem);
        Dense s2 = ring.sub(s0, ring.mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    mpq_class c = field_->base_inverse(r0.front());
    for (auto& x : s0) x = field_->reduce(x * c);
    s0.resize(field_->degree(), mpq_class(0));
    return from_coords(field_, s0);
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    check_same(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const
{
    Scalar result = from_int(field_, 1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Scalar Scalar::lift(const FieldPtr& to) const
{
    if (same_field(field_, to)) return *this;
    if (!embeds_into(field_, to))
        fail(ErrorKind::field_mismatch, "cannot embed " + field_->describe() + " into " + to->describe());
    return from_rational(to, coords_[0]);
}

std::string Scalar::to_string() const
{
    if (!field_) return "?";
    if (!field_->is_extension()) return coords_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coords_.size(); i-- > 0;) {
        if (sgn(coords_[i]) == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << coords_[i].get_str();
        } else {
            if (coords_[i] != 1) os << coords_[i].get_str() << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return same_field(a.field_, b.field_) && a.coords_ == b.coords_;
}

bool operator<(const Scalar& a, const Scalar& b)
{
    return a.coords_ < b.coords_;
}

}  // namespace dicrit::algebra
