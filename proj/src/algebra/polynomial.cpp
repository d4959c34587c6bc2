#include "dicrit/algebra/polynomial.hpp"

#include "dicrit/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dicrit::algebra {

int total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

Polynomial::Polynomial(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

Polynomial Polynomial::constant(const FieldPtr& field, std::size_t nvars, const Scalar& c)
{
    Polynomial p(field, nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::constant(const FieldPtr& field, std::size_t nvars, long c)
{
    return constant(field, nvars, Scalar::from_int(field, c));
}

Polynomial Polynomial::monomial(const FieldPtr& field, Exponent e, const Scalar& c)
{
    Polynomial p(field, e.size());
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::monomial(const FieldPtr& field, Exponent e)
{
    return monomial(field, std::move(e), Scalar::from_int(field, 1));
}

Polynomial Polynomial::variable(const FieldPtr& field, std::size_t nvars, std::size_t index)
{
    Exponent e(nvars, 0);
    e.at(index) = 1;
    return monomial(field, std::move(e));
}

void Polynomial::add_term(const Exponent& e, const Scalar& c)
{
    if (e.size() != nvars_)
        fail(ErrorKind::dimension_mismatch, "exponent length does not match variable count");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c.lift(field_));
        return;
    }
    it->second += c.lift(field_);
    if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
}

Scalar Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(field_) : it->second;
}

Scalar Polynomial::constant_term() const
{
    return coefficient(Exponent(nvars_, 0));
}

const Exponent& Polynomial::leading_exponent() const
{
    if (terms_.empty()) fail(ErrorKind::zero_polynomial, "zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Scalar& Polynomial::leading_coefficient() const
{
    if (terms_.empty()) fail(ErrorKind::zero_polynomial, "zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

int Polynomial::order() const
{
    if (terms_.empty()) return -1;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
    return d;
}

int Polynomial::degree_in(std::size_t var) const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Polynomial::order_in(std::size_t var) const
{
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
}

Polynomial Polynomial::homogeneous_part(int d) const
{
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::initial_form() const
{
    return homogeneous_part(order());
}

void Polynomial::check_compatible(const Polynomial& rhs) const
{
    if (!same_field(field_, rhs.field_))
        fail(ErrorKind::field_mismatch, "polynomial fields differ: " + field_->describe() + " vs " +
                                            rhs.field_->describe());
    if (nvars_ != rhs.nvars_) fail(ErrorKind::dimension_mismatch, "polynomial variable counts differ");
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Polynomial r(a.field_, a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    Scalar cl = c.lift(field_);
    for (auto& [e, coeff] : terms_) coeff *= cl;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(field_, nvars_, 1), base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        r.add_term(f, c * Scalar::from_int(field_, e[var]));
    }
    return r;
}

Polynomial Polynomial::shifted(const Exponent& shift) const
{
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

Polynomial Polynomial::divide_by_variable(std::size_t var, int k) const
{
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < k) fail(ErrorKind::invalid_argument, "term not divisible by variable power");
        Exponent f = e;
        f[var] -= k;
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

bool Polynomial::divide_exact(const Polynomial& divisor, Polynomial& quotient) const
{
    check_compatible(divisor);
    if (divisor.is_zero()) fail(ErrorKind::zero_polynomial, "division by the zero polynomial");
    quotient = Polynomial(field_, nvars_);
    Polynomial rem = *this;
    const Exponent& lead = divisor.leading_exponent();
    const Scalar lead_inv = divisor.leading_coefficient().inverse();
    Exponent q(nvars_);
    while (!rem.is_zero()) {
        const Exponent& le = rem.leading_exponent();
        for (std::size_t i = 0; i < nvars_; ++i) {
            q[i] = le[i] - lead[i];
            if (q[i] < 0) return false;
        }
        Scalar c = rem.leading_coefficient() * lead_inv;
        quotient.add_term(q, c);
        rem -= divisor.shifted(q) * c;
    }
    return true;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (images.size() != nvars_)
        fail(ErrorKind::dimension_mismatch, "substitution must map every variable");
    if (images.empty()) return *this;
    const FieldPtr& f = images.front().field();
    const std::size_t n = images.front().nvars();
    for (const auto& img : images) {
        if (!same_field(img.field(), f) || img.nvars() != n)
            fail(ErrorKind::field_mismatch, "substitution images must share field and variable count");
    }
    if (!embeds_into(field_, f))
        fail(ErrorKind::field_mismatch, "cannot substitute into a smaller field");
    std::vector<std::vector<Polynomial>> powers(nvars_);
    Polynomial result(f, n);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(f, n, c.lift(f));
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(f, n, 1));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
            term *= pw[e[i]];
        }
        result += term;
    }
    return result;
}

Polynomial Polynomial::evaluate_at(std::size_t var, const Scalar& c) const
{
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
        images.push_back(i == var ? constant(field_, nvars_, c.lift(field_)) : variable(field_, nvars_, i));
    return substitute(images);
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const
{
    if (point.size() != nvars_) fail(ErrorKind::dimension_mismatch, "evaluation point has wrong length");
    Scalar sum(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= point[i].lift(field_).pow(static_cast<std::uint64_t>(e[i]));
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::lift(const FieldPtr& to) const
{
    if (same_field(field_, to)) return *this;
    Polynomial r(to, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.lift(to));
    return r;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    Polynomial r(*this);
    r *= leading_coefficient().inverse();
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    if (a.terms_.empty()) return true;
    return same_field(a.field_, b.field_) && a.terms_ == b.terms_;
}

std::vector<std::string> default_variable_names(std::size_t nvars)
{
    static const char* small[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i)
        names.push_back(nvars <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
    return names;
}

std::string Polynomial::to_string(const std::vector<std::string>& names_in) const
{
    if (terms_.empty()) return "0";
    const auto names = names_in.empty() ? default_variable_names(nvars_) : names_in;
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool negative = c.in_base() && sgn(c.base_value()) < 0;
        if (negative) cs = (-c).to_string();
        if (!c.in_base()) cs = "(" + cs + ")";
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit = cs == "1";
        bool monomial_part = total_degree(e) > 0;
        if (!unit || !monomial_part) os << cs;
        bool need_star = !unit && monomial_part;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace dicrit::algebra
