#include "dicrit/valuation/valuation.hpp"

#include "dicrit/algebra/gcd.hpp"
#include "dicrit/error.hpp"

#include <numeric>
#include <sstream>

namespace dicrit::valuation {

using algebra::Exponent;

MonomialValuation::MonomialValuation(std::vector<int> weights) : w_(std::move(weights))
{
    if (w_.empty()) fail(ErrorKind::invalid_argument, "monomial valuation needs at least one weight");
    int g = 0;
    for (int w : w_) {
        if (w <= 0) fail(ErrorKind::invalid_argument, "weights must be positive");
        g = std::gcd(g, w);
    }
    if (g != 1) fail(ErrorKind::invalid_argument, "weights must have gcd 1");
}

std::int64_t MonomialValuation::pairing(const Exponent& e) const
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += static_cast<std::int64_t>(w_[i]) * e[i];
    return s;
}

Value mono_value(const MonomialValuation& v, const Polynomial& f)
{
    if (f.nvars() != v.nvars())
        fail(ErrorKind::dimension_mismatch, "valuation has " + std::to_string(v.nvars()) + " weights, polynomial has " +
                                                std::to_string(f.nvars()) + " variables");
    Value best = Value::infinity();
    for (const auto& [e, c] : f.terms()) best = min(best, v.pairing(e));
    return best;
}

namespace {

// (u, v) at the previous point in terms of the coordinates at the next one.
std::vector<Polynomial> chart_substitution(const FieldPtr& field, const QdtStep& s)
{
    Polynomial u = Polynomial::variable(field, 2, 0);
    Polynomial v = Polynomial::variable(field, 2, 1);
    Polynomial moved = u * (v + Polynomial::constant(field, 2, s.center));
    if (s.chart == 0) return {u, moved};
    return {moved, u};
}

struct Fraction {
    Polynomial num, den;
};

Fraction reduce(Polynomial num, Polynomial den)
{
    Polynomial g = algebra::gcd(num, den);
    num = algebra::exact_divide(num, g);
    den = algebra::exact_divide(den, g);
    Scalar lc = den.leading_coefficient().inverse();
    return {num * lc, den * lc};
}

}  // namespace

DivisorialValuation::DivisorialValuation(FieldPtr field, std::vector<QdtStep> steps)
    : field_(std::move(field)), steps_(std::move(steps))
{
    for (auto& s : steps_) {
        if (s.chart != 0 && s.chart != 1) fail(ErrorKind::invalid_argument, "chart must be 0 or 1");
        if (!s.center.field()) s.center = Scalar(field_);
        if (!algebra::embeds_into(s.center.field(), field_))
            fail(ErrorKind::field_mismatch, "center " + s.center.to_string() + " is not in " + field_->describe());
        s.center = s.center.lift(field_);
    }
    images_ = {Polynomial::variable(field_, 2, 0), Polynomial::variable(field_, 2, 1)};
    for (const auto& s : steps_) {
        auto sub = chart_substitution(field_, s);
        images_ = {images_[0].substitute(sub), images_[1].substitute(sub)};
    }
}

DivisorialValuation DivisorialValuation::ord(const FieldPtr& field)
{
    return DivisorialValuation(field, {});
}

DivisorialValuation DivisorialValuation::from_weights(const FieldPtr& field, int a, int b)
{
    if (a <= 0 || b <= 0 || std::gcd(a, b) != 1) fail(ErrorKind::invalid_argument, "weights must be positive and coprime");
    std::vector<QdtStep> steps;
    while (a != 1 || b != 1) {
        if (a < b) {
            steps.push_back({0, Scalar(field)});
            b -= a;
        } else {
            steps.push_back({1, Scalar(field)});
            std::tie(a, b) = std::pair{b, a - b};
        }
    }
    return DivisorialValuation(field, std::move(steps));
}

Polynomial DivisorialValuation::pullback(const Polynomial& f) const
{
    if (f.nvars() != 2) fail(ErrorKind::dimension_mismatch, "divisorial valuations act on two variables");
    if (!algebra::embeds_into(f.field(), field_))
        fail(ErrorKind::field_mismatch, "polynomial over " + f.field()->describe() + " under a valuation over " +
                                            field_->describe());
    return f.lift(field_).substitute(images_);
}

Value DivisorialValuation::operator()(const Polynomial& f) const
{
    if (f.is_zero()) return Value::infinity();
    return pullback(f).order();
}

DivisorialValuation DivisorialValuation::prefix(std::size_t k) const
{
    return DivisorialValuation(field_, std::vector<QdtStep>(steps_.begin(), steps_.begin() + static_cast<long>(k)));
}

bool DivisorialValuation::is_canonical() const
{
    for (const auto& s : steps_)
        if (s.chart == 1 && !s.center.is_zero()) return false;
    return true;
}

DivisorialValuation DivisorialValuation::canonical() const
{
    if (is_canonical()) return *this;
    // Walk the intrinsic chain of points, reading each center off the
    // valuation itself through canonical coordinates (rational in x, y).
    const Polynomial one = Polynomial::constant(field_, 2, 1);
    Fraction u{Polynomial::variable(field_, 2, 0), one};
    Fraction v{Polynomial::variable(field_, 2, 1), one};
    auto value = [&](const Fraction& r) { return (*this)(r.num).get() - (*this)(r.den).get(); };
    std::vector<QdtStep> out;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        auto vu = value(u), vv = value(v);
        if (vu < vv) {
            out.push_back({0, Scalar(field_)});
            v = reduce(v.num * u.den, v.den * u.num);
        } else if (vu > vv) {
            out.push_back({1, Scalar(field_)});
            Fraction nu = v;
            v = reduce(u.num * v.den, u.den * v.num);
            u = nu;
        } else {
            Polynomial p = pullback(v.num * u.den).initial_form();
            Polynomial q = pullback(v.den * u.num).initial_form();
            Scalar c = p.leading_coefficient() / q.leading_coefficient();
            if (p != q * c) fail(ErrorKind::invalid_argument, "QDT sequence is not a chain of points");
            out.push_back({0, c});
            Polynomial num = v.num * u.den - v.den * u.num * c;
            v = reduce(num, v.den * u.num);
        }
    }
    return DivisorialValuation(field_, std::move(out));
}

std::optional<std::pair<int, int>> DivisorialValuation::monomial_weights() const
{
    DivisorialValuation c = canonical();
    for (const auto& s : c.steps_)
        if (!s.center.is_zero()) return std::nullopt;
    auto a = c(Polynomial::variable(field_, 2, 0)).get();
    auto b = c(Polynomial::variable(field_, 2, 1)).get();
    if (std::gcd(a, b) != 1) return std::nullopt;
    auto w = from_weights(field_, static_cast<int>(a), static_cast<int>(b));
    if (w.steps_.size() != c.steps_.size()) return std::nullopt;
    for (std::size_t i = 0; i < w.steps_.size(); ++i)
        if (w.steps_[i].chart != c.steps_[i].chart) return std::nullopt;
    return std::pair{static_cast<int>(a), static_cast<int>(b)};
}

std::string DivisorialValuation::to_string() const
{
    std::ostringstream out;
    out << "qdt[origin";
    for (const auto& s : steps_) out << ", (" << s.chart << ", " << s.center.to_string() << ")";
    out << "]";
    return out.str();
}

bool operator==(const DivisorialValuation& a, const DivisorialValuation& b)
{
    if (a.steps_.size() != b.steps_.size()) return false;
    FieldPtr common;
    if (algebra::embeds_into(a.field_, b.field_)) common = b.field_;
    else if (algebra::embeds_into(b.field_, a.field_)) common = a.field_;
    else return false;
    auto ca = a.canonical(), cb = b.canonical();
    for (std::size_t i = 0; i < ca.steps_.size(); ++i) {
        if (ca.steps_[i].chart != cb.steps_[i].chart) return false;
        if (ca.steps_[i].center.lift(common) != cb.steps_[i].center.lift(common)) return false;
    }
    return true;
}

Value qdt_eval(const DivisorialValuation& v, const Polynomial& f)
{
    return v(f);
}

Value Valuation::operator()(const Polynomial& f) const
{
    if (is_monomial()) return mono_value(monomial(), f);
    return divisorial()(f);
}

std::string Valuation::to_string() const
{
    if (!is_monomial()) return divisorial().to_string();
    std::string s = "w(";
    for (std::size_t i = 0; i < monomial().weights().size(); ++i)
        s += (i ? "," : "") + std::to_string(monomial().weights()[i]);
    return s + ")";
}

Value ideal_value(const Valuation& v, const std::vector<Polynomial>& gens)
{
    Value best = Value::infinity();
    for (const auto& g : gens) best = min(best, v(g));
    return best;
}

Value fraction_value(const Valuation& v, const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero()) fail(ErrorKind::zero_polynomial, "zero denominator");
    Value a = v(num);
    return a.is_infinite() ? a : a - v(den).get();
}

}  // namespace dicrit::valuation
