#include "dicrit/algebra/univariate.hpp"

#include "dicrit/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dicrit::algebra {

UniPoly::UniPoly(FieldPtr field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    for (auto& c : c_) c = c.lift(field_);
    trim();
}

UniPoly UniPoly::from_ints(const FieldPtr& field, const std::vector<long>& coeffs)
{
    std::vector<Scalar> c;
    for (long v : coeffs) c.push_back(Scalar::from_int(field, v));
    return UniPoly(field, std::move(c));
}

UniPoly UniPoly::x_minus(const Scalar& root)
{
    return UniPoly(root.field(), {-root, Scalar::from_int(root.field(), 1)});
}

UniPoly UniPoly::from_polynomial(const Polynomial& p, std::size_t var)
{
    std::vector<Scalar> c(std::max(p.degree_in(var) + 1, 0), Scalar(p.field()));
    for (const auto& [e, coeff] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                fail(ErrorKind::invalid_argument, "polynomial is not univariate in the chosen variable");
        c[e[var]] = coeff;
    }
    return UniPoly(p.field(), std::move(c));
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(field_);
    return c_[i];
}

Scalar UniPoly::operator()(const Scalar& t) const
{
    Scalar acc(field_);
    Scalar tl = t.lift(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * tl + c_[i];
    return acc;
}

UniPoly UniPoly::operator-() const
{
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(a.field_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(a.field_, std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b)
{
    return a.c_ == b.c_;
}

UniPoly UniPoly::divmod(const UniPoly& divisor, UniPoly& remainder) const
{
    if (divisor.is_zero()) fail(ErrorKind::zero_polynomial, "division by the zero polynomial");
    std::vector<Scalar> r = c_;
    const int dd = divisor.degree();
    const Scalar lead_inv = divisor.leading().inverse();
    std::vector<Scalar> q(std::max(degree() - dd + 1, 0), Scalar(field_));
    for (int i = degree(); i >= dd; --i) {
        if (r[i].is_zero()) continue;
        Scalar c = r[i] * lead_inv;
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * divisor.c_[j];
    }
    remainder = UniPoly(field_, std::move(r));
    return UniPoly(field_, std::move(q));
}

UniPoly UniPoly::derivative() const
{
    std::vector<Scalar> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * Scalar::from_int(field_, static_cast<long>(i)));
    return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return *this;
    Scalar inv = leading().inverse();
    UniPoly r(*this);
    for (auto& c : r.c_) c *= inv;
    return r;
}

UniPoly UniPoly::lift(const FieldPtr& to) const
{
    std::vector<Scalar> c;
    for (const auto& x : c_) c.push_back(x.lift(to));
    return UniPoly(to, std::move(c));
}

UniPoly UniPoly::reversed(int deg) const
{
    std::vector<Scalar> c(deg + 1, Scalar(field_));
    for (int i = 0; i <= degree(); ++i) c[deg - i] = c_[i];
    return UniPoly(field_, std::move(c));
}

Polynomial UniPoly::to_polynomial(std::size_t nvars, std::size_t var) const
{
    Polynomial p(field_, nvars);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Exponent e(nvars, 0);
        e[var] = static_cast<int>(i);
        p.add_term(e, c_[i]);
    }
    return p;
}

std::string UniPoly::to_string(const std::string& var) const
{
    return to_polynomial().to_string({var});
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r;
        x.divmod(y, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// p-th root of a polynomial whose exponents are all multiples of p.
UniPoly pth_root(const UniPoly& p)
{
    const FieldPtr& f = p.field();
    const auto ch = static_cast<std::uint64_t>(f->characteristic());
    // inverse Frobenius on F_{p^k} is x -> x^(p^(k-1))
    std::uint64_t e = 1;
    for (int i = 1; i < f->degree(); ++i) e *= ch;
    std::vector<Scalar> c;
    for (int i = 0; i <= p.degree(); i += static_cast<int>(ch)) c.push_back(p.coeff(i).pow(e));
    return UniPoly(f, std::move(c));
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b)
{
    UniPoly r;
    UniPoly q = a.divmod(b, r);
    if (!r.is_zero()) fail(ErrorKind::invalid_argument, "inexact univariate division");
    return q;
}

}  // namespace

UniPoly radical(const UniPoly& p)
{
    if (p.is_zero()) fail(ErrorKind::zero_polynomial, "radical of zero");
    if (p.degree() == 0) return UniPoly::from_ints(p.field(), {1});
    UniPoly d = p.derivative();
    if (d.is_zero()) return radical(pth_root(p));
    UniPoly w = gcd(p, d);
    UniPoly u = exact_quotient(p.monic(), w);
    if (w.degree() == 0) return u;
    UniPoly r = radical(w);
    return exact_quotient(u * r, gcd(u, r)).monic();
}

int distinct_root_count(const UniPoly& p)
{
    return radical(p).degree();
}

std::vector<mpz_class> clear_denominators(const UniPoly& p)
{
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.base_value().get_den_mpz_t());
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpq_class v = c.base_value() * l;
        out.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g != 0 && g != 1)
        for (auto& v : out) v /= g;
    return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n)
{
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class d = 2;
    while (d * d <= n && d < 10000000) {
        int k = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            ++k;
        }
        if (k) factors.emplace_back(d, k);
        d += (d == 2 ? 1 : 2);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [q, k] : factors) {
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= k; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

mpz_class eval_int(const std::vector<mpz_class>& c, long t)
{
    mpz_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

void strip_root(UniPoly& p, const Scalar& r, std::vector<Root>& out)
{
    UniPoly lin = UniPoly::x_minus(r);
    int mult = 0;
    while (p.degree() >= 1) {
        UniPoly rem;
        UniPoly q = p.divmod(lin, rem);
        if (!rem.is_zero()) break;
        p = std::move(q);
        ++mult;
    }
    if (mult > 0) out.push_back({r, mult});
}

std::vector<Scalar> rational_root_candidates(const UniPoly& p)
{
    std::vector<Scalar> out;
    std::vector<mpz_class> c = clear_denominators(p);
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) out.push_back(Scalar::from_int(p.field(), 0));
    if (low + 1 >= c.size()) return out;
    auto num = positive_divisors(c[low]);
    auto den = positive_divisors(c.back());
    std::set<mpq_class> seen;
    for (const auto& a : num) {
        for (const auto& b : den) {
            mpq_class q(a, b);
            q.canonicalize();
            for (int sign : {1, -1}) {
                mpq_class cand = q * sign;
                if (!seen.insert(cand).second) continue;
                if (p(Scalar::from_rational(p.field(), cand)).is_zero())
                    out.push_back(Scalar::from_rational(p.field(), cand));
            }
        }
    }
    return out;
}

// Roots in F = Q(a) of a monic quadratic m over Q, using sqrt of disc(m) in F.
std::vector<Scalar> quadratic_roots_in(const UniPoly& m, const FieldPtr& f)
{
    const auto& mod = f->modulus();
    mpq_class field_disc = mod[1] * mod[1] - 4 * mod[0];
    mpq_class b = m.coeff(1).base_value(), c = m.coeff(0).base_value();
    mpq_class disc = b * b - 4 * c;
    mpq_class ratio = disc / field_disc;
    if (sgn(ratio) < 0) return {};
    mpz_class n = ratio.get_num(), d = ratio.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return {};
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    mpq_class r(sn, sd);
    r.canonicalize();
    // sqrt(field_disc) = 2a + mod[1]
    Scalar sqrt_fd = Scalar::generator(f) * Scalar::from_int(f, 2) + Scalar::from_rational(f, mod[1]);
    Scalar half = Scalar::from_rational(f, mpq_class(1, 2));
    Scalar mb = Scalar::from_rational(f, -b);
    Scalar s = sqrt_fd * Scalar::from_rational(f, r);
    return {(mb + s) * half, (mb - s) * half};
}

}  // namespace

std::vector<UniPoly> rational_quadratic_factors(const UniPoly& p_in)
{
    const FieldPtr q = Field::rationals();
    UniPoly p = p_in;
    // drop rational roots first; Kronecker values must be nonzero
    for (const auto& r : rational_root_candidates(p)) {
        std::vector<Root> tmp;
        strip_root(p, r, tmp);
    }
    std::vector<UniPoly> out;
    if (p.degree() < 2) return out;
    p = radical(p);
    std::vector<mpz_class> c = clear_denominators(p);
    mpz_class v0 = eval_int(c, 0), v1 = eval_int(c, 1), vm = eval_int(c, -1);
    auto d0s = positive_divisors(v0), d1s = positive_divisors(v1), dms = positive_divisors(vm);
    std::set<std::vector<mpq_class>> seen;
    for (const auto& d0a : d0s) {
        for (int s0 : {1, -1}) {
            mpz_class d0 = d0a * s0;
            for (const auto& d1a : d1s) {
                for (int s1 : {1, -1}) {
                    mpz_class d1 = d1a * s1;
                    for (const auto& dma : dms) {
                        for (int sm : {1, -1}) {
                            mpz_class dm = dma * sm;
                            mpz_class two_alpha = d1 + dm - 2 * d0;
                            mpz_class two_beta = d1 - dm;
                            if (!mpz_even_p(two_alpha.get_mpz_t()) || !mpz_even_p(two_beta.get_mpz_t())) continue;
                            mpz_class alpha = two_alpha / 2, beta = two_beta / 2;
                            if (alpha <= 0) continue;
                            mpq_class disc = mpq_class(beta * beta - 4 * alpha * d0);
                            if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t())) continue;
                            UniPoly cand(q, {Scalar::from_rational(q, mpq_class(d0)), Scalar::from_rational(q, mpq_class(beta)),
                                             Scalar::from_rational(q, mpq_class(alpha))});
                            UniPoly rem;
                            p.divmod(cand, rem);
                            if (!rem.is_zero()) continue;
                            UniPoly m = cand.monic();
                            std::vector<mpq_class> key;
                            for (const auto& x : m.coeffs()) key.push_back(x.base_value());
                            if (seen.insert(key).second) out.push_back(m);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
        return a.coeffs() < b.coeffs();
    });
    return out;
}

RootFactorization univariate_roots(const UniPoly& p_in)
{
    if (p_in.is_zero()) fail(ErrorKind::zero_polynomial, "univariate_roots of the zero polynomial");
    const FieldPtr& f = p_in.field();
    UniPoly p = p_in.monic();
    RootFactorization out;
    std::vector<Scalar> candidates;
    if (f->is_finite()) {
        const std::uint64_t q = f->order();
        if (q > (1ULL << 22))
            fail(ErrorKind::invalid_argument, "field " + f->describe() + " too large for exhaustive root search");
        if (p.degree() >= 1) {
            for (std::uint64_t i = 0; i < q; ++i) {
                Scalar s = Scalar::enumerate(f, i);
                if (p(s).is_zero()) candidates.push_back(s);
            }
        }
    } else if (!f->is_extension()) {
        if (p.degree() >= 1) candidates = rational_root_candidates(p);
    } else if (p.degree() >= 1) {
        // norm N(p) = p * conj(p) lies in Q[t]; every root of p in F is a root
        // of a rational or quadratic factor of N(p)
        const auto& mod = f->modulus();
        Scalar conj_gen = -Scalar::generator(f) - Scalar::from_rational(f, mod[1]);
        std::vector<Scalar> cc;
        for (const auto& c : p.coeffs())
            cc.push_back(Scalar::from_rational(f, c.coords()[0]) + Scalar::from_rational(f, c.coords()[1]) * conj_gen);
        UniPoly norm = p * UniPoly(f, cc);
        const FieldPtr q = Field::rationals();
        std::vector<Scalar> nc;
        for (const auto& c : norm.coeffs()) nc.push_back(Scalar::from_rational(q, c.coords()[0]));
        UniPoly nq(q, nc);
        std::set<Scalar> seen;
        auto consider = [&](const Scalar& s) {
            if (seen.insert(s).second && p(s).is_zero()) candidates.push_back(s);
        };
        for (const auto& r : rational_root_candidates(nq)) consider(r.lift(f));
        for (const auto& m : rational_quadratic_factors(nq))
            for (const auto& s : quadratic_roots_in(m, f)) consider(s);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) strip_root(p, r, out.roots);
    out.residual = p.monic();
    return out;
}

std::optional<UniPoly> smallest_irreducible_factor(const UniPoly& p, std::uint64_t max_candidates)
{
    const FieldPtr& f = p.field();
    if (f->is_extension()) fail(ErrorKind::invalid_argument, "factor search only over a base field");
    if (p.degree() < 2) return std::nullopt;
    if (!f->is_finite()) {
        auto quads = rational_quadratic_factors(p);
        if (quads.empty()) return std::nullopt;
        return quads.front();
    }
    const auto ch = static_cast<std::uint64_t>(f->characteristic());
    for (int k = 2; k <= p.degree(); ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) {
            if (count > max_candidates / ch) return std::nullopt;
            count *= ch;
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<Scalar> c;
            std::uint64_t v = idx;
            for (int i = 0; i < k; ++i) {
                c.push_back(Scalar::from_int(f, static_cast<long>(v % ch)));
                v /= ch;
            }
            c.push_back(Scalar::from_int(f, 1));
            UniPoly cand(f, std::move(c));
            UniPoly rem;
            p.divmod(cand, rem);
            if (rem.is_zero()) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace dicrit::algebra
