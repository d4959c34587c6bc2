#include "dicrit/pencil/constructions.hpp"

#include "dicrit/algebra/gcd.hpp"
#include "dicrit/error.hpp"
#include "dicrit/random.hpp"

#include <algorithm>

namespace dicrit::pencil {

using algebra::Exponent;
using algebra::Field;

namespace {

constexpr int max_power = 4;
constexpr int budget = 64;

// the generators in order, then seeded random combinations
template <class Accept>
std::optional<Polynomial> search(const std::vector<Polynomial>& gens, Rng& rng, Accept&& accept)
{
    for (const auto& g : gens)
        if (accept(g)) return g;
    const FieldPtr& f = gens.front().field();
    for (int attempt = 0; attempt < budget; ++attempt) {
        Polynomial p(f, 2);
        for (const auto& g : gens) p += g * rng.nonzero(f);
        if (!p.is_zero() && accept(p)) return p.monic();
    }
    return std::nullopt;
}

std::vector<std::int64_t> target_values(const std::vector<DivisorialValuation>& U, const std::vector<int>& n)
{
    std::vector<std::int64_t> out;
    for (const auto& v : U) out.push_back(divisor_value_on_cluster(U, n, v).get());
    return out;
}

}  // namespace

PowerWitness construct_b(const std::vector<DivisorialValuation>& U, const std::vector<int>& n, std::uint64_t seed)
{
    const auto values = target_values(U, n);
    Rng rng(seed);
    for (int s = 1; s <= max_power; ++s) {
        auto found = search(product_ideal_generators(U, n, s), rng, [&](const Polynomial& b) {
            for (std::size_t i = 0; i < U.size(); ++i)
                if (U[i](b) != Value(s * values[i])) return false;
            return true;
        });
        if (found) return {s, *found};
    }
    fail(ErrorKind::search_exhausted, "no b found for s <= " + std::to_string(max_power));
}

bool same_dicritical_set(const PencilReport& report, const std::vector<DivisorialValuation>& U)
{
    auto contains = [](const auto& list, const DivisorialValuation& v, auto get) {
        return std::any_of(list.begin(), list.end(), [&](const auto& x) {
            const DivisorialValuation& w = get(x);
            return algebra::same_field(w.field(), v.field()) && w == v;
        });
    };
    auto from_record = [](const DicriticalRecord& r) -> const DivisorialValuation& { return r.valuation; };
    auto self = [](const DivisorialValuation& v) -> const DivisorialValuation& { return v; };
    for (const auto& r : report.dicriticals)
        if (!contains(U, r.valuation, self)) return false;
    for (const auto& v : U)
        if (!contains(report.dicriticals, v, from_record)) return false;
    return true;
}

bool verify_reduction_2d(const Pencil& J, const std::vector<DivisorialValuation>& U, const std::vector<int>& n, int t,
                         const PrincipalizeOptions& options)
{
    if (t <= 0) fail(ErrorKind::invalid_argument, "power must be positive");
    const auto values = target_values(U, n);
    if (J.a.is_zero() || J.b.is_zero()) return false;
    if (!algebra::gcd(J.a, J.b).is_constant()) return false;  // not M-primary
    PencilReport report = principalize(J, options);
    if (!report.primary || !same_dicritical_set(report, U)) return false;
    for (std::size_t i = 0; i < U.size(); ++i) {
        Value v = min(U[i](J.a), U[i](J.b));
        if (v != Value(t * values[i])) return false;
    }
    return true;
}

PowerWitness construct_special_reduction(const std::vector<DivisorialValuation>& U, const std::vector<int>& n,
                                         const Polynomial& eta, int m, std::uint64_t seed)
{
    if (!check_intersection_formula(U, n, eta, m))
        fail(ErrorKind::precondition_failed, "m ord_V(eta) differs from V(I) for some V in U");
    const Polynomial b = eta.pow(static_cast<unsigned>(m));
    Rng rng(seed);
    for (int t = 1; t <= max_power; ++t) {
        const Polynomial bt = b.pow(static_cast<unsigned>(t));
        auto found = search(product_ideal_generators(U, n, t), rng, [&](const Polynomial& a) {
            return verify_reduction_2d({a, bt}, U, n, t);
        });
        if (found) return {t, *found};
    }
    fail(ErrorKind::search_exhausted, "no special reduction found for t <= " + std::to_string(max_power));
}

Pencil construct_pencil_with_dicriticals(const std::vector<DivisorialValuation>& U, std::uint64_t seed)
{
    const std::vector<int> n(U.size(), 1);
    PowerWitness b = construct_b(U, n, seed);
    Rng rng(seed + 1);
    auto found = search(product_ideal_generators(U, n, b.s), rng, [&](const Polynomial& a) {
        if (!algebra::gcd(a, b.element).is_constant()) return false;
        return same_dicritical_set(principalize({a, b.element}), U);
    });
    if (!found) fail(ErrorKind::search_exhausted, "no second element realizes the divisor set");
    return {*found, b.element};
}

NormalSingularityReport normal_sing_dicriticals(int m, const std::vector<Polynomial>& forms)
{
    const int n = static_cast<int>(forms.size());
    if (n == 0) fail(ErrorKind::bad_parameters, "at least one linear form is required");
    if (m <= n) fail(ErrorKind::bad_parameters, "m must exceed the number of forms");
    const FieldPtr field = forms.front().field();
    const auto ch = field->characteristic();
    if (ch > 0 && m % ch == 0) fail(ErrorKind::bad_parameters, "characteristic divides m");
    for (const auto& f : forms) {
        if (f.nvars() != 2 || !algebra::same_field(f.field(), field))
            fail(ErrorKind::bad_parameters, "forms must be in X, Y over one field");
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != 1)
            fail(ErrorKind::bad_parameters, f.to_string({"X", "Y"}) + " is not a linear form");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!algebra::gcd(forms[i], forms[j]).is_constant())
                fail(ErrorKind::bad_parameters, "forms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                    " are proportional");

    NormalSingularityReport out;
    // variables (x', y', z)
    auto var = [&](std::size_t i) { return Polynomial::variable(field, 3, i); };
    const Polynomial xp = var(0), yp = var(1), z = var(2);
    Polynomial prod = Polynomial::constant(field, 3, 1), prod2 = Polynomial::constant(field, 2, 1);
    for (const auto& f : forms) {
        prod *= f.substitute({xp, yp});
        prod2 *= f;
    }
    // g(X, Y, Z) = Z^m - prod f_i(X, Y), pulled back along X = x'z, Y = y'z
    Polynomial G = z.pow(static_cast<unsigned>(m));
    {
        Polynomial p = Polynomial::constant(field, 3, 1);
        for (const auto& f : forms) p *= f.substitute({xp * z, yp * z});
        G -= p;
    }
    const Polynomial expected = z.pow(static_cast<unsigned>(n)) * (z.pow(static_cast<unsigned>(m - n)) - prod);
    out.chart_relation = G == expected;
    // components of z = 0 on the strict transform: distinct linear factors of prod f_i
    out.count = algebra::squarefree_kernel(prod2).degree();
    for (const auto& f : forms) out.prime_generators.push_back("(z, " + f.monic().to_string({"x'", "y'"}) + ")");
    return out;
}

namespace {

Polynomial homogenize(const Polynomial& f)
{
    const int d = f.degree();
    Polynomial F(f.field(), 3);
    for (const auto& [e, c] : f.terms()) F.add_term({e[0], e[1], d - e[0] - e[1]}, c);
    return F;
}

}  // namespace

std::vector<InfinityPoint> jacobian_demo(const Polynomial& f, const PrincipalizeOptions& options)
{
    if (f.nvars() != 2) fail(ErrorKind::dimension_mismatch, "jacobian demo needs two variables");
    if (f.is_zero() || f.is_constant()) fail(ErrorKind::invalid_argument, "f must be nonconstant");
    const int d = f.degree();
    const FieldPtr field = f.field();
    const Polynomial F = homogenize(f);
    const Polynomial top = f.homogeneous_part(d);

    std::vector<InfinityPoint> out;
    auto local = [&](const FieldPtr& k, const std::vector<Polynomial>& images, std::string name) {
        const Polynomial Fk = algebra::same_field(k, field) ? F : F.lift(k);
        Pencil p{Fk.substitute(images), Polynomial::variable(k, 2, 0).pow(static_cast<unsigned>(d))};
        out.push_back({std::move(name), p, principalize(p, options)});
    };
    auto u = [](const FieldPtr& k) { return Polynomial::variable(k, 2, 0); };
    auto v = [](const FieldPtr& k) { return Polynomial::variable(k, 2, 1); };

    // [1 : c : 0] with top(1, c) = 0
    std::vector<Polynomial> at_one{Polynomial::constant(field, 2, 1), Polynomial::variable(field, 2, 1)};
    algebra::UniPoly t = algebra::UniPoly::from_polynomial(top.substitute(at_one), 1);
    auto roots = algebra::univariate_roots(t);
    for (const auto& r : roots.roots)
        local(field, {Polynomial::constant(field, 2, 1), v(field) + Polynomial::constant(field, 2, r.value), u(field)},
              "[1:" + r.value.to_string() + ":0]");
    algebra::UniPoly residual = roots.residual;
    while (residual.degree() > 0) {
        if (field->is_extension() || (options.extend == ExtensionPolicy::none && !field->is_finite()))
            fail(ErrorKind::non_rational_point, "point at infinity over " + residual.to_string());
        auto factor = algebra::smallest_irreducible_factor(residual);
        if (!factor) fail(ErrorKind::non_rational_point, "point at infinity over " + residual.to_string());
        const algebra::UniPoly monic = factor->monic();
        std::vector<mpq_class> modulus;
        for (const auto& c : monic.coeffs()) modulus.push_back(c.base_value());
        FieldPtr k = Field::extension(field, modulus);
        Scalar alpha = Scalar::generator(k);
        local(k, {Polynomial::constant(k, 2, 1), v(k) + Polynomial::constant(k, 2, alpha), u(k)},
              "[1:" + alpha.to_string() + ":0]");
        algebra::UniPoly rem;
        while (true) {
            algebra::UniPoly q = residual.divmod(*factor, rem);
            if (!rem.is_zero()) break;
            residual = q;
        }
    }
    // [0 : 1 : 0]
    Exponent ydeg{0, d};
    if (top.coefficient(ydeg).is_zero())
        local(field, {v(field), Polynomial::constant(field, 2, 1), u(field)}, "[0:1:0]");
    return out;
}

}  // namespace dicrit::pencil
