#include "dicrit/monomial/operations.hpp"

#include "dicrit/algebra/linalg.hpp"
#include "dicrit/error.hpp"
#include "dicrit/random.hpp"

#include <algorithm>

namespace dicrit::monomial {

using algebra::Scalar;
using valuation::Value;

namespace {

std::vector<std::size_t> all_indices(std::size_t h)
{
    std::vector<std::size_t> out(h);
    for (std::size_t j = 0; j < h; ++j) out[j] = j;
    return out;
}

bool value_conditions(const std::vector<ReesValuation>& vals, const Polynomial& x, std::int64_t scale = 1)
{
    for (const auto& rv : vals)
        if (valuation::mono_value(rv.v, x) != Value(scale * rv.value)) return false;
    return true;
}

}  // namespace

bool verify_power_decomposition(const MonomialIdeal& I, int n, bool require_normal)
{
    if (n < 0) fail(ErrorKind::invalid_argument, "n must be nonnegative");
    if (require_normal && !is_normal(I)) fail(ErrorKind::not_normal, "ideal " + I.to_string() + " is not normal");
    const auto vals = rees_valuations(I);
    auto in_value_set = [&](const Exponent& e) {
        for (int x : e)
            if (x < 0) return false;
        for (const auto& rv : vals)
            if (rv.v.pairing(e) < (n + 1) * rv.value) return false;
        return true;
    };
    Exponent bound = I.max_exponent();
    for (auto& b : bound) b = (n + 1) * b + 1;
    std::vector<Exponent> gens;
    for (const auto& p : box_points(bound)) {
        if (!in_value_set(p)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < p.size() && minimal; ++i) {
            Exponent q = p;
            --q[i];
            minimal = !in_value_set(q);
        }
        if (minimal) gens.push_back(p);
    }
    return MonomialIdeal(I.dim(), std::move(gens)) == I.power(n + 1);
}

GradedMembership rees_graded_membership(const std::map<int, Polynomial>& f, const MonomialIdeal& I)
{
    bool any = false;
    for (const auto& [n, c] : f) {
        if (n < 0) fail(ErrorKind::invalid_rees_element, "negative degree " + std::to_string(n));
        if (c.is_zero()) continue;
        any = true;
        if (c.nvars() != I.dim()) fail(ErrorKind::dimension_mismatch, "component variable count differs from ideal");
        if (!I.power(n).contains(c))
            fail(ErrorKind::invalid_rees_element, "component of degree " + std::to_string(n) + " is not in I^" +
                                                      std::to_string(n));
    }
    if (!any) fail(ErrorKind::invalid_rees_element, "Rees element is zero");
    const auto vals = rees_valuations(I);
    GradedMembership out;
    out.overall = true;
    for (const auto& rv : vals) {
        bool in = true;
        for (const auto& [n, c] : f)
            if (!c.is_zero() && valuation::mono_value(rv.v, c) < Value((n + 1) * rv.value)) in = false;
        out.per_j.push_back(in);
        out.overall = out.overall && in;
    }
    out.closure_route = true;
    for (const auto& [n, c] : f)
        if (!c.is_zero() && !integral_closure(I.power(n + 1)).contains(c)) out.closure_route = false;
    return out;
}

bool value_criterion(const MonomialIdeal& I, const Polynomial& x, std::size_t j)
{
    if (x.is_zero()) fail(ErrorKind::zero_polynomial, "element is zero");
    if (x.nvars() != I.dim()) fail(ErrorKind::dimension_mismatch, "element variable count differs from ideal");
    if (!I.contains(x)) fail(ErrorKind::not_in_ideal, "element is not in " + I.to_string());
    const auto vals = rees_valuations(I);
    if (j >= vals.size())
        fail(ErrorKind::invalid_argument, "valuation index " + std::to_string(j + 1) + " out of range 1.." +
                                              std::to_string(vals.size()));
    return valuation::mono_value(vals[j].v, x) == Value(vals[j].value);
}

FiberConeSlice fiber_hilbert(const MonomialIdeal& I, int n)
{
    return {n, I.power(n).gens()};
}

Polynomial find_element(const MonomialIdeal& I, const std::set<std::size_t>& js, std::uint64_t seed,
                        const FieldPtr& field)
{
    const auto vals = rees_valuations(I);
    std::vector<std::size_t> targets(js.begin(), js.end());
    if (targets.empty()) targets = all_indices(vals.size());
    for (auto j : targets)
        if (j >= vals.size()) fail(ErrorKind::invalid_argument, "valuation index out of range");

    const auto& G = I.gens();
    auto reaches = [&](const Exponent& g, std::size_t j) { return vals[j].v.pairing(g) == vals[j].value; };
    // Smallest subset of generators meeting every requested facet minimum.
    std::vector<std::size_t> chosen;
    for (std::size_t k = 1; k <= targets.size() && chosen.empty(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            bool ok = std::all_of(targets.begin(), targets.end(), [&](std::size_t j) {
                return std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return reaches(G[i], j); });
            });
            if (ok) {
                chosen = idx;
                break;
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == G.size() - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t m = i; m < k; ++m) idx[m] = idx[m - 1] + 1;
        }
    }
    if (chosen.empty()) fail(ErrorKind::search_exhausted, "no generator subset reaches every facet");

    Rng rng(seed);
    Polynomial x(field, I.dim());
    for (std::size_t pos = 0; pos < chosen.size(); ++pos) {
        Scalar c = pos == 0 ? Scalar::from_int(field, 1) : rng.nonzero(field);
        x.add_term(G[chosen[pos]], c);
    }
    x = x.monic();
    // Distinct monomials never cancel, so the witness cannot fail; keep the check anyway.
    for (auto j : targets)
        if (valuation::mono_value(vals[j].v, x) != Value(vals[j].value))
            fail(ErrorKind::field_too_small, "no witness over " + field->describe());
    return x;
}

PowerElement find_element_power(const MonomialIdeal& I, int r, std::uint64_t seed, const FieldPtr& field, int s_max)
{
    if (r <= 0) fail(ErrorKind::invalid_argument, "r must be positive");
    const auto vals = rees_valuations(I);
    for (int s = 1; s <= s_max; ++s) {
        MonomialIdeal P = I.power(r * s);
        Polynomial x;
        try {
            x = find_element(P, {}, seed, field);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::field_too_small) continue;
            throw;
        }
        if (value_conditions(vals, x, r * s)) return {s, x};
    }
    fail(ErrorKind::search_exhausted, "no witness for s <= " + std::to_string(s_max));
}

std::optional<ReductionCertificate> certify_reduction(const MonomialIdeal& I, const std::vector<Polynomial>& J,
                                                      int n_max)
{
    auto D = I.equigenerated_degree();
    if (!D) fail(ErrorKind::not_equigenerated, "ideal " + I.to_string() + " is not generated in one degree");
    if (J.empty()) fail(ErrorKind::invalid_argument, "empty candidate reduction");
    for (const auto& g : J) {
        if (g.nvars() != I.dim()) fail(ErrorKind::dimension_mismatch, "candidate variable count differs from ideal");
        if (g.is_zero() || !g.is_homogeneous() || g.degree() != *D)
            fail(ErrorKind::not_in_ideal, "candidate " + g.to_string() + " is not a nonzero form of degree " +
                                              std::to_string(*D));
        if (!I.contains(g)) fail(ErrorKind::not_in_ideal, "candidate " + g.to_string() + " is not in the ideal");
    }
    const FieldPtr& field = J.front().field();
    for (int n = 0; n <= n_max; ++n) {
        const int degree = (n + 1) * *D;
        std::size_t a = algebra::graded_component_dim(I.power(n + 1).polynomials(field), degree);
        std::vector<Polynomial> prods;
        for (const auto& g : J)
            for (const auto& m : I.power(n).polynomials(field)) prods.push_back(g * m);
        std::size_t b = algebra::graded_component_dim(prods, degree);
        if (a == b) return ReductionCertificate{n, a, b};
    }
    return std::nullopt;
}

int default_reduction_bound(const MonomialIdeal& I)
{
    return 2 * static_cast<int>(I.dim());
}

Reduction find_reduction(const MonomialIdeal& I, std::uint64_t seed, const FieldPtr& field,
                         const std::optional<Polynomial>& x1, std::optional<int> n_max)
{
    auto D = I.equigenerated_degree();
    if (!D) fail(ErrorKind::not_equigenerated, "ideal " + I.to_string() + " is not generated in one degree");
    const auto vals = rees_valuations(I);
    const int bound = n_max.value_or(default_reduction_bound(I));
    if (x1) {
        if (x1->nvars() != I.dim() || !x1->is_homogeneous() || x1->degree() != *D || !I.contains(*x1))
            fail(ErrorKind::not_in_ideal, "seed element is not a form of degree " + std::to_string(*D) + " in the ideal");
        if (!value_conditions(vals, *x1))
            fail(ErrorKind::precondition_failed, "seed element misses V_j(x1) = V_j(I) for some j");
    }
    constexpr int budget = 64;
    Rng rng(seed);
    const auto gens = I.polynomials(field);
    for (int attempt = 1; attempt <= budget; ++attempt) {
        std::vector<Polynomial> J;
        if (x1) J.push_back(x1->lift(field).monic());
        while (J.size() < I.dim()) {
            Polynomial x(field, I.dim());
            for (const auto& g : gens) x += g * rng.nonzero(field);
            if (x.is_zero()) continue;
            J.push_back(x.monic());
        }
        bool necessary = std::all_of(J.begin(), J.end(), [&](const Polynomial& x) { return value_conditions(vals, x); });
        if (!necessary) continue;
        if (auto cert = certify_reduction(I, J, bound)) return {J, *cert, attempt};
    }
    if (field->is_finite())
        fail(ErrorKind::field_too_small, "no reduction found over " + field->describe() + " in " +
                                             std::to_string(budget) + " attempts");
    fail(ErrorKind::certification_failed, "no certified reduction with n <= " + std::to_string(bound));
}

ExtReesReport ext_rees_check(const valuation::AuxLaurent& f, const MonomialIdeal& I)
{
    ExtReesReport out;
    for (const auto& [n, c] : valuation::normalized(f)) {
        if (c.nvars() != I.dim()) fail(ErrorKind::dimension_mismatch, "component variable count differs from ideal");
        if (n < 0) {
            out.negative[n] = c;
            continue;
        }
        if (!I.power(n).contains(c))
            fail(ErrorKind::invalid_element, "component of degree " + std::to_string(n) + " is not in I^" +
                                                 std::to_string(n));
        out.nonnegative[n] = c;
    }
    out.is_nonnegative = out.negative.empty();

    // Z f in R[Z^-1, IZ]: the coefficient of Z^m must lie in I^m for m >= 0.
    std::vector<Exponent> gens = I.gens();
    out.z_times_in_ext = true;
    for (const auto& [n, c] : valuation::normalized(f)) {
        const int m = n + 1;
        for (const auto& [e, coeff] : c.terms())
            if (!valuation::in_monomial_power(e, gens, m)) out.z_times_in_ext = false;
    }
    // f in IE: nonnegative, and f_n in I * I^n.
    out.in_IE = out.is_nonnegative;
    for (const auto& [n, c] : out.nonnegative)
        if (!(I * I.power(n)).contains(c)) out.in_IE = false;

    auto field = algebra::Field::rationals();
    valuation::AuxLaurent z_inverse{{-1, Polynomial::constant(field, I.dim(), 1)}};
    for (const auto& rv : rees_valuations(I)) {
        out.facet_values.push_back(rv.value);
        out.w_inverse.push_back(valuation::ext_rees_eval(rv.v, rv.value, z_inverse));
    }
    return out;
}

}  // namespace dicrit::monomial
