#include "dicrit/algebra/gcd.hpp"

#include "dicrit/error.hpp"

#include <map>

namespace dicrit::algebra {

namespace {

int main_variable(const Polynomial& a, const Polynomial& b)
{
    for (std::size_t v = a.nvars(); v-- > 0;)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return static_cast<int>(v);
    return -1;
}

// Coefficients of `a` as a polynomial in x_v; each coefficient has x_v-degree 0.
std::map<int, Polynomial> coefficients_in(const Polynomial& a, std::size_t v)
{
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : a.terms()) {
        Exponent f = e;
        int k = f[v];
        f[v] = 0;
        auto it = out.try_emplace(k, a.field(), a.nvars()).first;
        it->second.add_term(f, c);
    }
    return out;
}

Polynomial content_in(const Polynomial& a, std::size_t v)
{
    Polynomial g(a.field(), a.nvars());
    for (const auto& [k, c] : coefficients_in(a, v)) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Polynomial leading_coefficient_in(const Polynomial& a, std::size_t v)
{
    return coefficients_in(a, v).rbegin()->second;
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, std::size_t v)
{
    const int db = b.degree_in(v);
    const Polynomial lb = leading_coefficient_in(b, v);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        const int dr = r.degree_in(v);
        Polynomial lr = leading_coefficient_in(r, v);
        Exponent shift(r.nvars(), 0);
        shift[v] = dr - db;
        r = lb * r - (lr * b).shifted(shift);
    }
    return r;
}

Polynomial primitive_part(const Polynomial& a, std::size_t v)
{
    return exact_divide(a, content_in(a, v));
}

Polynomial normalized(const Polynomial& p)
{
    return p.is_zero() ? p : p.monic();
}

Polynomial pth_root(const Polynomial& f)
{
    const auto ch = static_cast<std::uint64_t>(f.field()->characteristic());
    std::uint64_t e = 1;
    for (int i = 1; i < f.field()->degree(); ++i) e *= ch;
    Polynomial r(f.field(), f.nvars());
    for (const auto& [ex, c] : f.terms()) {
        Exponent g = ex;
        for (auto& x : g) x /= static_cast<int>(ch);
        r.add_term(g, c.pow(e));
    }
    return r;
}

}  // namespace

Polynomial exact_divide(const Polynomial& a, const Polynomial& b)
{
    Polynomial q;
    if (!a.divide_exact(b, q)) fail(ErrorKind::invalid_argument, "inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    const int v = main_variable(a, b);
    if (v < 0) return Polynomial::constant(a.field(), a.nvars(), 1);
    const auto var = static_cast<std::size_t>(v);
    if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
    if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial c = gcd(ca, cb);
    Polynomial r0 = exact_divide(a, ca), r1 = exact_divide(b, cb);
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
    Polynomial g;
    while (true) {
        Polynomial r = pseudo_remainder(r0, r1, var);
        if (r.is_zero()) {
            g = r1;
            break;
        }
        if (r.degree_in(var) == 0) {
            g = Polynomial::constant(a.field(), a.nvars(), 1);
            break;
        }
        r0 = std::move(r1);
        r1 = primitive_part(r, var);
    }
    return normalized(c * primitive_part(g, var));
}

Polynomial squarefree_kernel(const Polynomial& f)
{
    if (f.is_zero()) fail(ErrorKind::zero_polynomial, "squarefree kernel of zero");
    if (f.is_constant()) return Polynomial::constant(f.field(), f.nvars(), 1);
    Polynomial w = f;
    bool all_zero = true;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Polynomial d = f.derivative(i);
        if (!d.is_zero()) all_zero = false;
        w = gcd(w, d);
    }
    if (all_zero) return squarefree_kernel(pth_root(f));
    Polynomial u = exact_divide(f.monic(), w);
    if (w.is_constant()) return u.monic();
    Polynomial r = squarefree_kernel(w);
    return exact_divide(u * r, gcd(u, r)).monic();
}

}  // namespace dicrit::algebra
