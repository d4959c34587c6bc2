#include "dicrit/corpus/oracle.hpp"

#include "dicrit/algebra/gcd.hpp"
#include "dicrit/algebra/univariate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace dicrit::oracle {

namespace {

bool leq(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Exponent> minimize(const std::set<Exponent>& s)
{
    std::vector<Exponent> out;
    for (const auto& p : s) {
        bool minimal = true;
        for (const auto& q : s)
            if (q != p && leq(q, p)) minimal = false;
        if (minimal) out.push_back(p);
    }
    return out;
}

template <class F>
void for_each_in_box(const Exponent& hi, F&& f)
{
    Exponent e(hi.size(), 0);
    while (true) {
        f(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == hi[i]) e[i++] = 0;
        if (i == e.size()) return;
        ++e[i];
    }
}

}  // namespace

std::vector<Exponent> power_generators(const std::vector<Exponent>& gens, int n)
{
    const std::size_t d = gens.front().size();
    std::set<Exponent> cur{Exponent(d, 0)};
    for (int k = 0; k < n; ++k) {
        std::set<Exponent> next;
        for (const auto& a : minimize(cur))
            for (const auto& g : gens) {
                Exponent s = a;
                for (std::size_t i = 0; i < d; ++i) s[i] += g[i];
                next.insert(s);
            }
        cur = std::move(next);
    }
    return minimize(cur);
}

bool divisible_by_some(const Exponent& e, const std::vector<Exponent>& gens)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) { return leq(g, e); });
}

std::optional<std::vector<int>> separating_weight(const Exponent& e, const std::vector<Exponent>& gens, int W)
{
    const std::size_t d = e.size();
    std::optional<std::vector<int>> found;
    // shells of growing max-norm, so small separating weights are found first
    for (int m = 1; m <= W && !found; ++m) {
        Exponent hi(d, m);
        for_each_in_box(hi, [&](const Exponent& w) {
            if (found || *std::max_element(w.begin(), w.end()) != m) return;
            long we = 0;
            for (std::size_t i = 0; i < d; ++i) we += static_cast<long>(w[i]) * e[i];
            for (const auto& g : gens) {
                long wg = 0;
                for (std::size_t i = 0; i < d; ++i) wg += static_cast<long>(w[i]) * g[i];
                if (wg <= we) return;
            }
            found = w;
        });
    }
    return found;
}

ClosureOracle::ClosureOracle(std::vector<Exponent> gens, int K, int W) : gens_(std::move(gens)), W_(W)
{
    for (int k = 1; k <= K; ++k) powers_.push_back(power_generators(gens_, k));
}

Verdict ClosureOracle::member(const Exponent& e) const
{
    for (std::size_t k = 1; k <= powers_.size(); ++k) {
        Exponent ke = e;
        for (auto& x : ke) x *= static_cast<int>(k);
        if (divisible_by_some(ke, powers_[k - 1])) return Verdict::yes;
    }
    if (separating_weight(e, gens_, W_)) return Verdict::no;
    return Verdict::unknown;
}

bool power_is_valuation_ideal(const std::vector<Exponent>& gens, int n, int W)
{
    auto P = power_generators(gens, n + 1);
    Exponent hi(gens.front().size(), 0);
    for (const auto& g : P)
        for (std::size_t i = 0; i < g.size(); ++i) hi[i] = std::max(hi[i], g[i]);
    bool ok = true;
    for_each_in_box(hi, [&](const Exponent& e) {
        if (!ok || divisible_by_some(e, P)) return;
        if (!separating_weight(e, P, W)) ok = false;
    });
    return ok;
}

}  // namespace dicrit::oracle

namespace dicrit::oracle {

namespace {

using algebra::Polynomial;
using algebra::UniPoly;

std::int64_t weighted_order(const Polynomial& f, int p, int q)
{
    std::int64_t best = -1;
    for (const auto& [e, c] : f.terms()) {
        std::int64_t v = static_cast<std::int64_t>(p) * e[0] + static_cast<std::int64_t>(q) * e[1];
        if (best < 0 || v < best) best = v;
    }
    return best;
}

// in_w(f)(1, y) as a polynomial in s = y^p, after removing the y^j0 shift
std::pair<UniPoly, int> initial_in_s(const Polynomial& f, int p, int q, std::int64_t N)
{
    std::map<int, algebra::Scalar> coeffs;
    int shift = -1;
    for (const auto& [e, c] : f.terms())
        if (static_cast<std::int64_t>(p) * e[0] + static_cast<std::int64_t>(q) * e[1] == N) {
            coeffs.emplace(e[1], c);
            if (shift < 0 || e[1] < shift) shift = e[1];
        }
    std::vector<algebra::Scalar> s;
    for (const auto& [j, c] : coeffs) {
        const auto k = static_cast<std::size_t>((j - shift) / p);
        if (s.size() <= k) s.resize(k + 1, algebra::Scalar(f.field()));
        s[k] = c;
    }
    return {UniPoly(f.field(), s), shift};
}

int distinct_roots(const UniPoly& f)
{
    if (f.degree() <= 0) return 0;
    return f.degree() - algebra::gcd(f, f.derivative()).degree();
}

}  // namespace

std::vector<NewtonDicritical> newton_dicriticals(const Polynomial& a, const Polynomial& b, int W)
{
    std::vector<NewtonDicritical> out;
    for (int p = 1; p <= W; ++p)
        for (int q = 1; q <= W; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto N = weighted_order(a, p, q);
            if (N != weighted_order(b, p, q)) continue;
            auto [A, ja] = initial_in_s(a, p, q, N);
            auto [B, jb] = initial_in_s(b, p, q, N);
            // y^ja A(s) / (y^jb B(s)); ja - jb is a multiple of p
            int k = (ja - jb) / p;
            std::vector<algebra::Scalar> mono(static_cast<std::size_t>(std::abs(k)) + 1, algebra::Scalar(a.field()));
            mono.back() = algebra::Scalar::from_int(a.field(), 1);
            UniPoly power(a.field(), mono);
            if (k > 0) A = A * power;
            if (k < 0) B = B * power;
            UniPoly g = algebra::gcd(A, B), rem;
            A = A.divmod(g, rem);
            B = B.divmod(g, rem);
            if (A.degree() <= 0 && B.degree() <= 0) continue;
            NewtonDicritical d;
            d.p = p;
            d.q = q;
            d.degree = std::max(A.degree(), B.degree());
            d.poles = distinct_roots(B) + (A.degree() > B.degree() ? 1 : 0);
            out.push_back(d);

        }
    return out;
}

}  // namespace dicrit::oracle
