#include "dicrit/monomial/ideal.hpp"

#include "dicrit/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dicrit::monomial {

namespace {

bool leq(const Exponent& a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::int64_t dot(const std::vector<int>& w, const Exponent& e)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<std::int64_t>(w[i]) * e[i];
    return s;
}

// Fraction-free (Bareiss) determinant of a small integer matrix.
std::int64_t determinant(std::vector<std::vector<std::int64_t>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Kernel of a (d-1) x d integer matrix by signed maximal minors; zero when rank < d-1.
std::vector<std::int64_t> kernel_vector(const std::vector<std::vector<std::int64_t>>& rows, std::size_t d)
{
    std::vector<std::int64_t> w(d);
    for (std::size_t col = 0; col < d; ++col) {
        std::vector<std::vector<std::int64_t>> minor;
        for (const auto& r : rows) {
            std::vector<std::int64_t> m;
            for (std::size_t j = 0; j < d; ++j)
                if (j != col) m.push_back(r[j]);
            minor.push_back(std::move(m));
        }
        std::int64_t det = determinant(minor);
        w[col] = (col % 2 == 0) ? det : -det;
    }
    return w;
}

std::size_t integer_rank(std::vector<std::vector<std::int64_t>> m, std::size_t cols)
{
    // Gaussian elimination over Q on scaled integer rows.
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            std::int64_t a = m[r][c], b = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
            std::int64_t g = 0;
            for (auto x : m[i]) g = std::gcd(g, x);
            if (g > 1)
                for (auto& x : m[i]) x /= g;
        }
        ++r;
    }
    return r;
}

// Calls f on every k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Exponent> minimal_elements(std::vector<Exponent> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Exponent> out;
    for (const auto& p : points) {
        bool minimal = true;
        for (const auto& q : points)
            if (q != p && leq(q, p)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

MonomialIdeal::MonomialIdeal(std::size_t d, std::vector<Exponent> gens) : d_(d)
{
    if (d == 0) fail(ErrorKind::invalid_argument, "monomial ideal needs at least one variable");
    if (gens.empty()) fail(ErrorKind::invalid_argument, "monomial ideal needs a generator");
    for (const auto& g : gens) {
        if (g.size() != d) fail(ErrorKind::dimension_mismatch, "generator length differs from variable count");
        for (int x : g)
            if (x < 0) fail(ErrorKind::invalid_argument, "negative exponent");
    }
    gens_ = minimal_elements(std::move(gens));
}

bool MonomialIdeal::contains(const Exponent& e) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return leq(g, e); });
}

bool MonomialIdeal::contains(const Polynomial& f) const
{
    for (const auto& [e, c] : f.terms())
        if (!contains(e)) return false;
    return true;
}

bool MonomialIdeal::is_m_primary() const
{
    for (std::size_t i = 0; i < d_; ++i) {
        bool pure = false;
        for (const auto& g : gens_)
            if (g[i] > 0 && algebra::total_degree(g) == g[i]) pure = true;
        if (!pure) return false;
    }
    return true;
}

std::optional<int> MonomialIdeal::equigenerated_degree() const
{
    int D = algebra::total_degree(gens_.front());
    for (const auto& g : gens_)
        if (algebra::total_degree(g) != D) return std::nullopt;
    return D;
}

Exponent MonomialIdeal::max_exponent() const
{
    Exponent m(d_, 0);
    for (const auto& g : gens_)
        for (std::size_t i = 0; i < d_; ++i) m[i] = std::max(m[i], g[i]);
    return m;
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.d_ != b.d_) fail(ErrorKind::dimension_mismatch, "ideals in different rings");
    std::vector<Exponent> prod;
    for (const auto& x : a.gens_)
        for (const auto& y : b.gens_) {
            Exponent e = x;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += y[i];
            prod.push_back(std::move(e));
        }
    return MonomialIdeal(a.d_, std::move(prod));
}

MonomialIdeal MonomialIdeal::power(int n) const
{
    if (n < 0) fail(ErrorKind::invalid_argument, "negative power");
    MonomialIdeal out(d_, {Exponent(d_, 0)});
    for (int k = 0; k < n; ++k) out = out * *this;
    return out;
}

std::vector<Polynomial> MonomialIdeal::polynomials(const FieldPtr& field) const
{
    std::vector<Polynomial> out;
    for (const auto& g : gens_) out.push_back(Polynomial::monomial(field, g));
    return out;
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const
{
    auto field = algebra::Field::rationals();
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i)
        s += (i ? ", " : "") + Polynomial::monomial(field, gens_[i]).to_string(names);
    return s + ")";
}

bool NewtonPolyhedron::contains(const Exponent& e) const
{
    for (int x : e)
        if (x < 0) return false;
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return dot(f.weights, e) >= f.value; });
}

NewtonPolyhedron NewtonPolyhedron::scaled(int n) const
{
    NewtonPolyhedron out = *this;
    for (auto& f : out.facets) f.value *= n;
    for (auto& v : out.vertices)
        for (auto& x : v) x *= n;
    return out;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I)
{
    const std::size_t d = I.dim();
    const auto& G = I.gens();
    std::set<std::pair<std::vector<int>, std::int64_t>> found;

    if (d == 1) {
        found.insert({{1}, G.front()[0]});
    } else {
        // A facet is spanned by k generators and d - k coordinate directions.
        for (std::size_t k = 1; k <= std::min(d, G.size()); ++k) {
            for_each_subset(G.size(), k, [&](const std::vector<std::size_t>& pts) {
                for_each_subset(d, d - k, [&](const std::vector<std::size_t>& dirs) {
                    std::vector<std::vector<std::int64_t>> rows;
                    const Exponent& g0 = G[pts[0]];
                    for (std::size_t i = 1; i < pts.size(); ++i) {
                        std::vector<std::int64_t> r(d);
                        for (std::size_t c = 0; c < d; ++c) r[c] = G[pts[i]][c] - g0[c];
                        rows.push_back(std::move(r));
                    }
                    for (auto dir : dirs) {
                        std::vector<std::int64_t> r(d, 0);
                        r[dir] = 1;
                        rows.push_back(std::move(r));
                    }
                    auto w = kernel_vector(rows, d);
                    std::int64_t g = 0;
                    for (auto x : w) g = std::gcd(g, x);
                    if (g == 0) return;
                    bool has_pos = false, has_neg = false;
                    for (auto& x : w) {
                        x /= g;
                        has_pos |= x > 0;
                        has_neg |= x < 0;
                    }
                    if (has_pos && has_neg) return;
                    if (has_neg)
                        for (auto& x : w) x = -x;
                    std::vector<int> wi(w.begin(), w.end());
                    std::int64_t value = dot(wi, g0);
                    if (value <= 0) return;
                    for (const auto& e : G)
                        if (dot(wi, e) < value) return;
                    found.insert({wi, value});
                });
            });
        }
    }

    NewtonPolyhedron N;
    for (const auto& [w, v] : found) N.facets.push_back({w, v});
    for (const auto& g : G) {
        std::vector<std::vector<std::int64_t>> tight;
        for (const auto& f : N.facets)
            if (dot(f.weights, g) == f.value) tight.emplace_back(f.weights.begin(), f.weights.end());
        for (std::size_t i = 0; i < d; ++i)
            if (g[i] == 0) {
                std::vector<std::int64_t> r(d, 0);
                r[i] = 1;
                tight.push_back(std::move(r));
            }
        if (integer_rank(tight, d) == d) N.vertices.push_back(g);
    }
    return N;
}

std::vector<Exponent> box_points(const Exponent& bound)
{
    std::vector<Exponent> out;
    Exponent e(bound.size(), 0);
    while (true) {
        out.push_back(e);
        std::size_t i = bound.size();
        while (i > 0 && e[i - 1] == bound[i - 1]) e[--i] = 0;
        if (i == 0) return out;
        ++e[i - 1];
    }
}

MonomialIdeal integral_closure(const MonomialIdeal& I, const NewtonPolyhedron& N)
{
    std::vector<Exponent> gens;
    for (const auto& p : box_points(I.max_exponent())) {
        if (!N.contains(p)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < p.size() && minimal; ++i) {
            if (p[i] == 0) continue;
            Exponent q = p;
            --q[i];
            minimal = !N.contains(q);
        }
        if (minimal) gens.push_back(p);
    }
    return MonomialIdeal(I.dim(), std::move(gens));
}

MonomialIdeal integral_closure(const MonomialIdeal& I)
{
    return integral_closure(I, newton_polyhedron(I));
}

int default_normality_bound(const MonomialIdeal& I)
{
    return std::max<int>(1, static_cast<int>(I.dim()) - 1);
}

bool is_normal(const MonomialIdeal& I, std::optional<int> bound)
{
    if (!I.is_m_primary()) fail(ErrorKind::not_m_primary, "ideal " + I.to_string() + " is not M-primary");
    const NewtonPolyhedron N = newton_polyhedron(I);
    const bool complete = integral_closure(I, N) == I;
    if (I.dim() <= 2 || !complete) return complete;
    const int b = bound.value_or(default_normality_bound(I));
    for (int n = 2; n <= b; ++n) {
        MonomialIdeal P = I.power(n);
        if (!(integral_closure(P, N.scaled(n)) == P)) return false;
    }
    return true;
}

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I)
{
    if (!I.is_m_primary()) fail(ErrorKind::not_m_primary, "ideal " + I.to_string() + " is not M-primary");
    std::vector<ReesValuation> out;
    for (const auto& f : newton_polyhedron(I).facets) out.push_back({valuation::MonomialValuation(f.weights), f.value});
    return out;
}

}  // namespace dicrit::monomial
