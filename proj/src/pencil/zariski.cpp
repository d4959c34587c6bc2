#include "dicrit/pencil/zariski.hpp"

#include "dicrit/algebra/linalg.hpp"
#include "dicrit/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dicrit::pencil {

using algebra::Exponent;
using algebra::Row;

namespace {

// degree ascending, then lexicographically descending
bool column_before(const Exponent& a, const Exponent& b)
{
    int da = a[0] + a[1], db = b[0] + b[1];
    if (da != db) return da < db;
    return a > b;
}

std::vector<Exponent> columns_up_to(int bound)
{
    std::vector<Exponent> cols;
    for (int d = 0; d <= bound; ++d)
        for (int i = d; i >= 0; --i) cols.push_back({i, d - i});
    return cols;
}

Polynomial truncate(const Polynomial& f, int bound)
{
    Polynomial out(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        int d = 0;
        for (int x : e) d += x;
        if (d <= bound) out.add_term(e, c);
    }
    return out;
}

Row to_row(const Polynomial& f, const std::map<Exponent, std::size_t>& index, std::size_t width)
{
    Row r(width, Scalar(f.field()));
    for (const auto& [e, c] : f.terms()) r[index.at(e)] = c;
    return r;
}

Polynomial from_row(const Row& r, const std::vector<Exponent>& cols, const FieldPtr& f)
{
    Polynomial p(f, 2);
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (!r[i].is_zero()) p.add_term(cols[i], r[i]);
    return p;
}

void require_rational(const DivisorialValuation& v)
{
    if (!v.is_rational()) fail(ErrorKind::non_rational_point, "valuation " + v.to_string() + " has a non-rational center");
}

}  // namespace

ZariskiIdeal zariski_cluster(const DivisorialValuation& input)
{
    require_rational(input);
    ZariskiIdeal out{input.canonical(), {}, 0, {}};
    const FieldPtr field = out.valuation.field();
    ClusterPoint origin;
    origin.field = field;
    origin.center = Scalar(field);
    int last = out.cluster.add(origin);
    for (const auto& step : out.valuation.steps()) {
        ClusterPoint p;
        p.parent = last;
        p.chart = step.chart;
        p.center = step.center;
        p.field = field;
        last = out.cluster.add(p);
    }
    // multiplicities of the simple ideal: 1 at the last point, proximity equality elsewhere
    auto& pts = out.cluster.points;
    const int N = static_cast<int>(pts.size());
    for (int i = N - 1; i >= 0; --i) {
        int e = i == N - 1 ? 1 : 0;
        for (int j = i + 1; j < N; ++j)
            if (out.cluster.proximity[j][i]) e += pts[j].multiplicity;
        pts[i].multiplicity = e;
        out.self_value += static_cast<std::int64_t>(e) * e;
    }

    // zeta(V) = {f : V(f) >= m}; membership only sees terms of degree < m
    const int m = static_cast<int>(out.self_value);
    const auto cols = columns_up_to(m);
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
    const std::size_t low = cols.size() - static_cast<std::size_t>(m + 1);  // columns of degree < m
    const auto& img = out.valuation.images();
    std::vector<Polynomial> xp{Polynomial::constant(field, 2, 1)}, yp{Polynomial::constant(field, 2, 1)};
    for (int k = 1; k < m; ++k) {
        xp.push_back(truncate(xp.back() * img[0], m - 1));
        yp.push_back(truncate(yp.back() * img[1], m - 1));
    }
    // condition rows: coefficient of each (u, v) monomial of degree < m
    std::map<Exponent, Row> conditions;
    for (std::size_t col = 0; col < low; ++col) {
        const Exponent& e = cols[col];
        Polynomial pb = truncate(xp[e[0]] * yp[e[1]], m - 1);
        for (const auto& [t, c] : pb.terms()) {
            auto it = conditions.try_emplace(t, Row(low, Scalar(field))).first;
            it->second[col] = c;
        }
    }
    std::vector<Row> rows;
    for (auto& [t, r] : conditions) rows.push_back(std::move(r));
    std::vector<Polynomial> space;
    for (const auto& v : algebra::nullspace(rows, low, field)) {
        Row full(cols.size(), Scalar(field));
        std::copy(v.begin(), v.end(), full.begin());
        space.push_back(from_row(full, cols, field));
    }
    for (std::size_t col = low; col < cols.size(); ++col) space.push_back(Polynomial::monomial(field, cols[col]));

    // generators: a complement of M * zeta inside zeta, both truncated at degree m
    std::vector<Row> moved;
    const Polynomial x = Polynomial::variable(field, 2, 0), y = Polynomial::variable(field, 2, 1);
    for (const auto& s : space) {
        for (const auto& g : {x * s, y * s}) {
            Polynomial t = truncate(g, m);
            if (!t.is_zero()) moved.push_back(to_row(t, index, cols.size()));
        }
    }
    auto base = algebra::reduced_echelon(moved, cols.size(), field);
    std::set<std::size_t> base_pivots(base.pivots.begin(), base.pivots.end());
    std::vector<Row> all = base.rows;
    for (const auto& s : space) all.push_back(to_row(s, index, cols.size()));
    auto full = algebra::reduced_echelon(all, cols.size(), field);
    for (std::size_t i = 0; i < full.rows.size(); ++i)
        if (!base_pivots.count(full.pivots[i])) out.generators.push_back(from_row(full.rows[i], cols, field));
    return out;
}

Value intersection_value(const DivisorialValuation& v, const DivisorialValuation& w)
{
    require_rational(v);
    return valuation::ideal_value(valuation::Valuation(v), zariski_cluster(w).generators);
}

namespace {

void check_multiplicities(const std::vector<DivisorialValuation>& U, const std::vector<int>& n)
{
    if (U.empty()) fail(ErrorKind::invalid_argument, "empty divisor set");
    if (U.size() != n.size()) fail(ErrorKind::dimension_mismatch, "one multiplicity per divisor required");
    for (int k : n)
        if (k <= 0) fail(ErrorKind::invalid_argument, "multiplicities must be positive");
}

}  // namespace

Value divisor_value_on_cluster(const std::vector<DivisorialValuation>& U, const std::vector<int>& n,
                               const DivisorialValuation& v)
{
    check_multiplicities(U, n);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < U.size(); ++i) total += n[i] * intersection_value(v, U[i]).get();
    return Value(total);
}

bool check_intersection_formula(const std::vector<DivisorialValuation>& U, const std::vector<int>& n,
                                const Polynomial& eta, int m)
{
    if (eta.is_zero() || eta.order() != 1)
        fail(ErrorKind::not_regular_parameter, eta.to_string() + " is not a regular parameter");
    if (m <= 0) fail(ErrorKind::invalid_argument, "exponent must be positive");
    for (const auto& v : U) {
        Value lhs = v(eta);
        if (!lhs.is_finite() || m * lhs.get() != divisor_value_on_cluster(U, n, v).get()) return false;
    }
    return true;
}

std::vector<Polynomial> product_ideal_generators(const std::vector<DivisorialValuation>& U, const std::vector<int>& n,
                                                 int s)
{
    check_multiplicities(U, n);
    if (s <= 0) fail(ErrorKind::invalid_argument, "power must be positive");
    std::vector<Polynomial> gens{Polynomial::constant(U.front().field(), 2, 1)};
    for (std::size_t i = 0; i < U.size(); ++i) {
        const auto zeta = zariski_cluster(U[i]).generators;
        for (int k = 0; k < s * n[i]; ++k) {
            std::vector<Polynomial> next;
            std::set<std::string> seen;
            for (const auto& g : gens)
                for (const auto& h : zeta) {
                    Polynomial p = (g * h).monic();
                    if (seen.insert(p.to_string()).second) next.push_back(p);
                }
            gens = std::move(next);
        }
    }
    // lowest term under the column order decides the position
    auto key = [](const Polynomial& p) {
        Exponent best;
        for (const auto& [e, c] : p.terms())
            if (best.empty() || column_before(e, best)) best = e;
        return best;
    };
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return column_before(key(a), key(b));
    });
    return gens;
}

}  // namespace dicrit::pencil
