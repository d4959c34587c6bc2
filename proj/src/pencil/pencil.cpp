#include "dicrit/pencil/pencil.hpp"

#include "dicrit/algebra/gcd.hpp"
#include "dicrit/error.hpp"

#include <algorithm>
#include <functional>

namespace dicrit::pencil {

using algebra::Field;

Pencil pencil_normalize(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) fail(ErrorKind::zero_polynomial, "pencil with a zero member");
    if (a.nvars() != 2 || b.nvars() != 2) fail(ErrorKind::dimension_mismatch, "pencils live in two variables");
    if (!algebra::same_field(a.field(), b.field())) fail(ErrorKind::field_mismatch, "pencil members over different fields");
    Polynomial g = algebra::gcd(a, b);
    return {algebra::exact_divide(a, g), algebra::exact_divide(b, g)};
}

bool is_primary(const Pencil& p)
{
    return p.a.constant_term().is_zero() && p.b.constant_term().is_zero();
}

bool is_special(const Pencil& p)
{
    return algebra::squarefree_kernel(p.b).order() <= 1;
}

int Cluster::add(ClusterPoint p)
{
    const int index = static_cast<int>(points.size());
    if (p.parent >= 0) {
        const ClusterPoint& par = points[p.parent];
        p.u_divisor = p.parent;
        p.v_divisor = -1;
        if (p.center.is_zero()) p.v_divisor = p.chart == 0 ? par.v_divisor : par.u_divisor;
        p.depth = par.depth + 1;
    }
    points.push_back(p);
    for (auto& row : proximity) row.push_back(0);
    std::vector<int> row(points.size(), 0);
    row[index] = 1;
    if (p.parent >= 0) row[p.parent] = 1;
    if (p.v_divisor >= 0) row[p.v_divisor] = 1;
    proximity.push_back(std::move(row));
    return index;
}

std::vector<valuation::QdtStep> Cluster::path(int i) const
{
    std::vector<valuation::QdtStep> steps;
    while (points[i].parent >= 0) {
        steps.push_back({points[i].chart, points[i].center});
        i = points[i].parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

std::string class_name(DicriticalClass c)
{
    switch (c) {
    case DicriticalClass::sharp: return "sharp";
    case DicriticalClass::flat: return "flat";
    case DicriticalClass::plain: return "plain";
    }
    return "plain";
}

bool Residue::is_constant() const
{
    return num.degree() <= 0 && den.degree() <= 0;
}

int Residue::pole_count() const
{
    int poles = den.degree() > 0 ? algebra::distinct_root_count(den) : 0;
    if (num.degree() > den.degree()) ++poles;
    return poles;
}

int Residue::degree() const
{
    return std::max(num.degree(), den.degree());
}

DicriticalClass classify(const Residue& r)
{
    if (r.is_constant()) fail(ErrorKind::invalid_argument, "constant residue is not dicritical");
    if (r.num.degree() <= 1 && r.den.degree() <= 1) return DicriticalClass::sharp;
    if (r.pole_count() == 1) return DicriticalClass::flat;
    return DicriticalClass::plain;
}

namespace {

Residue make_residue(const Polynomial& in_a, const Polynomial& in_b)
{
    // forms in (u, v) restricted to u = 1
    const FieldPtr& f = in_a.field();
    std::vector<Polynomial> at_one{Polynomial::constant(f, 2, 1), Polynomial::variable(f, 2, 1)};
    UniPoly n = UniPoly::from_polynomial(in_a.substitute(at_one), 1);
    UniPoly d = UniPoly::from_polynomial(in_b.substitute(at_one), 1);
    UniPoly g = algebra::gcd(n, d);
    UniPoly rem;
    n = n.divmod(g, rem);
    d = d.divmod(g, rem);
    Scalar lc = d.leading().inverse();
    UniPoly c(f, {lc});
    return {n * c, d * c};
}

// f(u, u(v + c)) or f(u(v + c), u), divided by u^e.
Polynomial transform(const Polynomial& f, int chart, const Scalar& c, int e)
{
    const FieldPtr& k = f.field();
    Polynomial u = Polynomial::variable(k, 2, 0);
    Polynomial moved = u * (Polynomial::variable(k, 2, 1) + Polynomial::constant(k, 2, c));
    Polynomial g = chart == 0 ? f.substitute({u, moved}) : f.substitute({moved, u});
    return g.divide_by_variable(0, e);
}

UniPoly restriction_to_line(const Polynomial& f)
{
    return UniPoly::from_polynomial(f.evaluate_at(0, Scalar(f.field())), 1);
}

struct Explorer {
    PrincipalizeOptions options;
    PencilReport& report;
    const Pencil& original;
    FieldPtr ground;
    std::optional<FieldPtr> extension;

    void visit(const Polynomial& A, const Polynomial& B, ClusterPoint point)
    {
        const int ordA = A.order(), ordB = B.order();
        const int e = std::min(ordA, ordB);
        point.multiplicity = e;
        const int index = report.base_cluster.add(point);
        const ClusterPoint& here = report.base_cluster.points[index];
        const int depth = here.depth;
        const FieldPtr field = here.field;
        const int degree = here.degree;
        if (depth + 1 > options.max_depth)
            fail(ErrorKind::depth_exceeded, "principalization needs more than " + std::to_string(options.max_depth) +
                                                " blowups");
        report.depth_used = std::max(report.depth_used, depth + 1);

        if (ordA == ordB) {
            Residue r = make_residue(A.initial_form(), B.initial_form());
            if (!r.is_constant()) {
                DivisorialValuation v(field, report.base_cluster.path(index));
                const Polynomial a = algebra::same_field(original.a.field(), field) ? original.a : original.a.lift(field);
                const Polynomial b = algebra::same_field(original.b.field(), field) ? original.b : original.b.lift(field);
                DicriticalRecord rec{v, v(a), v(b), r, classify(r), index, v.monomial_weights()};
                report.dicriticals.push_back(std::move(rec));
            }
        }

        // base points on the new exceptional line, chart 0 first
        const Scalar zero(field);
        Polynomial A0 = transform(A, 0, zero, e), B0 = transform(B, 0, zero, e);
        UniPoly fa = restriction_to_line(A0), fb = restriction_to_line(B0);
        UniPoly common = fa.is_zero() ? fb : (fb.is_zero() ? fa : algebra::gcd(fa, fb));
        std::vector<Scalar> rational;
        std::optional<UniPoly> residual;
        if (common.degree() > 0) {
            auto roots = algebra::univariate_roots(common);
            for (const auto& r : roots.roots) rational.push_back(r.value);
            if (roots.residual.degree() > 0) residual = roots.residual;
        }
        for (const auto& c : rational)
            visit(transform(A, 0, c, e), transform(B, 0, c, e), child(index, 0, c, field, degree));
        Polynomial A1 = transform(A, 1, zero, e), B1 = transform(B, 1, zero, e);
        if (A1.constant_term().is_zero() && B1.constant_term().is_zero())
            visit(A1, B1, child(index, 1, zero, field, degree));
        if (residual) visit_nonrational(A, B, e, index, *residual);
    }

    static ClusterPoint child(int parent, int chart, const Scalar& c, const FieldPtr& field, int degree)
    {
        ClusterPoint p;
        p.parent = parent;
        p.chart = chart;
        p.center = c;
        p.field = field;
        p.degree = degree;
        return p;
    }

    void visit_nonrational(const Polynomial& A, const Polynomial& B, int e, int parent, UniPoly residual)
    {
        const FieldPtr field = residual.field();
        auto refuse = [&](const std::string& why) {
            fail(ErrorKind::non_rational_point, "base point with residue polynomial " + residual.to_string() + ": " + why);
        };
        if (field->is_extension()) refuse("a second residue field extension is not supported");
        if (options.extend == ExtensionPolicy::none && !field->is_finite()) refuse("field extensions disabled");
        while (residual.degree() > 0) {
            auto factor = algebra::smallest_irreducible_factor(residual);
            if (!factor) refuse("no irreducible factor of supported degree");
            std::vector<mpq_class> modulus;
            const UniPoly monic = factor->monic();
            for (const auto& c : monic.coeffs()) modulus.push_back(c.base_value());
            FieldPtr ext = Field::extension(field, modulus);
            if (extension && !(**extension == *ext)) refuse("only one residue field extension per report");
            extension = ext;
            Scalar alpha = Scalar::generator(ext);
            Polynomial Al = A.lift(ext), Bl = B.lift(ext);
            visit(transform(Al, 0, alpha, e), transform(Bl, 0, alpha, e),
                  child(parent, 0, alpha, ext, factor->degree()));
            UniPoly rem;
            while (true) {
                UniPoly q = residual.divmod(*factor, rem);
                if (!rem.is_zero()) break;
                residual = q;
            }
        }
    }
};

}  // namespace

PencilReport principalize(const Pencil& p, const PrincipalizeOptions& options)
{
    PencilReport report;
    report.pencil = pencil_normalize(p.a, p.b);
    report.primary = is_primary(report.pencil);
    report.special = is_special(report.pencil);
    if (!report.primary) return report;
    Explorer ex{options, report, report.pencil, report.pencil.a.field(), std::nullopt};
    ClusterPoint origin;
    origin.field = report.pencil.a.field();
    origin.center = Scalar(origin.field);
    ex.visit(report.pencil.a, report.pencil.b, origin);
    return report;
}

}  // namespace dicrit::pencil
