#include "dicrit/corpus/acceptance.hpp"

#include "dicrit/algebra/expression.hpp"
#include "dicrit/corpus/oracle.hpp"
#include "dicrit/error.hpp"
#include "dicrit/io/json.hpp"
#include "dicrit/monomial/operations.hpp"
#include "dicrit/pencil/constructions.hpp"
#include "dicrit/random.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifndef DICRIT_CORPUS_DIR
#define DICRIT_CORPUS_DIR "corpus"
#endif

namespace dicrit::acceptance {

using algebra::Exponent;
using algebra::Field;
using algebra::FieldPtr;
using algebra::Polynomial;
using algebra::Scalar;
using io::Json;
using monomial::MonomialIdeal;
using valuation::AuxLaurent;
using valuation::Value;

std::string default_corpus_dir()
{
    return DICRIT_CORPUS_DIR;
}

namespace {

struct NamedIdeal {
    std::string name;
    std::vector<std::string> vars;
    MonomialIdeal ideal;
};

struct NamedPencil {
    std::string name;
    pencil::Pencil pencil;
    bool newton = false;
};

struct Corpus {
    std::vector<NamedIdeal> ideals;
    std::vector<NamedPencil> pencils;
    Json divisors;
};

Json load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open corpus file");
    std::stringstream ss;
    ss << in.rdbuf();
    return io::parse_text(ss.str());
}

Corpus load_corpus(const std::string& dir)
{
    Corpus c;
    const Json ideals = load(dir + "/monomial_ideals.json");
    for (const auto& j : io::require(ideals, "ideals"))
        c.ideals.push_back({j.value("name", ""), io::ideal_vars(j), io::parse_monomial_ideal(j)});
    const Json pencils = load(dir + "/pencils.json");
    for (const auto& j : io::require(pencils, "pencils"))
        c.pencils.push_back({j.value("name", ""), io::parse_pencil(j), j.value("newton", false)});
    c.divisors = load(dir + "/divisor_sets.json");
    if (c.ideals.empty() || c.pencils.empty()) throw ParseError(dir, "corpus is empty");
    return c;
}

// Records the first failure; later checks still run so the detail is useful.
struct Tally {
    int checks = 0;
    int failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && failures++ == 0) first = what;
    }
    std::string detail(const std::string& summary) const
    {
        if (failures == 0) return summary + ", " + std::to_string(checks) + " checks";
        return std::to_string(failures) + "/" + std::to_string(checks) + " checks failed; first: " + first;
    }
};

Polynomial random_poly(Rng& rng, const FieldPtr& f, std::size_t d, int max_terms, int max_exp)
{
    Polynomial p(f, d);
    const int terms = static_cast<int>(rng.between(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Exponent e(d);
        for (auto& x : e) x = static_cast<int>(rng.between(0, max_exp));
        p.add_term(e, rng.nonzero(f, 5));
    }
    return p;
}

AuxLaurent random_laurent(Rng& rng, const FieldPtr& f, std::size_t d)
{
    AuxLaurent F;
    const int support = static_cast<int>(rng.between(1, 6));
    for (int k = 0; k < support; ++k) {
        int n = static_cast<int>(rng.between(-3, 3));
        Polynomial p = random_poly(rng, f, d, 3, 3);
        auto [it, fresh] = F.emplace(n, p);
        if (!fresh) it->second += p;
    }
    return valuation::normalized(F);
}

AuxLaurent multiply(const AuxLaurent& a, const AuxLaurent& b)
{
    AuxLaurent out;
    for (const auto& [n, f] : a)
        for (const auto& [m, g] : b) {
            auto [it, fresh] = out.emplace(n + m, f * g);
            if (!fresh) it->second += f * g;
        }
    return valuation::normalized(out);
}

AuxLaurent add(AuxLaurent a, const AuxLaurent& b)
{
    for (const auto& [n, g] : b) {
        auto [it, fresh] = a.emplace(n, g);
        if (!fresh) it->second += g;
    }
    return valuation::normalized(a);
}

MonomialIdeal random_m_primary(Rng& rng, std::size_t d, int max_exp)
{
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < d; ++i) {
        Exponent e(d, 0);
        e[i] = static_cast<int>(rng.between(1, max_exp));
        gens.push_back(e);
    }
    const int extra = static_cast<int>(rng.between(0, 3));
    for (int k = 0; k < extra; ++k) {
        Exponent e(d);
        for (auto& x : e) x = static_cast<int>(rng.between(0, max_exp - 1));
        if (std::any_of(e.begin(), e.end(), [](int x) { return x > 0; })) gens.push_back(e);
    }
    return MonomialIdeal(d, gens);
}

std::vector<int> random_weights(Rng& rng, std::size_t d)
{
    while (true) {
        std::vector<int> w(d);
        for (auto& x : w) x = static_cast<int>(rng.between(1, 5));
        int g = 0;
        for (int x : w) g = std::gcd(g, x);
        if (g == 1) return w;
    }
}

// element of I^n: random multiples of generators of I^n
Polynomial random_in_power(Rng& rng, const MonomialIdeal& I, int n, const FieldPtr& f)
{
    const auto gens = I.power(n).gens();
    Polynomial p(f, I.dim());
    const int terms = static_cast<int>(rng.between(1, 3));
    for (int t = 0; t < terms; ++t) {
        Exponent e = gens[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(gens.size()) - 1))];
        for (auto& x : e) x += static_cast<int>(rng.between(0, 1));
        p.add_term(e, rng.nonzero(f, 5));
    }
    return p;
}

CriterionResult gauss_suite()
{
    Tally t;
    Rng rng(101);
    const FieldPtr Q = Field::rationals();
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = trial % 2 == 0 ? 2 : 3;
        valuation::Valuation v{valuation::MonomialValuation(random_weights(rng, d))};
        AuxLaurent F = random_laurent(rng, Q, d), G = random_laurent(rng, Q, d);
        const std::string tag = "trial " + std::to_string(trial);
        Value wF = valuation::gauss_eval(v, F), wG = valuation::gauss_eval(v, G);
        t.expect(valuation::gauss_eval(v, multiply(F, G)) == wF + wG, tag + ": w(FG) = w(F) + w(G)");
        t.expect(valuation::gauss_eval(v, add(F, G)) >= valuation::min(wF, wG), tag + ": w(F+G) >= min");
        t.expect(valuation::gauss_eval(v, {{static_cast<int>(rng.between(-3, 3)), Polynomial::constant(Q, d, rng.nonzero(Q))}}) ==
                     Value(0),
                 tag + ": w(c) = 0");
        t.expect(valuation::gauss_eval(v, {}).is_infinite(), tag + ": w(0) = INFINITY");

        // Rees extension against the shifted Gauss value
        MonomialIdeal I = random_m_primary(rng, d, 4);
        const auto gens = I.polynomials(Q);
        const Value VI = valuation::ideal_value(v, gens);
        Polynomial x = *std::min_element(gens.begin(), gens.end(),
                                         [&](const Polynomial& a, const Polynomial& b) { return v(a) < v(b); });
        valuation::ReesElement f{gens, {}};
        const int support = static_cast<int>(rng.between(1, 4));
        for (int k = 0; k < support; ++k) {
            int n = static_cast<int>(rng.between(0, 3));
            Polynomial p = random_in_power(rng, I, n, Q);
            auto [it, fresh] = f.components.emplace(n, p);
            if (!fresh) it->second += p;
        }
        std::erase_if(f.components, [](const auto& kv) { return kv.second.is_zero(); });
        if (f.components.empty()) continue;
        t.expect(valuation::rees_ext_eval(v, VI, f) == valuation::rees_ext_via_gauss(v, f, x),
                 tag + ": Rees value equals shifted Gauss value");
    }
    return {1, "Gauss extension axioms and Rees consistency", t.failures == 0, t.detail("500 pairs")};
}

CriterionResult decomposition_suite(const Corpus& c)
{
    Tally t;
    std::vector<std::pair<std::string, MonomialIdeal>> pool;
    for (const auto& n : c.ideals)
        if (n.ideal.dim() <= 3 && n.ideal.is_m_primary()) pool.emplace_back(n.name, n.ideal);
    Rng rng(202);
    for (int k = 0; k < 40; ++k) {
        MonomialIdeal I = random_m_primary(rng, k % 2 == 0 ? 2 : 3, 5);
        pool.emplace_back(I.to_string(), I);
    }
    int tested = 0;
    for (const auto& [name, I] : pool) {
        if (tested >= 24) break;
        bool exps_ok = true;
        for (int e : I.max_exponent()) exps_ok = exps_ok && e <= 5;
        if (!exps_ok || !monomial::is_normal(I)) continue;
        ++tested;
        std::vector<Exponent> gens = I.gens();
        for (int n = 0; n <= 3; ++n) {
            if (I.dim() == 3 && n == 3 && I.max_exponent() > Exponent{3, 3, 3}) continue;
            const std::string tag = name + ", n=" + std::to_string(n);
            t.expect(monomial::verify_power_decomposition(I, n), tag + ": decomposition");
            t.expect(oracle::power_is_valuation_ideal(gens, n, 40), tag + ": lattice oracle");
        }
    }
    t.expect(tested >= 20, "fewer than 20 normal ideals tested");
    return {2, "Power decomposition on normal monomial ideals", t.failures == 0,
            t.detail(std::to_string(tested) + " ideals")};
}

CriterionResult find_element_suite(const Corpus& c)
{
    Tally t;
    const FieldPtr Q = Field::rationals();
    int tested = 0;
    for (const auto& n : c.ideals) {
        if (!n.ideal.is_m_primary()) continue;
        ++tested;
        Polynomial x = monomial::find_element(n.ideal, {}, 0, Q);
        const auto rv = monomial::rees_valuations(n.ideal);
        for (std::size_t j = 0; j < rv.size(); ++j) {
            t.expect(monomial::value_criterion(n.ideal, x, j), n.name + ": value criterion j=" + std::to_string(j + 1));
            t.expect(valuation::mono_value(rv[j].v, x) == Value(rv[j].value), n.name + ": V_j(x) = V_j(I)");
        }
    }
    return {3, "find_element witnesses over Q", t.failures == 0, t.detail(std::to_string(tested) + " ideals")};
}

CriterionResult reduction_suite(const Corpus& c)
{
    Tally t;
    const FieldPtr Q = Field::rationals();
    auto P = [&](const std::string& s) { return algebra::parse_expression(s, Q, {"x", "y"}); };
    MonomialIdeal M2(2, {{2, 0}, {1, 1}, {0, 2}});
    auto cert = monomial::certify_reduction(M2, {P("x^2"), P("y^2")}, 4);
    t.expect(cert && cert->n == 1, "certify_reduction(M^2, (x^2, y^2)) should give n = 1");
    int reduced = 0;
    for (const auto& n : c.ideals) {
        const MonomialIdeal& I = n.ideal;
        if (!I.is_m_primary() || !I.equigenerated_degree()) continue;
        try {
            auto red = monomial::find_reduction(I, 0, Q);
            ++reduced;
            auto again = monomial::certify_reduction(I, red.J, red.certificate.n);
            t.expect(again && again->n == red.certificate.n, n.name + ": certificate re-verifies");
            const auto h = monomial::rees_valuations(I).size();
            for (const auto& x : red.J)
                for (std::size_t j = 0; j < h; ++j)
                    t.expect(monomial::value_criterion(I, x, j), n.name + ": value conditions");
        } catch (const Error& e) {
            t.expect(false, n.name + ": " + e.what());
        }
    }
    t.expect(reduced >= 10, "fewer than 10 equigenerated ideals reduced");
    return {4, "Reduction certification pipeline", t.failures == 0, t.detail(std::to_string(reduced) + " reductions")};
}

CriterionResult pencil_suite(const Corpus& c)
{
    Tally t;
    int compared = 0;
    for (const auto& p : c.pencils) {
        try {
            auto r = pencil::principalize(p.pencil);
            t.expect(r.depth_used <= 24, p.name + ": depth");
            t.expect(!r.dicriticals.empty(), p.name + ": at least one dicritical");
            for (const auto& d : r.dicriticals)
                t.expect(d.va.is_finite() && d.va == d.vb && !d.residue.is_constant(), p.name + ": record invariants");
            if (!p.newton) continue;
            ++compared;
            auto expect = oracle::newton_dicriticals(p.pencil.a, p.pencil.b);
            t.expect(expect.size() == r.dicriticals.size(), p.name + ": dicritical count vs Newton oracle");
            for (const auto& n : expect) {
                auto it = std::find_if(r.dicriticals.begin(), r.dicriticals.end(), [&](const auto& d) {
                    return d.weights == std::make_pair(n.p, n.q);
                });
                if (it == r.dicriticals.end()) {
                    t.expect(false, p.name + ": weights missing");
                    continue;
                }
                const bool sharp = n.degree == 1, flat = n.poles == 1;
                const auto want = sharp ? pencil::DicriticalClass::sharp
                                        : (flat ? pencil::DicriticalClass::flat : pencil::DicriticalClass::plain);
                t.expect(it->cls == want, p.name + ": class vs Newton oracle");
            }
        } catch (const Error& e) {
            t.expect(false, p.name + ": " + e.what());
        }
    }
    return {5, "Pencil principalization against the Newton oracle", t.failures == 0,
            t.detail(std::to_string(c.pencils.size()) + " pencils, " + std::to_string(compared) + " oracle comparisons")};
}

CriterionResult special_reduction_suite(const Corpus& c)
{
    Tally t;
    const Json& s = io::require(c.divisors, "special");
    const FieldPtr Q = Field::rationals();
    std::vector<valuation::DivisorialValuation> U;
    for (const auto& v : io::require(s, "U")) U.push_back(io::parse_divisorial(v, Q));
    std::vector<int> n = io::require(s, "n").get<std::vector<int>>();
    Polynomial eta = io::parse_polynomial(io::require(s, "eta")).poly;
    int m = io::require(s, "m").get<int>();
    try {
        t.expect(pencil::check_intersection_formula(U, n, eta, m), "intersection formula");
        t.expect(m * U[0](eta).get() == pencil::divisor_value_on_cluster(U, n, U[0]).get(), "2*3 = 6");
        auto r = pencil::construct_special_reduction(U, n, eta, m, 0);
        t.expect(r.s == 1, "t = 1");
        pencil::Pencil J{r.element, eta.pow(static_cast<unsigned>(m))};
        t.expect(pencil::verify_reduction_2d(J, U, n, 1), "verify_reduction_2d");
        // the closure of J is I: its dicriticals are U and the values agree
        auto rep = pencil::principalize(J);
        t.expect(rep.special && pencil::same_dicritical_set(rep, U), "closure has dicritical set U");
        auto zeta = pencil::zariski_cluster(U[0]);
        for (const auto& g : zeta.generators)
            t.expect(U[0](g) >= valuation::min(U[0](J.a), U[0](J.b)), "zeta(V) lies in the closure of J");
    } catch (const Error& e) {
        t.expect(false, e.what());
    }
    return {6, "Special reduction and intersection formula", t.failures == 0, t.detail("U={(2,3)}, eta=y, m=2")};
}

CriterionResult example83_suite(const Corpus& c)
{
    Tally t;
    const FieldPtr Q = Field::rationals();
    for (const auto& e : io::require(c.divisors, "example83")) {
        std::vector<Polynomial> forms;
        for (const auto& f : e["forms"]) forms.push_back(algebra::parse_expression(f.get<std::string>(), Q, {"X", "Y"}));
        const int m = e["m"].get<int>();
        const std::string tag = "m=" + std::to_string(m) + ", n=" + std::to_string(forms.size());
        auto r = pencil::normal_sing_dicriticals(m, forms);
        t.expect(r.count == static_cast<int>(forms.size()), tag + ": count");
        t.expect(r.chart_relation, tag + ": chart relation");
        if (m == 3 && forms.size() == 2)
            t.expect(r.prime_generators == std::vector<std::string>{"(z, x')", "(z, y')"}, tag + ": primes");
    }
    return {7, "Normal singularity dicritical counts", t.failures == 0, t.detail("3 cases")};
}

CriterionResult realization_suite(const Corpus& c)
{
    Tally t;
    const FieldPtr Q = Field::rationals();
    for (const auto& s : io::require(c.divisors, "sets")) {
        std::vector<valuation::DivisorialValuation> U;
        for (const auto& v : s["U"]) U.push_back(io::parse_divisorial(v, Q));
        try {
            auto z = pencil::construct_pencil_with_dicriticals(U, 0);
            t.expect(pencil::same_dicritical_set(pencil::principalize(z), U), s.value("name", "") + ": round trip");
        } catch (const Error& e) {
            t.expect(false, s.value("name", "") + ": " + e.what());
        }
    }
    int special = 0;
    for (const auto& p : c.pencils) {
        auto r = pencil::principalize(p.pencil);
        if (!r.special) continue;
        ++special;
        for (const auto& d : r.dicriticals)
            t.expect(d.cls != pencil::DicriticalClass::plain, p.name + ": special pencil with a plain dicritical");
    }
    return {8, "Pencil realization and polynomial pencils", t.failures == 0,
            t.detail("3 realizations, " + std::to_string(special) + " special pencils")};
}

CriterionResult ext_rees_suite(const Corpus& c)
{
    Tally t;
    const FieldPtr Q = Field::rationals();
    Rng rng(909);
    int elements = 0;
    for (const auto& n : c.ideals) {
        const MonomialIdeal& I = n.ideal;
        if (!I.is_m_primary()) continue;
        const auto rv = monomial::rees_valuations(I);
        auto rep = monomial::ext_rees_check({{-1, Polynomial::constant(Q, I.dim(), 1)}}, I);
        for (std::size_t j = 0; j < rv.size(); ++j)
            t.expect(rep.w_inverse[j] == Value(rv[j].value) && rv[j].value > 0, n.name + ": w_j(Z^-1) = V_j(I) > 0");
    }
    std::vector<const NamedIdeal*> pool;
    for (const auto& n : c.ideals)
        if (n.ideal.is_m_primary()) pool.push_back(&n);
    for (int k = 0; k < 200; ++k) {
        const NamedIdeal& n = *pool[static_cast<std::size_t>(k) % pool.size()];
        const MonomialIdeal& I = n.ideal;
        AuxLaurent f;
        const int support = static_cast<int>(rng.between(1, 4));
        for (int s = 0; s < support; ++s) {
            int deg = static_cast<int>(rng.between(-2, 3));
            // half the time push the component one power deeper
            int depth = deg < 0 ? 0 : deg + static_cast<int>(rng.between(0, 1));
            Polynomial p = deg < 0 ? random_poly(rng, Q, I.dim(), 2, 2) : random_in_power(rng, I, depth, Q);
            auto [it, fresh] = f.emplace(deg, p);
            if (!fresh) it->second += p;
        }
        f = valuation::normalized(f);
        if (f.empty()) continue;
        ++elements;
        auto rep = monomial::ext_rees_check(f, I);
        const std::string tag = n.name + ", element " + std::to_string(k);
        // split: negative part below degree 0, the rest at or above, summing back to f
        bool split_ok = add(rep.negative, rep.nonnegative) == f;
        for (const auto& [deg, p] : rep.negative) split_ok = split_ok && deg < 0;
        for (const auto& [deg, p] : rep.nonnegative) split_ok = split_ok && deg >= 0;
        t.expect(split_ok, tag + ": split");
        t.expect(rep.is_nonnegative == rep.negative.empty(), tag + ": nonnegative flag");
        if (!rep.is_nonnegative) continue;
        // independent membership: every term of f_n in I^{n+1}
        bool in_IE = true;
        for (const auto& [deg, p] : f) {
            const MonomialIdeal next = I.power(deg + 1);
            for (const auto& [e, coeff] : p.terms()) in_IE = in_IE && next.contains(e);
        }
        t.expect(rep.in_IE == in_IE, tag + ": IE membership");
        t.expect(rep.z_times_in_ext == rep.in_IE, tag + ": Z f in E-hat iff f in IE");
    }
    return {9, "Extended Rees ring checks", t.failures == 0, t.detail(std::to_string(elements) + " random elements")};
}

}  // namespace

std::vector<CriterionResult> run_all(const std::string& corpus_dir,
                                     const std::function<void(const CriterionResult&)>& on_result)
{
    const Corpus corpus = load_corpus(corpus_dir);
    std::vector<std::function<CriterionResult()>> suites = {
        [] { return gauss_suite(); },
        [&] { return decomposition_suite(corpus); },
        [&] { return find_element_suite(corpus); },
        [&] { return reduction_suite(corpus); },
        [&] { return pencil_suite(corpus); },
        [&] { return special_reduction_suite(corpus); },
        [&] { return example83_suite(corpus); },
        [&] { return realization_suite(corpus); },
        [&] { return ext_rees_suite(corpus); },
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = suites[i]();
        } catch (const std::exception& e) {
            r = {static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false, std::string("error: ") + e.what()};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace dicrit::acceptance
