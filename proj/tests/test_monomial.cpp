#include "dicrit/corpus/oracle.hpp"
#include "dicrit/error.hpp"
#include "dicrit/monomial/operations.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dicrit;
using namespace dicrit::monomial;
using algebra::Field;
using dicrit::testing::mono;
using dicrit::testing::P;
using dicrit::testing::P3;
using dicrit::testing::random_m_primary;

namespace {

std::vector<Facet> facets(const MonomialIdeal& I)
{
    return newton_polyhedron(I).facets;
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("ideal basics")
{
    auto I = mono({{1, 1}, {2, 0}, {0, 3}, {2, 2}});
    CHECK(I.gens() == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 3}});
    CHECK(I.contains(Exponent{3, 1}));
    CHECK_FALSE(I.contains(Exponent{0, 2}));
    CHECK(I.is_m_primary());
    CHECK_FALSE(mono({{1, 1}}).is_m_primary());
    CHECK(mono({{1, 0}, {0, 1}}).power(3) == mono({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
}

TEST_CASE("newton_polyhedron examples")
{
    auto N = newton_polyhedron(mono({{2, 0}, {0, 3}}));
    CHECK(N.facets == std::vector<Facet>{{{3, 2}, 6}});
    CHECK(N.vertices == std::vector<Exponent>{{2, 0}, {0, 3}});
    for (int k = 1; k <= 4; ++k)
        CHECK(facets(mono({{1, 0}, {0, 1}}).power(k)) == std::vector<Facet>{{{1, 1}, k}});
    CHECK(facets(mono({{2, 0}, {1, 1}, {0, 3}})) == std::vector<Facet>{{{1, 1}, 2}, {{2, 1}, 3}});
    // x*y*z sits above the simplex x+y+z >= 3 but is not a vertex
    auto M = newton_polyhedron(mono({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}));
    CHECK(M.facets == std::vector<Facet>{{{1, 1, 1}, 3}});
    CHECK(M.vertices.size() == 3);
}

TEST_CASE("integral_closure examples")
{
    CHECK(integral_closure(mono({{2, 0}, {0, 3}})) == mono({{2, 0}, {1, 2}, {0, 3}}));
    CHECK(integral_closure(mono({{1, 0}, {0, 1}})) == mono({{1, 0}, {0, 1}}));
    CHECK(integral_closure(mono({{2, 0}, {0, 2}})) == mono({{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("integral_closure is a closure operator and matches the brute-force oracle")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t d = 2 + trial % 3;
        auto I = random_m_primary(rng, d, d == 4 ? 4 : 6);
        auto C = integral_closure(I);
        for (const auto& g : I.gens()) CHECK(C.contains(g));
        CHECK(integral_closure(C) == C);
        // monotone: adding a generator can only enlarge the closure
        Exponent extra(d);
        for (auto& x : extra) x = static_cast<int>(rng() % 4);
        std::vector<Exponent> bigger = I.gens();
        bigger.push_back(extra);
        auto Cb = integral_closure(MonomialIdeal(d, bigger));
        for (const auto& g : C.gens()) CHECK(Cb.contains(g));
        if (d > 3) continue;
        oracle::ClosureOracle check(I.gens(), 12, 60);
        for (const auto& e : box_points(I.max_exponent())) {
            auto verdict = check.member(e);
            if (verdict == oracle::Verdict::unknown) MESSAGE("undecided point in closure of " << I.to_string());
            REQUIRE(verdict != oracle::Verdict::unknown);
            CHECK(C.contains(e) == (verdict == oracle::Verdict::yes));
        }
    }
}

TEST_CASE("is_normal examples")
{
    for (int k = 1; k <= 3; ++k) CHECK(is_normal(mono({{1, 0}, {0, 1}}).power(k), 3));
    CHECK(is_normal(integral_closure(mono({{2, 0}, {0, 3}}))));
    CHECK_FALSE(is_normal(mono({{2, 0}, {0, 3}})));
    CHECK_FALSE(is_normal(mono({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}})));
    CHECK(is_normal(mono({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).power(2), 3));
    CHECK(kind_of([] { is_normal(mono({{1, 1}})); }) == ErrorKind::not_m_primary);
}

TEST_CASE("rees_valuations examples")
{
    auto r = rees_valuations(mono({{2, 0}, {1, 1}, {0, 3}}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].v.weights() == std::vector<int>{1, 1});
    CHECK(r[0].value == 2);
    CHECK(r[1].v.weights() == std::vector<int>{2, 1});
    CHECK(r[1].value == 3);
    r = rees_valuations(mono({{1, 0}, {0, 1}}).power(3));
    REQUIRE(r.size() == 1);
    CHECK(r[0].value == 3);
    r = rees_valuations(integral_closure(mono({{2, 0}, {0, 3}})));
    REQUIRE(r.size() == 1);
    CHECK(r[0].v.weights() == std::vector<int>{3, 2});
    CHECK(r[0].value == 6);
    CHECK(kind_of([] { rees_valuations(mono({{2, 1}, {0, 3}})); }) == ErrorKind::not_m_primary);
}

TEST_CASE("one variable has one Rees valuation; facet values are multiplicative")
{
    for (int a = 1; a <= 6; ++a) CHECK(rees_valuations(mono({{a}})).size() == 1);
    std::mt19937_64 rng(41);
    auto q = Field::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        auto I = random_m_primary(rng, 2 + trial % 2, 4);
        for (const auto& rv : rees_valuations(I))
            for (int k = 1; k <= 4; ++k) {
                auto V = valuation::ideal_value(rv.v, I.power(k).polynomials(q));
                CHECK(V == valuation::Value(k * rv.value));
            }
    }
}

TEST_CASE("verify_power_decomposition examples and oracle")
{
    CHECK(verify_power_decomposition(mono({{1, 0}, {0, 1}}).power(2), 0));
    auto I = mono({{2, 0}, {1, 1}, {0, 3}});
    for (int n = 0; n <= 2; ++n) {
        CHECK(verify_power_decomposition(I, n));
        CHECK(oracle::power_is_valuation_ideal(I.gens(), n, 8));
    }
    auto bad = mono({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}});
    CHECK(kind_of([&] { verify_power_decomposition(bad, 0); }) == ErrorKind::not_normal);
    bool some_false = false;
    for (int n = 0; n <= 2; ++n) {
        bool v = verify_power_decomposition(bad, n, false);
        CHECK(v == oracle::power_is_valuation_ideal(bad.gens(), n, 8));
        some_false = some_false || !v;
    }
    CHECK(some_false);
}

TEST_CASE("rees_graded_membership examples")
{
    auto q = Field::rationals();
    auto I = mono({{2, 0}, {0, 3}});
    auto m = rees_graded_membership({{2, P("x^2*y^3")}}, I);
    CHECK(m.per_j == std::vector<bool>{false});
    CHECK_FALSE(m.overall);
    CHECK(m.overall == m.closure_route);
    m = rees_graded_membership({{1, P("x^2")}}, mono({{1, 0}, {0, 1}}));
    CHECK(m.overall);
    CHECK(m.closure_route);
    CHECK(kind_of([&] { rees_graded_membership({{1, P("0")}}, I); }) == ErrorKind::invalid_rees_element);
    CHECK(kind_of([&] { rees_graded_membership({{1, P("x")}}, I); }) == ErrorKind::invalid_rees_element);
}

TEST_CASE("rees_graded_membership: valuation and closure routes agree")
{
    std::mt19937_64 rng(43);
    auto q = Field::rationals();
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t d = 2 + trial % 2;
        auto I = integral_closure(random_m_primary(rng, d, 4));
        std::map<int, algebra::Polynomial> f;
        for (int n = 0; n < 3; ++n) {
            auto Pn = I.power(n).gens();
            Exponent e = Pn[rng() % Pn.size()];
            for (auto& x : e) x += static_cast<int>(rng() % 3);
            f[n] = algebra::Polynomial::monomial(q, e);
        }
        auto m = rees_graded_membership(f, I);
        CHECK(m.overall == m.closure_route);
    }
}

TEST_CASE("value_criterion examples")
{
    auto I = mono({{2, 0}, {1, 1}, {0, 3}});
    CHECK(value_criterion(I, P("x*y"), 0));
    CHECK(value_criterion(I, P("x*y"), 1));
    CHECK(value_criterion(I, P("x^2"), 0));
    CHECK_FALSE(value_criterion(I, P("x^2"), 1));
    CHECK(kind_of([&] { value_criterion(I, P("0"), 0); }) == ErrorKind::zero_polynomial);
    CHECK(kind_of([&] { value_criterion(I, P("y^2"), 0); }) == ErrorKind::not_in_ideal);
}

TEST_CASE("fiber_hilbert examples and growth")
{
    auto M = mono({{1, 0}, {0, 1}});
    for (int n = 0; n <= 5; ++n) {
        CHECK(fiber_hilbert(M, n).basis.size() == static_cast<std::size_t>(n + 1));
        CHECK(fiber_hilbert(M.power(2), n).basis.size() == static_cast<std::size_t>(2 * n + 1));
    }
    CHECK(fiber_hilbert(integral_closure(mono({{2, 0}, {0, 3}})), 1).basis.size() == 3);
    // d = 3: the count is a quadratic in n for large n
    auto I = mono({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}});
    std::vector<long> c;
    for (int n = 4; n <= 8; ++n) c.push_back(static_cast<long>(fiber_hilbert(I, n).basis.size()));
    // third finite difference vanishes
    CHECK(c[3] - 3 * c[2] + 3 * c[1] - c[0] == 0);
    CHECK(c[4] - 3 * c[3] + 3 * c[2] - c[1] == 0);
}

TEST_CASE("find_element examples")
{
    auto q = Field::rationals();
    CHECK(find_element(mono({{1, 0}, {0, 1}}), {}, 0, q) == P("x"));
    auto I = mono({{2, 0}, {1, 1}, {0, 3}});
    CHECK(find_element(I, {}, 0, q) == P("x*y"));
    CHECK(find_element(I, {0}, 0, q) == P("x^2"));
    // three facets, no generator on all of them
    auto J = mono({{4, 0, 0}, {3, 1, 0}, {0, 5, 0}, {0, 3, 1}, {0, 2, 2}, {0, 0, 5}});
    REQUIRE(rees_valuations(J).size() == 3);
    auto x = find_element(J, {}, 7, q);
    CHECK(x.size() == 2);
    for (std::size_t j = 0; j < 3; ++j) CHECK(value_criterion(J, x, j));
    CHECK(find_element(J, {}, 7, q) == x);
}

TEST_CASE("find_element_power")
{
    auto f2 = Field::prime(2);
    auto I = mono({{2, 0}, {1, 1}, {0, 3}});
    auto r = find_element_power(I, 1, 0, f2);
    CHECK(r.s == 1);
    CHECK(r.x == P("x*y", f2));
    r = find_element_power(I, 2, 0, Field::rationals());
    CHECK(r.s == 1);
    CHECK(kind_of([&] { find_element_power(I, 1, 0, f2, 0); }) == ErrorKind::search_exhausted);

    // Exhaustive over F_2: for every M-primary ideal in a small family some
    // nonzero F_2-combination of generators of I^r already has all facet values.
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        auto J = random_m_primary(rng, 2 + trial % 2, 4);
        auto vals = rees_valuations(J);
        auto G = J.gens();
        bool found = false;
        for (std::uint64_t mask = 1; mask < (1ULL << std::min<std::size_t>(G.size(), 12)) && !found; ++mask) {
            algebra::Polynomial x(f2, J.dim());
            for (std::size_t i = 0; i < G.size() && i < 12; ++i)
                if (mask >> i & 1) x.add_term(G[i], algebra::Scalar::from_int(f2, 1));
            bool ok = true;
            for (const auto& rv : vals) ok = ok && valuation::mono_value(rv.v, x) == valuation::Value(rv.value);
            found = ok;
        }
        CHECK(found);
        CHECK(find_element_power(J, 1, 3, f2).s == 1);
    }
}

TEST_CASE("certify_reduction examples")
{
    auto q = Field::rationals();
    auto M = mono({{1, 0}, {0, 1}});
    auto c = certify_reduction(M.power(2), {P("x^2"), P("y^2")}, 4);
    REQUIRE(c);
    CHECK(c->n == 1);
    CHECK(c->dim_power == 5);
    CHECK(c->dim_product == 5);
    c = certify_reduction(M, {P("x"), P("y")}, 4);
    REQUIRE(c);
    CHECK(c->n == 0);
    CHECK_FALSE(certify_reduction(M.power(2), {P("x^2"), P("x*y")}, 6));
    CHECK(kind_of([&] { certify_reduction(mono({{2, 0}, {0, 3}}), {P("x^2")}, 2); }) == ErrorKind::not_equigenerated);
    CHECK(kind_of([&] { certify_reduction(M.power(2), {P("x^2 + y")}, 2); }) == ErrorKind::not_in_ideal);
}

TEST_CASE("find_reduction")
{
    auto q = Field::rationals();
    auto M = mono({{1, 0}, {0, 1}});
    auto r = find_reduction(M.power(2), 0, q);
    CHECK(r.J.size() == 2);
    CHECK(r.certificate.n == 1);
    CHECK(certify_reduction(M.power(2), r.J, 4).has_value());
    auto vals = rees_valuations(M.power(2));
    for (const auto& x : r.J)
        for (std::size_t j = 0; j < vals.size(); ++j) CHECK(value_criterion(M.power(2), x, j));
    CHECK(find_reduction(M.power(2), 0, q).J == r.J);

    auto one = find_reduction(mono({{3}}), 0, q);
    CHECK(one.J == std::vector<algebra::Polynomial>{algebra::Polynomial::monomial(q, {3})});
    CHECK(one.certificate.n == 0);

    auto seeded = find_reduction(M.power(2), 1, q, P("x^2"));
    CHECK(seeded.J.front() == P("x^2"));
    CHECK(seeded.J[1].coefficient({0, 2}) != algebra::Scalar(q));
    CHECK(kind_of([&] { find_reduction(mono({{2, 0}, {0, 2}}), 1, q, P("x*y")); }) == ErrorKind::not_in_ideal);

    // d = 3
    auto I = mono({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).power(2);
    auto r3 = find_reduction(I, 0, q);
    CHECK(r3.J.size() == 3);
    CHECK(certify_reduction(I, r3.J, 6));
}

TEST_CASE("powers of a certified reduction reduce the power")
{
    auto q = Field::rationals();
    auto I = mono({{1, 0}, {0, 1}}).power(2);
    auto r = find_reduction(I, 3, q);
    std::vector<algebra::Polynomial> squares;
    for (const auto& x : r.J) squares.push_back(x.pow(2));
    CHECK(certify_reduction(I.power(2), squares, 6));
}

TEST_CASE("ext_rees_check examples")
{
    auto I = mono({{2, 0}, {0, 3}});
    // x^2 is not in I^2, so x^2 Z is not in IE; the two routes agree
    auto rep = ext_rees_check({{1, P("x^2")}}, I);
    CHECK(rep.is_nonnegative);
    CHECK_FALSE(rep.in_IE);
    CHECK_FALSE(rep.z_times_in_ext);
    rep = ext_rees_check({{1, P("x^4")}}, I);
    CHECK(rep.in_IE);
    CHECK(rep.z_times_in_ext);
    rep = ext_rees_check({{-2, P("1")}, {1, P("y^3")}}, I);
    CHECK(rep.negative.size() == 1);
    CHECK(rep.negative.count(-2));
    CHECK(rep.nonnegative.count(1));
    CHECK_FALSE(rep.is_nonnegative);
    REQUIRE(rep.w_inverse.size() == 1);
    CHECK(rep.w_inverse[0] == valuation::Value(6));
    CHECK(kind_of([&] { ext_rees_check({{1, P("x")}}, I); }) == ErrorKind::invalid_element);
}
