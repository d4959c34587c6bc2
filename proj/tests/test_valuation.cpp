#include "dicrit/error.hpp"
#include "dicrit/valuation/extension.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <numeric>

using namespace dicrit;
using namespace dicrit::valuation;
using algebra::Field;
using dicrit::testing::P;
using dicrit::testing::P3;
using dicrit::testing::random_polynomial;

namespace {

DivisorialValuation qdt(std::vector<std::pair<int, long>> steps, const algebra::FieldPtr& f = Field::rationals())
{
    std::vector<QdtStep> out;
    for (auto [chart, c] : steps) out.push_back({chart, Scalar::from_int(f, c)});
    return DivisorialValuation(f, out);
}

}  // namespace

TEST_CASE("Value arithmetic")
{
    Value inf = Value::infinity();
    CHECK(inf.is_infinite());
    CHECK(Value(3) < inf);
    CHECK(min(inf, Value(2)) == Value(2));
    CHECK((inf + Value(4)).is_infinite());
    CHECK(Value(3) + Value(4) == Value(7));
    CHECK(inf.to_string() == "INFINITY");
    CHECK_THROWS_AS(inf.get(), Error);
}

TEST_CASE("mono_value examples")
{
    CHECK(mono_value(MonomialValuation({1, 1}), P("x + y^2")) == Value(1));
    CHECK(mono_value(MonomialValuation({3, 2}), P("y^3")) == Value(6));
    CHECK(mono_value(MonomialValuation({3, 2}), P("0")).is_infinite());
    CHECK_THROWS_AS(mono_value(MonomialValuation({1, 1, 1}), P("x")), Error);
    CHECK_THROWS_AS(MonomialValuation({2, 4}), Error);
    CHECK_THROWS_AS(MonomialValuation({0, 1}), Error);
}

TEST_CASE("ideal_value examples")
{
    CHECK(ideal_value(MonomialValuation({3, 2}), {P("x^2"), P("y^3")}) == Value(6));
    CHECK(ideal_value(MonomialValuation({1, 1}), {P("x"), P("y")}) == Value(1));
    CHECK(ideal_value(MonomialValuation({1, 1}), {P("0")}).is_infinite());
}

TEST_CASE("gauss_eval examples")
{
    Valuation v = MonomialValuation({1, 1});
    CHECK(gauss_eval(v, {{-1, P("x")}, {0, P("y^2")}}) == Value(1));
    CHECK(gauss_eval(v, {}).is_infinite());
    CHECK(gauss_eval(v, {{5, P("1")}}) == Value(0));
}

TEST_CASE("rees_ext_eval examples")
{
    Valuation v = MonomialValuation({3, 2});
    std::vector<algebra::Polynomial> I{P("x^2"), P("y^3")};
    Value VI = ideal_value(v, I);
    CHECK(VI == Value(6));
    CHECK(rees_ext_eval(v, VI, {I, {{1, P("y^3")}, {2, P("x^4")}}}) == Value(0));
    CHECK(rees_ext_eval(v, VI, {I, {{1, P("x^2")}}}) == Value(0));
    CHECK(rees_ext_eval(v, VI, {I, {{1, P("x^3")}}}) == Value(3));
    CHECK_THROWS_AS(rees_ext_eval(v, VI, {I, {{1, P("x")}}}), Error);
    CHECK_THROWS_AS(rees_ext_eval(v, VI, {I, {{2, P("x^2*y^2")}}}), Error);
    CHECK_THROWS_AS(rees_ext_eval(v, VI, {I, {{1, P("0")}}}), Error);
    try {
        rees_ext_eval(v, VI, {I, {{1, P("x")}}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_rees_element);
    }
}

TEST_CASE("qdt_eval examples")
{
    auto q = Field::rationals();
    CHECK(qdt_eval(DivisorialValuation::ord(q), P("y")) == Value(1));
    auto v12 = qdt({{0, 0}});
    CHECK(qdt_eval(v12, P("y^2 - x^3")) == Value(3));
    auto v23 = DivisorialValuation::from_weights(q, 2, 3);
    CHECK(qdt_eval(v23, P("y^2 - x^3")) == Value(6));
    CHECK(qdt_eval(v23, P("0")).is_infinite());
    CHECK(v23.steps().size() == 2);
    CHECK(v23.steps()[0].chart == 0);
    CHECK(v23.steps()[1].chart == 1);
    CHECK(v12 == DivisorialValuation::from_weights(q, 1, 2));
    CHECK(v23.monomial_weights() == std::pair{2, 3});
    CHECK_FALSE(qdt({{0, 1}}).monomial_weights());
    // the cusp's own divisor: after (2,3) the strict transform passes through t = 1
    auto cusp = DivisorialValuation(q, {{0, Scalar(q)}, {1, Scalar(q)}, {0, Scalar::from_int(q, 1)}});
    CHECK(qdt_eval(cusp, P("y^2 - x^3")) == Value(7));
    CHECK(qdt_eval(cusp, P("x")) == Value(2));
}

TEST_CASE("monomial valuations agree with their staircases")
{
    auto q = Field::rationals();
    std::mt19937_64 rng(5);
    for (int a = 1; a < 8; ++a)
        for (int b = 1; a + b <= 8; ++b) {
            if (std::gcd(a, b) != 1) continue;
            auto V = DivisorialValuation::from_weights(q, a, b);
            MonomialValuation w({a, b});
            CHECK(V.monomial_weights() == std::pair{a, b});
            for (int trial = 0; trial < 15; ++trial) {
                auto f = random_polynomial(rng, q, 2, 5, 5);
                CHECK(qdt_eval(V, f) == mono_value(w, f));
            }
        }
}

TEST_CASE("chart choice does not change the valuation")
{
    auto q = Field::rationals();
    std::mt19937_64 rng(9);
    // same last point seen from both charts: y/x = 2 versus x/y = 1/2
    auto a = qdt({{0, 0}, {0, 2}});
    auto b = DivisorialValuation(q, {{0, Scalar(q)}, {1, Scalar::from_rational(q, mpq_class(1, 2))}});
    CHECK(a == b);
    // a non-canonical step followed by more steps
    auto c = DivisorialValuation(q, {{1, Scalar::from_int(q, 3)}, {0, Scalar::from_int(q, 1)}, {1, Scalar(q)}});
    auto cc = c.canonical();
    CHECK(cc.is_canonical());
    CHECK(cc == c);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_polynomial(rng, q, 2, 5, 4);
        CHECK(qdt_eval(a, f) == qdt_eval(b, f));
        CHECK(qdt_eval(c, f) == qdt_eval(cc, f));
    }
    CHECK_FALSE(a == qdt({{0, 0}, {0, 3}}));
}

TEST_CASE("valuation axioms on random samples")
{
    std::mt19937_64 rng(17);
    auto q = Field::rationals();
    auto f3 = Field::prime(3);
    std::vector<std::pair<Valuation, algebra::FieldPtr>> vals{
        {MonomialValuation({1, 1}), q},
        {MonomialValuation({3, 5}), q},
        {MonomialValuation({2, 3}), f3},
        {DivisorialValuation(q, {{0, Scalar(q)}, {0, Scalar::from_int(q, -1)}, {1, Scalar(q)}}), q},
        {DivisorialValuation(f3, {{1, Scalar(f3)}, {0, Scalar::from_int(f3, 2)}}), f3},
    };
    for (const auto& [v, field] : vals)
        for (int trial = 0; trial < 40; ++trial) {
            auto f = random_polynomial(rng, field, 2, 4, 4);
            auto g = random_polynomial(rng, field, 2, 4, 4);
            CHECK(v(f * g) == v(f) + v(g));
            CHECK(v(f + g) >= min(v(f), v(g)));
            CHECK(v(algebra::Polynomial::constant(field, 2, 1 + static_cast<long>(rng() % 2))) == Value(0));
        }
    auto v3 = MonomialValuation({1, 2, 3});
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_polynomial(rng, q, 3, 4, 3);
        auto g = random_polynomial(rng, q, 3, 4, 3);
        CHECK(mono_value(v3, f * g) == mono_value(v3, f) + mono_value(v3, g));
    }
}

TEST_CASE("Rees extension equals the shifted Gauss extension")
{
    std::mt19937_64 rng(23);
    auto q = Field::rationals();
    std::vector<algebra::Polynomial> I{P("x^2"), P("x*y"), P("y^3")};
    for (auto w : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {3, 2}, {1, 4}}) {
        Valuation v = MonomialValuation(w);
        Value VI = ideal_value(v, I);
        algebra::Polynomial x;
        for (const auto& g : I)
            if (v(g) == VI) x = g;
        for (int trial = 0; trial < 30; ++trial) {
            ReesElement f{I, {}};
            for (int n = 0; n < 3; ++n) {
                auto c = random_polynomial(rng, q, 2, 3, 3);
                for (int k = 0; k < n; ++k) c = c * I[rng() % I.size()];
                f.components[n] = c;
            }
            CHECK(rees_ext_eval(v, VI, f) == rees_ext_via_gauss(v, f, x));
        }
    }
}

TEST_CASE("extended Rees values")
{
    Valuation v = MonomialValuation({3, 2});
    CHECK(ext_rees_eval(v, Value(6), {{-1, P("1")}}) == Value(6));
    CHECK(ext_rees_eval(v, Value(6), {{-2, P("1")}, {1, P("y^3")}}) == Value(0));
}
