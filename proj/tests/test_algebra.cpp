#include "dicrit/algebra/gcd.hpp"
#include "dicrit/algebra/linalg.hpp"
#include "dicrit/algebra/univariate.hpp"
#include "dicrit/error.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <set>

using namespace dicrit;
using namespace dicrit::algebra;
using dicrit::testing::P;
using dicrit::testing::random_polynomial;

TEST_CASE("field basics")
{
    auto q = Field::rationals();
    auto a = Scalar::from_rational(q, mpq_class(3, 4));
    auto b = Scalar::from_int(q, 2);
    CHECK((a * b).to_string() == "3/2");
    CHECK((a / b).to_string() == "3/8");
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);

    auto f7 = Field::prime(7);
    auto three = Scalar::from_int(f7, 3);
    CHECK((three * three.inverse()).is_one());
    CHECK(Scalar::from_rational(f7, mpq_class(1, 2)).to_string() == "4");
    CHECK_THROWS_AS(void(three + a), Error);
}

TEST_CASE("extension fields")
{
    auto q = Field::rationals();
    auto qi = Field::extension(q, {mpq_class(1), mpq_class(0), mpq_class(1)});
    auto i = Scalar::generator(qi);
    CHECK((i * i + Scalar::from_int(qi, 1)).is_zero());
    auto z = Scalar::from_int(qi, 2) + i;
    CHECK((z * z.inverse()).is_one());
    CHECK_THROWS_AS(Field::extension(q, {mpq_class(-1), mpq_class(0), mpq_class(1)}), Error);

    // F_4 = F_2[a]/(a^2+a+1): every nonzero element has order dividing 3
    auto f4 = Field::extension(Field::prime(2), {mpq_class(1), mpq_class(1), mpq_class(1)});
    CHECK(f4->order() == 4);
    for (std::uint64_t k = 1; k < 4; ++k) CHECK(Scalar::enumerate(f4, k).pow(3).is_one());
    CHECK_THROWS_AS(Field::extension(Field::prime(2), {mpq_class(1), mpq_class(0), mpq_class(1)}), Error);
}

TEST_CASE("poly_arith examples")
{
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    auto f = P("3x^2y - 7/2 y + 1");
    CHECK((f + (-f)).is_zero());
    auto f2 = Field::prime(2);
    CHECK(P("(x+y)^2", f2) == P("x^2+y^2", f2));
    CHECK_THROWS_AS(void(P("x", f2) + P("x")), Error);
}

TEST_CASE("substitute examples")
{
    auto q = Field::rationals();
    auto f = P("y^2 - x^3");
    std::vector<std::string> xt{"x", "t"};
    auto image = f.substitute({P("x", q, xt), P("x*t", q, xt)});
    CHECK(image == P("x^2*(t^2 - x)", q, xt));
    CHECK(P("x").substitute({P("x"), P("y")}) == P("x"));
    std::vector<std::string> uv{"u", "v"};
    CHECK(P("x*y").substitute({P("u", q, uv), P("u*v", q, uv)}) == P("u^2*v", q, uv));
}

TEST_CASE("ring axioms and substitution homomorphism on random samples")
{
    std::mt19937_64 rng(7);
    for (auto field : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto f = random_polynomial(rng, field, 2, 4, 3);
            auto g = random_polynomial(rng, field, 2, 4, 3);
            auto h = random_polynomial(rng, field, 2, 4, 3);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(f + g == g + f);
            std::vector<Polynomial> images{random_polynomial(rng, field, 2, 3, 2), random_polynomial(rng, field, 2, 3, 2)};
            CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
            CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
            if (field->characteristic() > 0) {
                auto p = static_cast<unsigned>(field->characteristic());
                CHECK((f + g).pow(p) == f.pow(p) + g.pow(p));
            }
        }
    }
}

TEST_CASE("univariate_roots examples")
{
    auto q = Field::rationals();
    auto r = univariate_roots(UniPoly::from_ints(q, {-1, 0, 1}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].value.to_string() == "-1");
    CHECK(r.roots[1].value.to_string() == "1");
    CHECK(r.roots[0].multiplicity == 1);
    CHECK(r.residual.degree() == 0);

    r = univariate_roots(UniPoly::from_ints(q, {1, 0, 1}));
    CHECK(r.roots.empty());
    CHECK(r.residual == UniPoly::from_ints(q, {1, 0, 1}));

    auto f2 = Field::prime(2);
    r = univariate_roots(UniPoly::from_ints(f2, {1, 1, 1}));
    CHECK(r.roots.empty());
    CHECK(r.residual == UniPoly::from_ints(f2, {1, 1, 1}));

    CHECK_THROWS_AS(univariate_roots(UniPoly(q)), Error);
}

TEST_CASE("univariate_roots multiplicities and rational roots")
{
    auto q = Field::rationals();
    // (2t - 3)^2 (t + 5) t
    UniPoly p = UniPoly::from_ints(q, {-3, 2}) * UniPoly::from_ints(q, {-3, 2}) * UniPoly::from_ints(q, {5, 1}) *
                UniPoly::from_ints(q, {0, 1});
    auto r = univariate_roots(p);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0].value.to_string() == "-5");
    CHECK(r.roots[1].value.to_string() == "0");
    CHECK(r.roots[2].value.to_string() == "3/2");
    CHECK(r.roots[2].multiplicity == 2);
}

TEST_CASE("univariate_roots reconstruct the input")
{
    std::mt19937_64 rng(11);
    auto qi = Field::extension(Field::rationals(), {mpq_class(1), mpq_class(0), mpq_class(1)});
    for (auto field : {Field::rationals(), Field::prime(7), qi}) {
        for (int trial = 0; trial < 25; ++trial) {
            UniPoly p(field);
            p = UniPoly::from_ints(field, {1});
            int factors = 1 + static_cast<int>(rng() % 3);
            for (int k = 0; k < factors; ++k) {
                auto s = dicrit::testing::random_scalar(rng, field, 3);
                p = p * UniPoly::x_minus(s);
            }
            p = p * UniPoly::from_ints(field, {1, 0, 1});  // t^2 + 1
            auto r = univariate_roots(p);
            UniPoly back = r.residual;
            for (const auto& root : r.roots)
                for (int m = 0; m < root.multiplicity; ++m) back = back * UniPoly::x_minus(root.value);
            CHECK(back == p.monic());
            CHECK(univariate_roots(r.residual).roots.empty());
        }
    }
}

TEST_CASE("roots in a quadratic extension of Q")
{
    auto q = Field::rationals();
    auto qi = Field::extension(q, {mpq_class(1), mpq_class(0), mpq_class(1)});
    // t^2 + 4 = (t - 2i)(t + 2i)
    auto r = univariate_roots(UniPoly::from_ints(qi, {4, 0, 1}));
    CHECK(r.roots.size() == 2);
    CHECK(r.residual.degree() == 0);
    // t^2 - 2 has no root in Q(i)
    r = univariate_roots(UniPoly::from_ints(qi, {-2, 0, 1}));
    CHECK(r.roots.empty());
    // (t - (1 + i)) * (t - 3)
    auto one_plus_i = Scalar::from_int(qi, 1) + Scalar::generator(qi);
    r = univariate_roots(UniPoly::x_minus(one_plus_i) * UniPoly::x_minus(Scalar::from_int(qi, 3)));
    REQUIRE(r.roots.size() == 2);
}

TEST_CASE("irreducible factor search")
{
    auto q = Field::rationals();
    auto f = smallest_irreducible_factor(UniPoly::from_ints(q, {2, 0, 3, 0, 1}));  // (t^2+1)(t^2+2)
    REQUIRE(f);
    CHECK(f->degree() == 2);
    auto quads = rational_quadratic_factors(UniPoly::from_ints(q, {2, 0, 3, 0, 1}));
    CHECK(quads.size() == 2);

    auto f2 = Field::prime(2);
    // t^3 + t + 1 is irreducible over F_2
    auto g = smallest_irreducible_factor(UniPoly::from_ints(f2, {1, 1, 0, 1}));
    REQUIRE(g);
    CHECK(g->degree() == 3);
}

TEST_CASE("distinct root counts, including characteristic p")
{
    auto q = Field::rationals();
    CHECK(distinct_root_count(UniPoly::from_ints(q, {1, 2, 1})) == 1);
    CHECK(distinct_root_count(UniPoly::from_ints(q, {0, 0, 1, 1})) == 2);
    auto f3 = Field::prime(3);
    // t^3 - 1 = (t - 1)^3 over F_3
    CHECK(distinct_root_count(UniPoly::from_ints(f3, {-1, 0, 0, 1})) == 1);
    // t^3 + t + 1 = (t - 1)(t^2 + t + 2) over F_3; roots counted over the closure
    auto p = UniPoly::from_ints(f3, {1, 1, 0, 1});
    CHECK(distinct_root_count(p * p * p * UniPoly::from_ints(f3, {1, 1})) == 4);
}

TEST_CASE("multivariate gcd")
{
    CHECK(gcd(P("x*y"), P("x^2")) == P("x"));
    CHECK(gcd(P("y^2 - x^3"), P("x^2")) == P("1"));
    auto g = gcd(P("(y^2 - x^3)*(x + y)^2"), P("(y^2 - x^3)*(x - y)*(x + y)"));
    CHECK(g == P("(y^2 - x^3)*(x + y)").monic());
    auto f5 = Field::prime(5);
    CHECK(gcd(P("(x+y)^5", f5), P("x^5 + y^5 + x*y*(x+y)", f5)) == P("x + y", f5));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_polynomial(rng, Field::rationals(), 2, 3, 2);
        auto b = random_polynomial(rng, Field::rationals(), 2, 3, 2);
        auto c = random_polynomial(rng, Field::rationals(), 2, 3, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        auto g1 = gcd(a * c, b * c);
        Polynomial quo;
        CHECK((a * c).divide_exact(g1, quo));
        CHECK((b * c).divide_exact(g1, quo));
        CHECK(g1.divide_exact(c.monic(), quo));
    }
}

TEST_CASE("squarefree kernel")
{
    CHECK(squarefree_kernel(P("x^3*(y - x)^2")) == P("x*(y - x)").monic());
    auto f2 = Field::prime(2);
    CHECK(squarefree_kernel(P("(x + y^2)^2 * x", f2)) == P("x*(x + y^2)", f2).monic());
    CHECK(squarefree_kernel(P("(x + y)^4", f2)) == P("x + y", f2));
}

namespace {

// Independent span count: enumerate every F_p combination of the rows and count distinct vectors.
std::size_t span_dimension_by_enumeration(const std::vector<Polynomial>& gens, int degree, long p)
{
    std::vector<std::map<Exponent, long>> rows;
    for (const auto& g : gens)
        for (const auto& m : monomials_of_degree(g.nvars(), degree - g.degree())) {
            std::map<Exponent, long> row;
            for (const auto& [e, c] : g.terms()) {
                Exponent s = e;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
                row[s] = c.base_value().get_num().get_si();
            }
            rows.push_back(row);
        }
    std::set<std::map<Exponent, long>> seen;
    std::size_t total = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::map<Exponent, long> v;
        std::size_t k = idx;
        for (const auto& row : rows) {
            long c = static_cast<long>(k % p);
            k /= p;
            for (const auto& [e, x] : row) v[e] = (v[e] + c * x) % p;
        }
        for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
        seen.insert(v);
    }
    std::size_t dim = 0, size = seen.size();
    while (size > 1) {
        size /= static_cast<std::size_t>(p);
        ++dim;
    }
    return dim;
}

}  // namespace

TEST_CASE("graded_component_dim examples")
{
    auto q = Field::rationals();
    CHECK(graded_component_dim({P("1")}, 4) == 5);
    CHECK(graded_component_dim({P("x^4"), P("x^4")}, 4) == 1);
    CHECK(graded_component_dim({P("x^2"), P("y^2")}, 4) == 5);
    CHECK_THROWS_AS(graded_component_dim({P("x^2 + y")}, 4), Error);

    auto f2 = Field::prime(2);
    auto f3 = Field::prime(3);
    CHECK(span_dimension_by_enumeration({P("x^2", f2), P("y^2", f2)}, 4, 2) == 5);
    for (auto gens : std::vector<std::vector<std::string>>{{"x^2", "y^2"}, {"x^2 + x*y", "x*y + y^2"}, {"x^2 - y^2", "x*y"}}) {
        std::vector<Polynomial> g3;
        for (const auto& s : gens) g3.push_back(P(s, f3));
        CHECK(graded_component_dim(g3, 3) == span_dimension_by_enumeration(g3, 3, 3));
    }
}
