#pragma once

#include "dicrit/algebra/expression.hpp"
#include "dicrit/algebra/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace dicrit::testing {

using algebra::FieldPtr;
using algebra::Polynomial;
using algebra::Scalar;

inline Polynomial P(const std::string& text, const FieldPtr& f = algebra::Field::rationals(),
                    const std::vector<std::string>& names = {"x", "y"})
{
    return algebra::parse_expression(text, f, names);
}

inline Polynomial P3(const std::string& text, const FieldPtr& f = algebra::Field::rationals())
{
    return P(text, f, {"x", "y", "z"});
}

inline Scalar random_scalar(std::mt19937_64& rng, const FieldPtr& f, int bound = 5)
{
    if (f->is_finite()) {
        std::vector<mpq_class> c;
        for (int i = 0; i < f->degree(); ++i) c.emplace_back(static_cast<long>(rng() % f->characteristic()));
        return Scalar::from_coords(f, c);
    }
    std::vector<mpq_class> c;
    for (int i = 0; i < f->degree(); ++i) {
        long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
        long den = static_cast<long>(rng() % 3) + 1;
        c.emplace_back(num, den);
        c.back().canonicalize();
    }
    return Scalar::from_coords(f, c);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const FieldPtr& f, std::size_t nvars, int max_terms,
                                    int max_exp)
{
    Polynomial p(f, nvars);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        algebra::Exponent e(nvars);
        for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
        p.add_term(e, random_scalar(rng, f));
    }
    return p;
}

}  // namespace dicrit::testing

#include "dicrit/monomial/ideal.hpp"

namespace dicrit::testing {

inline monomial::MonomialIdeal mono(std::vector<algebra::Exponent> gens)
{
    const std::size_t d = gens.front().size();
    return monomial::MonomialIdeal(d, std::move(gens));
}

inline monomial::MonomialIdeal random_m_primary(std::mt19937_64& rng, std::size_t d, int max_exp)
{
    std::vector<algebra::Exponent> gens;
    for (std::size_t i = 0; i < d; ++i) {
        algebra::Exponent e(d, 0);
        e[i] = 1 + static_cast<int>(rng() % max_exp);
        gens.push_back(e);
    }
    int extra = static_cast<int>(rng() % 4);
    for (int k = 0; k < extra; ++k) {
        algebra::Exponent e(d);
        for (auto& x : e) x = static_cast<int>(rng() % max_exp);
        if (algebra::total_degree(e) > 0) gens.push_back(e);
    }
    return monomial::MonomialIdeal(d, gens);
}

}  // namespace dicrit::testing
