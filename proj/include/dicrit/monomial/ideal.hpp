#pragma once

#include "dicrit/algebra/polynomial.hpp"
#include "dicrit/valuation/valuation.hpp"

#include <optional>
#include <vector>

namespace dicrit::monomial {

using algebra::Exponent;
using algebra::FieldPtr;
using algebra::Polynomial;

/// Monomial ideal given by its minimal generators, kept sorted in
/// descending lex order (x-heavy first).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Minimizes the generators; throws on an empty list or mixed lengths.
    MonomialIdeal(std::size_t d, std::vector<Exponent> gens);

    std::size_t dim() const { return d_; }
    const std::vector<Exponent>& gens() const { return gens_; }

    bool contains(const Exponent& e) const;
    bool contains(const Polynomial& f) const;  // every term
    bool is_m_primary() const;
    /// Common total degree of the generators, if any.
    std::optional<int> equigenerated_degree() const;
    /// Componentwise maximum of the generators.
    Exponent max_exponent() const;

    MonomialIdeal power(int n) const;
    friend MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::vector<Polynomial> polynomials(const FieldPtr& field) const;
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t d_ = 0;
    std::vector<Exponent> gens_;
};

/// <w, e> >= value.
struct Facet {
    std::vector<int> weights;
    std::int64_t value = 0;
    friend bool operator==(const Facet&, const Facet&) = default;
};

/// Facets with positive value (coordinate half-spaces are implicit) and the
/// generators that are vertices.
struct NewtonPolyhedron {
    std::vector<Facet> facets;
    std::vector<Exponent> vertices;

    bool contains(const Exponent& e) const;
    /// Polyhedron of I^n: same normals, values scaled by n.
    NewtonPolyhedron scaled(int n) const;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I);

/// Minimal generators of the lattice points of the Newton polyhedron.
MonomialIdeal integral_closure(const MonomialIdeal& I);
MonomialIdeal integral_closure(const MonomialIdeal& I, const NewtonPolyhedron& N);

/// Default normality bound: d - 1 (at least 1).
int default_normality_bound(const MonomialIdeal& I);

/// closure(I^n) == I^n for 1 <= n <= bound; d = 2 complete ideals are normal
/// outright. NotMPrimary for ideals that are not M-primary.
bool is_normal(const MonomialIdeal& I, std::optional<int> bound = std::nullopt);

struct ReesValuation {
    valuation::MonomialValuation v;
    std::int64_t value;  // V_j(I)
};

/// One entry per facet, sorted by weights. NotMPrimary otherwise.
std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I);

/// Lattice points of the box [0, bound_i] in lex order.
std::vector<Exponent> box_points(const Exponent& bound);

/// Minimal elements of a set of lattice points closed upward inside a box.
std::vector<Exponent> minimal_elements(std::vector<Exponent> points);

}  // namespace dicrit::monomial
