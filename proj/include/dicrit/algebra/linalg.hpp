#pragma once

#include "dicrit/algebra/polynomial.hpp"

#include <vector>

namespace dicrit::algebra {

using Row = std::vector<Scalar>;

/// Row echelon data of a matrix over an exact field.
struct Echelon {
    std::vector<Row> rows;              // reduced rows, pivot entries are 1
    std::vector<std::size_t> pivots;    // pivot column of each row
    std::size_t rank() const { return rows.size(); }
};

/// Reduced row echelon form; `columns` is the row length.
Echelon reduced_echelon(std::vector<Row> rows, std::size_t columns, const FieldPtr& field);

std::size_t rank(const std::vector<Row>& rows, std::size_t columns, const FieldPtr& field);

/// Basis of {x : A x = 0} where A has the given rows.
std::vector<Row> nullspace(const std::vector<Row>& rows, std::size_t columns, const FieldPtr& field);

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// lexicographic order.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

/// All exponent vectors of total degree < `bound`.
std::vector<Exponent> monomials_below(std::size_t nvars, int bound);

/// Dimension of the span of { m*g : g in gens, m a monomial, deg(m*g) = degree }.
/// Generators must be homogeneous (NotHomogeneous otherwise); zero generators
/// are ignored.
std::size_t graded_component_dim(const std::vector<Polynomial>& gens, int degree);

}  // namespace dicrit::algebra
