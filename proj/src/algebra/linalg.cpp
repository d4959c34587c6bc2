#include "dicrit/algebra/linalg.hpp"

#include "dicrit/error.hpp"

#include <map>

namespace dicrit::algebra {

Echelon reduced_echelon(std::vector<Row> rows, std::size_t columns, const FieldPtr& field)
{
    Echelon out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < columns && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Scalar inv = rows[r][col].inverse();
        for (std::size_t j = col; j < columns; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Scalar factor = rows[i][col];
            for (std::size_t j = col; j < columns; ++j) {
                if (!rows[r][j].is_zero()) rows[i][j] -= factor * rows[r][j];
            }
        }
        out.pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    (void)field;
    return out;
}

std::size_t rank(const std::vector<Row>& rows, std::size_t columns, const FieldPtr& field)
{
    return reduced_echelon(rows, columns, field).rank();
}

std::vector<Row> nullspace(const std::vector<Row>& rows, std::size_t columns, const FieldPtr& field)
{
    Echelon ech = reduced_echelon(rows, columns, field);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        Row v(columns, Scalar(field));
        v[free] = Scalar::from_int(field, 1);
        for (std::size_t i = 0; i < ech.rows.size(); ++i) v[ech.pivots[i]] = -ech.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree)
{
    std::vector<Exponent> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponent e(nvars, 0);
    // recursive fill, lexicographic order
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<Exponent> monomials_below(std::size_t nvars, int bound)
{
    std::vector<Exponent> out;
    for (int d = 0; d < bound; ++d) {
        auto part = monomials_of_degree(nvars, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::size_t graded_component_dim(const std::vector<Polynomial>& gens, int degree)
{
    if (gens.empty()) return 0;
    const FieldPtr& field = gens.front().field();
    const std::size_t nvars = gens.front().nvars();
    auto basis = monomials_of_degree(nvars, degree);
    std::map<Exponent, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

    std::vector<Row> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) fail(ErrorKind::not_homogeneous, "generator " + g.to_string() + " is not homogeneous");
        if (!same_field(g.field(), field) || g.nvars() != nvars)
            fail(ErrorKind::field_mismatch, "generators must share field and variable count");
        int gd = g.degree();
        if (gd > degree) continue;
        for (const auto& m : monomials_of_degree(nvars, degree - gd)) {
            Row row(basis.size(), Scalar(field));
            for (const auto& [e, c] : g.terms()) {
                Exponent s = e;
                for (std::size_t i = 0; i < nvars; ++i) s[i] += m[i];
                row[column.at(s)] = c;
            }
            rows.push_back(std::move(row));
        }
    }
    return rank(rows, basis.size(), field);
}

}  // namespace dicrit::algebra
