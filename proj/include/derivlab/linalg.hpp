#ifndef DERIVLAB_LINALG_HPP
#define DERIVLAB_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace derivlab {

// Sparse exact linear algebra over Q. Rows are eliminated fraction-free:
// entries stay integral, pivot combination is cross-multiplied and the row
// content (gcd) is divided out afterwards. Pivot order is fixed by column
// index, so results are deterministic.

// Sorted-by-column list of nonzero integer entries.
using SparseRowZ = std::vector<std::pair<std::size_t, Integer>>;
using SparseRowQ = std::vector<std::pair<std::size_t, Rational>>;

inline SparseRowZ clear_denominators(const SparseRowQ& row) {
    Integer l = 1;
    for (const auto& [c, q] : row)
        if (q != 0) l = lcm(l, rat_den(q));
    SparseRowZ out;
    out.reserve(row.size());
    for (const auto& [c, q] : row)
        if (q != 0) out.emplace_back(c, rat_num(q) * (l / rat_den(q)));
    return out;
}

inline void strip_content(SparseRowZ& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) v /= g;
}

// out = x*a - y*b, merging sorted sparse rows.
inline SparseRowZ row_combine(const Integer& x, const SparseRowZ& a,
                              const Integer& y, const SparseRowZ& b) {
    SparseRowZ out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, x * a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -y * b[j].second);
            ++j;
        } else {
            Integer v = x * a[i].second - y * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Row echelon form keyed by leading column.
class Echelon {
public:
    // Reduce a row against the current pivots and, if it survives, install
    // it as a new pivot. Returns the leading column, or nullopt if the row
    // vanished.
    std::optional<std::size_t> insert(SparseRowZ row) {
        strip_content(row);
        while (!row.empty()) {
            std::size_t lead = row.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                pivots_.emplace(lead, std::move(row));
                return lead;
            }
            row = row_combine(it->second.front().second, row,
                              row.front().second, it->second);
            strip_content(row);
        }
        return std::nullopt;
    }

    bool has_pivot(std::size_t col) const { return pivots_.count(col) != 0; }
    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, SparseRowZ>& pivots() const { return pivots_; }

    // Back-substitute with the given values fixed at non-pivot columns.
    // Pivot columns are overwritten; `values` must span all columns.
    void back_substitute(std::vector<Rational>& values) const {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const auto& [col, row] = *it;
            Rational acc = 0;
            for (std::size_t k = 1; k < row.size(); ++k)
                acc += Rational(row[k].second) * values[row[k].first];
            values[col] = -acc / Rational(row.front().second);
        }
    }

private:
    std::map<std::size_t, SparseRowZ> pivots_;
};

struct SolveOutcome {
    bool feasible = false;
    std::vector<Rational> solution; // particular solution, free vars = 0
    std::size_t rank = 0;
};

// Solve A u = rhs. Each row pairs a sparse coefficient row with its
// right-hand side; `ncols` counts the unknowns.
inline SolveOutcome solve_system(const std::vector<SparseRowQ>& rows,
                                 const std::vector<Rational>& rhs,
                                 std::size_t ncols) {
    // rhs is carried as an extra column: Σ a_ij u_j - c_i * 1 = 0.
    Echelon ech;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseRowQ full = rows[i];
        if (rhs[i] != 0) full.emplace_back(ncols, -rhs[i]);
        ech.insert(clear_denominators(full));
    }
    SolveOutcome out;
    out.rank = ech.rank() - (ech.has_pivot(ncols) ? 1 : 0);
    if (ech.has_pivot(ncols)) return out; // row 0 = nonzero: inconsistent
    out.feasible = true;
    std::vector<Rational> values(ncols + 1, Rational(0));
    values[ncols] = 1;
    ech.back_substitute(values);
    values.pop_back();
    out.solution = std::move(values);
    return out;
}

// Kernel basis of the homogeneous system, one vector per free column in
// increasing column order. Vector j has 1 at its free column and 0 at every
// other free column.
inline std::vector<std::vector<Rational>> kernel_basis(
    const std::vector<SparseRowQ>& rows, std::size_t ncols) {
    Echelon ech;
    for (const auto& r : rows) ech.insert(clear_denominators(r));
    std::vector<std::vector<Rational>> basis;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (ech.has_pivot(j)) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[j] = 1;
        ech.back_substitute(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Independent spanning subset of the given vectors, echelon-reduced with
// positive integral leading entries. Deterministic in the input order.
inline std::vector<std::vector<Rational>> row_space_basis(
    const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
    Echelon ech;
    for (const auto& v : vectors) {
        SparseRowQ row;
        for (std::size_t j = 0; j < dim; ++j)
            if (v[j] != 0) row.emplace_back(j, v[j]);
        ech.insert(clear_denominators(row));
    }
    std::vector<std::vector<Rational>> out;
    for (const auto& [col, row] : ech.pivots()) {
        std::vector<Rational> v(dim, Rational(0));
        for (const auto& [c, z] : row) v[c] = Rational(z);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace derivlab

#endif
