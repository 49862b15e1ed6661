#ifndef DERIVLAB_LINEAR_ODE_HPP
#define DERIVLAB_LINEAR_ODE_HPP

#include <optional>
#include <vector>

#include "linalg.hpp"
#include "polynomial.hpp"

namespace derivlab {

// Dense univariate coefficient vector, index = power of x, no trailing zeros.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_deg(const UniPoly& p) {
    return p.empty() ? kDegNegInf : static_cast<int>(p.size()) - 1;
}

inline Rational uni_coeff(const UniPoly& p, std::size_t k) {
    return k < p.size() ? p[k] : Rational(0);
}

// Extract the coefficient vector of a polynomial univariate in the
// distinguished variable of its context.
inline UniPoly to_unipoly(const Polynomial& p) {
    std::size_t x = p.context()->distinguished_index();
    if (!p.is_univariate_in(x))
        throw input_error("expected a polynomial in " +
                          p.context()->distinguished_name() + " only");
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m[x] >= out.size()) out.resize(m[x] + 1, Rational(0));
        out[m[x]] = c;
    }
    return out;
}

inline Polynomial from_unipoly(const UniPoly& u, const ContextPtr& ctx) {
    std::size_t x = ctx->distinguished_index();
    Polynomial p = Polynomial::zero(ctx);
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] == 0) continue;
        Monomial m(ctx->arity(), 0);
        m[x] = static_cast<std::uint32_t>(k);
        p = p + Polynomial::term(ctx, m, u[k]);
    }
    return p;
}

// Decide whether z' = a z + b has a polynomial solution, and produce one.
//
// Case split: a = 0 gives the formal antiderivative; a in K* gives a
// unitriangular coefficient system solvable top-down; deg a >= 1 forces
// deg z = deg b - deg a by leading-term comparison, so the decision reduces
// to a finite exact linear solve (and to b = 0 when that degree is < 0).
inline std::optional<UniPoly> solve_ode(const UniPoly& a_in, const UniPoly& b_in) {
    UniPoly a = a_in, b = b_in;
    uni_trim(a);
    uni_trim(b);

    if (a.empty()) { // z = antiderivative of b
        UniPoly z(b.size() + 1, Rational(0));
        for (std::size_t k = 0; k < b.size(); ++k)
            z[k + 1] = b[k] / Rational(k + 1);
        uni_trim(z);
        return z;
    }

    if (b.empty()) return UniPoly{}; // z = 0

    if (uni_deg(a) == 0) { // a in K*: z_k = ((k+1) z_{k+1} - b_k) / a
        const Rational& c = a[0];
        int n = uni_deg(b);
        UniPoly z(n + 1, Rational(0));
        for (int k = n; k >= 0; --k) {
            Rational up = (k + 1 <= n) ? Rational(k + 1) * z[k + 1] : Rational(0);
            z[k] = (up - uni_coeff(b, k)) / c;
        }
        uni_trim(z);
        return z;
    }

    int n = uni_deg(b) - uni_deg(a);
    if (n < 0) return std::nullopt; // only z = 0 could work, but b != 0

    // Coefficients of z' - a z - b must vanish for x^0 .. x^(deg b).
    std::size_t ncols = static_cast<std::size_t>(n) + 1;
    std::vector<SparseRowQ> rows;
    std::vector<Rational> rhs;
    for (int k = 0; k <= uni_deg(b); ++k) {
        SparseRowQ row;
        if (k + 1 <= n) row.emplace_back(k + 1, Rational(k + 1));
        for (int i = 0; i <= n; ++i) {
            int j = k - i; // a_j z_i contributes to x^k
            if (j >= 0 && j <= uni_deg(a) && a[j] != 0) {
                Rational v = -a[j];
                bool merged = false;
                for (auto& [c2, q] : row)
                    if (c2 == static_cast<std::size_t>(i)) {
                        q += v;
                        merged = true;
                    }
                if (!merged) row.emplace_back(i, v);
            }
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        rows.push_back(std::move(row));
        rhs.push_back(uni_coeff(b, k));
    }
    SolveOutcome out = solve_system(rows, rhs, ncols);
    if (!out.feasible) return std::nullopt;
    UniPoly z = out.solution;
    uni_trim(z);
    return z;
}

inline std::optional<Polynomial> solve_ode(const Polynomial& a,
                                           const Polynomial& b) {
    if (!same_context(a.context(), b.context())) throw context_mismatch();
    auto z = solve_ode(to_unipoly(a), to_unipoly(b));
    if (!z) return std::nullopt;
    return from_unipoly(*z, a.context());
}

// Basis of { k in Q^r : z' = a z + sum_j k_j b_j has a polynomial solution }.
struct SolvableSubspace {
    std::size_t dimension = 0;
    std::vector<std::vector<Rational>> basis; // r-tuples
};

// The pair set {(z, k)} is itself a linear space. For deg a >= 1 the degree
// of any solution is bounded by max_j deg b_j - deg a, so the kernel of the
// exact system [L | -B] projected onto the k-coordinates is the answer; for
// deg a <= 0 every right-hand side is solvable and the space is full.
inline SolvableSubspace solvable_subspace(const UniPoly& a_in,
                                          const std::vector<UniPoly>& bs_in) {
    if (bs_in.empty()) throw input_error("solvable_subspace: empty b list");
    UniPoly a = a_in;
    uni_trim(a);
    std::size_t r = bs_in.size();

    SolvableSubspace out;
    if (uni_deg(a) <= 0) { // a in K: always solvable
        out.dimension = r;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Rational> e(r, Rational(0));
            e[j] = 1;
            out.basis.push_back(std::move(e));
        }
        return out;
    }

    int maxdeg = kDegNegInf;
    std::vector<UniPoly> bs = bs_in;
    for (auto& b : bs) {
        uni_trim(b);
        maxdeg = std::max(maxdeg, uni_deg(b));
    }
    int n = (maxdeg == kDegNegInf) ? -1 : maxdeg - uni_deg(a); // deg z bound
    std::size_t nz = n >= 0 ? static_cast<std::size_t>(n) + 1 : 0;
    std::size_t ncols = nz + r; // z_0..z_n then k_1..k_r

    int maxrow = std::max(maxdeg, n + uni_deg(a));
    std::vector<SparseRowQ> rows;
    for (int k = 0; k <= maxrow; ++k) {
        std::vector<Rational> dense(ncols, Rational(0));
        if (k + 1 <= n) dense[k + 1] += Rational(k + 1); // z'
        for (int i = 0; i <= n; ++i) {
            int j = k - i;
            if (j >= 0 && j <= uni_deg(a)) dense[i] -= a[j]; // -a z
        }
        for (std::size_t j = 0; j < r; ++j)
            dense[nz + j] -= uni_coeff(bs[j], k); // -sum k_j b_j
        SparseRowQ row;
        for (std::size_t c = 0; c < ncols; ++c)
            if (dense[c] != 0) row.emplace_back(c, dense[c]);
        if (!row.empty()) rows.push_back(std::move(row));
    }

    auto kern = kernel_basis(rows, ncols);
    std::vector<std::vector<Rational>> projected;
    for (const auto& v : kern)
        projected.emplace_back(v.begin() + nz, v.end());
    out.basis = row_space_basis(projected, r);
    out.dimension = out.basis.size();
    return out;
}

inline SolvableSubspace solvable_subspace(const Polynomial& a,
                                          const std::vector<Polynomial>& bs) {
    std::vector<UniPoly> ubs;
    for (const auto& b : bs) {
        if (!same_context(a.context(), b.context())) throw context_mismatch();
        ubs.push_back(to_unipoly(b));
    }
    return solvable_subspace(to_unipoly(a), ubs);
}

} // namespace derivlab

#endif
