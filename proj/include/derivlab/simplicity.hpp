#ifndef DERIVLAB_SIMPLICITY_HPP
#define DERIVLAB_SIMPLICITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "linear_ode.hpp"

namespace derivlab {

struct SimplicityVerdict {
    bool simple = false;
    std::optional<std::size_t> failing_group;
    std::optional<std::vector<Rational>> failing_k; // nonzero k with solvable ODE
    std::string reason;                             // citation tag
};

// Simplicity of a Shamsuddin derivation in grouped form. A group passes iff
// deg a_i >= 1 and no nonzero k makes z' = a_i z + sum k_j b_{i,j} solvable
// in K[x]; both facts together characterize simplicity for this family.
inline SimplicityVerdict is_simple_shamsuddin(const ShamsuddinForm& F) {
    std::size_t x = F.ctx->distinguished_index();
    for (std::size_t i = 0; i < F.groups.size(); ++i) {
        const ShamsuddinGroup& g = F.groups[i];
        if (g.a.degree_in(x) < 1) {
            SimplicityVerdict v;
            v.simple = false;
            v.failing_group = i;
            v.reason = "Lemma 2.1: deg a < 1";
            return v;
        }
        SolvableSubspace S = solvable_subspace(g.a, g.bs);
        if (S.dimension > 0) {
            SimplicityVerdict v;
            v.simple = false;
            v.failing_group = i;
            v.failing_k = S.basis.front();
            v.reason = "solvable z' = a z + sum k_j b_j";
            return v;
        }
    }
    SimplicityVerdict v;
    v.simple = true;
    v.reason = "deg a_i >= 1 and trivial solvable subspace for every group";
    return v;
}

// Fast sufficient condition: deg a_i > deg b_{i,j} for every slot and the
// b_{i,j} linearly independent over K, for every group.
inline bool sufficient_simple_cor23(const ShamsuddinForm& F) {
    std::size_t x = F.ctx->distinguished_index();
    for (const auto& g : F.groups) {
        int da = g.a.degree_in(x);
        for (const auto& b : g.bs)
            if (da <= b.degree_in(x)) return false;
        // Rank of the b coefficient matrix must equal the slot count.
        std::vector<std::vector<Rational>> vecs;
        std::size_t width = 0;
        std::vector<UniPoly> ubs;
        for (const auto& b : g.bs) {
            ubs.push_back(to_unipoly(b));
            width = std::max(width, ubs.back().size());
        }
        if (width == 0) return false; // some b is zero, hence dependent
        for (const auto& u : ubs) {
            std::vector<Rational> v(width, Rational(0));
            for (std::size_t k = 0; k < u.size(); ++k) v[k] = u[k];
            vecs.push_back(std::move(v));
        }
        if (row_space_basis(vecs, width).size() != g.bs.size()) return false;
    }
    return true;
}

} // namespace derivlab

#endif
