#ifndef DERIVLAB_RESONANCE_HPP
#define DERIVLAB_RESONANCE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "linear_ode.hpp"

namespace derivlab {

// Nonzero non-negative integer relations sum_i l_i a_i(x) = 0, enumerated
// up to |l| = sum l_i <= bound.
struct ResonanceSet {
    std::size_t arity = 0;
    std::vector<std::vector<unsigned>> relations;
    std::vector<std::vector<unsigned>> primitive; // gcd-reduced, deduplicated
    std::size_t kernel_dimension = 0;
};

// Rational kernel of (l_1..l_s) -> sum l_i a_i first (rows = x-coefficients),
// then a scan over the free coordinates of the reduced kernel basis. Every
// valid relation restricts to free coordinates in {0..bound}, so the scan is
// complete up to the bound.
inline ResonanceSet positive_resonances(const std::vector<UniPoly>& as_in,
                                        unsigned bound) {
    if (as_in.empty()) throw input_error("positive_resonances: empty input");
    std::size_t s = as_in.size();
    std::vector<UniPoly> as = as_in;
    std::size_t height = 0;
    for (auto& a : as) {
        uni_trim(a);
        height = std::max(height, a.size());
    }

    std::vector<SparseRowQ> rows;
    for (std::size_t p = 0; p < height; ++p) {
        SparseRowQ row;
        for (std::size_t i = 0; i < s; ++i)
            if (p < as[i].size() && as[i][p] != 0) row.emplace_back(i, as[i][p]);
        if (!row.empty()) rows.push_back(std::move(row));
    }

    auto kern = kernel_basis(rows, s); // vector j: 1 at free col j, 0 at others
    ResonanceSet out;
    out.arity = s;
    out.kernel_dimension = kern.size();
    if (kern.empty()) return out;

    std::set<std::vector<unsigned>> found;
    std::size_t t = kern.size();
    std::vector<unsigned> free_vals(t, 0);
    while (true) {
        std::vector<Rational> v(s, Rational(0));
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t i = 0; i < s; ++i)
                v[i] += Rational(free_vals[j]) * kern[j][i];
        bool ok = true;
        unsigned total = 0;
        std::vector<unsigned> l(s, 0);
        for (std::size_t i = 0; i < s && ok; ++i) {
            if (v[i] < 0 || !is_integer(v[i])) ok = false;
            else {
                l[i] = static_cast<unsigned>(rat_num(v[i]));
                total += l[i];
            }
        }
        if (ok && total > 0 && total <= bound) found.insert(std::move(l));

        // next free-coordinate tuple in {0..bound}^t
        std::size_t j = 0;
        while (j < t && free_vals[j] == bound) free_vals[j++] = 0;
        if (j == t) break;
        ++free_vals[j];
    }

    out.relations.assign(found.begin(), found.end());
    std::set<std::vector<unsigned>> prim;
    for (auto l : out.relations) {
        unsigned g = 0;
        for (auto e : l) g = static_cast<unsigned>(std::gcd(g, e));
        for (auto& e : l) e /= g;
        prim.insert(std::move(l));
    }
    out.primitive.assign(prim.begin(), prim.end());
    return out;
}

inline ResonanceSet positive_resonances(const std::vector<Polynomial>& as,
                                        unsigned bound) {
    std::vector<UniPoly> u;
    for (const auto& a : as) u.push_back(to_unipoly(a));
    return positive_resonances(u, bound);
}

} // namespace derivlab

#endif
