#ifndef DERIVLAB_MEMBERSHIP_HPP
#define DERIVLAB_MEMBERSHIP_HPP

#include <chrono>
#include <map>
#include <optional>
#include <vector>

#include "derivation.hpp"
#include "linalg.hpp"

namespace derivlab {

// Per-variable degree caps for the unknown preimage.
struct DegreeBounds {
    std::vector<unsigned> max_exp; // one entry per context variable

    static DegreeBounds uniform(const ContextPtr& ctx, unsigned n) {
        return DegreeBounds{std::vector<unsigned>(ctx->arity(), n)};
    }
};

struct BoundedCertificate {
    enum class Outcome { Feasible, InfeasibleWithinBounds };

    Polynomial target;
    DegreeBounds bounds;
    Outcome outcome = Outcome::InfeasibleWithinBounds;
    std::optional<Polynomial> preimage; // feasible only; D(preimage) == target
    std::size_t rows = 0, cols = 0;
    long long elapsed_ms = 0;
    bool witness_check = false;
    bool contradiction = false; // witness check found a preimage
};

namespace detail {

inline constexpr std::size_t kMaxUnknowns = 10'000'000;

// Column monomials in mixed-radix order within the bounds.
inline std::vector<Monomial> bounded_monomials(const ContextPtr& ctx,
                                               const DegreeBounds& bounds,
                                               bool include_constant) {
    if (bounds.max_exp.size() != ctx->arity())
        throw input_error("degree bounds arity mismatch");
    std::size_t count = 1;
    for (auto b : bounds.max_exp) {
        count *= static_cast<std::size_t>(b) + 1;
        if (count > kMaxUnknowns)
            throw resource_limit_error(
                "degree bounds produce more than 10^7 unknowns");
    }
    std::vector<Monomial> out;
    out.reserve(count);
    Monomial m(ctx->arity(), 0);
    while (true) {
        if (include_constant || monomial_total_degree(m) > 0) out.push_back(m);
        std::size_t v = 0;
        while (v < m.size() && m[v] == bounds.max_exp[v]) m[v++] = 0;
        if (v == m.size()) break;
        ++m[v];
    }
    return out;
}

struct AssembledSystem {
    std::vector<Monomial> columns;
    std::vector<SparseRowQ> rows;
    std::vector<Rational> rhs;
};

// The equations are the coefficients of apply(D, f) - g over every monomial
// actually produced by applying D to a bounded monomial (plus those of g);
// the row space comes from symbolic application, not a degree formula.
inline AssembledSystem assemble(const Derivation& D, const Polynomial& g,
                                const DegreeBounds& bounds,
                                bool include_constant) {
    if (!same_context(D.context(), g.context())) throw context_mismatch();
    AssembledSystem sys;
    sys.columns = bounded_monomials(D.context(), bounds, include_constant);

    std::map<Monomial, std::size_t, GradedLex> row_of;
    auto row_id = [&](const Monomial& m) {
        auto [it, inserted] = row_of.emplace(m, row_of.size());
        if (inserted) sys.rows.emplace_back();
        return it->second;
    };

    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
        Polynomial img =
            D.apply(Polynomial::term(D.context(), sys.columns[col], 1));
        for (const auto& [m, c] : img.terms())
            sys.rows[row_id(m)].emplace_back(col, c);
    }
    for (const auto& [m, c] : g.terms()) row_id(m);

    sys.rhs.assign(sys.rows.size(), Rational(0));
    for (const auto& [m, c] : g.terms()) sys.rhs[row_of.at(m)] = c;
    return sys;
}

} // namespace detail

// Exact feasibility of D(f) = g over all f within the degree bounds.
inline BoundedCertificate preimage_bounded(const Derivation& D,
                                           const Polynomial& g,
                                           const DegreeBounds& bounds) {
    auto t0 = std::chrono::steady_clock::now();
    auto sys = detail::assemble(D, g, bounds, /*include_constant=*/true);
    SolveOutcome sol = solve_system(sys.rows, sys.rhs, sys.columns.size());

    BoundedCertificate cert{g, bounds};
    cert.rows = sys.rows.size();
    cert.cols = sys.columns.size();
    if (sol.feasible) {
        Polynomial f = Polynomial::zero(D.context());
        for (std::size_t col = 0; col < sys.columns.size(); ++col)
            if (sol.solution[col] != 0)
                f = f + Polynomial::term(D.context(), sys.columns[col],
                                         sol.solution[col]);
        cert.outcome = BoundedCertificate::Outcome::Feasible;
        cert.preimage = std::move(f);
    } else {
        cert.outcome = BoundedCertificate::Outcome::InfeasibleWithinBounds;
    }
    cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return cert;
}

// Basis of { f within bounds : D(f) = 0 }, constants excluded.
inline std::vector<Polynomial> kernel_bounded(const Derivation& D,
                                              const DegreeBounds& bounds) {
    auto sys = detail::assemble(D, Polynomial::zero(D.context()), bounds,
                                /*include_constant=*/false);
    auto kern = kernel_basis(sys.rows, sys.columns.size());
    std::vector<Polynomial> out;
    for (const auto& v : kern) {
        Polynomial f = Polynomial::zero(D.context());
        for (std::size_t col = 0; col < sys.columns.size(); ++col)
            if (v[col] != 0)
                f = f + Polynomial::term(D.context(), sys.columns[col], v[col]);
        out.push_back(std::move(f));
    }
    return out;
}

// Same computation as preimage_bounded, annotated as a witness check: a
// feasible outcome contradicts the caller's non-membership claim.
inline BoundedCertificate check_nonmembership(const Derivation& D,
                                              const Polynomial& g,
                                              const DegreeBounds& bounds) {
    BoundedCertificate cert = preimage_bounded(D, g, bounds);
    cert.witness_check = true;
    cert.contradiction =
        cert.outcome == BoundedCertificate::Outcome::Feasible;
    return cert;
}

} // namespace derivlab

#endif
