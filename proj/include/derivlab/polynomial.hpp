#ifndef DERIVLAB_POLYNOMIAL_HPP
#define DERIVLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "context.hpp"
#include "rational.hpp"

namespace derivlab {

// Degree of the zero polynomial. Distinct from 0 so that the degree
// comparisons deg 0 < deg c < deg x behave as expected.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

// Exponent tuple, one entry per context variable.
using Monomial = std::vector<std::uint32_t>;

inline unsigned monomial_total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

// Graded lexicographic order by context variable order.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = monomial_total_degree(a);
        unsigned db = monomial_total_degree(b);
        if (da != db) return da < db;
        return a < b; // lexicographic on exponent tuples
    }
};

// Sparse exact multivariate polynomial over Q. Immutable value type: all
// operations return fresh polynomials in canonical form (no zero terms).
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(ContextPtr ctx, const Rational& c) {
        Polynomial p(std::move(ctx));
        if (c != 0) p.terms_[Monomial(p.ctx_->arity(), 0)] = c;
        return p;
    }

    static Polynomial variable(ContextPtr ctx, std::size_t index) {
        Polynomial p(std::move(ctx));
        Monomial m(p.ctx_->arity(), 0);
        m.at(index) = 1;
        p.terms_[m] = 1;
        return p;
    }

    static Polynomial term(ContextPtr ctx, Monomial m, const Rational& c) {
        Polynomial p(std::move(ctx));
        if (m.size() != p.ctx_->arity())
            throw input_error("monomial arity mismatch");
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && monomial_total_degree(terms_.begin()->first) == 0);
    }

    // The constant term (0 if absent).
    Rational constant_term() const {
        Monomial one(ctx_->arity(), 0);
        auto it = terms_.find(one);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // True if only the given variable (or none) occurs.
    bool is_univariate_in(std::size_t index) const {
        for (const auto& [m, c] : terms_)
            for (std::size_t v = 0; v < m.size(); ++v)
                if (v != index && m[v] != 0) return false;
        return true;
    }

    std::set<std::size_t> support_variables() const {
        std::set<std::size_t> out;
        for (const auto& [m, c] : terms_)
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v] != 0) out.insert(v);
        return out;
    }

    int total_degree() const {
        if (terms_.empty()) return kDegNegInf;
        return static_cast<int>(monomial_total_degree(terms_.rbegin()->first));
    }

    int degree_in(std::size_t index) const {
        check_var(index);
        if (terms_.empty()) return kDegNegInf;
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
        return static_cast<int>(d);
    }

    // Coefficient of v^k: a polynomial in the remaining variables (same
    // context, exponent of v zeroed).
    Polynomial coefficient_of(std::size_t index, unsigned k) const {
        check_var(index);
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m[index] != k) continue;
            Monomial n = m;
            n[index] = 0;
            out.terms_[std::move(n)] = c;
        }
        return out;
    }

    Polynomial substitute_zero(const std::vector<std::size_t>& vars) const {
        for (auto v : vars) check_var(v);
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            bool kill = false;
            for (auto v : vars)
                if (m[v] != 0) { kill = true; break; }
            if (!kill) out.add_term(m, c);
        }
        return out;
    }

    Polynomial partial(std::size_t index) const {
        check_var(index);
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m[index] == 0) continue;
            Monomial n = m;
            n[index] -= 1;
            out.add_term(n, c * m[index]);
        }
        return out;
    }

    Polynomial operator+(const Polynomial& rhs) const {
        require_same(rhs);
        Polynomial out(*this);
        for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    Polynomial operator-(const Polynomial& rhs) const { return *this + (-rhs); }

    Polynomial operator*(const Polynomial& rhs) const {
        require_same(rhs);
        Polynomial out(ctx_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : rhs.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial out(ctx_);
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
        return out;
    }

    Polynomial pow(unsigned e) const {
        Polynomial out = constant(ctx_, 1);
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    bool operator==(const Polynomial& rhs) const {
        return same_context(ctx_, rhs.ctx_) && terms_ == rhs.terms_;
    }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

private:
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw input_error("null context");
    }

    void check_var(std::size_t index) const {
        if (index >= ctx_->arity())
            throw unknown_variable("#" + std::to_string(index));
    }

    void require_same(const Polynomial& rhs) const {
        if (!same_context(ctx_, rhs.ctx_)) throw context_mismatch();
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ContextPtr ctx_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace derivlab

#endif
