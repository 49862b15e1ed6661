#ifndef DERIVLAB_DERIVATION_HPP
#define DERIVLAB_DERIVATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace derivlab {

// A K-derivation of the polynomial ring, given by its images on all
// generators: D(f) = sum_v images[v] * df/dv.
class Derivation {
public:
    Derivation(ContextPtr ctx, std::vector<Polynomial> images)
        : ctx_(std::move(ctx)), images_(std::move(images)) {
        if (images_.size() != ctx_->arity())
            throw input_error("derivation needs one image per variable");
        for (const auto& p : images_)
            if (!same_context(p.context(), ctx_)) throw context_mismatch();
    }

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(std::size_t v) const { return images_.at(v); }

    bool acts_as_time_on_distinguished() const {
        return image(ctx_->distinguished_index()) ==
               Polynomial::constant(ctx_, 1);
    }

    Polynomial apply(const Polynomial& f) const {
        if (!same_context(f.context(), ctx_)) throw context_mismatch();
        Polynomial out = Polynomial::zero(ctx_);
        for (std::size_t v = 0; v < images_.size(); ++v) {
            Polynomial pf = f.partial(v);
            if (!pf.is_zero()) out = out + images_[v] * pf;
        }
        return out;
    }

    Polynomial iterate(const Polynomial& f, unsigned m) const {
        if (m == 0) throw input_error("iteration count must be >= 1");
        Polynomial out = f;
        for (unsigned i = 0; i < m; ++i) out = apply(out);
        return out;
    }

private:
    ContextPtr ctx_;
    std::vector<Polynomial> images_;
};

// One group of a Shamsuddin derivation: shared a(x) and the slot
// polynomials b_{i,1},...,b_{i,r_i}, all univariate in x.
struct ShamsuddinGroup {
    Polynomial a;
    std::vector<Polynomial> bs;
    std::vector<std::size_t> var_indices; // original context indices, slot order
};

// Grouped normal form: pairwise distinct a_i, groups in first-occurrence
// order, slots in variable order.
struct ShamsuddinForm {
    ContextPtr ctx;
    std::vector<ShamsuddinGroup> groups;
};

// Triangular shape D(x_i) = a_i x_i + b_i with a_i, b_i in K[x_1..x_{i-1}].
// Entry 0 corresponds to x_2 (the first non-distinguished variable).
struct TriangularForm {
    ContextPtr ctx;
    std::vector<Polynomial> as;
    std::vector<Polynomial> bs;
};

// Present iff D(x) = 1 and every other image is a(x)*v + b(x) with a, b
// univariate in the distinguished variable.
inline std::optional<ShamsuddinForm> as_shamsuddin(const Derivation& D) {
    const ContextPtr& ctx = D.context();
    std::size_t x = ctx->distinguished_index();
    if (!D.acts_as_time_on_distinguished()) return std::nullopt;

    ShamsuddinForm form{ctx, {}};
    for (std::size_t v = 0; v < ctx->arity(); ++v) {
        if (v == x) continue;
        const Polynomial& img = D.image(v);
        if (img.degree_in(v) > 1) return std::nullopt;
        Polynomial a = img.coefficient_of(v, 1);
        Polynomial b = img.coefficient_of(v, 0);
        if (!a.is_univariate_in(x) || !b.is_univariate_in(x)) return std::nullopt;
        if (img != a * Polynomial::variable(ctx, v) + b) return std::nullopt;
        bool placed = false;
        for (auto& g : form.groups)
            if (g.a == a) {
                g.bs.push_back(b);
                g.var_indices.push_back(v);
                placed = true;
                break;
            }
        if (!placed) form.groups.push_back({a, {b}, {v}});
    }
    if (form.groups.empty()) return std::nullopt; // no y-variables at all
    return form;
}

// Present iff D(x_1) = 1 (the distinguished variable must be first) and for
// each later variable the image is affine in it with no forward references.
inline std::optional<TriangularForm> as_triangular(const Derivation& D) {
    const ContextPtr& ctx = D.context();
    if (ctx->distinguished_index() != 0) return std::nullopt;
    if (!D.acts_as_time_on_distinguished()) return std::nullopt;

    TriangularForm form{ctx, {}, {}};
    for (std::size_t v = 1; v < ctx->arity(); ++v) {
        const Polynomial& img = D.image(v);
        if (img.degree_in(v) > 1) return std::nullopt;
        for (std::size_t w = v; w < ctx->arity(); ++w)
            if (w != v && img.degree_in(w) > 0) return std::nullopt;
        Polynomial a = img.coefficient_of(v, 1);
        Polynomial b = img.coefficient_of(v, 0);
        if (img != a * Polynomial::variable(ctx, v) + b) return std::nullopt;
        form.as.push_back(std::move(a));
        form.bs.push_back(std::move(b));
    }
    if (form.as.empty()) return std::nullopt;
    return form;
}

// The restriction D_i to {x, y_{i,1},...,y_{i,r_i}}.
inline Derivation restrict_to_group(const ShamsuddinForm& F, std::size_t i) {
    if (i >= F.groups.size()) throw input_error("group index out of range");
    const ShamsuddinGroup& g = F.groups[i];
    std::size_t x = F.ctx->distinguished_index();

    std::vector<std::string> names;
    names.push_back(F.ctx->name(x));
    for (auto v : g.var_indices) names.push_back(F.ctx->name(v));
    ContextPtr sub = make_context(std::move(names), 0);

    // Re-map a univariate-in-x polynomial into the sub-context.
    auto remap = [&](const Polynomial& p) {
        Polynomial out = Polynomial::zero(sub);
        for (const auto& [m, c] : p.terms()) {
            Monomial n(sub->arity(), 0);
            n[0] = m[x];
            out = out + Polynomial::term(sub, n, c);
        }
        return out;
    };

    std::vector<Polynomial> images;
    images.push_back(Polynomial::constant(sub, 1));
    for (std::size_t j = 0; j < g.bs.size(); ++j)
        images.push_back(remap(g.a) * Polynomial::variable(sub, j + 1) +
                         remap(g.bs[j]));
    return Derivation(sub, std::move(images));
}

// Strictly triangular (all a_i = 0) is equivalent to local nilpotency for
// this family: with some a_i != 0 the x_i-coefficient of D^k(x_i) satisfies
// c_{k+1} = D(c_k) + c_k a_i and can never vanish, since deg(c_k a_i)
// strictly dominates the derivative part; with all a_i = 0, induction on i
// gives D^m(x_i) = 0 on generators and hence on the whole ring.
inline bool is_locally_nilpotent_triangular(const TriangularForm& T) {
    for (const auto& a : T.as)
        if (!a.is_zero()) return false;
    return true;
}

// Reassemble the derivation a Shamsuddin form describes.
inline Derivation from_shamsuddin(const ShamsuddinForm& F) {
    std::size_t x = F.ctx->distinguished_index();
    std::vector<Polynomial> images(F.ctx->arity(), Polynomial::zero(F.ctx));
    images[x] = Polynomial::constant(F.ctx, 1);
    for (const auto& g : F.groups)
        for (std::size_t j = 0; j < g.bs.size(); ++j) {
            std::size_t v = g.var_indices[j];
            images[v] = g.a * Polynomial::variable(F.ctx, v) + g.bs[j];
        }
    return Derivation(F.ctx, std::move(images));
}

} // namespace derivlab

#endif
