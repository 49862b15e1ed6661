#ifndef DERIVLAB_CONTEXT_HPP
#define DERIVLAB_CONTEXT_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace derivlab {

// Ordered variable context. The distinguished variable is the "time"
// variable x on which derivations act with image 1.
class VarContext {
public:
    VarContext(std::vector<std::string> names, std::size_t distinguished = 0)
        : names_(std::move(names)), distinguished_(distinguished) {
        if (names_.empty())
            throw input_error("variable context must be nonempty");
        if (distinguished_ >= names_.size())
            throw input_error("distinguished variable index out of range");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw input_error("duplicate variable: " + names_[i]);
    }

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t distinguished_index() const { return distinguished_; }
    const std::string& distinguished_name() const { return names_[distinguished_]; }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }

    std::size_t index_of(const std::string& name) const {
        auto i = find(name);
        if (!i) throw unknown_variable(name);
        return *i;
    }

    bool operator==(const VarContext& other) const {
        return names_ == other.names_ && distinguished_ == other.distinguished_;
    }
    bool operator!=(const VarContext& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
    std::size_t distinguished_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::vector<std::string> names,
                               std::size_t distinguished = 0) {
    return std::make_shared<const VarContext>(std::move(names), distinguished);
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace derivlab

#endif
