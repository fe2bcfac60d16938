#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lndcert/util.hpp"

namespace lndcert {

/// Ordered variable list of an ambient polynomial ring, split into parameter
/// variables (coefficient-field generators, listed first) and main variables.
/// Immutable; shared by value handles across all objects built over it.
class VarTable {
public:
    VarTable(std::vector<std::string> params, std::vector<std::string> mains);

    static std::shared_ptr<const VarTable> make(std::vector<std::string> params,
                                                std::vector<std::string> mains);

    std::size_t size() const { return names_.size(); }
    std::size_t param_count() const { return param_count_; }
    std::size_t main_count() const { return names_.size() - param_count_; }

    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool is_param(std::size_t i) const { return i < param_count_; }
    /// Index of the j-th main variable.
    std::size_t main_index(std::size_t j) const { return param_count_ + j; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarTable& o) const {
        return param_count_ == o.param_count_ && names_ == o.names_;
    }

private:
    std::vector<std::string> names_;  // params first, then mains
    std::size_t param_count_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// True when both handles denote the same variable list (by identity or value).
inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_table(const VarTablePtr& a, const VarTablePtr& b, const char* where) {
    if (!same_table(a, b)) throw Error(std::string(where) + ": variable table mismatch");
}

}  // namespace lndcert
