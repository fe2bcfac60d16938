#include "lndcert/vartable.hpp"

#include <algorithm>

namespace lndcert {

VarTable::VarTable(std::vector<std::string> params, std::vector<std::string> mains)
    : param_count_(params.size()) {
    names_ = std::move(params);
    names_.insert(names_.end(), std::make_move_iterator(mains.begin()),
                  std::make_move_iterator(mains.end()));
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error("VarTable: empty variable name");
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) throw Error("VarTable: duplicate variable '" + names_[i] + "'");
        }
    }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> params,
                                               std::vector<std::string> mains) {
    return std::make_shared<const VarTable>(std::move(params), std::move(mains));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

}  // namespace lndcert
