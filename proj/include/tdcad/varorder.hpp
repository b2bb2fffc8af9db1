#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tdcad/errors.hpp"

namespace tdcad {

// Variables are 1-based positions in an ordered list; position 1 is the
// smallest variable. The level of a polynomial is the position of its main
// variable (0 for constants).
using Var = int;

class VarOrder {
public:
    explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
        for (int i = 0; i < (int)names_.size(); ++i) {
            if (names_[i].empty()) throw MathError("empty variable name");
            auto [it, fresh] = index_.emplace(names_[i], i + 1);
            if (!fresh) throw MathError("duplicate variable name: " + names_[i]);
        }
    }

    int size() const { return (int)names_.size(); }
    const std::string& name(Var v) const {
        if (v < 1 || v > size()) throw MathError("variable out of range");
        return names_[v - 1];
    }
    Var find(const std::string& name) const {  // 0 when absent
        auto it = index_.find(name);
        return it == index_.end() ? 0 : it->second;
    }
    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const VarOrder& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, Var> index_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

inline VarOrderPtr make_order(std::vector<std::string> names) {
    return std::make_shared<const VarOrder>(std::move(names));
}

}  // namespace tdcad
