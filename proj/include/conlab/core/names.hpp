#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conlab/core/errors.hpp"

namespace conlab {

/// Index of a candidate or vertex inside its owning instance. Indices follow
/// the bytewise order of the names, so index order is lexicographic order.
using Id = std::uint32_t;

inline bool is_token(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    });
}

/// Sorted, duplicate-free list of tokens with name <-> index lookup.
class NameIndex {
public:
    NameIndex() = default;

    /// Accepts names in any order; rejects invalid tokens and duplicates.
    explicit NameIndex(std::vector<std::string> names) : names_(std::move(names)) {
        for (const auto& n : names_) {
            if (!is_token(n)) throw InputError("invalid name '" + n + "'");
        }
        std::sort(names_.begin(), names_.end());
        if (auto it = std::adjacent_find(names_.begin(), names_.end()); it != names_.end()) {
            throw InputError("duplicate name '" + *it + "'");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::string& name(Id i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<Id> find(std::string_view name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name,
                                   [](const std::string& a, std::string_view b) { return a < b; });
        if (it == names_.end() || *it != name) return std::nullopt;
        return static_cast<Id>(it - names_.begin());
    }

    Id at(std::string_view name) const {
        if (auto id = find(name)) return *id;
        throw InputError("unknown name '" + std::string(name) + "'");
    }

    bool operator==(const NameIndex&) const = default;

private:
    std::vector<std::string> names_;
};

}  // namespace conlab
