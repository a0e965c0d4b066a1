#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "conlab/core/errors.hpp"
#include "conlab/core/names.hpp"

namespace conlab {

/// Strict total order over candidate ids, best first.
class Ranking {
public:
    Ranking() = default;
    explicit Ranking(std::vector<Id> order) : order_(std::move(order)) {}

    /// The ranking 0 > 1 > ... > m-1.
    static Ranking identity(std::size_t m) {
        std::vector<Id> order(m);
        std::iota(order.begin(), order.end(), Id{0});
        return Ranking(std::move(order));
    }

    const std::vector<Id>& order() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_.size(); }
    Id operator[](std::size_t i) const { return order_[i]; }
    auto begin() const noexcept { return order_.begin(); }
    auto end() const noexcept { return order_.end(); }

    /// True iff this ranking is a permutation of {0, ..., m-1}.
    bool is_permutation_of(std::size_t m) const {
        if (order_.size() != m) return false;
        std::vector<bool> seen(m, false);
        for (Id c : order_) {
            if (c >= m || seen[c]) return false;
            seen[c] = true;
        }
        return true;
    }

    /// pos[c] = rank position of c. Requires is_permutation_of(size()).
    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> pos(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
        return pos;
    }

    Ranking reversed() const { return Ranking(std::vector<Id>(order_.rbegin(), order_.rend())); }

    auto operator<=>(const Ranking&) const = default;
    bool operator==(const Ranking&) const = default;

private:
    std::vector<Id> order_;
};

inline void require_permutation(const Ranking& x, std::size_t m, const char* what = "ranking") {
    if (!x.is_permutation_of(m)) {
        throw DomainError(std::string(what) + " is not a ranking of the " + std::to_string(m) +
                          " candidates");
    }
}

/// Number of unordered pairs the two rankings order oppositely.
inline std::int64_t kendall_tau(const Ranking& x, const Ranking& y) {
    const std::size_t m = x.size();
    require_permutation(x, m, "first ranking");
    require_permutation(y, m, "second ranking");
    const auto pos = y.positions();
    std::int64_t inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (pos[x[i]] > pos[x[j]]) ++inversions;
        }
    }
    return inversions;
}

/// Ordered sequence of nonempty tiers partitioning the candidates; candidates
/// in one tier are tied.
class WeakOrder {
public:
    WeakOrder() = default;
    explicit WeakOrder(std::vector<std::vector<Id>> tiers) : tiers_(std::move(tiers)) {
        for (auto& t : tiers_) std::sort(t.begin(), t.end());
    }

    static WeakOrder from_ranking(const Ranking& x) {
        std::vector<std::vector<Id>> tiers;
        for (Id c : x) tiers.push_back({c});
        return WeakOrder(std::move(tiers));
    }

    const std::vector<std::vector<Id>>& tiers() const noexcept { return tiers_; }

    bool is_partition_of(std::size_t m) const {
        std::vector<bool> seen(m, false);
        std::size_t count = 0;
        for (const auto& t : tiers_) {
            if (t.empty()) return false;
            for (Id c : t) {
                if (c >= m || seen[c]) return false;
                seen[c] = true;
                ++count;
            }
        }
        return count == m;
    }

    /// tier[c] = index of the tier holding c.
    std::vector<std::size_t> tier_of(std::size_t m) const {
        std::vector<std::size_t> tier(m, 0);
        for (std::size_t i = 0; i < tiers_.size(); ++i) {
            for (Id c : tiers_[i]) tier[c] = i;
        }
        return tier;
    }

    bool operator==(const WeakOrder&) const = default;

private:
    std::vector<std::vector<Id>> tiers_;
};

// ---------------------------------------------------------------------------
// Text forms: "a>b>c" for rankings, "a=b>c" for weak orders.

inline std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto at = s.find(sep, start);
        parts.push_back(trim(s.substr(start, at == std::string_view::npos ? s.npos : at - start)));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return parts;
}

/// Parses "a > b > c" against the given names; must mention every name once.
inline Ranking parse_ranking(std::string_view text, const NameIndex& names) {
    std::vector<Id> order;
    if (!trim(text).empty()) {
        for (auto part : split(text, '>')) order.push_back(names.at(part));
    }
    Ranking x(std::move(order));
    if (!x.is_permutation_of(names.size())) {
        throw InputError("'" + std::string(text) + "' does not rank every candidate exactly once");
    }
    return x;
}

inline std::string format_ranking(const Ranking& x, const NameIndex& names) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i > 0) out += '>';
        out += names.name(x[i]);
    }
    return out;
}

/// Parses "a=b > c" (ties with '='); a plain ranking gives singleton tiers.
inline WeakOrder parse_weak_order(std::string_view text, const NameIndex& names) {
    std::vector<std::vector<Id>> tiers;
    if (!trim(text).empty()) {
        for (auto tier_text : split(text, '>')) {
            std::vector<Id> tier;
            for (auto part : split(tier_text, '=')) tier.push_back(names.at(part));
            tiers.push_back(std::move(tier));
        }
    }
    WeakOrder w(std::move(tiers));
    if (!w.is_partition_of(names.size())) {
        throw InputError("'" + std::string(text) + "' does not partition the candidates");
    }
    return w;
}

inline std::string format_weak_order(const WeakOrder& w, const NameIndex& names) {
    std::string out;
    for (std::size_t i = 0; i < w.tiers().size(); ++i) {
        if (i > 0) out += '>';
        const auto& tier = w.tiers()[i];
        for (std::size_t j = 0; j < tier.size(); ++j) {
            if (j > 0) out += '=';
            out += names.name(tier[j]);
        }
    }
    return out;
}

}  // namespace conlab
