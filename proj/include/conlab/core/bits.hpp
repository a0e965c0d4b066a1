#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "conlab/core/names.hpp"

namespace conlab {

/// Bitset over at most 64 vertices or candidates.
using Mask = std::uint64_t;

constexpr std::size_t kMaxMaskBits = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

constexpr bool contains(Mask m, std::size_t i) { return (m >> i) & 1U; }

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<Id> mask_members(Mask m) {
    std::vector<Id> out;
    while (m != 0) {
        out.push_back(static_cast<Id>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(const std::vector<Id>& ids) {
    Mask m = 0;
    for (Id i : ids) m |= bit(i);
    return m;
}

/// Visits every k-subset of the members of `universe` as a mask, in
/// lexicographic order of the sorted member lists. Stops when `fn` returns true
/// and reports whether it did.
template <typename Fn>
bool for_each_subset_of_size(Mask universe, std::size_t k, Fn&& fn) {
    const auto members = mask_members(universe);
    const std::size_t n = members.size();
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (std::size_t i : idx) m |= bit(members[i]);
        if (fn(m)) return true;
        // Advance to the next combination.
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Subsets of size 0, 1, ..., max_size, each size in lexicographic order.
template <typename Fn>
bool for_each_subset_up_to(Mask universe, std::size_t max_size, Fn&& fn) {
    const std::size_t n = static_cast<std::size_t>(popcount(universe));
    for (std::size_t k = 0; k <= max_size && k <= n; ++k) {
        if (for_each_subset_of_size(universe, k, fn)) return true;
    }
    return false;
}

/// Visits index combinations (i_0 < ... < i_{k-1}) of {0..n-1} in
/// lexicographic order; for universes beyond 64 elements (e.g. arc lists).
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Visits non-decreasing index tuples (multisets) of length k over {0..n-1}
/// with per-index multiplicity caps, in lexicographic order.
template <typename Fn>
bool for_each_multiset(const std::vector<std::int64_t>& caps, std::size_t k, Fn&& fn) {
    const std::size_t n = caps.size();
    std::vector<std::size_t> tuple;
    tuple.reserve(k);
    std::vector<std::int64_t> used(n, 0);
    // Depth-first in lexicographic order.
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (tuple.size() == k) return fn(static_cast<const std::vector<std::size_t>&>(tuple));
        for (std::size_t i = start; i < n; ++i) {
            if (used[i] >= caps[i]) continue;
            ++used[i];
            tuple.push_back(i);
            const bool stop = self(self, i);
            tuple.pop_back();
            --used[i];
            if (stop) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace conlab
