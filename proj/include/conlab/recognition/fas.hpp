#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/solvers/ordering_dp.hpp"

namespace conlab {

// Feedback arc sets. Every predicate takes an `alive` vertex mask so the same
// code answers questions about G - W without rebuilding the graph; arcs with
// an endpoint outside `alive` are ignored.

inline void require_arcs_of(const Digraph& g, const ArcSet& x) {
    if (!g.contains_arcs(x)) throw DomainError("arc set contains arcs outside the graph");
}

/// Arcs of x with both endpoints in `alive`.
inline ArcSet arcs_within(const ArcSet& x, Mask alive) {
    ArcSet kept;
    for (const Arc& a : x) {
        if (contains(alive, a.from) && contains(alive, a.to)) kept.push_back(a);
    }
    return kept;
}

inline ArcSet arcs_within(const Digraph& g, Mask alive) { return arcs_within(g.arcs(), alive); }

inline bool is_fas(const Digraph& g, const ArcSet& x, Mask alive) {
    require_arcs_of(g, x);
    return is_acyclic(g.out_without(x), alive);
}

inline bool is_fas(const Digraph& g, const ArcSet& x) { return is_fas(g, x, g.all()); }

/// x is a fas and dropping any single arc of x breaks that.
inline bool is_minimal_fas(const Digraph& g, const ArcSet& x, Mask alive) {
    const ArcSet live = arcs_within(normalize(x), alive);
    if (!is_fas(g, live, alive)) return false;
    for (std::size_t i = 0; i < live.size(); ++i) {
        ArcSet smaller = live;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_fas(g, smaller, alive)) return false;
    }
    return true;
}

inline bool is_minimal_fas(const Digraph& g, const ArcSet& x) { return is_minimal_fas(g, x, g.all()); }

/// Smallest fas of G[alive] with at most `bound` arcs, searching arc subsets
/// by increasing size (lexicographic within a size). nullopt if none.
inline std::optional<ArcSet> smallest_fas_exhaustive(const Digraph& g, Mask alive, std::size_t bound,
                                                     const Limits& limits = {}) {
    const ArcSet arcs = arcs_within(g, alive);
    require_at_most(arcs.size(), limits.fas_exhaustive_arcs, "exhaustive fas arcs");
    std::uint64_t visited = 0;
    std::optional<ArcSet> found;
    for (std::size_t size = 0; size <= bound && size <= arcs.size() && !found; ++size) {
        for_each_combination(arcs.size(), size, [&](const std::vector<std::size_t>& idx) {
            if (++visited > limits.search_nodes) throw SizeLimitError("exhaustive fas search budget exhausted");
            ArcSet candidate;
            for (std::size_t i : idx) candidate.push_back(arcs[i]);
            if (is_acyclic(g.out_without(candidate), alive)) {
                found = std::move(candidate);
                return true;
            }
            return false;
        });
    }
    return found;
}

/// Minimum fas size of G[alive] as the fewest backward arcs over all vertex
/// orderings, by the subset DP.
inline std::size_t minimum_fas_size_by_ordering(const Digraph& g, Mask alive, const Limits& limits = {}) {
    const auto vertices = mask_members(alive & g.all());
    require_at_most(vertices.size(), limits.score_candidates, "fas ordering DP vertices");
    std::vector<Mask> in(vertices.size(), 0);  // compact indices
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (g.has_arc(vertices[j], vertices[i])) in[i] |= bit(j);
        }
    }
    // Placing c above the unplaced d with d -> c turns that arc backward.
    OrderingDp dp(vertices.size(), [&in](Id c, Mask placed) -> std::int64_t {
        return popcount(in[c] & ~placed);
    });
    return static_cast<std::size_t>(dp.optimum());
}

enum class FasMethod { automatic, exhaustive, ordering };

/// x is a fas of G[alive] and no fas of G[alive] is smaller.
inline bool is_minimum_fas(const Digraph& g, const ArcSet& x, Mask alive, FasMethod method = FasMethod::automatic,
                           const Limits& limits = {}) {
    const ArcSet live = arcs_within(normalize(x), alive);
    if (!is_fas(g, live, alive)) return false;
    if (live.empty()) return true;
    if (method == FasMethod::automatic) {
        const auto n = static_cast<std::size_t>(popcount(alive & g.all()));
        method = n <= limits.score_candidates ? FasMethod::ordering : FasMethod::exhaustive;
    }
    if (method == FasMethod::ordering) return minimum_fas_size_by_ordering(g, alive, limits) == live.size();
    return !smallest_fas_exhaustive(g, alive, live.size() - 1, limits).has_value();
}

inline bool is_minimum_fas(const Digraph& g, const ArcSet& x, FasMethod method = FasMethod::automatic,
                           const Limits& limits = {}) {
    require_arcs_of(g, x);
    return is_minimum_fas(g, x, g.all(), method, limits);
}

}  // namespace conlab
