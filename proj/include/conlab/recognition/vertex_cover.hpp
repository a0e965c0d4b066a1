#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "conlab/core/bits.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"

namespace conlab {

/// Every edge of G[alive] has an endpoint in x.
inline bool is_vertex_cover(const UndirectedGraph& g, Mask x, Mask alive) {
    if ((x & ~g.all()) != 0) throw DomainError("vertex set contains vertices outside the graph");
    for (Id u : mask_members(alive & ~x & g.all())) {
        if ((g.neighbours(u) & alive & ~x) != 0) return false;
    }
    return true;
}

inline bool is_vertex_cover(const UndirectedGraph& g, Mask x) { return is_vertex_cover(g, x, g.all()); }

inline bool is_minimal_vertex_cover(const UndirectedGraph& g, Mask x, Mask alive) {
    x &= alive;
    if (!is_vertex_cover(g, x, alive)) return false;
    for (Id v : mask_members(x)) {
        if (is_vertex_cover(g, x & ~bit(v), alive)) return false;
    }
    return true;
}

inline bool is_minimal_vertex_cover(const UndirectedGraph& g, Mask x) {
    return is_minimal_vertex_cover(g, x, g.all());
}

/// First vertex cover of G[alive] with at most `bound` vertices, by size then
/// lexicographically.
inline std::optional<Mask> smallest_vertex_cover(const UndirectedGraph& g, Mask alive, std::size_t bound,
                                                 const Limits& limits = {}) {
    std::uint64_t visited = 0;
    std::optional<Mask> found;
    for_each_subset_up_to(alive & g.all(), bound, [&](Mask candidate) {
        if (++visited > limits.search_nodes) throw SizeLimitError("vertex cover search budget exhausted");
        if (is_vertex_cover(g, candidate, alive)) {
            found = candidate;
            return true;
        }
        return false;
    });
    return found;
}

inline bool is_minimum_vertex_cover(const UndirectedGraph& g, Mask x, Mask alive, const Limits& limits = {}) {
    x &= alive;
    if (!is_vertex_cover(g, x, alive)) return false;
    const auto size = static_cast<std::size_t>(popcount(x));
    if (size == 0) return true;
    return !smallest_vertex_cover(g, alive, size - 1, limits).has_value();
}

inline bool is_minimum_vertex_cover(const UndirectedGraph& g, Mask x, const Limits& limits = {}) {
    return is_minimum_vertex_cover(g, x, g.all(), limits);
}

}  // namespace conlab
