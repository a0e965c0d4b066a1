#pragma once

#include <cstdint>
#include <optional>

#include "conlab/core/bits.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/recognition/fas.hpp"
#include "conlab/recognition/vertex_cover.hpp"

namespace conlab {

// Deletion and restriction variants of minimum vertex cover / fas
// recognition. Each searches vertex sets W with |W| <= k, by size and then
// lexicographically, and returns the first W that works.
//
// Deletion: x itself must be a minimum solution of G - W, so W may not touch
// x (for fas: no endpoint of an arc of x).
// Restriction: x must be a minimal solution of G; W is unrestricted and the
// question is about x's trace on G - W.

namespace detail {

template <typename Accept>
std::optional<Mask> first_deletion(Mask universe, std::int64_t k, const Limits& limits, Accept&& accept) {
    if (k < 0) throw InputError("delete limit must be nonnegative");
    std::uint64_t visited = 0;
    std::optional<Mask> found;
    for_each_subset_up_to(universe, static_cast<std::size_t>(k), [&](Mask w) {
        if (++visited > limits.search_nodes) throw SizeLimitError("deletion search budget exhausted");
        if (accept(w)) {
            found = w;
            return true;
        }
        return false;
    });
    return found;
}

inline Mask endpoints(const ArcSet& x) {
    Mask m = 0;
    for (const Arc& a : x) m |= bit(a.from) | bit(a.to);
    return m;
}

}  // namespace detail

/// W ⊆ V - x, |W| <= k, with x a minimum vertex cover of G - W.
inline std::optional<Mask> vcr_deletion(const UndirectedGraph& g, std::int64_t k, Mask x, const Limits& limits = {}) {
    if ((x & ~g.all()) != 0) throw DomainError("vertex set contains vertices outside the graph");
    return detail::first_deletion(g.all() & ~x, k, limits, [&](Mask w) {
        return is_minimum_vertex_cover(g, x, g.all() & ~w, limits);
    });
}

/// W avoiding every endpoint of x, |W| <= k, with x a minimum fas of G - W.
inline std::optional<Mask> fasr_deletion(const Digraph& g, std::int64_t k, const ArcSet& x, const Limits& limits = {}) {
    require_arcs_of(g, x);
    return detail::first_deletion(g.all() & ~detail::endpoints(x), k, limits, [&](Mask w) {
        return is_minimum_fas(g, x, g.all() & ~w, FasMethod::automatic, limits);
    });
}

/// Requires x to be a minimal cover of G. W ⊆ V, |W| <= k, with x - W a
/// minimum vertex cover of G - W.
inline std::optional<Mask> vcr_restriction(const UndirectedGraph& g, std::int64_t k, Mask x,
                                           const Limits& limits = {}) {
    if (!is_minimal_vertex_cover(g, x)) throw PreconditionError("x is not a minimal vertex cover of G");
    return detail::first_deletion(g.all(), k, limits, [&](Mask w) {
        return is_minimum_vertex_cover(g, x & ~w, g.all() & ~w, limits);
    });
}

/// Requires x to be a minimal fas of G. W ⊆ V, |W| <= k, with the arcs of x
/// inside V - W forming a minimum fas of G - W.
inline std::optional<Mask> fasr_restriction(const Digraph& g, std::int64_t k, const ArcSet& x,
                                            const Limits& limits = {}) {
    require_arcs_of(g, x);
    if (!is_minimal_fas(g, x)) throw PreconditionError("x is not a minimal fas of G");
    return detail::first_deletion(g.all(), k, limits, [&](Mask w) {
        const Mask alive = g.all() & ~w;
        return is_minimum_fas(g, arcs_within(x, alive), alive, FasMethod::automatic, limits);
    });
}

}  // namespace conlab
