#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"

namespace conlab {

// Generalized node deletion: remove at most k vertices so that no clique of
// size ell+1 survives (GND), or no independent set of size ell+1 survives
// (the primed form). The two are exchanged by graph complement.

enum class GndForm { clique, independent_set };

namespace detail {

inline bool has_clique_in(const std::vector<Mask>& adj, Mask candidates, std::size_t need) {
    if (need == 0) return true;
    if (static_cast<std::size_t>(popcount(candidates)) < need) return false;
    const Id v = static_cast<Id>(std::countr_zero(candidates));
    if (has_clique_in(adj, candidates & adj[v], need - 1)) return true;
    return has_clique_in(adj, candidates & ~bit(v), need);
}

inline std::vector<Mask> adjacency(const UndirectedGraph& g, GndForm form) {
    std::vector<Mask> adj(g.size());
    for (Id v = 0; v < g.size(); ++v) {
        adj[v] = form == GndForm::clique ? g.neighbours(v) : (g.all() & ~g.neighbours(v) & ~bit(v));
    }
    return adj;
}

}  // namespace detail

/// G[alive] contains a clique on `size` vertices.
inline bool has_clique(const UndirectedGraph& g, std::size_t size, Mask alive) {
    return detail::has_clique_in(detail::adjacency(g, GndForm::clique), alive & g.all(), size);
}

inline bool has_independent_set(const UndirectedGraph& g, std::size_t size, Mask alive) {
    return detail::has_clique_in(detail::adjacency(g, GndForm::independent_set), alive & g.all(), size);
}

/// Does deleting `deleted` leave no forbidden structure of size ell+1?
inline bool gnd_kills(const UndirectedGraph& g, std::size_t ell, Mask deleted, GndForm form = GndForm::clique) {
    const auto adj = detail::adjacency(g, form);
    return !detail::has_clique_in(adj, g.all() & ~deleted, ell + 1);
}

/// First W (by size, then lexicographic) with |W| <= k that kills every
/// forbidden structure of size ell+1.
inline std::optional<Mask> gnd_witness(const UndirectedGraph& g, std::size_t ell, std::size_t k,
                                       GndForm form = GndForm::clique, const Limits& limits = {}) {
    const auto adj = detail::adjacency(g, form);
    std::uint64_t visited = 0;
    std::optional<Mask> found;
    for_each_subset_up_to(g.all(), k, [&](Mask w) {
        if (++visited > limits.search_nodes) throw SizeLimitError("GND search budget exhausted");
        if (!detail::has_clique_in(adj, g.all() & ~w, ell + 1)) {
            found = w;
            return true;
        }
        return false;
    });
    return found;
}

/// Decision form. Deleting more vertices never creates a clique (or an
/// independent set), so only sets of size exactly min(k, |V|) need checking.
inline bool gnd_solvable(const UndirectedGraph& g, std::size_t ell, std::size_t k, GndForm form = GndForm::clique,
                         const Limits& limits = {}) {
    const auto adj = detail::adjacency(g, form);
    const std::size_t size = std::min(k, g.size());
    std::uint64_t visited = 0;
    return for_each_subset_of_size(g.all(), size, [&](Mask w) {
        if (++visited > limits.search_nodes) throw SizeLimitError("GND search budget exhausted");
        return !detail::has_clique_in(adj, g.all() & ~w, ell + 1);
    });
}

/// x kills every forbidden structure of size ell+1 and no smaller set does.
inline bool is_minimum_gnd(const UndirectedGraph& g, std::size_t ell, Mask x, GndForm form = GndForm::clique,
                           const Limits& limits = {}) {
    if ((x & ~g.all()) != 0) throw DomainError("vertex set contains vertices outside the graph");
    if (!gnd_kills(g, ell, x, form)) return false;
    const auto size = static_cast<std::size_t>(popcount(x));
    if (size == 0) return true;
    return !gnd_solvable(g, ell, size - 1, form, limits);
}

inline bool gnd_prime_solvable(const UndirectedGraph& g, std::size_t ell, std::size_t k, const Limits& limits = {}) {
    return gnd_solvable(g, ell, k, GndForm::independent_set, limits);
}

inline bool is_minimum_gnd_prime(const UndirectedGraph& g, std::size_t ell, Mask x, const Limits& limits = {}) {
    return is_minimum_gnd(g, ell, x, GndForm::independent_set, limits);
}

}  // namespace conlab
