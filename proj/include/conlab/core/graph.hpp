#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/names.hpp"
#include "conlab/core/ranking.hpp"

namespace conlab {

struct Arc {
    Id from;
    Id to;
    auto operator<=>(const Arc&) const = default;
};

/// Sorted, duplicate-free list of arcs.
using ArcSet = std::vector<Arc>;

inline ArcSet normalize(ArcSet arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

inline void require_vertex_count(std::size_t n) {
    if (n > kMaxMaskBits) {
        throw SizeLimitError("graphs are limited to " + std::to_string(kMaxMaskBits) +
                             " vertices, got " + std::to_string(n));
    }
}

/// Irreflexive, antisymmetric directed graph on at most 64 named vertices.
class Digraph {
public:
    Digraph() = default;

    Digraph(NameIndex names, const ArcSet& arcs) : names_(std::move(names)) {
        require_vertex_count(names_.size());
        out_.assign(names_.size(), 0);
        for (const Arc& a : arcs) add_arc(a.from, a.to);
    }

    static Digraph from_names(std::vector<std::string> vertices,
                              const std::vector<std::pair<std::string, std::string>>& arcs) {
        NameIndex names(std::move(vertices));
        ArcSet ids;
        for (const auto& [u, v] : arcs) ids.push_back({names.at(u), names.at(v)});
        return Digraph(std::move(names), ids);
    }

    const NameIndex& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    Mask all() const noexcept { return full_mask(size()); }
    Mask out(Id u) const { return out_.at(u); }
    bool has_arc(Id u, Id v) const { return contains(out_.at(u), v); }

    ArcSet arcs() const {
        ArcSet result;
        for (Id u = 0; u < size(); ++u) {
            for (Id v : mask_members(out_[u])) result.push_back({u, v});
        }
        return result;
    }

    std::size_t arc_count() const {
        std::size_t n = 0;
        for (Mask m : out_) n += static_cast<std::size_t>(popcount(m));
        return n;
    }

    bool contains_arcs(const ArcSet& x) const {
        return std::all_of(x.begin(), x.end(), [&](const Arc& a) {
            return a.from < size() && a.to < size() && has_arc(a.from, a.to);
        });
    }

    /// Out-neighbourhoods after removing `removed` arcs (vertex set unchanged).
    std::vector<Mask> out_without(const ArcSet& removed) const {
        auto out = out_;
        for (const Arc& a : removed) {
            if (a.from < size()) out[a.from] &= ~bit(a.to);
        }
        return out;
    }

    Digraph without_arcs(const ArcSet& removed) const {
        Digraph g = *this;
        g.out_ = out_without(removed);
        return g;
    }

    /// Subgraph induced by the vertices in `keep`, reindexed.
    Digraph induced(Mask keep) const {
        const auto kept = mask_members(keep & all());
        std::vector<std::string> vertices;
        for (Id v : kept) vertices.push_back(names_.name(v));
        ArcSet arcs;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (has_arc(kept[i], kept[j])) arcs.push_back({Id(i), Id(j)});
            }
        }
        return Digraph(NameIndex(std::move(vertices)), arcs);
    }

    bool operator==(const Digraph&) const = default;

private:
    void add_arc(Id u, Id v) {
        if (u >= size() || v >= size()) throw DomainError("arc endpoint out of range");
        if (u == v) throw InputError("self-loop on '" + names_.name(u) + "'");
        if (contains(out_[v], u)) {
            throw InputError("arcs in both directions between '" + names_.name(u) + "' and '" +
                             names_.name(v) + "'");
        }
        out_[u] |= bit(v);
    }

    NameIndex names_;
    std::vector<Mask> out_;
};

/// True iff the graph given by out-neighbourhoods, restricted to `alive`,
/// has no directed cycle.
inline bool is_acyclic(const std::vector<Mask>& out, Mask alive) {
    const std::size_t n = out.size();
    std::vector<Mask> in(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (Id v : mask_members(out[u])) in[v] |= bit(u);
    }
    Mask remaining = alive;
    bool progress = true;
    while (remaining != 0 && progress) {
        progress = false;
        for (Id v : mask_members(remaining)) {
            if ((in[v] & remaining) == 0) {
                remaining &= ~bit(v);
                progress = true;
            }
        }
    }
    return remaining == 0;
}

inline bool is_acyclic(const Digraph& g) {
    std::vector<Mask> out(g.size());
    for (Id u = 0; u < g.size(); ++u) out[u] = g.out(u);
    return is_acyclic(out, g.all());
}

/// Topological order of an acyclic digraph; among available vertices the
/// lexicographically smallest goes first. nullopt if g has a cycle.
inline std::optional<Ranking> topological_order(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<int> indegree(n, 0);
    for (const Arc& a : g.arcs()) ++indegree[a.to];
    std::priority_queue<Id, std::vector<Id>, std::greater<>> ready;
    for (Id v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push(v);
    }
    std::vector<Id> order;
    while (!ready.empty()) {
        const Id u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Id v : mask_members(g.out(u))) {
            if (--indegree[v] == 0) ready.push(v);
        }
    }
    if (order.size() != n) return std::nullopt;
    return Ranking(std::move(order));
}

/// Simple undirected graph on at most 64 named vertices.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    UndirectedGraph(NameIndex names, const std::vector<std::pair<Id, Id>>& edges)
        : names_(std::move(names)) {
        require_vertex_count(names_.size());
        adj_.assign(names_.size(), 0);
        for (const auto& [u, v] : edges) add_edge(u, v);
    }

    static UndirectedGraph from_names(std::vector<std::string> vertices,
                                      const std::vector<std::pair<std::string, std::string>>& edges) {
        NameIndex names(std::move(vertices));
        std::vector<std::pair<Id, Id>> ids;
        for (const auto& [u, v] : edges) ids.emplace_back(names.at(u), names.at(v));
        return UndirectedGraph(std::move(names), ids);
    }

    const NameIndex& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    Mask all() const noexcept { return full_mask(size()); }
    Mask neighbours(Id v) const { return adj_.at(v); }
    bool has_edge(Id u, Id v) const { return contains(adj_.at(u), v); }

    std::vector<std::pair<Id, Id>> edges() const {
        std::vector<std::pair<Id, Id>> result;
        for (Id u = 0; u < size(); ++u) {
            for (Id v : mask_members(adj_[u] & ~full_mask(u + 1))) result.emplace_back(u, v);
        }
        return result;
    }

    std::size_t edge_count() const { return edges().size(); }

    UndirectedGraph complement() const {
        UndirectedGraph h = *this;
        for (Id v = 0; v < size(); ++v) h.adj_[v] = all() & ~adj_[v] & ~bit(v);
        return h;
    }

    bool operator==(const UndirectedGraph&) const = default;

private:
    void add_edge(Id u, Id v) {
        if (u >= size() || v >= size()) throw DomainError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop on '" + names_.name(u) + "'");
        if (has_edge(u, v)) {
            throw InputError("duplicate edge '" + names_.name(u) + "'-'" + names_.name(v) + "'");
        }
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    NameIndex names_;
    std::vector<Mask> adj_;
};

}  // namespace conlab
