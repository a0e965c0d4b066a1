#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/recognition/fas.hpp"
#include "conlab/recognition/vertex_cover.hpp"
#include "conlab/reductions/gadgets.hpp"

namespace conlab {

/// Minimum-fas recognition -> Kemeny consensus recognition. A non-minimal x
/// maps to the fixed no-instance; otherwise the image is e(G) with the
/// lexicographically-first topological order of G - x.
inline KemenyRecognitionImage fasr_to_kemeny_recognition(const Digraph& g, const ArcSet& x) {
    require_arcs_of(g, x);
    if (!is_minimal_fas(g, x)) return {RejectInstance::election(), RejectInstance::order(), true};
    auto order = topological_order(g.without_arcs(x));
    if (!order) throw Error("internal: minimal fas left a cycle");
    return {election_from_digraph(g), std::move(*order), false};
}

struct CdcImage {
    Election election;
    std::int64_t limit = 0;
    Ranking order;
    bool rejected = false;
};

/// Minimum-fas recognition restriction -> Kemeny-CDC-to-consensus, keeping
/// the delete limit. The reject image carries limit 0 so it stays a
/// no-instance for every k.
inline CdcImage fasrr_to_kemeny_cdc(const Digraph& g, std::int64_t k, const ArcSet& x) {
    if (k < 0) throw InputError("delete limit must be nonnegative");
    const auto rec = fasr_to_kemeny_recognition(g, x);
    if (rec.rejected) return {rec.election, 0, rec.order, true};
    return {rec.election, k, rec.order, false};
}

struct VcInstance {
    UndirectedGraph graph;
    std::int64_t limit = 0;
    Mask x = 0;
};

struct FasInstance {
    Digraph graph;
    std::int64_t limit = 0;
    ArcSet x;
};

/// GND (clique form) -> minimum vertex cover recognition restriction:
/// H = complement(G) joined with ell fresh pairwise non-adjacent vertices,
/// same limit, X = V(G).
inline VcInstance gnd_to_vcrr(const UndirectedGraph& g, std::int64_t k, std::int64_t ell) {
    if (k < 0 || ell < 0) throw InputError("k and ell must be nonnegative");
    const auto& names = g.names().names();
    std::set<std::string> taken(names.begin(), names.end());
    std::vector<std::string> fresh;
    for (std::int64_t i = 1; i <= ell; ++i) {
        auto name = fresh_name("z" + std::to_string(i), taken);
        taken.insert(name);
        fresh.push_back(std::move(name));
    }
    require_vertex_count(taken.size());
    std::vector<std::pair<std::string, std::string>> edges;
    const UndirectedGraph co = g.complement();
    for (const auto& [u, v] : co.edges()) edges.emplace_back(names[u], names[v]);
    for (const auto& z : fresh) {
        for (const auto& v : names) edges.emplace_back(z, v);
    }
    VcInstance out;
    out.graph = UndirectedGraph::from_names(std::vector<std::string>(taken.begin(), taken.end()), edges);
    out.limit = k;
    for (const auto& v : names) out.x |= bit(out.graph.names().at(v));
    return out;
}

/// Minimum vertex cover recognition restriction -> minimum fas recognition
/// restriction via the Karp hat. x must be a minimal cover.
inline FasInstance vcrr_to_fasrr(const UndirectedGraph& g, std::int64_t k, Mask x) {
    if (!is_minimal_vertex_cover(g, x)) throw PreconditionError("x is not a minimal vertex cover of G");
    auto hat = vc_to_fas(g, x);
    return {std::move(hat.digraph), k, std::move(hat.arcs)};
}

/// Deletion variant of the same construction; no precondition on x.
inline FasInstance vcrd_to_fasrd(const UndirectedGraph& g, std::int64_t k, Mask x) {
    auto hat = vc_to_fas(g, x);
    return {std::move(hat.digraph), k, std::move(hat.arcs)};
}

}  // namespace conlab
