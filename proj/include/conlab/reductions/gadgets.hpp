#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/election.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/names.hpp"
#include "conlab/core/ranking.hpp"

namespace conlab {

/// Name not in `taken`, derived from `base` by appending underscores.
inline std::string fresh_name(std::string base, const std::set<std::string>& taken) {
    while (taken.count(base) != 0) base += '_';
    return base;
}

// ---------------------------------------------------------------------------
// Karp's vertex cover -> feedback arc set construction.
//
// Every vertex v becomes an arc v -> v' (v' is named v_p), and every edge
// {v, w} becomes the arcs v' -> w and w' -> v. A vertex set X maps to the arc
// set {(v, v') : v in X}.

struct HatImage {
    Digraph digraph;
    ArcSet arcs;  // image of the vertex set
    std::vector<Id> in_vertex;   // original vertex i -> id of v in the digraph
    std::vector<Id> out_vertex;  // original vertex i -> id of v' in the digraph
};

inline HatImage vc_to_fas(const UndirectedGraph& g, Mask x) {
    if ((x & ~g.all()) != 0) throw DomainError("vertex set contains vertices outside the graph");
    const auto& names = g.names().names();
    const std::set<std::string> originals(names.begin(), names.end());
    std::vector<std::string> primed;
    std::set<std::string> all_names = originals;
    for (const auto& v : names) {
        const std::string p = v + "_p";
        if (all_names.count(p) != 0) {
            throw InputError("cannot name the copy of '" + v + "': '" + p + "' already exists");
        }
        all_names.insert(p);
        primed.push_back(p);
    }
    std::vector<std::string> vertices(all_names.begin(), all_names.end());
    NameIndex index(vertices);

    HatImage image;
    for (std::size_t i = 0; i < names.size(); ++i) {
        image.in_vertex.push_back(index.at(names[i]));
        image.out_vertex.push_back(index.at(primed[i]));
    }
    ArcSet arcs;
    for (std::size_t i = 0; i < names.size(); ++i) arcs.push_back({image.in_vertex[i], image.out_vertex[i]});
    for (const auto& [v, w] : g.edges()) {
        arcs.push_back({image.out_vertex[v], image.in_vertex[w]});
        arcs.push_back({image.out_vertex[w], image.in_vertex[v]});
    }
    image.digraph = Digraph(std::move(index), arcs);
    for (Id v : mask_members(x)) image.arcs.push_back({image.in_vertex[v], image.out_vertex[v]});
    image.arcs = normalize(std::move(image.arcs));
    return image;
}

// ---------------------------------------------------------------------------
// e(G): for each arc (a, b), one voter a > b > rest (rest ascending) and one
// voter rest (descending) > a > b. Every pair other than {a, b} is split
// evenly between the two, so the weighted majority graph is G with all
// weights 2.

inline Election election_from_digraph(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<VoteGroup> groups;
    for (const Arc& arc : g.arcs()) {
        std::vector<Id> rest;
        for (Id v = 0; v < n; ++v) {
            if (v != arc.from && v != arc.to) rest.push_back(v);
        }
        std::vector<Id> first{arc.from, arc.to};
        first.insert(first.end(), rest.begin(), rest.end());
        std::vector<Id> second(rest.rbegin(), rest.rend());
        second.push_back(arc.from);
        second.push_back(arc.to);
        groups.push_back({1, Ranking(std::move(first))});
        groups.push_back({1, Ranking(std::move(second))});
    }
    return Election(g.names(), std::move(groups));
}

/// Fixed no-instance used when a reduction must "output something that is
/// not in the language": two candidates, two voters a > b, query b > a.
struct RejectInstance {
    static Election election() { return Election::from_names({"a", "b"}, {{2, {"a", "b"}}}); }
    static Ranking order() { return Ranking({1, 0}); }
};

/// Result of the fas-recognition -> Kemeny-recognition reduction.
struct KemenyRecognitionImage {
    Election election;
    Ranking order;
    bool rejected = false;
};

}  // namespace conlab
