#pragma once

#include "conlab/core/election.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/solvers/kemeny.hpp"
#include "conlab/solvers/slater.hpp"

namespace conlab {

/// x is a Kemeny consensus iff its distance equals the Kemeny score; no
/// consensus set is materialised.
inline bool is_kemeny_consensus(const Election& e, const Ranking& x, const Limits& limits = {}) {
    const auto d = distance_to_election(x, e);
    return d == kemeny_score(e, limits);
}

inline bool is_slater_consensus(const Election& e, const Ranking& x, const Limits& limits = {}) {
    const Digraph g = majority_graph(e);
    const auto s = slater_score(x, g, e.weights());
    return s == slater_optimum(g, e.weights(), limits);
}

}  // namespace conlab
