#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "conlab/core/election.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/core/ranking.hpp"
#include "conlab/solvers/ordering_dp.hpp"

namespace conlab {

enum class Rule { kemeny, slater };

/// Reference solver: scores all m! rankings directly. Kemeny distances are
/// summed voter by voter with kendall_tau and Slater agreements are counted
/// pair by pair against the majority graph, so no code is shared with the
/// subset DP.
inline ConsensusResult brute_force_consensus_set(const Election& e, Rule rule, const Limits& limits = {}) {
    require_at_most(e.size(), limits.brute_force_candidates, "brute_force_consensus_set candidates");
    const std::size_t m = e.size();
    const Digraph majority = majority_graph(e);

    const auto score = [&](const Ranking& x) -> std::int64_t {
        if (rule == Rule::kemeny) {
            std::int64_t d = 0;
            for (const auto& g : e.groups()) d += g.count * kendall_tau(x, g.vote);
            return d;
        }
        std::int64_t agreements = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (majority.has_arc(x[i], x[j])) agreements += e.weights()[x[i]] * e.weights()[x[j]];
            }
        }
        return agreements;
    };
    const bool minimise = rule == Rule::kemeny;

    ConsensusResult result;
    std::vector<Id> order = Ranking::identity(m).order();
    bool first = true;
    do {
        Ranking x(order);
        const std::int64_t s = score(x);
        const bool better = minimise ? s < result.optimum : s > result.optimum;
        if (first || better) {
            result.optimum = s;
            result.consensuses.clear();
            first = false;
        }
        if (s == result.optimum) result.consensuses.push_back(std::move(x));
    } while (std::next_permutation(order.begin(), order.end()));
    return result;
}

}  // namespace conlab
