#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "conlab/core/election.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/core/ranking.hpp"
#include "conlab/recognition/consensus.hpp"
#include "conlab/solvers/borda.hpp"
#include "conlab/solvers/slater.hpp"

namespace conlab {

/// Joint manipulator votes, one ranking per manipulator, lexicographically
/// sorted.
using VoteAssignment = std::vector<Ranking>;

/// All m! rankings in lexicographic order.
inline std::vector<Ranking> all_rankings(std::size_t m) {
    std::vector<Ranking> result;
    std::vector<Id> order = Ranking::identity(m).order();
    do {
        result.emplace_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return result;
}

inline void require_manipulators(std::int64_t manipulators, const Limits& limits) {
    if (manipulators < 0) throw InputError("manipulator count must be nonnegative");
    require_at_most(static_cast<std::size_t>(manipulators), limits.manipulators, "manipulators");
}

/// Can the manipulators make `target` a Kemeny consensus? Only the joint vote
/// "everyone votes target" is ever tried: replacing any manipulator's vote by
/// the target never hurts the target, so it is the best possible action.
inline std::optional<VoteAssignment> kemeny_manipulation_to_consensus(const Election& base, std::int64_t manipulators,
                                                                     const Ranking& target, const Limits& limits = {}) {
    if (manipulators < 0) throw InputError("manipulator count must be nonnegative");
    require_permutation(target, base.size(), "target");
    const Election after = manipulators > 0 ? base.with_vote(target, manipulators) : base;
    if (!is_kemeny_consensus(after, target, limits)) return std::nullopt;
    return VoteAssignment(static_cast<std::size_t>(manipulators), target);
}

/// Checks, for one triple, the implication behind that shortcut:
/// x a consensus of e + {mu}  ==>  x a consensus of e + {x}.
inline bool verify_manipulator_replacement(const Election& e, const Ranking& mu, const Ranking& x,
                                           const Limits& limits = {}) {
    if (!is_kemeny_consensus(e.with_vote(mu), x, limits)) return true;
    return is_kemeny_consensus(e.with_vote(x), x, limits);
}

/// Exhaustive search over joint manipulator votes for one whose Borda
/// consensus equals `target`. Returns the lexicographically first sorted
/// assignment. Branches are cut when the remaining manipulators can no
/// longer produce the required score gaps.
inline std::optional<VoteAssignment> borda_manipulation_to_consensus(const Election& base, std::int64_t manipulators,
                                                                    const WeakOrder& target, const Limits& limits = {}) {
    const std::size_t m = base.size();
    require_manipulators(manipulators, limits);
    require_at_most(m, limits.strategic_candidates, "borda manipulation candidates");
    if (!target.is_partition_of(m)) throw DomainError("target does not partition the candidates");

    const auto tier = target.tier_of(m);
    const auto votes = all_rankings(m);
    const auto k = static_cast<std::size_t>(manipulators);
    const std::int64_t top = m == 0 ? 0 : static_cast<std::int64_t>(m - 1);

    std::vector<std::int64_t> score = borda_scores(base);
    std::vector<std::size_t> chosen;
    std::uint64_t nodes = 0;

    const auto feasible = [&](std::int64_t remaining) {
        const std::int64_t swing = remaining * top;
        for (Id a = 0; a < m; ++a) {
            for (Id b = 0; b < m; ++b) {
                if (a == b) continue;
                const std::int64_t gap = score[b] - score[a];
                if (tier[a] < tier[b] && gap >= swing) return false;       // a must end strictly above b
                if (tier[a] == tier[b] && (gap > swing || -gap > swing)) return false;  // a and b must tie
            }
        }
        return true;
    };

    const auto search = [&](auto&& self, std::size_t start) -> bool {
        if (++nodes > limits.search_nodes) throw SizeLimitError("borda manipulation search budget exhausted");
        const auto remaining = static_cast<std::int64_t>(k - chosen.size());
        if (remaining == 0) return weak_order_by_score(score) == target;
        if (!feasible(remaining)) return false;
        for (std::size_t v = start; v < votes.size(); ++v) {
            for (std::size_t i = 0; i < m; ++i) score[votes[v][i]] += top - static_cast<std::int64_t>(i);
            chosen.push_back(v);
            if (self(self, v)) return true;  // keep the path in `chosen`
            chosen.pop_back();
            for (std::size_t i = 0; i < m; ++i) score[votes[v][i]] -= top - static_cast<std::int64_t>(i);
        }
        return false;
    };

    if (!search(search, 0)) return std::nullopt;
    VoteAssignment witness;
    for (std::size_t v : chosen) witness.push_back(votes[v]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

/// Exhaustive search over joint manipulator votes for one that makes `p` a
/// Slater winner (first in some Slater consensus) under the base election's
/// candidate weights. Evaluations are cached by resulting majority graph.
inline std::optional<VoteAssignment> slater_manipulation_to_winner(const Election& base, std::int64_t manipulators,
                                                                  Id p, const Limits& limits = {}) {
    const std::size_t m = base.size();
    require_manipulators(manipulators, limits);
    require_at_most(m, limits.strategic_candidates, "slater manipulation candidates");
    if (p >= m) throw DomainError("preferred candidate out of range");

    const auto votes = all_rankings(m);
    const PairwiseTally base_tally = pairwise_tally(base);
    std::map<std::vector<Mask>, bool> cache;
    std::uint64_t nodes = 0;
    std::optional<VoteAssignment> witness;

    const std::vector<std::int64_t> caps(votes.size(), manipulators);
    for_each_multiset(caps, static_cast<std::size_t>(manipulators), [&](const std::vector<std::size_t>& tuple) {
        if (++nodes > limits.search_nodes) throw SizeLimitError("slater manipulation search budget exhausted");
        PairwiseTally tally = base_tally;
        for (std::size_t v : tuple) {
            const auto& order = votes[v].order();
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i + 1; j < m; ++j) tally.add(order[i], order[j], 1);
            }
        }
        const Digraph g = weighted_majority_graph(tally, base.candidates()).unweighted();
        std::vector<Mask> key(m);
        for (Id c = 0; c < m; ++c) key[c] = g.out(c);
        auto [it, inserted] = cache.try_emplace(key, false);
        if (inserted) {
            const auto winners = slater_winners(g, base.weights(), limits);
            it->second = std::find(winners.begin(), winners.end(), p) != winners.end();
        }
        if (!it->second) return false;
        VoteAssignment assignment;
        for (std::size_t v : tuple) assignment.push_back(votes[v]);
        witness = std::move(assignment);
        return true;
    });
    return witness;
}

}  // namespace conlab
