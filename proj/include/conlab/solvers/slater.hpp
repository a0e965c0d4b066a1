#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/election.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/solvers/ordering_dp.hpp"

namespace conlab {

// Slater scores count agreements with the unweighted majority graph. With
// candidate weights, an agreeing arc (a, b) is worth w(a)·w(b), i.e. what the
// pair would contribute if a and b were groups of w(a) and w(b) unit
// candidates. Tied pairs carry no arc and score nothing either way.

/// Σ over arcs (a, b) of g with a above b in x of w(a)·w(b); empty weights
/// mean all ones.
inline std::int64_t slater_score(const Ranking& x, const Digraph& g,
                                 const std::vector<std::int64_t>& weights = {}) {
    require_permutation(x, g.size());
    if (!weights.empty() && weights.size() != g.size()) {
        throw DomainError("one weight per vertex required");
    }
    const auto w = [&](Id v) { return weights.empty() ? std::int64_t{1} : weights[v]; };
    std::int64_t score = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (g.has_arc(x[i], x[j])) score += w(x[i]) * w(x[j]);
        }
    }
    return score;
}

inline std::int64_t slater_score(const Ranking& x, const Election& e) {
    return slater_score(x, majority_graph(e), e.weights());
}

namespace detail {

/// Negated agreement gain of placing c above everything still unplaced, so
/// the minimising DP maximises agreements.
class SlaterCost {
public:
    SlaterCost(const Digraph& g, std::vector<std::int64_t> weights)
        : out_(g.size()), weights_(std::move(weights)) {
        for (Id c = 0; c < g.size(); ++c) out_[c] = g.out(c);
        if (weights_.empty()) weights_.assign(g.size(), 1);
        unit_ = std::all_of(weights_.begin(), weights_.end(), [](auto v) { return v == 1; });
    }

    std::int64_t operator()(Id c, Mask placed) const {
        const Mask agreeing = out_[c] & ~placed;
        if (unit_) return -static_cast<std::int64_t>(popcount(agreeing));
        std::int64_t gain = 0;
        for (Id d : mask_members(agreeing)) gain += weights_[d];
        return -weights_[c] * gain;
    }

private:
    std::vector<Mask> out_;
    std::vector<std::int64_t> weights_;
    bool unit_ = true;
};

}  // namespace detail

/// Maximum Slater score over rankings of g's vertices.
inline std::int64_t slater_optimum(const Digraph& g, const std::vector<std::int64_t>& weights = {},
                                   const Limits& limits = {}) {
    require_at_most(g.size(), limits.score_candidates, "slater candidates");
    OrderingDp dp(g.size(), detail::SlaterCost(g, weights));
    return -dp.optimum();
}

inline ConsensusResult slater_consensus_set(const Digraph& g, const std::vector<std::int64_t>& weights = {},
                                            const Limits& limits = {}) {
    require_at_most(g.size(), limits.set_candidates, "slater_consensus_set candidates");
    OrderingDp dp(g.size(), detail::SlaterCost(g, weights));
    return {-dp.optimum(), dp.all_optimal()};
}

inline ConsensusResult slater_consensus_set(const Election& e, const Limits& limits = {}) {
    require_at_most(e.size(), limits.set_candidates, "slater_consensus_set candidates");
    return slater_consensus_set(majority_graph(e), e.weights(), limits);
}

/// Slater score and the lexicographically first consensus.
inline ConsensusResult slater_consensus(const Election& e, const Limits& limits = {}) {
    require_at_most(e.size(), limits.score_candidates, "slater candidates");
    OrderingDp dp(e.size(), detail::SlaterCost(majority_graph(e), e.weights()));
    return {-dp.optimum(), {dp.first_optimal()}};
}

/// Candidates ranked first in at least one Slater consensus.
inline std::vector<Id> slater_winners(const Digraph& g, const std::vector<std::int64_t>& weights = {},
                                      const Limits& limits = {}) {
    require_at_most(g.size(), limits.score_candidates, "slater_winners candidates");
    OrderingDp dp(g.size(), detail::SlaterCost(g, weights));
    return mask_members(dp.optimal_leaders());
}

inline std::vector<Id> slater_winners(const Election& e, const Limits& limits = {}) {
    require_at_most(e.size(), limits.score_candidates, "slater_winners candidates");
    return slater_winners(majority_graph(e), e.weights(), limits);
}

}  // namespace conlab
