#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/election.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/solvers/ordering_dp.hpp"

namespace conlab {

namespace detail {

/// Placement cost for Kemeny. Appending c below the placed set P costs
/// Σ_{d ∉ P∪{c}} n(d, c). Each pair splits into min(n(d,c), n(c,d)), which
/// every ranking pays, plus the majority margin when c is put above a d that
/// beats it. Only the margin part varies, so it is what the DP tracks; the
/// margins are grouped by value to make a step a few popcounts.
class KemenyCost {
public:
    explicit KemenyCost(const PairwiseTally& n) : groups_(n.size()) {
        const std::size_t m = n.size();
        for (Id c = 0; c < m; ++c) {
            for (Id d = 0; d < m; ++d) {
                if (d == c) continue;
                if (d < c) baseline_ += std::min(n(d, c), n(c, d));
                const std::int64_t margin = n(d, c) - n(c, d);
                if (margin <= 0) continue;
                auto& g = groups_[c];
                auto it = std::find_if(g.begin(), g.end(), [&](const auto& p) { return p.first == margin; });
                if (it == g.end()) {
                    g.emplace_back(margin, bit(d));
                } else {
                    it->second |= bit(d);
                }
            }
        }
    }

    std::int64_t operator()(Id c, Mask placed) const {
        std::int64_t total = 0;
        for (const auto& [margin, beaters] : groups_[c]) total += margin * popcount(beaters & ~placed);
        return total;
    }

    std::int64_t baseline() const noexcept { return baseline_; }

private:
    std::vector<std::vector<std::pair<std::int64_t, Mask>>> groups_;  // per c: (margin, {d beating c by it})
    std::int64_t baseline_ = 0;
};

}  // namespace detail

/// Minimum total Kendall tau distance of any ranking to the voters.
inline std::int64_t kemeny_score(const Election& e, const Limits& limits = {}) {
    require_at_most(e.size(), limits.score_candidates, "kemeny_score candidates");
    detail::KemenyCost cost(pairwise_tally(e));
    OrderingDp dp(e.size(), cost);
    return cost.baseline() + dp.optimum();
}

/// Kemeny score and the lexicographically first consensus.
inline ConsensusResult kemeny_consensus(const Election& e, const Limits& limits = {}) {
    require_at_most(e.size(), limits.score_candidates, "kemeny_consensus candidates");
    detail::KemenyCost cost(pairwise_tally(e));
    OrderingDp dp(e.size(), cost);
    return {cost.baseline() + dp.optimum(), {dp.first_optimal()}};
}

/// Every Kemeny consensus together with the Kemeny score.
inline ConsensusResult kemeny_consensus_set(const Election& e, const Limits& limits = {}) {
    require_at_most(e.size(), limits.set_candidates, "kemeny_consensus_set candidates");
    detail::KemenyCost cost(pairwise_tally(e));
    OrderingDp dp(e.size(), cost);
    return {cost.baseline() + dp.optimum(), dp.all_optimal()};
}

}  // namespace conlab
