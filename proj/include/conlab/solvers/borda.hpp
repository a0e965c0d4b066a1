#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "conlab/core/election.hpp"
#include "conlab/core/ranking.hpp"

namespace conlab {

/// Each voter gives m-1-i points to the candidate at position i.
inline std::vector<std::int64_t> borda_scores(const Election& e) {
    const std::size_t m = e.size();
    std::vector<std::int64_t> score(m, 0);
    for (const auto& g : e.groups()) {
        for (std::size_t i = 0; i < m; ++i) {
            score[g.vote[i]] += g.count * static_cast<std::int64_t>(m - 1 - i);
        }
    }
    return score;
}

/// Candidates by descending score; equal scores share a tier.
inline WeakOrder weak_order_by_score(const std::vector<std::int64_t>& score) {
    std::vector<Id> by_score(score.size());
    std::iota(by_score.begin(), by_score.end(), Id{0});
    std::stable_sort(by_score.begin(), by_score.end(),
                     [&](Id a, Id b) { return score[a] > score[b]; });
    std::vector<std::vector<Id>> tiers;
    for (std::size_t i = 0; i < by_score.size(); ++i) {
        if (i == 0 || score[by_score[i]] != score[by_score[i - 1]]) tiers.emplace_back();
        tiers.back().push_back(by_score[i]);
    }
    return WeakOrder(std::move(tiers));
}

inline WeakOrder borda_consensus(const Election& e) { return weak_order_by_score(borda_scores(e)); }

}  // namespace conlab
