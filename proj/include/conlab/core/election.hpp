#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/core/names.hpp"
#include "conlab/core/ranking.hpp"

namespace conlab {

/// `count` voters all casting `vote`.
struct VoteGroup {
    std::int64_t count = 1;
    Ranking vote;

    auto operator<=>(const VoteGroup&) const = default;
};

/// Candidates (sorted by name), positive candidate weights, and the voter
/// multiset stored as aggregated vote groups. Groups are kept in canonical
/// form: identical votes merged, sorted lexicographically by vote.
class Election {
public:
    Election() = default;

    Election(NameIndex candidates, std::vector<VoteGroup> groups,
             std::vector<std::int64_t> weights = {}, std::int64_t max_weight = Limits{}.max_weight)
        : candidates_(std::move(candidates)), weights_(std::move(weights)) {
        const std::size_t m = candidates_.size();
        if (weights_.empty()) weights_.assign(m, 1);
        if (weights_.size() != m) throw DomainError("one weight per candidate required");
        for (std::size_t c = 0; c < m; ++c) {
            if (weights_[c] <= 0) {
                throw InputError("weight of '" + candidates_.name(Id(c)) + "' must be positive");
            }
            if (weights_[c] > max_weight) {
                throw InputError("weight of '" + candidates_.name(Id(c)) + "' exceeds cap " +
                                 std::to_string(max_weight));
            }
        }
        std::map<Ranking, std::int64_t> merged;
        for (auto& g : groups) {
            if (g.count <= 0) throw InputError("voter count must be positive");
            require_permutation(g.vote, m, "vote");
            merged[std::move(g.vote)] += g.count;
        }
        for (auto& [vote, count] : merged) groups_.push_back({count, vote});
    }

    /// Builds from candidate names and name-based votes.
    static Election from_names(std::vector<std::string> candidates,
                               const std::vector<std::pair<std::int64_t, std::vector<std::string>>>& votes,
                               const std::map<std::string, std::int64_t>& weights = {}) {
        NameIndex names(std::move(candidates));
        std::vector<VoteGroup> groups;
        for (const auto& [count, vote] : votes) {
            std::vector<Id> order;
            for (const auto& n : vote) order.push_back(names.at(n));
            groups.push_back({count, Ranking(std::move(order))});
        }
        std::vector<std::int64_t> w(names.size(), 1);
        for (const auto& [n, value] : weights) w[names.at(n)] = value;
        return Election(std::move(names), std::move(groups), std::move(w));
    }

    const NameIndex& candidates() const noexcept { return candidates_; }
    std::size_t size() const noexcept { return candidates_.size(); }
    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
    const std::vector<VoteGroup>& groups() const noexcept { return groups_; }

    bool has_unit_weights() const {
        return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
    }

    std::int64_t voter_count() const {
        std::int64_t n = 0;
        for (const auto& g : groups_) n += g.count;
        return n;
    }

    /// Same candidates and weights, voters extended by `extra`.
    Election with_votes(const std::vector<VoteGroup>& extra) const {
        auto groups = groups_;
        groups.insert(groups.end(), extra.begin(), extra.end());
        return Election(candidates_, std::move(groups), weights_, max_weight_unchecked());
    }

    Election with_vote(const Ranking& vote, std::int64_t count = 1) const {
        return with_votes({VoteGroup{count, vote}});
    }

    /// Same candidates, `remove[i]` voters deleted from group i.
    Election without_votes(const std::vector<std::int64_t>& remove) const {
        std::vector<VoteGroup> groups;
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            const std::int64_t left = groups_[i].count - (i < remove.size() ? remove[i] : 0);
            if (left < 0) throw DomainError("removing more voters than present");
            if (left > 0) groups.push_back({left, groups_[i].vote});
        }
        return Election(candidates_, std::move(groups), weights_, max_weight_unchecked());
    }

    /// Election over the candidates in `keep`, with every vote restricted.
    Election restricted(Mask keep) const {
        const auto kept = mask_members(keep & full_mask(size()));
        std::vector<std::string> names;
        std::vector<std::int64_t> weights;
        for (Id c : kept) {
            names.push_back(candidates_.name(c));
            weights.push_back(weights_[c]);
        }
        std::vector<VoteGroup> groups;
        for (const auto& g : groups_) groups.push_back({g.count, restrict_ranking(g.vote, keep)});
        return Election(NameIndex(std::move(names)), std::move(groups), std::move(weights),
                        max_weight_unchecked());
    }

    /// `x` restricted to `keep`, reindexed to the kept candidates.
    static Ranking restrict_ranking(const Ranking& x, Mask keep) {
        std::vector<Id> new_index(x.size(), 0);
        Id next = 0;
        for (Id c = 0; c < x.size(); ++c) {
            if (contains(keep, c)) new_index[c] = next++;
        }
        std::vector<Id> order;
        for (Id c : x) {
            if (contains(keep, c)) order.push_back(new_index[c]);
        }
        return Ranking(std::move(order));
    }

    bool operator==(const Election&) const = default;

private:
    std::int64_t max_weight_unchecked() const {
        return weights_.empty() ? 1 : *std::max_element(weights_.begin(), weights_.end());
    }

    NameIndex candidates_;
    std::vector<std::int64_t> weights_;
    std::vector<VoteGroup> groups_;
};

/// n(a, b) = number of voters ranking a above b.
class PairwiseTally {
public:
    explicit PairwiseTally(std::size_t m = 0, std::int64_t voters = 0)
        : m_(m), voters_(voters), n_(m * m, 0) {}

    std::size_t size() const noexcept { return m_; }
    std::int64_t voters() const noexcept { return voters_; }
    std::int64_t operator()(Id a, Id b) const { return n_[a * m_ + b]; }
    void add(Id a, Id b, std::int64_t count) { n_[a * m_ + b] += count; }

    bool operator==(const PairwiseTally&) const = default;

private:
    std::size_t m_;
    std::int64_t voters_;
    std::vector<std::int64_t> n_;
};

inline PairwiseTally pairwise_tally(const Election& e) {
    PairwiseTally n(e.size(), e.voter_count());
    for (const auto& g : e.groups()) {
        const auto& order = g.vote.order();
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) n.add(order[i], order[j], g.count);
        }
    }
    return n;
}

/// Σ over voters of kendall_tau(x, vote), computed from the tally as
/// Σ_{a above b in x} n(b, a).
inline std::int64_t distance_to_election(const Ranking& x, const Election& e) {
    require_permutation(x, e.size());
    const auto n = pairwise_tally(e);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) total += n(x[j], x[i]);
    }
    return total;
}

/// Arc (a, b) with weight n(a,b) - n(b,a) whenever a beats b pairwise.
class WeightedMajorityGraph {
public:
    WeightedMajorityGraph() = default;
    WeightedMajorityGraph(NameIndex names, std::vector<std::int64_t> margin)
        : names_(std::move(names)), margin_(std::move(margin)) {}

    const NameIndex& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }

    /// Arc weight, 0 when there is no arc a -> b.
    std::int64_t weight(Id a, Id b) const { return margin_[a * size() + b]; }
    bool has_arc(Id a, Id b) const { return weight(a, b) > 0; }

    std::vector<std::pair<Arc, std::int64_t>> arcs() const {
        std::vector<std::pair<Arc, std::int64_t>> result;
        for (Id a = 0; a < size(); ++a) {
            for (Id b = 0; b < size(); ++b) {
                if (has_arc(a, b)) result.push_back({{a, b}, weight(a, b)});
            }
        }
        return result;
    }

    Digraph unweighted() const {
        ArcSet arcs;
        for (const auto& [arc, w] : this->arcs()) arcs.push_back(arc);
        return Digraph(names_, arcs);
    }

    bool operator==(const WeightedMajorityGraph&) const = default;

private:
    NameIndex names_;
    std::vector<std::int64_t> margin_;  // positive entries only where an arc exists
};

inline WeightedMajorityGraph weighted_majority_graph(const PairwiseTally& n, const NameIndex& names) {
    const std::size_t m = n.size();
    std::vector<std::int64_t> margin(m * m, 0);
    for (Id a = 0; a < m; ++a) {
        for (Id b = 0; b < m; ++b) {
            if (a != b && n(a, b) > n(b, a)) margin[a * m + b] = n(a, b) - n(b, a);
        }
    }
    return WeightedMajorityGraph(names, std::move(margin));
}

inline WeightedMajorityGraph weighted_majority_graph(const Election& e) {
    return weighted_majority_graph(pairwise_tally(e), e.candidates());
}

inline Digraph majority_graph(const Election& e) {
    require_vertex_count(e.size());
    return weighted_majority_graph(e).unweighted();
}

}  // namespace conlab
