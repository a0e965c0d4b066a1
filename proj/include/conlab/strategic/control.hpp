#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/election.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/core/ranking.hpp"
#include "conlab/recognition/consensus.hpp"
#include "conlab/solvers/brute_force.hpp"

namespace conlab {

// Control to consensus. Candidate deletion searches D by size and then
// lexicographically; voter deletion/addition searches multisets of vote
// groups the same way (a group with count c can lose or contribute up to c
// voters). The first working choice is returned.

namespace detail {

inline void require_limit(std::int64_t k) {
    if (k < 0) throw InputError("limit must be nonnegative");
}

inline std::optional<Mask> cdc(const Election& e, std::int64_t k, const Ranking& target, Rule rule,
                               const Limits& limits) {
    require_limit(k);
    require_permutation(target, e.size(), "target");
    require_vertex_count(e.size());
    std::uint64_t nodes = 0;
    std::optional<Mask> found;
    for_each_subset_up_to(full_mask(e.size()), static_cast<std::size_t>(k), [&](Mask deleted) {
        if (++nodes > limits.search_nodes) throw SizeLimitError("CDC search budget exhausted");
        const Mask keep = full_mask(e.size()) & ~deleted;
        const Election restricted = e.restricted(keep);
        const Ranking order = Election::restrict_ranking(target, keep);
        const bool ok = rule == Rule::kemeny ? is_kemeny_consensus(restricted, order, limits)
                                             : is_slater_consensus(restricted, order, limits);
        if (ok) found = deleted;
        return ok;
    });
    return found;
}

/// Lexicographically first multiset of at most k units drawn from `groups`
/// (respecting counts) for which `accept(per-group amounts)` holds.
template <typename Accept>
std::optional<std::vector<Ranking>> first_voter_change(const std::vector<VoteGroup>& groups, std::int64_t k,
                                                       const Limits& limits, Accept&& accept) {
    require_limit(k);
    std::vector<std::int64_t> caps;
    for (const auto& g : groups) caps.push_back(g.count);
    std::uint64_t nodes = 0;
    std::optional<std::vector<Ranking>> found;
    for (std::int64_t size = 0; size <= k && !found; ++size) {
        const bool hit = for_each_multiset(caps, static_cast<std::size_t>(size), [&](const std::vector<std::size_t>& tuple) {
            if (++nodes > limits.search_nodes) throw SizeLimitError("voter control search budget exhausted");
            std::vector<std::int64_t> amounts(groups.size(), 0);
            for (std::size_t i : tuple) ++amounts[i];
            if (!accept(amounts)) return false;
            std::vector<Ranking> chosen;
            for (std::size_t i : tuple) chosen.push_back(groups[i].vote);
            found = std::move(chosen);
            return true;
        });
        if (hit) break;
    }
    return found;
}

}  // namespace detail

/// D ⊆ C, |D| <= k, such that target restricted to C - D is a Kemeny
/// consensus of the election restricted to C - D.
inline std::optional<Mask> kemeny_cdc_to_consensus(const Election& e, std::int64_t k, const Ranking& target,
                                                   const Limits& limits = {}) {
    return detail::cdc(e, k, target, Rule::kemeny, limits);
}

inline std::optional<Mask> slater_cdc_to_consensus(const Election& e, std::int64_t k, const Ranking& target,
                                                   const Limits& limits = {}) {
    return detail::cdc(e, k, target, Rule::slater, limits);
}

/// Voters to delete (at most k) so that target becomes a Kemeny consensus.
inline std::optional<std::vector<Ranking>> kemeny_cdv_to_consensus(const Election& e, std::int64_t k,
                                                                   const Ranking& target, const Limits& limits = {}) {
    require_permutation(target, e.size(), "target");
    return detail::first_voter_change(e.groups(), k, limits, [&](const std::vector<std::int64_t>& remove) {
        return is_kemeny_consensus(e.without_votes(remove), target, limits);
    });
}

/// Unregistered voters from `pool` to add (at most k) so that target becomes
/// a Kemeny consensus. The pool must range over the same candidates.
inline std::optional<std::vector<Ranking>> kemeny_cav_to_consensus(const Election& e, const Election& pool,
                                                                   std::int64_t k, const Ranking& target,
                                                                   const Limits& limits = {}) {
    require_permutation(target, e.size(), "target");
    if (!(pool.candidates() == e.candidates())) throw DomainError("pool votes range over different candidates");
    return detail::first_voter_change(pool.groups(), k, limits, [&](const std::vector<std::int64_t>& add) {
        std::vector<VoteGroup> extra;
        for (std::size_t i = 0; i < add.size(); ++i) {
            if (add[i] > 0) extra.push_back({add[i], pool.groups()[i].vote});
        }
        return is_kemeny_consensus(e.with_votes(extra), target, limits);
    });
}

}  // namespace conlab
