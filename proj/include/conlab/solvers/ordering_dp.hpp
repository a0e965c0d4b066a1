#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/ranking.hpp"

namespace conlab {

/// Optimum score and every ranking attaining it, in ascending lexicographic
/// order of the rankings.
struct ConsensusResult {
    std::int64_t optimum = 0;
    std::vector<Ranking> consensuses;

    bool operator==(const ConsensusResult&) const = default;
};

/// Exact minimum-cost ordering by dynamic programming over the set of
/// candidates already placed at the top. `cost(c, placed)` is the cost added
/// when c is ranked directly below the candidates in `placed`; it may depend
/// only on c and the placed set, which is what makes the 2^m table exact.
///
/// best_[P] is the cheapest way to rank exactly the candidates of P in the
/// top |P| positions.
template <typename Cost>
class OrderingDp {
public:
    OrderingDp(std::size_t m, Cost cost) : m_(m), cost_(std::move(cost)) {
        const Mask full = full_mask(m_);
        best_.assign(std::size_t{1} << m_, std::numeric_limits<std::int64_t>::max());
        best_[0] = 0;
        for (Mask placed = 0; placed < full; ++placed) {
            const std::int64_t base = best_[placed];
            Mask open = full & ~placed;
            while (open != 0) {
                const Id c = static_cast<Id>(std::countr_zero(open));
                open &= open - 1;
                const Mask next = placed | bit(c);
                const std::int64_t value = base + cost_(c, placed);
                if (value < best_[next]) best_[next] = value;
            }
        }
    }

    std::size_t size() const noexcept { return m_; }
    std::int64_t optimum() const { return best_[full_mask(m_)]; }

    /// Every optimal ordering, recovered through all optimal predecessors.
    std::vector<Ranking> all_optimal() const {
        std::vector<Ranking> result;
        std::vector<Id> suffix;  // candidates fixed at the bottom, bottom first
        collect(full_mask(m_), suffix, result);
        std::sort(result.begin(), result.end());
        return result;
    }

    /// Candidates ranked first in at least one optimal ordering.
    Mask optimal_leaders() const {
        if (m_ == 0) return 0;
        const auto on_path = optimal_prefixes();
        Mask leaders = 0;
        for (Id c = 0; c < m_; ++c) {
            if (on_path[bit(c)] && cost_(c, 0) == best_[bit(c)]) leaders |= bit(c);
        }
        return leaders;
    }

    /// Lexicographically smallest optimal ordering.
    Ranking first_optimal() const {
        const auto on_path = optimal_prefixes();
        std::vector<Id> order;
        Mask placed = 0;
        while (order.size() < m_) {
            for (Id c = 0; c < m_; ++c) {
                if (contains(placed, c)) continue;
                const Mask next = placed | bit(c);
                if (on_path[next] && best_[placed] + cost_(c, placed) == best_[next]) {
                    order.push_back(c);
                    placed = next;
                    break;
                }
            }
        }
        return Ranking(std::move(order));
    }

private:
    /// Marks every set that is the top part of some optimal ordering.
    std::vector<char> optimal_prefixes() const {
        std::vector<char> on_path(best_.size(), 0);
        on_path.back() = 1;  // the full set
        // Supersets have larger numeric values, so a descending sweep sees
        // every successor before its predecessors.
        for (Mask p = full_mask(m_); p > 0; --p) {
            if (!on_path[p]) continue;
            Mask members = p;
            while (members != 0) {
                const Id c = static_cast<Id>(std::countr_zero(members));
                members &= members - 1;
                const Mask prev = p & ~bit(c);
                if (best_[prev] + cost_(c, prev) == best_[p]) on_path[prev] = 1;
            }
        }
        return on_path;
    }

    void collect(Mask placed, std::vector<Id>& suffix, std::vector<Ranking>& out) const {
        if (placed == 0) {
            out.emplace_back(std::vector<Id>(suffix.rbegin(), suffix.rend()));
            return;
        }
        Mask members = placed;
        while (members != 0) {
            const Id c = static_cast<Id>(std::countr_zero(members));
            members &= members - 1;
            const Mask prev = placed & ~bit(c);
            if (best_[prev] + cost_(c, prev) == best_[placed]) {
                suffix.push_back(c);
                collect(prev, suffix, out);
                suffix.pop_back();
            }
        }
    }

    std::size_t m_;
    Cost cost_;
    std::vector<std::int64_t> best_;
};

template <typename Cost>
OrderingDp(std::size_t, Cost) -> OrderingDp<Cost>;

}  // namespace conlab
