#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "conlab/core/errors.hpp"

namespace conlab {

/// Enumeration bounds. Every exact search checks its bound up front and
/// throws SizeLimitError instead of running away.
struct Limits {
    std::size_t score_candidates = 20;        // subset DP for optimum values
    std::size_t set_candidates = 10;          // DP with full consensus-set enumeration
    std::size_t brute_force_candidates = 8;   // factorial oracle
    std::size_t fas_exhaustive_arcs = 40;     // arc-subset search for minimum fas
    std::size_t strategic_candidates = 7;     // per-vote enumeration in manipulation
    std::size_t manipulators = 3;
    std::uint64_t search_nodes = 50'000'000;  // node budget for nested searches
    std::int64_t max_weight = 10'000;         // unary candidate weights

    static constexpr const char* kEnvVar = "CONSENSUS_LAB_MAX_CANDIDATES";

    /// Defaults, with every candidate-count bound replaced by
    /// $CONSENSUS_LAB_MAX_CANDIDATES when set.
    static Limits from_env() {
        Limits limits;
        if (const char* raw = std::getenv(kEnvVar); raw != nullptr && *raw != '\0') {
            char* end = nullptr;
            const unsigned long value = std::strtoul(raw, &end, 10);
            if (end == raw || *end != '\0' || value == 0 || value > 64) {
                throw InputError(std::string(kEnvVar) + " must be an integer in [1, 64]");
            }
            limits.score_candidates = value;
            limits.set_candidates = value;
            limits.brute_force_candidates = value;
            limits.strategic_candidates = value;
        }
        return limits;
    }
};

inline void require_at_most(std::size_t value, std::size_t bound, const char* what) {
    if (value > bound) {
        throw SizeLimitError(std::string(what) + ": " + std::to_string(value) +
                             " exceeds limit " + std::to_string(bound));
    }
}

}  // namespace conlab
