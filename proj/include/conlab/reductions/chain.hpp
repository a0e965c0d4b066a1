#pragma once

#include <algorithm>
#include <cstdint>

#include "conlab/core/limits.hpp"
#include "conlab/reductions/kemeny_images.hpp"
#include "conlab/reductions/sat.hpp"
#include "conlab/strategic/control.hpp"

namespace conlab {

/// Every intermediate instance of
/// QSAT2 -> GND' -> GND -> VC-RR -> FAS-RR -> Kemeny-CDC.
struct ChainImages {
    GndInstance gnd_prime;    // (H, ell, X, k); q true iff H has a GND' solution of size k
    UndirectedGraph gnd;      // complement of H, same ell and k, clique form
    VcInstance vcrr;
    FasInstance fasrr;
    CdcImage cdc;
};

inline ChainImages qsat2_chain(const QSat2Instance& q) {
    ChainImages out{qsat2_to_gnd_prime(q), {}, {}, {}, {}};
    out.gnd = out.gnd_prime.graph.complement();
    out.vcrr = gnd_to_vcrr(out.gnd, out.gnd_prime.limit, out.gnd_prime.ell);
    out.fasrr = vcrr_to_fasrr(out.vcrr.graph, out.vcrr.limit, out.vcrr.x);
    out.cdc = fasrr_to_kemeny_cdc(out.fasrr.graph, out.fasrr.limit, out.fasrr.x);
    return out;
}

/// Decides the final Kemeny-CDC instance. The election has twice as many
/// candidates as the VC-RR graph, so the Kemeny candidate limit is raised to
/// fit it, up to kChainCandidates (n = m = 1 needs 22).
inline constexpr std::size_t kChainCandidates = 24;

inline bool decide_chain_end(const ChainImages& images, Limits limits = {}) {
    const std::size_t needed = std::min(images.cdc.election.size(), kChainCandidates);
    limits.score_candidates = std::max(limits.score_candidates, needed);
    return kemeny_cdc_to_consensus(images.cdc.election, images.cdc.limit, images.cdc.order, limits).has_value();
}

}  // namespace conlab
