#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "conlab/core/bits.hpp"
#include "conlab/core/cnf.hpp"
#include "conlab/core/election.hpp"
#include "conlab/core/errors.hpp"
#include "conlab/core/graph.hpp"
#include "conlab/core/limits.hpp"
#include "conlab/recognition/consensus.hpp"
#include "conlab/recognition/deletion.hpp"
#include "conlab/recognition/fas.hpp"
#include "conlab/recognition/gnd.hpp"
#include "conlab/recognition/vertex_cover.hpp"
#include "conlab/reductions/chain.hpp"
#include "conlab/reductions/gadgets.hpp"
#include "conlab/reductions/kemeny_images.hpp"
#include "conlab/reductions/sat.hpp"
#include "conlab/strategic/control.hpp"

namespace conlab {

struct ReductionFailure {
    std::string instance;
    std::string left;
    std::string right;

    bool operator==(const ReductionFailure&) const = default;
};

struct ReductionReport {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t max_size = 0;
    std::size_t trials = 0;
    std::size_t agreements = 0;
    std::vector<ReductionFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// SplitMix64 step; spreads the master seed into independent trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) {
    return splitmix64(splitmix64(master) ^ static_cast<std::uint64_t>(trial));
}

// ---------------------------------------------------------------------------
// Random instances. Draws use plain modulo so that sequences are identical
// across standard libraries.

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }
inline std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) { return lo + below(rng, hi - lo + 1); }
inline bool coin(Rng& rng) { return (rng() & 1U) != 0; }

/// a, b, ..., z, then v26, v27, ...
inline std::vector<std::string> vertex_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
    }
    return names;
}

inline UndirectedGraph graph(Rng& rng, std::size_t n) {
    std::vector<std::pair<Id, Id>> edges;
    for (Id u = 0; u < n; ++u) {
        for (Id v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return UndirectedGraph(NameIndex(vertex_names(n)), edges);
}

/// Each pair independently: no arc, u -> v, or v -> u.
inline Digraph digraph(Rng& rng, std::size_t n) {
    ArcSet arcs;
    for (Id u = 0; u < n; ++u) {
        for (Id v = u + 1; v < n; ++v) {
            switch (below(rng, 3)) {
                case 1: arcs.push_back({u, v}); break;
                case 2: arcs.push_back({v, u}); break;
                default: break;
            }
        }
    }
    return Digraph(NameIndex(vertex_names(n)), arcs);
}

inline Mask subset(Rng& rng, std::size_t n) { return rng() & full_mask(n); }

inline ArcSet arc_subset(Rng& rng, const ArcSet& arcs) {
    ArcSet chosen;
    for (const Arc& a : arcs) {
        if (coin(rng)) chosen.push_back(a);
    }
    return chosen;
}

/// Random 1..3-literal clauses over the given variables (distinct variables
/// within a clause).
inline std::vector<int> clause(Rng& rng, const std::vector<int>& vars) {
    std::vector<int> pool = vars;
    const std::size_t size = between(rng, 1, std::min<std::size_t>(3, pool.size()));
    std::vector<int> lits;
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = below(rng, pool.size());
        lits.push_back(coin(rng) ? pool[j] : -pool[j]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return lits;
}

inline QSat2Instance qsat2(Rng& rng, std::size_t n, std::size_t m) {
    QSat2Instance q;
    q.formula.variables = static_cast<int>(2 * n);
    std::vector<int> all;
    for (int v = 1; v <= static_cast<int>(n); ++v) q.exists_vars.push_back(v);
    for (int v = static_cast<int>(n) + 1; v <= static_cast<int>(2 * n); ++v) q.inner_vars.push_back(v);
    for (int v = 1; v <= static_cast<int>(2 * n); ++v) all.push_back(v);
    for (std::size_t j = 0; j < m; ++j) q.formula.clauses.push_back(clause(rng, all));
    return q;
}

}  // namespace gen

// ---------------------------------------------------------------------------
// Compact one-line descriptions for failure reports.

namespace describe {

inline std::string vertices(const NameIndex& names, Mask x) {
    std::string out = "{";
    bool first = true;
    for (Id v : mask_members(x)) {
        out += (first ? "" : ",") + names.name(v);
        first = false;
    }
    return out + "}";
}

inline std::string graph(const UndirectedGraph& g) {
    std::string out = "V=" + vertices(g.names(), g.all()) + " E={";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        out += (first ? "" : ",") + g.names().name(u) + "-" + g.names().name(v);
        first = false;
    }
    return out + "}";
}

inline std::string arcs(const NameIndex& names, const ArcSet& x) {
    std::string out = "{";
    bool first = true;
    for (const Arc& a : x) {
        out += (first ? "" : ",") + names.name(a.from) + ">" + names.name(a.to);
        first = false;
    }
    return out + "}";
}

inline std::string digraph(const Digraph& g) {
    return "V=" + vertices(g.names(), g.all()) + " A=" + arcs(g.names(), g.arcs());
}

inline std::string cnf(const CnfFormula& f) {
    std::string out;
    for (const auto& clause : f.clauses) {
        out += "(";
        for (std::size_t i = 0; i < clause.size(); ++i) out += (i ? " " : "") + std::to_string(clause[i]);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

inline std::string qsat2(const QSat2Instance& q) {
    auto list = [](const std::vector<int>& vars) {
        std::string out;
        for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + std::to_string(vars[i]);
        return out;
    };
    return "e=" + list(q.exists_vars) + " a=" + list(q.inner_vars) + " " + cnf(q.formula);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace describe

// ---------------------------------------------------------------------------
// Trials. Each trial builds one random instance from its own seed, applies
// the construction, and decides both sides with exact solvers.

struct TrialOutcome {
    std::string instance;
    std::string left;
    std::string right;
};

using TrialFn = std::function<TrialOutcome(gen::Rng&, std::size_t max_size, const Limits&)>;

namespace trials {

/// Cover / minimal / minimum status of x in g versus of x-hat in g-hat.
inline TrialOutcome vc_to_fas(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const UndirectedGraph g = gen::graph(rng, gen::between(rng, 1, max_size));
    const Mask x = gen::subset(rng, g.size());
    const HatImage hat = vc_to_fas(g, x);
    auto flags = [](bool a, bool b, bool c) {
        return std::string(a ? "cover" : "-") + "/" + (b ? "minimal" : "-") + "/" + (c ? "minimum" : "-");
    };
    return {describe::graph(g) + " X=" + describe::vertices(g.names(), x),
            flags(is_vertex_cover(g, x), is_minimal_vertex_cover(g, x), is_minimum_vertex_cover(g, x, limits)),
            flags(is_fas(hat.digraph, hat.arcs), is_minimal_fas(hat.digraph, hat.arcs),
                  is_minimum_fas(hat.digraph, hat.arcs, FasMethod::exhaustive, limits))};
}

/// Weighted majority graph of e(G) against G with every weight 2.
inline TrialOutcome e_of_g_wmg(gen::Rng& rng, std::size_t max_size, const Limits&) {
    const Digraph g = gen::digraph(rng, gen::between(rng, 1, max_size));
    const Election e = election_from_digraph(g);
    std::ostringstream expected;
    std::ostringstream actual;
    expected << "voters=" << 2 * g.arc_count();
    actual << "voters=" << e.voter_count();
    for (const Arc& a : g.arcs()) expected << " " << g.names().name(a.from) << ">" << g.names().name(a.to) << ":2";
    for (const auto& [arc, w] : weighted_majority_graph(e).arcs()) {
        actual << " " << g.names().name(arc.from) << ">" << g.names().name(arc.to) << ":" << w;
    }
    return {describe::digraph(g), expected.str(), actual.str()};
}

/// For every minimal fas X of G: X minimum <=> topological order of G - X is
/// a Kemeny consensus of e(G).
inline TrialOutcome fas_minimum_consensus(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const Digraph g = gen::digraph(rng, gen::between(rng, 1, max_size));
    const ArcSet arcs = g.arcs();
    require_at_most(arcs.size(), limits.fas_exhaustive_arcs, "arcs");
    const Election e = election_from_digraph(g);
    std::string left;
    std::string right;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << arcs.size()); ++bits) {
        ArcSet x;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if ((bits >> i) & 1U) x.push_back(arcs[i]);
        }
        if (!is_minimal_fas(g, x)) continue;
        const auto order = topological_order(g.without_arcs(x));
        const std::string tag = describe::arcs(g.names(), x) + ":";
        left += tag + describe::yes_no(is_minimum_fas(g, x, FasMethod::exhaustive, limits)) + " ";
        right += tag + describe::yes_no(order && is_kemeny_consensus(e, *order, limits)) + " ";
    }
    return {describe::digraph(g), left, right};
}

/// Minimum fas recognition versus Kemeny recognition on the image.
inline TrialOutcome fas_to_kemeny_recognition(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const Digraph g = gen::digraph(rng, gen::between(rng, 1, max_size));
    // Bias towards fas candidates: half the time start from a minimal one.
    ArcSet x = gen::arc_subset(rng, g.arcs());
    if (gen::coin(rng)) {
        x = g.arcs();
        for (std::size_t i = x.size(); i-- > 0;) {
            ArcSet smaller = x;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
            if (is_fas(g, smaller) && gen::coin(rng)) x = std::move(smaller);
        }
    }
    const auto image = fasr_to_kemeny_recognition(g, x);
    return {describe::digraph(g) + " X=" + describe::arcs(g.names(), x),
            describe::yes_no(is_minimum_fas(g, x, FasMethod::exhaustive, limits)),
            describe::yes_no(is_kemeny_consensus(image.election, image.order, limits))};
}

/// Clause counts of phi' under x1 = true and x1 = false, from phi alone
/// versus by enumerating phi'.
inline TrialOutcome phi_to_phi_prime(gen::Rng& rng, std::size_t max_size, const Limits&) {
    const std::size_t n = gen::between(rng, 1, std::max<std::size_t>(max_size, 1));
    const std::size_t clauses = gen::between(rng, 0, max_size);
    CnfFormula phi{static_cast<int>(n) + 1, {}};
    std::vector<int> vars;
    for (int v = 2; v <= phi.variables; ++v) vars.push_back(v);
    for (std::size_t j = 0; j < clauses; ++j) phi.clauses.push_back(gen::clause(rng, vars));
    const CnfFormula prime = phi_to_phi_prime(phi);
    const std::size_t m = prime.clauses.size();

    std::vector<int> rest(vars);
    std::vector<bool> assignment(static_cast<std::size_t>(prime.variables) + 1, false);
    std::size_t max_phi = 0;
    for_each_assignment(rest, assignment, [&] {
        max_phi = std::max(max_phi, phi.satisfied_count(assignment));
        return false;
    });
    std::size_t true_min = m;
    std::size_t true_max = 0;
    std::size_t false_max = 0;
    for_each_assignment(rest, assignment, [&] {
        assignment[1] = true;
        const std::size_t t = prime.satisfied_count(assignment);
        true_min = std::min(true_min, t);
        true_max = std::max(true_max, t);
        assignment[1] = false;
        false_max = std::max(false_max, prime.satisfied_count(assignment));
        return false;
    });
    std::ostringstream left;
    std::ostringstream right;
    left << "x1=true:" << m - 1 << ".." << m - 1 << " x1=false:max " << max_phi + 1;
    right << "x1=true:" << true_min << ".." << true_max << " x1=false:max " << false_max;
    return {describe::cnf(phi), left.str(), right.str()};
}

/// QSAT2 truth versus "X is not a minimum GND' solution of H".
inline TrialOutcome qsat2_to_gnd_prime(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const QSat2Instance q = gen::qsat2(rng, gen::between(rng, 1, max_size), gen::between(rng, 1, max_size));
    const GndInstance image = conlab::qsat2_to_gnd_prime(q);
    const auto ell = static_cast<std::size_t>(image.ell);
    return {describe::qsat2(q), describe::yes_no(qsat2_truth(q)),
            describe::yes_no(!is_minimum_gnd_prime(image.graph, ell, image.x, limits))};
}

/// GND (clique form) versus VC recognition restriction on the image.
inline TrialOutcome gnd_to_vcrr(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const UndirectedGraph g = gen::graph(rng, gen::between(rng, 1, max_size));
    const auto k = static_cast<std::int64_t>(gen::between(rng, 0, 1));
    const auto ell = static_cast<std::int64_t>(gen::between(rng, 1, 3));
    const VcInstance image = conlab::gnd_to_vcrr(g, k, ell);
    std::ostringstream inst;
    inst << describe::graph(g) << " k=" << k << " ell=" << ell;
    return {inst.str(),
            describe::yes_no(gnd_solvable(g, static_cast<std::size_t>(ell), static_cast<std::size_t>(k),
                                          GndForm::clique, limits)),
            describe::yes_no(vcr_restriction(image.graph, image.limit, image.x, limits).has_value())};
}

inline std::vector<Mask> minimal_vertex_covers(const UndirectedGraph& g) {
    std::vector<Mask> covers;
    for (Mask x = 0; x <= g.all(); ++x) {
        if (is_minimal_vertex_cover(g, x)) covers.push_back(x);
        if (x == g.all()) break;
    }
    return covers;
}

/// VC recognition restriction versus FAS recognition restriction on the hat.
inline TrialOutcome vcrr_to_fasrr(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const UndirectedGraph g = gen::graph(rng, gen::between(rng, 1, max_size));
    const auto covers = minimal_vertex_covers(g);
    const Mask x = covers[gen::below(rng, covers.size())];
    const auto k = static_cast<std::int64_t>(gen::between(rng, 0, 2));
    const FasInstance image = conlab::vcrr_to_fasrr(g, k, x);
    return {describe::graph(g) + " k=" + std::to_string(k) + " X=" + describe::vertices(g.names(), x),
            describe::yes_no(vcr_restriction(g, k, x, limits).has_value()),
            describe::yes_no(fasr_restriction(image.graph, image.limit, image.x, limits).has_value())};
}

/// VC recognition deletion versus FAS recognition deletion on the hat.
inline TrialOutcome vcrd_to_fasrd(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const UndirectedGraph g = gen::graph(rng, gen::between(rng, 1, max_size));
    const Mask x = gen::subset(rng, g.size());
    const auto k = static_cast<std::int64_t>(gen::between(rng, 0, 2));
    const FasInstance image = conlab::vcrd_to_fasrd(g, k, x);
    return {describe::graph(g) + " k=" + std::to_string(k) + " X=" + describe::vertices(g.names(), x),
            describe::yes_no(vcr_deletion(g, k, x, limits).has_value()),
            describe::yes_no(fasr_deletion(image.graph, image.limit, image.x, limits).has_value())};
}

/// FAS recognition restriction versus Kemeny CDC on the image.
inline TrialOutcome fasrr_to_kemeny_cdc(gen::Rng& rng, std::size_t max_size, const Limits& limits) {
    const Digraph g = gen::digraph(rng, gen::between(rng, 1, max_size));
    ArcSet x = gen::arc_subset(rng, g.arcs());
    if (gen::below(rng, 4) != 0) {
        // Mostly minimal fas candidates, so the restriction side is exercised.
        x = g.arcs();
        for (std::size_t i = x.size(); i-- > 0;) {
            ArcSet smaller = x;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
            if (is_fas(g, smaller)) x = std::move(smaller);
        }
    }
    const auto k = static_cast<std::int64_t>(gen::between(rng, 0, 1));
    const bool left = is_minimal_fas(g, x) && fasr_restriction(g, k, x, limits).has_value();
    const CdcImage image = conlab::fasrr_to_kemeny_cdc(g, k, x);
    const bool right = kemeny_cdc_to_consensus(image.election, image.limit, image.order, limits).has_value();
    return {describe::digraph(g) + " k=" + std::to_string(k) + " X=" + describe::arcs(g.names(), x),
            describe::yes_no(left), describe::yes_no(right)};
}

/// QSAT2 truth versus the Kemeny CDC instance at the end of the chain.
/// Only n = 1, m = 1 is decidable at the far end (22 candidates); max_size
/// is ignored.
inline TrialOutcome chain(gen::Rng& rng, std::size_t, const Limits& limits) {
    const QSat2Instance q = gen::qsat2(rng, 1, 1);
    const ChainImages images = qsat2_chain(q);
    return {describe::qsat2(q), describe::yes_no(qsat2_truth(q)), describe::yes_no(decide_chain_end(images, limits))};
}

}  // namespace trials

inline const std::map<std::string, TrialFn>& reduction_registry() {
    static const std::map<std::string, TrialFn> registry{
        {"chain", trials::chain},
        {"e_of_g_wmg", trials::e_of_g_wmg},
        {"fas_minimum_consensus", trials::fas_minimum_consensus},
        {"fas_to_kemeny_recognition", trials::fas_to_kemeny_recognition},
        {"fasrr_to_kemeny_cdc", trials::fasrr_to_kemeny_cdc},
        {"gnd_to_vcrr", trials::gnd_to_vcrr},
        {"phi_to_phi_prime", trials::phi_to_phi_prime},
        {"qsat2_to_gnd_prime", trials::qsat2_to_gnd_prime},
        {"vc_to_fas", trials::vc_to_fas},
        {"vcrd_to_fasrd", trials::vcrd_to_fasrd},
        {"vcrr_to_fasrr", trials::vcrr_to_fasrr},
    };
    return registry;
}

inline std::vector<std::string> reduction_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : reduction_registry()) names.push_back(name);
    return names;
}

/// Runs `trials` seeded trials of the named reduction. Trials run on up to
/// `threads` workers (0 = hardware concurrency); each trial draws from its
/// own seed, so the report does not depend on scheduling.
inline ReductionReport verify_reduction(const std::string& name, std::size_t max_size, std::size_t trials,
                                        std::uint64_t seed, const Limits& limits = {}, unsigned threads = 0) {
    const auto it = reduction_registry().find(name);
    if (it == reduction_registry().end()) throw InputError("unknown reduction '" + name + "'");
    if (max_size == 0) throw InputError("max size must be positive");
    const TrialFn& fn = it->second;

    std::vector<TrialOutcome> outcomes(trials);
    std::vector<std::exception_ptr> errors(trials);
    const auto run_one = [&](std::size_t t) {
        try {
            gen::Rng rng(trial_seed(seed, t));
            outcomes[t] = fn(rng, max_size, limits);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
    if (threads <= 1) {
        for (std::size_t t = 0; t < trials; ++t) run_one(t);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < trials; t += threads) run_one(t);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    ReductionReport report{name, seed, max_size, trials, 0, {}};
    for (auto& o : outcomes) {
        if (o.left == o.right) {
            ++report.agreements;
        } else {
            report.failures.push_back({std::move(o.instance), std::move(o.left), std::move(o.right)});
        }
    }
    return report;
}

}  // namespace conlab
