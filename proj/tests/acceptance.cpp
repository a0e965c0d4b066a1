// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace conlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Check {
    Outcome* out;
    int failures = 0;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (failures++ < 3) out->detail += (out->detail.empty() ? "" : "; ") + what;
        out->ok = false;
    }
};

Election example1() {
    return parse_election("candidates: a,b,c,d\n1: a>b>c>d\n1: c>a>d>b\n1: b>c>d>a\n");
}

Election example3() {
    return parse_election("candidates: a,b,c,d\n2: a>b>c>d\n2: b>a>c>d\n1: b>c>a>d\n");
}

Election doubled(const Digraph& g) {
    std::vector<VoteGroup> groups = election_from_digraph(g).groups();
    for (auto& grp : groups) grp.count *= 2;
    return Election(g.names(), groups);
}

std::vector<ArcSet> minimal_fas_sets(const Digraph& g) {
    const ArcSet all = g.arcs();
    std::vector<ArcSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << all.size()); ++bits) {
        ArcSet x;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if ((bits >> i) & 1U) x.push_back(all[i]);
        }
        if (is_minimal_fas(g, x)) out.push_back(x);
    }
    return out;
}

Outcome example1_set() {
    Outcome o;
    Check c{&o};
    const Election e = example1();
    const auto r = kemeny_consensus_set(e);
    std::vector<std::string> got;
    for (const auto& x : r.consensuses) got.push_back(format_ranking(x, e.candidates()));
    c.expect(r.optimum == 6, "optimum " + std::to_string(r.optimum));
    c.expect(got == std::vector<std::string>{"a>b>c>d", "b>c>a>d", "c>a>b>d"}, "consensus set differs");
    return o;
}

Outcome example3_borda() {
    Outcome o;
    Check c{&o};
    const Election e = example3();
    const auto& n = e.candidates();
    c.expect(borda_scores(e) == std::vector<std::int64_t>{11, 13, 6, 0}, "initial scores");
    const Election naive = e.with_vote(parse_ranking("a>b>c>d", n));
    c.expect(format_weak_order(borda_consensus(naive), n) == "b>a>c>d", "naive vote consensus");
    const auto w = borda_manipulation_to_consensus(e, 1, parse_weak_order("a>b>c>d", n));
    c.expect(w && w->size() == 1 && format_ranking(w->front(), n) == "a>c>d>b", "witness");
    return o;
}

Outcome control_counterexamples() {
    Outcome o;
    Check c{&o};
    const Election e = parse_election("candidates: a,b,c\n3: a>b>c\n1: a>c>b\n1: c>b>a\n");
    const auto& n = e.candidates();
    const Ranking target = parse_ranking("a>c>b", n);
    const auto remove_one = [&](const char* vote) {
        std::vector<std::int64_t> r(e.groups().size(), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = e.groups()[i].vote == parse_ranking(vote, n) ? 1 : 0;
        return e.without_votes(r);
    };
    c.expect(!is_kemeny_consensus(e, target), "target already a consensus");
    c.expect(!is_kemeny_consensus(remove_one("c>b>a"), target), "deleting furthest voter succeeded");
    c.expect(is_kemeny_consensus(remove_one("a>b>c"), target), "deleting an a>b>c voter failed");
    const auto cdv = kemeny_cdv_to_consensus(e, 1, target);
    c.expect(cdv && cdv->size() == 1 && format_ranking(cdv->front(), n) == "a>b>c", "cdv witness");

    const Election base = parse_election("candidates: a,b,c\n2: a>b>c\n1: a>c>b\n");
    const Election pool = parse_election("candidates: a,b,c\n1: a>b>c\n1: c>b>a\n");
    c.expect(!is_kemeny_consensus(base.with_vote(parse_ranking("a>b>c", n)), target), "adding the nearest voter succeeded");
    c.expect(is_kemeny_consensus(base.with_vote(parse_ranking("c>b>a", n)), target), "adding c>b>a failed");
    const auto cav = kemeny_cav_to_consensus(base, pool, 1, target);
    c.expect(cav && cav->size() == 1 && format_ranking(cav->front(), n) == "c>b>a", "cav witness");
    return o;
}

Outcome manipulation_law() {
    Outcome o;
    Check c{&o};
    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; ++t) {
        const std::size_t m = 1 + rng() % 5;
        const Election e = oracle::random_election(rng, m, rng() % 8);
        const auto k = static_cast<std::int64_t>(rng() % 3);
        const Ranking x = oracle::random_ranking(rng, m);
        const bool exhaustive = oracle::kemeny_manipulation_exhaustive(e, k, x);
        const bool all_vote_x = is_kemeny_consensus(k > 0 ? e.with_vote(x, k) : e, x);
        c.expect(exhaustive == all_vote_x, "trial " + std::to_string(t));
        c.expect(kemeny_manipulation_to_consensus(e, k, x).has_value() == exhaustive, "solver trial " + std::to_string(t));
    }
    return o;
}

Outcome fas_minimum_consensus() {
    Outcome o;
    Check c{&o};
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const Digraph g = gen::digraph(rng, 1 + rng() % 5);
        const Election e = election_from_digraph(g);
        const auto wmg = weighted_majority_graph(e);
        bool weights_ok = wmg.arcs().size() == g.arc_count();
        for (const auto& [arc, w] : wmg.arcs()) weights_ok = weights_ok && w == 2 && g.has_arc(arc.from, arc.to);
        c.expect(weights_ok, "wmg trial " + std::to_string(t));
        for (const auto& x : minimal_fas_sets(g)) {
            const auto order = topological_order(g.without_arcs(x));
            c.expect(order && is_minimum_fas(g, x) == is_kemeny_consensus(e, *order), "trial " + std::to_string(t));
        }
    }
    return o;
}

Outcome karp_hat() {
    Outcome o;
    Check c{&o};
    // Every graph on 1..4 labelled vertices, every vertex subset.
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto names = gen::vertex_names(n);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        }
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
            std::vector<std::pair<std::string, std::string>> edges;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                if ((bits >> p) & 1U) edges.emplace_back(names[pairs[p].first], names[pairs[p].second]);
            }
            const UndirectedGraph g = UndirectedGraph::from_names(names, edges);
            for (Mask x = 0; x <= g.all(); ++x) {
                const HatImage hat = vc_to_fas(g, x);
                c.expect(is_vertex_cover(g, x) == is_fas(hat.digraph, hat.arcs) &&
                             is_minimal_vertex_cover(g, x) == is_minimal_fas(hat.digraph, hat.arcs) &&
                             is_minimum_vertex_cover(g, x) ==
                                 is_minimum_fas(hat.digraph, hat.arcs, FasMethod::exhaustive),
                         "n=" + std::to_string(n) + " edges=" + std::to_string(bits) + " x=" + std::to_string(x));
            }
        }
    }
    return o;
}

Outcome doubled_coincidence() {
    Outcome o;
    Check c{&o};
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Election e = doubled(gen::digraph(rng, 1 + rng() % 6));
        c.expect(kemeny_consensus_set(e).consensuses == slater_consensus_set(e).consensuses, "trial " + std::to_string(t));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    Check c{&o};
    std::mt19937_64 rng(8);
    for (int t = 0; t < 300; ++t) {
        const Election e = oracle::random_election(rng, 1 + rng() % 7, rng() % 8);
        const auto dp = kemeny_consensus_set(e);
        const auto factorial = brute_force_consensus_set(e, Rule::kemeny);
        c.expect(dp.optimum == factorial.optimum && dp.consensuses == factorial.consensuses,
                 "trial " + std::to_string(t));
    }
    return o;
}

Outcome gnd_prime_reduction() {
    Outcome o;
    Check c{&o};
    std::mt19937_64 rng(9);
    int yes = 0;
    for (int t = 0; t < 20; ++t) {
        const QSat2Instance q = gen::qsat2(rng, 1, 1 + static_cast<std::size_t>(t % 2));
        const GndInstance image = qsat2_to_gnd_prime(q);
        const bool not_minimum = !is_minimum_gnd_prime(image.graph, static_cast<std::size_t>(image.ell), image.x);
        c.expect(oracle::qsat2(q) == not_minimum, describe::qsat2(q));
        yes += not_minimum ? 1 : 0;
    }
    if (o.ok) o.detail = std::to_string(yes) + " true, " + std::to_string(20 - yes) + " false";
    return o;
}

Outcome chain_preservation() {
    Outcome o;
    Check c{&o};
    // Every one-clause formula over x1 and y1 (both truth values occur).
    const std::vector<std::vector<int>> clauses{{1}, {-1}, {2}, {-2}, {1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
    int yes = 0;
    for (const auto& clause : clauses) {
        const QSat2Instance q{CnfFormula{2, {clause}}, {1}, {2}};
        const bool truth = oracle::qsat2(q);
        yes += truth ? 1 : 0;
        c.expect(truth == decide_chain_end(qsat2_chain(q)), describe::qsat2(q));
    }
    c.expect(yes > 0 && yes < static_cast<int>(clauses.size()), "instances not mixed");
    if (o.ok) o.detail = std::to_string(yes) + " true, " + std::to_string(clauses.size() - yes) + " false";
    return o;
}

Outcome kendall_metric() {
    Outcome o;
    Check c{&o};
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t m = 1 + rng() % 8;
        const Ranking x = oracle::random_ranking(rng, m);
        const Ranking y = oracle::random_ranking(rng, m);
        const Ranking z = oracle::random_ranking(rng, m);
        const auto pairs = static_cast<std::int64_t>(m * (m - 1) / 2);
        c.expect(kendall_tau(x, y) == kendall_tau(y, x), "symmetry");
        c.expect(kendall_tau(x, z) <= kendall_tau(x, y) + kendall_tau(y, z), "triangle");
        c.expect(kendall_tau(x, y) + kendall_tau(x, y.reversed()) == pairs, "reversal");
        c.expect(kendall_tau(x, y) == oracle::kendall(x, y), "oracle");
        c.expect(kendall_tau(x, x) == 0, "identity");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"example 1 Kemeny consensus set", 1, example1_set},
        {"example 3 Borda manipulation", 1, example3_borda},
        {"CDV/CAV counterexamples", 1, control_counterexamples},
        {"manipulation law (500 elections)", 120, manipulation_law},
        {"minimum fas <=> Kemeny consensus of e(G) (200 digraphs)", 120, fas_minimum_consensus},
        {"Karp hat law (all graphs <= 4)", 60, karp_hat},
        {"Kemeny = Slater on doubled elections (200)", 120, doubled_coincidence},
        {"DP vs factorial oracle (300 elections)", 180, oracle_equivalence},
        {"QSAT2 -> GND' reduction (20 formulas)", 300, gnd_prime_reduction},
        {"chain preservation n=m=1", 300, chain_preservation},
        {"Kendall tau metric laws (1000)", 10, kendall_metric},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& cr = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.budget_seconds) {
            o.ok = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, cr.budget_seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << cr.name << " (" << timing << ")";
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << '\n' << std::flush;
        failed += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
