#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"

using namespace conlab;

namespace {

const NameIndex kAbcd({"a", "b", "c", "d"});

Ranking rk(const char* text, const NameIndex& names = kAbcd) { return parse_ranking(text, names); }

Election example1() {
    return parse_election("candidates: a,b,c,d\n1: a>b>c>d\n1: c>a>d>b\n1: b>c>d>a\n");
}

Election example3() {
    return parse_election("candidates: a,b,c,d\n2: a>b>c>d\n2: b>a>c>d\n1: b>c>a>d\n");
}

}  // namespace

TEST(KendallTau, KnownValues) {
    const NameIndex abc({"a", "b", "c"});
    EXPECT_EQ(kendall_tau(rk("a>b>c", abc), rk("a>b>c", abc)), 0);
    EXPECT_EQ(kendall_tau(rk("a>b>c>d"), rk("d>c>b>a")), 6);
    EXPECT_EQ(kendall_tau(rk("a>b>c>d"), rk("c>a>d>b")), 3);
    EXPECT_EQ(oracle::kendall(rk("a>b>c>d"), rk("c>a>d>b")), 3);
}

TEST(KendallTau, MismatchedSetsRejected) {
    EXPECT_THROW(kendall_tau(Ranking({0, 1, 2}), Ranking({0, 1})), DomainError);
    EXPECT_THROW(kendall_tau(Ranking({0, 1, 1}), Ranking({0, 1, 2})), DomainError);
}

TEST(KendallTau, MetricLawsOnRandomTriples) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + rng() % 8;
        const auto x = oracle::random_ranking(rng, m);
        const auto y = oracle::random_ranking(rng, m);
        const auto z = oracle::random_ranking(rng, m);
        const auto dxy = kendall_tau(x, y);
        EXPECT_EQ(dxy, oracle::kendall(x, y));
        EXPECT_EQ(dxy, kendall_tau(y, x));
        EXPECT_EQ(dxy == 0, x == y);
        EXPECT_LE(kendall_tau(x, z), dxy + kendall_tau(y, z));
        EXPECT_EQ(dxy + kendall_tau(x, y.reversed()), static_cast<std::int64_t>(m * (m - 1) / 2));
    }
}

TEST(Distance, ExampleElection) {
    const Election e = example1();
    EXPECT_EQ(distance_to_election(rk("a>b>c>d"), e), 6);
    EXPECT_EQ(distance_to_election(rk("d>a>b>c"), e), 11);  // 3 + 4 + 4
    EXPECT_EQ(distance_to_election(rk("d>c>b>a"), e), 12);
}

TEST(Distance, EmptyVoterList) {
    const Election e(kAbcd, {});
    EXPECT_EQ(distance_to_election(rk("c>a>d>b"), e), 0);
}

TEST(Distance, TallyFormMatchesPerVoterSum) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 6;
        const Election e = oracle::random_election(rng, m, rng() % 8);
        const auto x = oracle::random_ranking(rng, m);
        EXPECT_EQ(distance_to_election(x, e), oracle::distance(x, e));
    }
}

TEST(Tally, Counts) {
    const auto t1 = pairwise_tally(example1());
    EXPECT_EQ(t1(0, 1), 2);
    EXPECT_EQ(t1(1, 0), 1);
    const auto t3 = pairwise_tally(example3());
    EXPECT_EQ(t3(0, 1), 2);
    EXPECT_EQ(t3(1, 0), 3);
    const auto single = pairwise_tally(Election::from_names({"a", "b"}, {{1, {"a", "b"}}}));
    EXPECT_EQ(single(0, 1), 1);
    EXPECT_EQ(single(1, 0), 0);
}

TEST(Tally, PairsSumToVoterCount) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + rng() % 5;
        const Election e = oracle::random_election(rng, m, rng() % 9);
        const auto t = pairwise_tally(e);
        for (Id a = 0; a < m; ++a) {
            for (Id b = a + 1; b < m; ++b) EXPECT_EQ(t(a, b) + t(b, a), e.voter_count());
        }
    }
}

TEST(MajorityGraph, ExampleWeights) {
    const auto wmg = weighted_majority_graph(example1());
    using W = std::pair<Arc, std::int64_t>;
    const std::vector<W> expected{{{0, 1}, 1}, {{0, 3}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 0}, 1}, {{2, 3}, 3}};
    EXPECT_EQ(wmg.arcs(), expected);
    const Digraph g = majority_graph(example1());
    EXPECT_EQ(g.arc_count(), 6U);
    EXPECT_TRUE(g.has_arc(2, 0));
    EXPECT_FALSE(g.has_arc(0, 2));
}

TEST(MajorityGraph, TiesAndTournaments) {
    const Election tie = Election::from_names({"a", "b"}, {{1, {"a", "b"}}, {1, {"b", "a"}}});
    EXPECT_TRUE(weighted_majority_graph(tie).arcs().empty());
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + rng() % 5;
        const Election e = oracle::random_election(rng, m, 1 + 2 * (rng() % 4));
        const auto wmg = weighted_majority_graph(e);
        for (Id a = 0; a < m; ++a) {
            EXPECT_FALSE(wmg.has_arc(a, a));
            for (Id b = 0; b < m; ++b) {
                if (a != b) {
                    EXPECT_NE(wmg.has_arc(a, b), wmg.has_arc(b, a));  // odd voters: tournament
                }
            }
        }
    }
}

TEST(ElectionFormat, ParsesMinimalFile) {
    const Election e = parse_election("candidates: a,b\n1: a>b\n");
    EXPECT_EQ(e.size(), 2U);
    EXPECT_EQ(e.voter_count(), 1);
}

TEST(ElectionFormat, Errors) {
    EXPECT_THROW(parse_election("candidates: a,a\n1: a>a\n"), InputError);
    EXPECT_THROW(parse_election("1: a>b\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a,b\n1: a>c\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a,b,c\n1: a>b\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a,b\n0: a>b\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a,b\n-1: a>b\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a,b\nweights: a=0\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a,b\nweights: a=10001\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a,b\n1: a>b\nweights: a=2\n"), InputError);
    EXPECT_THROW(parse_election("candidates: a-b\n"), InputError);
}

TEST(ElectionFormat, ErrorCarriesLineNumber) {
    try {
        parse_election("# header\ncandidates: a,b\n\n1: a>b\n2: a>x\n");
        FAIL() << "expected an error";
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 5U);
    }
}

TEST(ElectionFormat, CanonicalSerialization) {
    const Election e = parse_election("candidates: c,a,b\nweights: b=3\n1: c>b>a\n2: a>b>c\n1: c>b>a # again\n");
    EXPECT_EQ(serialize_election(e), "candidates: a,b,c\nweights: b=3\n2: a>b>c\n2: c>b>a\n");
}

TEST(ElectionFormat, RoundTripOnRandomElections) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng() % 6;
        const Election e = oracle::random_election(rng, m, rng() % 10);
        const std::string text = serialize_election(e);
        const Election back = parse_election(text);
        EXPECT_EQ(back, e);
        EXPECT_EQ(serialize_election(back), text);
    }
}

TEST(Limits, EnvironmentOverride) {
    ::setenv(Limits::kEnvVar, "12", 1);
    const Limits l = Limits::from_env();
    EXPECT_EQ(l.score_candidates, 12U);
    EXPECT_EQ(l.set_candidates, 12U);
    ::setenv(Limits::kEnvVar, "0", 1);
    EXPECT_THROW(Limits::from_env(), InputError);
    ::setenv(Limits::kEnvVar, "x", 1);
    EXPECT_THROW(Limits::from_env(), InputError);
    ::unsetenv(Limits::kEnvVar);
    EXPECT_EQ(Limits::from_env().score_candidates, Limits{}.score_candidates);
}

TEST(Graphs, DigraphInvariants) {
    EXPECT_THROW(Digraph::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
    EXPECT_THROW(Digraph::from_names({"a"}, {{"a", "a"}}), InputError);
    const Digraph g = Digraph::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    EXPECT_FALSE(is_acyclic(g));
    EXPECT_FALSE(topological_order(g).has_value());
    const Digraph h = g.without_arcs({{2, 0}});
    EXPECT_TRUE(is_acyclic(h));
    EXPECT_EQ(*topological_order(h), Ranking({0, 1, 2}));
}

TEST(Graphs, TopologicalOrderBreaksTiesByName) {
    const Digraph g = Digraph::from_names({"a", "b", "c", "d"}, {{"c", "a"}, {"d", "b"}});
    EXPECT_EQ(format_ranking(*topological_order(g), g.names()), "c>a>d>b");
}

TEST(Graphs, UndirectedComplement) {
    const UndirectedGraph g = UndirectedGraph::from_names({"u", "v", "w"}, {{"u", "v"}});
    const UndirectedGraph c = g.complement();
    EXPECT_EQ(c.edge_count(), 2U);
    EXPECT_FALSE(c.has_edge(0, 1));
    EXPECT_EQ(c.complement(), g);
    EXPECT_THROW(UndirectedGraph::from_names({"u", "v"}, {{"u", "v"}, {"v", "u"}}), InputError);
}

TEST(Graphs, VertexLimit) {
    std::vector<std::string> names;
    for (int i = 0; i < 65; ++i) names.push_back("v" + std::to_string(i));
    EXPECT_THROW(UndirectedGraph::from_names(names, {}), SizeLimitError);
}

TEST(GraphFormat, RoundTrip) {
    const std::string text = "vertices: a,b,c\narc: a,b\narc: b,c\narc: c,a\nselect-arc: a,b\nlimit: 1\n";
    const GraphFile f = parse_graph_file(text, true);
    EXPECT_EQ(f.selected_arcs.size(), 1U);
    EXPECT_EQ(serialize_graph_file(f), text);
    EXPECT_THROW(parse_graph_file("vertices: a,b\nedge: a,b\n", true), InputError);
    EXPECT_THROW(parse_graph_file("vertices: a,b\nselect-arc: a,b\n", true), InputError);
}

TEST(Dimacs, RoundTripAndErrors) {
    const CnfFormula f = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n3 0\n");
    EXPECT_EQ(f.variables, 3);
    EXPECT_EQ(f.clauses, (std::vector<std::vector<int>>{{1, -2}, {3}}));
    EXPECT_EQ(parse_dimacs(serialize_dimacs(f)), f);
    EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 0\n"), InputError);
    EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0\n"), InputError);
    EXPECT_THROW(parse_dimacs("1 0\n"), InputError);
}

TEST(Dimacs, Qsat2Blocks) {
    const QSat2Instance q = parse_qsat2("e-vars: 1..2\na-negated-vars: 3,4\np cnf 4 1\n1 3 -4 0\n");
    EXPECT_EQ(q.exists_vars, (std::vector<int>{1, 2}));
    EXPECT_EQ(q.inner_vars, (std::vector<int>{3, 4}));
    EXPECT_EQ(parse_qsat2(serialize_qsat2(q)).formula, q.formula);
    EXPECT_THROW(parse_qsat2("e-vars: 1\na-negated-vars: 1,2\np cnf 2 1\n1 0\n"), InputError);
    EXPECT_THROW(parse_qsat2("e-vars: 1\na-negated-vars: 2\np cnf 3 1\n1 0\n"), InputError);
}

TEST(Bits, MultisetEnumeration) {
    // multisets of size 3 over 4 kinds with unlimited caps: C(6,3) = 20
    std::size_t count = 0;
    for_each_multiset(std::vector<std::int64_t>(4, 3), 3, [&](const std::vector<std::size_t>&) {
        ++count;
        return false;
    });
    EXPECT_EQ(count, 20U);
    // caps of 1 give plain combinations: C(4,3) = 4
    count = 0;
    for_each_multiset(std::vector<std::int64_t>(4, 1), 3, [&](const std::vector<std::size_t>&) {
        ++count;
        return false;
    });
    EXPECT_EQ(count, 4U);
}
