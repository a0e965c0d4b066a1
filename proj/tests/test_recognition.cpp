#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace conlab;

namespace {

Election example1() {
    return parse_election("candidates: a,b,c,d\n1: a>b>c>d\n1: c>a>d>b\n1: b>c>d>a\n");
}

Digraph cycle3() { return Digraph::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

ArcSet arcs(const Digraph& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
    ArcSet x;
    for (const auto& [u, v] : pairs) x.push_back({g.names().at(u), g.names().at(v)});
    return normalize(std::move(x));
}

Mask vs(const UndirectedGraph& g, const std::vector<std::string>& names) {
    Mask x = 0;
    for (const auto& n : names) x |= bit(g.names().at(n));
    return x;
}

UndirectedGraph triangle() { return UndirectedGraph::from_names({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}, {"u", "w"}}); }
UndirectedGraph path() { return UndirectedGraph::from_names({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}); }

std::vector<ArcSet> all_arc_subsets(const Digraph& g) {
    const ArcSet all = g.arcs();
    std::vector<ArcSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << all.size()); ++bits) {
        ArcSet x;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if ((bits >> i) & 1U) x.push_back(all[i]);
        }
        out.push_back(x);
    }
    return out;
}

}  // namespace

TEST(ConsensusRecognition, Kemeny) {
    const Election e = example1();
    const auto& n = e.candidates();
    EXPECT_TRUE(is_kemeny_consensus(e, parse_ranking("a>b>c>d", n)));
    EXPECT_TRUE(is_kemeny_consensus(e, parse_ranking("b>c>a>d", n)));
    EXPECT_FALSE(is_kemeny_consensus(e, parse_ranking("d>c>b>a", n)));
}

TEST(ConsensusRecognition, AgreesWithConsensusSet) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 1 + rng() % 5;
        const Election e = oracle::random_election(rng, m, rng() % 6);
        const auto kem = kemeny_consensus_set(e).consensuses;
        const auto sla = slater_consensus_set(e).consensuses;
        for (const auto& x : oracle::permutations(m)) {
            EXPECT_EQ(is_kemeny_consensus(e, x), std::binary_search(kem.begin(), kem.end(), x));
            EXPECT_EQ(is_slater_consensus(e, x), std::binary_search(sla.begin(), sla.end(), x));
        }
    }
}

TEST(ConsensusRecognition, Slater) {
    const Election unanimous = Election::from_names({"a", "b", "c"}, {{2, {"b", "a", "c"}}});
    EXPECT_TRUE(is_slater_consensus(unanimous, Ranking({1, 0, 2})));
    EXPECT_FALSE(is_slater_consensus(unanimous, Ranking({0, 1, 2})));
    const Election cyc = election_from_digraph(cycle3());
    for (const auto& x : oracle::permutations(3)) {
        // only the rotations a>b>c, b>c>a, c>a>b keep two of the three arcs
        const bool rotation = (x[1] + 3 - x[0]) % 3 == 1;
        EXPECT_EQ(is_slater_consensus(cyc, x), rotation);
    }
}

TEST(Fas, Predicates) {
    const Digraph g = cycle3();
    const ArcSet one = arcs(g, {{"a", "b"}});
    const ArcSet two = arcs(g, {{"a", "b"}, {"b", "c"}});
    EXPECT_TRUE(is_fas(g, one));
    EXPECT_TRUE(is_minimal_fas(g, one));
    EXPECT_TRUE(is_minimum_fas(g, one));
    EXPECT_TRUE(is_fas(g, two));
    EXPECT_FALSE(is_minimal_fas(g, two));
    EXPECT_FALSE(is_minimum_fas(g, two));
    EXPECT_FALSE(is_fas(g, {}));
    const Digraph acyclic = Digraph::from_names({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    EXPECT_TRUE(is_fas(acyclic, {}));
    EXPECT_TRUE(is_minimal_fas(acyclic, {}));
    EXPECT_TRUE(is_minimum_fas(acyclic, {}));
    EXPECT_THROW(is_fas(g, ArcSet{{1, 0}}), DomainError);
}

TEST(Fas, TwoDisjointCycles) {
    const Digraph g = Digraph::from_names({"a", "b", "c", "d", "e", "f"},
                                          {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
    const ArcSet x = arcs(g, {{"a", "b"}, {"d", "e"}});
    for (auto method : {FasMethod::exhaustive, FasMethod::ordering, FasMethod::automatic}) {
        EXPECT_TRUE(is_minimum_fas(g, x, method));
    }
    EXPECT_FALSE(is_fas(g, arcs(g, {{"a", "b"}})));
}

TEST(Fas, MethodsAgreeWithOracle) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const Digraph g = gen::digraph(rng, 1 + rng() % 5);
        const std::size_t min_size = oracle::min_fas_size(g);
        for (const auto& x : all_arc_subsets(g)) {
            const bool fas = oracle::acyclic_without(g, x);
            EXPECT_EQ(is_fas(g, x), fas);
            const bool expected = fas && x.size() == min_size;
            const bool exhaustive = is_minimum_fas(g, x, FasMethod::exhaustive);
            EXPECT_EQ(exhaustive, expected);
            EXPECT_EQ(is_minimum_fas(g, x, FasMethod::ordering), expected);
            if (exhaustive) {
                EXPECT_TRUE(is_minimal_fas(g, x));  // minimum implies minimal
            }
        }
    }
}

TEST(VertexCover, Predicates) {
    const UndirectedGraph edge = UndirectedGraph::from_names({"u", "v"}, {{"u", "v"}});
    EXPECT_TRUE(is_vertex_cover(edge, vs(edge, {"u"})));
    EXPECT_TRUE(is_minimal_vertex_cover(edge, vs(edge, {"u"})));
    EXPECT_TRUE(is_minimum_vertex_cover(edge, vs(edge, {"u"})));
    EXPECT_TRUE(is_minimum_vertex_cover(triangle(), vs(triangle(), {"u", "v"})));
    EXPECT_TRUE(is_vertex_cover(path(), vs(path(), {"u", "w"})));
    EXPECT_FALSE(is_minimum_vertex_cover(path(), vs(path(), {"u", "w"})));
    EXPECT_TRUE(is_minimal_vertex_cover(path(), vs(path(), {"u", "w"})));
}

TEST(VertexCover, AgreesWithOracle) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const UndirectedGraph g = gen::graph(rng, 1 + rng() % 6);
        const std::size_t min_size = oracle::min_vc_size(g);
        for (Mask x = 0; x <= g.all(); ++x) {
            const bool minimum = is_minimum_vertex_cover(g, x);
            EXPECT_EQ(minimum, is_vertex_cover(g, x) && static_cast<std::size_t>(popcount(x)) == min_size);
            if (minimum) {
                EXPECT_TRUE(is_minimal_vertex_cover(g, x));
            }
            if (x == g.all()) break;
        }
    }
}

TEST(Gnd, Examples) {
    const UndirectedGraph k3 = triangle();
    EXPECT_TRUE(is_minimum_gnd(k3, 1, vs(k3, {"u", "v"})));
    EXPECT_FALSE(is_minimum_gnd(k3, 1, vs(k3, {"u"})));
    const UndirectedGraph empty = UndirectedGraph::from_names({"a", "b", "c"}, {});
    EXPECT_TRUE(is_minimum_gnd(empty, 1, 0));
    EXPECT_TRUE(gnd_solvable(k3, 1, 2));
    EXPECT_FALSE(gnd_solvable(k3, 1, 1));
    EXPECT_EQ(gnd_witness(k3, 1, 2), std::optional<Mask>(vs(k3, {"u", "v"})));
}

TEST(Gnd, ComplementDuality) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 80; ++trial) {
        const UndirectedGraph g = gen::graph(rng, 1 + rng() % 8);
        const UndirectedGraph c = g.complement();
        const std::size_t ell = 1 + rng() % 3;
        const Mask x = gen::subset(rng, g.size());
        EXPECT_EQ(is_minimum_gnd(g, ell, x), is_minimum_gnd_prime(c, ell, x));
        EXPECT_EQ(gnd_solvable(g, ell, 2), gnd_prime_solvable(c, ell, 2));
        // independent sets against the subset oracle
        EXPECT_EQ(gnd_kills(c, ell, x, GndForm::independent_set),
                  oracle::max_independent_set(c, c.all() & ~x) <= ell);
    }
}

TEST(Deletion, VertexCoverExamples) {
    EXPECT_EQ(vcr_deletion(path(), 1, vs(path(), {"v"})), std::optional<Mask>(0));
    const UndirectedGraph two = UndirectedGraph::from_names({"u1", "v1", "u2", "v2"}, {{"u1", "v1"}, {"u2", "v2"}});
    const auto w = vcr_deletion(two, 2, vs(two, {"u1"}));
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_minimum_vertex_cover(two, vs(two, {"u1"}), two.all() & ~*w));
    EXPECT_EQ(popcount(*w), 1);  // deleting one endpoint of the other edge already suffices
    EXPECT_FALSE(vcr_deletion(triangle(), 0, vs(triangle(), {"u"})).has_value());
}

TEST(Restriction, VertexCoverExamples) {
    const UndirectedGraph k3 = triangle();
    EXPECT_EQ(vcr_restriction(k3, 0, vs(k3, {"u", "v"})), std::optional<Mask>(0));
    EXPECT_THROW(vcr_restriction(k3, 1, k3.all()), PreconditionError);
    // gnd_to_vcrr image of (K2, k=1, ell=1)
    const UndirectedGraph h = UndirectedGraph::from_names({"u", "v", "z"}, {{"u", "z"}, {"v", "z"}});
    const auto w = vcr_restriction(h, 1, vs(h, {"u", "v"}));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(popcount(*w), 1);
}

TEST(Restriction, FasPrecondition) {
    const Digraph g = cycle3();
    EXPECT_THROW(fasr_restriction(g, 1, arcs(g, {{"a", "b"}, {"b", "c"}})), PreconditionError);
    EXPECT_EQ(fasr_restriction(g, 0, arcs(g, {{"a", "b"}})), std::optional<Mask>(0));
}

TEST(Deletion, FasWitnessAvoidsArcEndpoints) {
    // Two disjoint 3-cycles, x breaks only the first; deleting a vertex of
    // the second cycle makes x minimum.
    const Digraph g = Digraph::from_names({"a", "b", "c", "d", "e", "f"},
                                          {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
    const ArcSet x = arcs(g, {{"a", "b"}});
    EXPECT_FALSE(fasr_deletion(g, 0, x).has_value());
    const auto w = fasr_deletion(g, 1, x);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, bit(g.names().at("d")));
}
