#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace hyptrace;

namespace {

Hypergraph single_edge(std::size_t m) {
    std::vector<Vertex> e(m);
    std::iota(e.begin(), e.end(), 0);
    return Hypergraph(m, m, {e});
}

Hypergraph power(const Graph& g, std::size_t m) { return power_hypergraph(g, m).hyper; }

EulerConfig config(std::initializer_list<std::tuple<std::size_t, Vertex, std::uint64_t>> items) {
    EulerConfig f;
    for (auto [e, r, c] : items) {
        f.multiplicities.push_back({RootedEdge{e, r}, c});
        f.total += c;
    }
    std::sort(f.multiplicities.begin(), f.multiplicities.end());
    return f;
}

}  // namespace

TEST(EnumerateEulerConfigs, Examples) {
    auto one = enumerate_euler_configs(single_edge(3), 3);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].total, 3u);
    for (const auto& [re, c] : one[0].multiplicities) EXPECT_EQ(c, 1u);
    EXPECT_EQ(one[0].root_counts().size(), 3u);

    EXPECT_TRUE(enumerate_euler_configs(single_edge(3), 2).empty());

    auto p2 = enumerate_euler_configs(Hypergraph(2, 2, {{0, 1}}), 2);
    ASSERT_EQ(p2.size(), 1u);
    EXPECT_EQ(p2[0].multiplicities.size(), 2u);
}

TEST(EnumerateEulerConfigs, EveryStreamedConfigIsEulerianAndDistinct) {
    for (const auto& [g, m, d] : std::vector<std::tuple<Graph, std::size_t, std::size_t>>{
             {path_graph(3), 3, 6}, {cycle_graph(3), 3, 9}, {star_graph(3), 2, 6}, {cycle_graph(4), 2, 4}}) {
        Hypergraph h = power(g, m);
        std::set<std::vector<std::pair<RootedEdge, std::uint64_t>>> seen;
        enumerate_euler_configs(h, d, [&](const EulerConfig& f) {
            EXPECT_EQ(f.total, d);
            EXPECT_TRUE(seen.insert(f.multiplicities).second);
            MultiDigraph r = star_union_digraph(h, f);
            EXPECT_TRUE(r.is_balanced());
            EXPECT_GT(tau_of_config(h, f), 0);  // connected support
            for (const auto& [re, c] : f.multiplicities) {
                const auto& e = h.edge(re.edge_index);
                EXPECT_TRUE(std::count(e.begin(), e.end(), re.root));
                EXPECT_GT(c, 0u);
            }
        });
    }
}

TEST(EnumerateEulerConfigs, DeterministicOrder) {
    Hypergraph h = power(cycle_graph(3), 3);
    auto a = enumerate_euler_configs(h, 9), b = enumerate_euler_configs(h, 9);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].multiplicities, b[i].multiplicities);
}

TEST(EnumerateEulerConfigs, BudgetErrorNamesTheCap) {
    Hypergraph h = power(complete_graph(4), 3);
    OracleOptions opt;
    opt.budget = 25;
    try {
        trace_oracle(h, 9, opt);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.cap(), 25u);
        EXPECT_NE(std::string(e.what()).find("25"), std::string::npos);
    }
    EXPECT_THROW(trace_grouped(h, 9, opt), BudgetExceeded);
}

TEST(OrderingCount, Examples) {
    auto one = enumerate_euler_configs(single_edge(3), 3);
    EXPECT_EQ(ordering_count(one[0]), 1);
    // P_2 power (m=3) with its edge rooted twice at each vertex
    EulerConfig six = config({{0, 0, 2}, {0, 1, 2}, {0, 2, 2}});
    EXPECT_EQ(ordering_count(six), 1);
    // two distinct edges sharing a root, one copy each
    EXPECT_EQ(ordering_count(config({{0, 1, 1}, {1, 1, 1}})), 2);
    EXPECT_EQ(ordering_count(config({{0, 1, 2}, {1, 1, 1}})), 3);
}

TEST(TauOfConfig, Examples) {
    auto one = enumerate_euler_configs(single_edge(3), 3);
    EXPECT_EQ(tau_of_config(single_edge(3), one[0]), 3);

    Hypergraph c3 = power(cycle_graph(3), 2);
    // forward orientation 0->1->2->0
    EulerConfig fwd;
    for (std::size_t e = 0; e < 3; ++e) {
        const auto& ed = c3.edge(e);
        Vertex root = (ed[0] == 0 && ed[1] == 2) ? 2 : ed[0];
        fwd.multiplicities.push_back({RootedEdge{e, root}, 1});
    }
    fwd.total = 3;
    std::sort(fwd.multiplicities.begin(), fwd.multiplicities.end());
    EXPECT_TRUE(star_union_digraph(c3, fwd).is_balanced());
    EXPECT_EQ(tau_of_config(c3, fwd), 1);

    Hypergraph two(4, 2, {{0, 1}, {2, 3}});
    EXPECT_EQ(tau_of_config(two, config({{0, 0, 1}, {0, 1, 1}, {1, 2, 1}, {1, 3, 1}})), 0);
}

TEST(TraceOracle, Examples) {
    EXPECT_EQ(trace_oracle(path_graph(2), 3, 3), 9);
    EXPECT_EQ(trace_oracle(path_graph(2), 3, 4), 0);
    EXPECT_EQ(trace_oracle(single_edge(3), 3), 9);
    EXPECT_EQ(trace_oracle(cycle_graph(3), 3, 9), 1836);
    EXPECT_THROW(trace_oracle(path_graph(2), 3, 0), InvalidParameter);
}

TEST(TraceOracle, GraphsMatchClosedWalksExhaustively) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Graph& g : oracle::all_graphs(n)) {
            auto walks = power_sum_traces(g, 6);
            for (std::size_t d = 1; d <= 6; ++d)
                ASSERT_EQ(trace_oracle(g, 2, d), Rational(walks[d - 1])) << graph_to_json(g).dump() << " d=" << d;
        }
}

TEST(TraceOracle, MultisetsAgreeWithExplicitSequences) {
    std::vector<Hypergraph> cases{
        single_edge(3), single_edge(4), power(path_graph(3), 3), power(star_graph(3), 2), power(cycle_graph(3), 2),
        power(path_graph(4), 2), power(path_graph(3), 2),
        Hypergraph(4, 3, {{0, 1, 2}, {1, 2, 3}}),            // edges sharing two vertices
        Hypergraph(5, 3, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}}),  // a non-power 3-edge hypergraph
    };
    for (const auto& h : cases)
        for (std::size_t d = 1; d <= 6; ++d) EXPECT_EQ(trace_oracle(h, d), oracle::trace_by_sequences(h, d)) << "d=" << d;
}

TEST(TraceOracle, LabelInvariance) {
    std::mt19937 rng(8);
    for (const auto& [g, m, d] : std::vector<std::tuple<Graph, std::size_t, std::size_t>>{
             {cycle_graph(3), 3, 9}, {star_graph(3), 3, 6}, {named_graph("C4+K1"), 3, 6}, {complete_graph(4), 2, 5}}) {
        Hypergraph h = power(g, m);
        const Rational base = trace_oracle(h, d);
        for (int trial = 0; trial < 3; ++trial) {
            auto perm = oracle::random_permutation(rng, h.vertex_count());
            EXPECT_EQ(trace_oracle(relabel(h, perm), d), base);
        }
    }
}

TEST(TraceOracle, VanishesWhenOrderDoesNotDivideD) {
    for (const Graph& g : {path_graph(3), cycle_graph(3), star_graph(3), named_graph("C4+K1")})
        for (std::size_t m = 3; m <= 4; ++m)
            for (std::size_t d = 1; d <= 7; ++d) {
                if (d % m != 0) {
                    EXPECT_EQ(trace_oracle(g, m, d), 0) << "m=" << m << " d=" << d;
                }
            }
}

TEST(TraceGrouped, Examples) {
    EXPECT_EQ(trace_grouped(power(cycle_graph(3), 3), 3), trace_oracle(cycle_graph(3), 3, 3));
    EXPECT_EQ(trace_grouped(power(star_graph(3), 3), 6), trace_oracle(star_graph(3), 3, 6));
    EXPECT_EQ(trace_grouped(single_edge(3), 6), trace_oracle(single_edge(3), 6));
}

TEST(TraceGrouped, AgreesWithOracleOnRandomGraphs) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracle::random_graph(rng, 3 + trial % 3, 0.55);
        const std::size_t m = 2 + trial % 2;
        for (std::size_t d = 1; d <= 6; ++d)
            EXPECT_EQ(trace_grouped(power(g, m), d), trace_oracle(g, m, d)) << graph_to_json(g).dump() << " m=" << m << " d=" << d;
    }
}

TEST(HypergraphCanonicalKey, InvariantUnderRelabelAndSeparatesShapes) {
    std::mt19937 rng(10);
    Hypergraph a = power(path_graph(4), 3), b = power(star_graph(3), 3);
    EXPECT_NE(hypergraph_canonical_key(a), hypergraph_canonical_key(b));
    for (int trial = 0; trial < 10; ++trial) {
        EXPECT_EQ(hypergraph_canonical_key(relabel(a, oracle::random_permutation(rng, a.vertex_count()))),
                  hypergraph_canonical_key(a));
        EXPECT_EQ(hypergraph_canonical_key(relabel(b, oracle::random_permutation(rng, b.vertex_count()))),
                  hypergraph_canonical_key(b));
    }
    EXPECT_NE(hypergraph_canonical_key(Hypergraph(4, 3, {{0, 1, 2}, {1, 2, 3}})),
              hypergraph_canonical_key(power(path_graph(3), 3)));
}
