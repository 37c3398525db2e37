#include <gtest/gtest.h>

#include <array>
#include <random>

#include "oracles.hpp"

using namespace hyptrace;

TEST(GraphFromEdges, BuildsSimpleGraphs) {
    Graph p2 = graph_from_edges(2, {{0, 1}});
    EXPECT_EQ(p2.vertex_count(), 2u);
    EXPECT_EQ(p2.edge_count(), 1u);
    Graph c3 = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(c3.edge_count(), 3u);
    EXPECT_TRUE(c3.has_edge(2, 0));
    EXPECT_EQ(c3, cycle_graph(3));
}

TEST(GraphFromEdges, RejectsMalformedInput) {
    EXPECT_THROW(graph_from_edges(2, {{0, 0}}), MalformedInput);
    EXPECT_THROW(graph_from_edges(3, {{0, 1}, {1, 0}}), MalformedInput);
    EXPECT_THROW(graph_from_edges(2, {{0, 2}}), MalformedInput);
}

TEST(PowerHypergraph, Examples) {
    auto p = power_hypergraph(path_graph(2), 3);
    EXPECT_EQ(p.hyper.vertex_count(), 3u);
    ASSERT_EQ(p.hyper.edge_count(), 1u);
    EXPECT_EQ(p.hyper.edge(0), (std::vector<Vertex>{0, 1, 2}));

    auto c = power_hypergraph(cycle_graph(3), 3);
    EXPECT_EQ(c.hyper.vertex_count(), 6u);
    EXPECT_EQ(c.hyper.edge_count(), 3u);

    Graph g = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    auto q = power_hypergraph(g, 2);
    ASSERT_EQ(q.hyper.edge_count(), g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        EXPECT_EQ(q.hyper.edge(i), (std::vector<Vertex>{g.edges()[i].u, g.edges()[i].v}));

    EXPECT_THROW(power_hypergraph(g, 1), InvalidParameter);
}

TEST(PowerHypergraph, VertexCountAndCoredVertices) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 7, 0.5);
        for (std::size_t m = 2; m <= 5; ++m) {
            auto p = power_hypergraph(g, m);
            EXPECT_EQ(p.hyper.vertex_count(), g.vertex_count() + (m - 2) * g.edge_count());
            EXPECT_EQ(p.hyper.edge_count(), g.edge_count());
            for (std::size_t j = 0; j < g.edge_count(); ++j) {
                ASSERT_EQ(p.cored_map[j].size(), m - 2);
                for (Vertex x : p.cored_map[j]) EXPECT_EQ(p.hyper.degree(x), 1u);
                const auto& e = p.hyper.edge(j);
                EXPECT_TRUE(std::count(e.begin(), e.end(), g.edges()[j].u));
                EXPECT_TRUE(std::count(e.begin(), e.end(), g.edges()[j].v));
            }
        }
    }
}

TEST(Girth, Examples) {
    EXPECT_EQ(girth(named_graph("C4+K1")), Girth(4));
    EXPECT_FALSE(girth(named_graph("Q6")).has_value());
    EXPECT_FALSE(girth(path_graph(1)).has_value());
    EXPECT_EQ(girth(h_family(12, 8, 2, 2)), Girth(8));
    EXPECT_EQ(girth(complete_graph(4)), Girth(3));
    EXPECT_EQ(girth_to_string(std::nullopt), "inf");
}

TEST(UnicyclicDecompose, TriangleWithPendant) {
    Graph u = graph_from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto dec = unicyclic_decompose(u);
    EXPECT_EQ(dec.cycle_vertices, (std::vector<Vertex>{0, 1, 2}));
    ASSERT_EQ(dec.attached.size(), 3u);
    EXPECT_EQ(dec.attached[0].tree.edge_count(), 1u);
    EXPECT_EQ(dec.attached[0].root, 0u);
    EXPECT_EQ(dec.attached[1].tree.vertex_count(), 1u);
    EXPECT_EQ(dec.attached[2].tree.vertex_count(), 1u);
}

TEST(UnicyclicDecompose, CycleAndErrors) {
    auto dec = unicyclic_decompose(cycle_graph(5));
    EXPECT_EQ(dec.cycle_vertices.size(), 5u);
    for (const auto& t : dec.attached) EXPECT_EQ(t.tree.vertex_count(), 1u);
    EXPECT_THROW(unicyclic_decompose(path_graph(4)), ClassificationError);
    EXPECT_THROW(unicyclic_decompose(complete_graph(4)), ClassificationError);
}

TEST(UnicyclicDecompose, ReconstructsInput) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        // random tree plus one extra edge closing a cycle of length >= 3
        Graph t = oracle::random_tree(rng, 4 + trial % 8);
        std::vector<std::pair<Vertex, Vertex>> extra;
        for (Vertex a = 0; a < t.vertex_count(); ++a)
            for (Vertex b = a + 1; b < t.vertex_count(); ++b)
                if (!t.has_edge(a, b)) extra.emplace_back(a, b);
        auto pairs = t.pairs();
        pairs.push_back(extra[rng() % extra.size()]);
        Graph u(t.vertex_count(), pairs);
        auto dec = unicyclic_decompose(u);
        std::size_t edges = dec.cycle_vertices.size();
        std::size_t vertices = 0;
        for (std::size_t i = 0; i < dec.attached.size(); ++i) {
            const auto& rt = dec.attached[i];
            EXPECT_EQ(dec.attached_labels[i][rt.root], dec.cycle_vertices[i]);
            edges += rt.tree.edge_count();
            vertices += rt.tree.vertex_count();
            for (const auto& e : rt.tree.edges())
                EXPECT_TRUE(u.has_edge(dec.attached_labels[i][e.u], dec.attached_labels[i][e.v]));
        }
        EXPECT_EQ(edges, u.edge_count());
        EXPECT_EQ(vertices, u.vertex_count());
        for (std::size_t i = 0; i < dec.cycle_vertices.size(); ++i)
            EXPECT_TRUE(u.has_edge(dec.cycle_vertices[i], dec.cycle_vertices[(i + 1) % dec.cycle_vertices.size()]));
    }
}

TEST(CanonicalCode, Examples) {
    Graph p3 = path_graph(3);
    EXPECT_NE(canonical_code(p3, Vertex{1}), canonical_code(p3, Vertex{0}));
    EXPECT_EQ(canonical_code(p3, Vertex{0}), canonical_code(p3, Vertex{2}));
    Graph s4a = star_graph(3);
    Graph s4b = graph_from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
    EXPECT_EQ(canonical_code(s4a), canonical_code(s4b));
    EXPECT_NE(canonical_code(path_graph(4)), canonical_code(s4a));
    EXPECT_THROW(canonical_code(cycle_graph(3)), ClassificationError);
}

TEST(CanonicalCode, LabelInvariantAndComplete) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Graph t = oracle::random_tree(rng, 2 + trial % 9);
        auto perm = oracle::random_permutation(rng, t.vertex_count());
        Graph r = relabel(t, perm);
        EXPECT_EQ(canonical_code(t), canonical_code(r));
        EXPECT_EQ(canonical_code(t, Vertex{0}), canonical_code(r, perm[0]));
    }
    // equal codes <=> isomorphic, checked against brute force on all small trees
    for (std::size_t k = 1; k <= 6; ++k) {
        auto trees = enumerate_trees(k);
        std::set<std::vector<std::pair<Vertex, Vertex>>> forms;
        for (const auto& t : trees) forms.insert(oracle::brute_canonical(t));
        EXPECT_EQ(forms.size(), trees.size());
    }
}

TEST(EnumerateTrees, Counts) {
    EXPECT_EQ(enumerate_trees(3).size(), 2u);
    EXPECT_EQ(enumerate_trees(4).size(), 3u);
    EXPECT_EQ(enumerate_trees(5).size(), 6u);
    const std::vector<std::size_t> known{1, 1, 2, 3, 6, 11, 23, 47};
    for (std::size_t k = 1; k <= known.size(); ++k) EXPECT_EQ(enumerate_trees(k).size(), known[k - 1]) << k;
    EXPECT_THROW(enumerate_trees(0), InvalidParameter);
}

TEST(EnumerateTrees, MatchesBruteForceTreeClasses) {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::size_t trees = 0;
        for (const auto& g : oracle::all_graphs(n))
            if (is_tree(g)) ++trees;
        EXPECT_EQ(enumerate_trees(n - 1).size(), trees) << n;
    }
}

TEST(RootedSubtrees, Examples) {
    auto a = enumerate_rooted_subtrees(make_rooted_tree(path_graph(3), 0), 1);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].count, 1u);
    EXPECT_EQ(a[0].representative.edge_count(), 1u);

    auto b = enumerate_rooted_subtrees(make_rooted_tree(star_graph(3), 0), 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].count, 3u);

    EXPECT_TRUE(enumerate_rooted_subtrees(make_rooted_tree(path_graph(1), 0), 2).empty());
}

TEST(RootedSubtrees, TotalsMatchEdgeSubsetEnumeration) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        Graph t = oracle::random_tree(rng, 2 + trial % 8);
        const Vertex root = rng() % t.vertex_count();
        RootedTree rt{t, root};
        for (std::size_t k = 1; k <= std::min<std::size_t>(4, t.edge_count()); ++k) {
            std::uint64_t classed = 0;
            for (const auto& c : enumerate_rooted_subtrees(rt, k)) classed += c.count;
            // direct: k-edge subsets that form a tree containing the root
            std::uint64_t direct = 0;
            std::vector<std::size_t> pick;
            auto rec = [&](auto&& self, std::size_t start) -> void {
                if (pick.size() == k) {
                    std::vector<Vertex> map;
                    Graph sub = edge_subgraph(t, pick, &map);
                    if (is_tree(sub) && std::count(map.begin(), map.end(), root)) ++direct;
                    return;
                }
                for (std::size_t i = start; i < t.edge_count(); ++i) {
                    pick.push_back(i);
                    self(self, i + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
            EXPECT_EQ(classed, direct);
        }
    }
}

TEST(CountTreeSubgraphs, Examples) {
    EXPECT_EQ(count_tree_subgraphs(named_graph("K1,4"), path_graph(3)), 6u);
    EXPECT_EQ(count_tree_subgraphs(named_graph("C4+K1"), path_graph(3)), 4u);
    for (auto [n, q, n1, n2] : std::vector<std::array<std::size_t, 4>>{{12, 6, 1, 5}, {12, 8, 2, 2}, {9, 5, 2, 2}, {10, 3, 3, 4}})
        EXPECT_EQ(count_tree_subgraphs(h_family(n, q, n1, n2), path_graph(3)), n + 3);
    EXPECT_THROW(count_tree_subgraphs(path_graph(3), cycle_graph(3)), ClassificationError);
}

TEST(CountTreeSubgraphs, AgreesWithBruteForce) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracle::random_graph(rng, 5 + trial % 3, 0.5);
        EXPECT_EQ(count_tree_subgraphs(g, path_graph(2)), g.edge_count());
        for (std::size_t k = 1; k <= 4; ++k)
            for (const auto& t : enumerate_trees(k))
                EXPECT_EQ(count_tree_subgraphs(g, t), oracle::count_subgraphs_brute(g, t));
    }
}

TEST(CountCycleSubgraphs, Examples) {
    EXPECT_EQ(count_cycle_subgraphs(named_graph("C4+K1"), 4), 1u);
    EXPECT_EQ(count_cycle_subgraphs(named_graph("K1,4"), 3), 0u);
    EXPECT_EQ(count_cycle_subgraphs(complete_graph(4), 3), 4u);
    EXPECT_EQ(count_cycle_subgraphs(complete_graph(4), 4), 3u);
    EXPECT_EQ(count_cycle_subgraphs(complete_graph(5), 5), 12u);
    EXPECT_THROW(count_cycle_subgraphs(complete_graph(4), 2), InvalidParameter);
}

TEST(NamedGraph, Examples) {
    Graph h = named_graph("H(12;6,1,5)");
    EXPECT_EQ(h.vertex_count(), 12u);
    EXPECT_EQ(girth(h), Girth(6));
    EXPECT_EQ(canonical_code(named_graph("S5")), canonical_code(named_graph("K1,4")));
    Graph p4 = named_graph("P4");
    EXPECT_EQ(p4.vertex_count(), 4u);
    EXPECT_EQ(p4.edge_count(), 3u);
    EXPECT_THROW(named_graph("H(12;6,1,4)"), InvalidParameter);
    EXPECT_THROW(named_graph("H(12;6,0,6)"), InvalidParameter);
    EXPECT_THROW(named_graph("X7"), InvalidParameter);
    EXPECT_EQ(named_graph("C4+K1").vertex_count(), 5u);
}

TEST(NamedGraph, FigureTreesHaveExpectedShapes) {
    EXPECT_EQ(tree_S(4).edge_count(), 3u);
    EXPECT_EQ(tree_Q(5).edge_count(), 4u);
    EXPECT_EQ(tree_Q(6).edge_count(), 5u);
    EXPECT_EQ(tree_H6().edge_count(), 5u);
    // H_6: two adjacent degree-3 vertices
    std::vector<std::size_t> deg;
    for (Vertex v = 0; v < 6; ++v) deg.push_back(tree_H6().degree(v));
    std::sort(deg.begin(), deg.end());
    EXPECT_EQ(deg, (std::vector<std::size_t>{1, 1, 1, 1, 3, 3}));
}

TEST(Coalesce, Examples) {
    Graph p3 = coalesce(path_graph(2), 1, path_graph(2), 0);
    EXPECT_EQ(canonical_code(p3), canonical_code(path_graph(3)));
    Graph tp = coalesce(cycle_graph(3), 0, path_graph(2), 0);
    EXPECT_TRUE(is_unicyclic(tp));
    EXPECT_EQ(tp.vertex_count(), 4u);
    EXPECT_EQ(tp.degree(0), 3u);
}

TEST(RootedProduct, Examples) {
    Graph k14 = named_graph("K1,4");
    EXPECT_EQ(rooted_product(k14, path_graph(1), 0), k14);
    Graph a = rooted_product(k14, path_graph(2), 0);
    EXPECT_EQ(a.vertex_count(), 10u);
    EXPECT_EQ(a.edge_count(), 9u);
    for (std::size_t n = 2; n <= 4; ++n)
        EXPECT_TRUE(is_cospectral(rooted_product(named_graph("C4+K1"), path_graph(n), 0),
                                  rooted_product(k14, path_graph(n), 0)));
}

TEST(OminusJoin, Examples) {
    Graph g = ominus_join(path_graph(2), 1, cycle_graph(3), 0);
    EXPECT_EQ(g.vertex_count(), 5u);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_TRUE(is_unicyclic(g));
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.degree(2), 3u);
}

TEST(Constructions, SizeIdentitiesOnRandomInputs) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + trial % 5, 0.5);
        Graph h = oracle::random_graph(rng, 2 + trial % 4, 0.6);
        const Vertex u = rng() % g.vertex_count(), v = rng() % h.vertex_count();
        Graph c = coalesce(g, u, h, v);
        EXPECT_EQ(c.vertex_count(), g.vertex_count() + h.vertex_count() - 1);
        EXPECT_EQ(c.edge_count(), g.edge_count() + h.edge_count());
        Graph o = ominus_join(g, u, h, v);
        EXPECT_EQ(o.vertex_count(), g.vertex_count() + h.vertex_count());
        EXPECT_EQ(o.edge_count(), g.edge_count() + h.edge_count() + 1);
        Graph r = rooted_product(g, h, v);
        EXPECT_EQ(r.vertex_count(), g.vertex_count() * h.vertex_count());
        EXPECT_EQ(r.edge_count(), g.edge_count() + g.vertex_count() * h.edge_count());
    }
}

TEST(Coalescence, CospectralInputsGiveCospectralCoalescences) {
    // G(u) . Gamma(w) is cospectral with H(v) . Gamma(w) when G-u, H-v and
    // G, H are cospectral; the Schwenk base provides such a pair with G = H.
    auto base = find_schwenk_base(9);
    ASSERT_TRUE(base.has_value());
    for (const Graph& gamma : {path_graph(2), path_graph(3), cycle_graph(3), star_graph(3)}) {
        Graph a = coalesce(base->tree, base->u, gamma, 0);
        Graph b = coalesce(base->tree, base->v, gamma, 0);
        EXPECT_TRUE(is_cospectral(a, b));
        EXPECT_EQ(a.edge_count(), b.edge_count());
    }
}

TEST(SchwenkBase, SearchResult) {
    EXPECT_FALSE(find_schwenk_base(8).has_value());
    auto base = find_schwenk_base(9);
    ASSERT_TRUE(base.has_value());
    EXPECT_EQ(base->tree.vertex_count(), 9u);
    EXPECT_TRUE(is_tree(base->tree));
    EXPECT_EQ(char_poly(remove_vertex(base->tree, base->u)), char_poly(remove_vertex(base->tree, base->v)));
    EXPECT_NE(canonical_code(base->tree, base->u), canonical_code(base->tree, base->v));
}

TEST(GraphIO, JsonAndTextRoundTrip) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + trial % 8, 0.4);
        EXPECT_EQ(parse_graph(graph_to_json(g).dump()), g);
        EXPECT_EQ(parse_graph(graph_to_text(g)), g);
    }
    EXPECT_EQ(parse_graph("# comment\nn 3\n0 1\n\n1 2\n"), path_graph(3));
}

TEST(GraphIO, RejectsMalformedFiles) {
    EXPECT_THROW(parse_graph("{\"n\": 3}"), MalformedInput);
    EXPECT_THROW(parse_graph("{\"n\": 3, \"edges\": [[0,1],[1]]}"), MalformedInput);
    EXPECT_THROW(parse_graph("{\"n\": 3, \"edges\": [[0,1],[1,1]]}"), MalformedInput);
    EXPECT_THROW(parse_graph("{\"n\": -1, \"edges\": []}"), MalformedInput);
    EXPECT_THROW(parse_graph("{ not json"), MalformedInput);
    EXPECT_THROW(parse_graph("0 1\n"), MalformedInput);
    EXPECT_THROW(parse_graph("n 3\n0 1 2\n"), MalformedInput);
    EXPECT_THROW(parse_graph("n 2\n0 5\n"), MalformedInput);
}

TEST(RationalIO, ReducedStrings) {
    auto j = rational_to_json(Rational(6, 4));
    EXPECT_EQ(j.dump(), R"({"num":"3","den":"2"})");
    EXPECT_EQ(rational_to_json(Rational(1836)).dump(), R"({"num":"1836","den":"1"})");
    EXPECT_EQ(rational_from_json(j), Rational(3, 2));
    EXPECT_THROW(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), MalformedInput);
    EXPECT_THROW(rational_from_json(Json{{"num", 1}, {"den", "1"}}), MalformedInput);
}
