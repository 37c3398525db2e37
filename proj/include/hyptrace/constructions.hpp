#pragma once

// Named graphs and the graph operations used to build cospectral pairs.

#include <algorithm>
#include <charconv>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "hyptrace/errors.hpp"
#include "hyptrace/graph.hpp"
#include "hyptrace/linalg.hpp"
#include "hyptrace/trees.hpp"

namespace hyptrace {

/// P_k: path on k vertices 0-1-...-(k-1).
inline Graph path_graph(std::size_t k) {
    if (k < 1) throw InvalidParameter("path needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
    return Graph(k, pairs);
}

/// C_k on vertices 0..k-1 in cyclic order.
inline Graph cycle_graph(std::size_t k) {
    if (k < 3) throw InvalidParameter("cycle needs at least three vertices");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
    return Graph(k, pairs);
}

/// K_{1,k}: center 0, leaves 1..k.
inline Graph star_graph(std::size_t k) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 1; i <= k; ++i) pairs.emplace_back(0, i);
    return Graph(k + 1, pairs);
}

inline Graph complete_graph(std::size_t k) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    return Graph(k, pairs);
}

inline Graph empty_graph(std::size_t n) { return Graph(n, std::vector<Edge>{}); }

/// H(n; q, n1, n2): cycle C_q (vertices 0..q-1) with paths of n1 and n2 new
/// vertices hanging from vertex 0.
inline Graph h_family(std::size_t n, std::size_t q, std::size_t n1, std::size_t n2) {
    if (q < 3) throw InvalidParameter("H(n;q,n1,n2) needs q >= 3");
    if (n1 < 1 || n2 < 1) throw InvalidParameter("H(n;q,n1,n2) needs n1, n2 >= 1");
    if (n != q + n1 + n2)
        throw InvalidParameter("H(n;q,n1,n2) needs n = q + n1 + n2, got n=" + std::to_string(n));
    auto pairs = cycle_graph(q).pairs();
    Vertex next = q;
    for (std::size_t len : {n1, n2}) {
        Vertex prev = 0;
        for (std::size_t i = 0; i < len; ++i) {
            pairs.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(n, pairs);
}

/// Small named trees. S_k is the star on k vertices; Q_k is P_{k-1}
/// with an extra leaf on its second vertex; H_6 is P_4 with one extra leaf
/// on each inner vertex.
inline Graph tree_S(std::size_t k) { return star_graph(k - 1); }

inline Graph tree_Q(std::size_t k) {
    if (k < 5) throw InvalidParameter("Q_k needs k >= 5");
    return add_leaf(path_graph(k - 1), 1);
}

inline Graph tree_H6() { return add_leaf(add_leaf(path_graph(4), 1), 2); }

/// Parses names such as "P4", "C3", "K1,4", "K4", "S5", "Q5", "Q6", "H6",
/// "H(12;6,1,5)", "C4+K1". Throws InvalidParameter on anything else.
inline Graph named_graph(std::string_view spec) {
    const std::string s(spec);
    std::smatch m;
    auto num = [](const std::string& x) { return static_cast<std::size_t>(std::stoul(x)); };
    if (auto plus = s.find('+'); plus != std::string::npos)
        return disjoint_union(named_graph(s.substr(0, plus)), named_graph(s.substr(plus + 1)));
    if (std::regex_match(s, m, std::regex(R"(H\((\d+);(\d+),(\d+),(\d+)\))")))
        return h_family(num(m[1]), num(m[2]), num(m[3]), num(m[4]));
    if (s == "H6") return tree_H6();
    if (std::regex_match(s, m, std::regex(R"(K1,(\d+))"))) return star_graph(num(m[1]));
    if (std::regex_match(s, m, std::regex(R"(([PCKSQ])(\d+))"))) {
        const std::size_t k = num(m[2]);
        switch (s[0]) {
            case 'P': return path_graph(k);
            case 'C': return cycle_graph(k);
            case 'K': return complete_graph(k);
            case 'S':
                if (k < 2) break;
                return tree_S(k);
            case 'Q': return tree_Q(k);
        }
    }
    throw InvalidParameter("unknown graph name: " + s);
}

/// G(u) . H(v): disjoint union with u identified with v. G keeps its labels;
/// H's other vertices follow in order.
inline Graph coalesce(const Graph& g, Vertex u, const Graph& h, Vertex v) {
    if (u >= g.vertex_count() || v >= h.vertex_count())
        throw InvalidParameter("coalesce: vertex out of range");
    std::vector<Vertex> map(h.vertex_count());
    Vertex next = g.vertex_count();
    for (Vertex x = 0; x < h.vertex_count(); ++x) map[x] = (x == v) ? u : next++;
    auto pairs = g.pairs();
    for (const auto& e : h.edges()) pairs.emplace_back(map[e.u], map[e.v]);
    return Graph(g.vertex_count() + h.vertex_count() - 1, pairs);
}

/// G(Gamma): a copy of Gamma at every vertex x of G with its root identified
/// with x. Non-root vertices of copy x are numbered after G's vertices,
/// copy by copy.
inline Graph rooted_product(const Graph& g, const Graph& gamma, Vertex root) {
    if (root >= gamma.vertex_count()) throw InvalidParameter("rooted_product: root out of range");
    const std::size_t k = gamma.vertex_count() - 1;
    auto pairs = g.pairs();
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto label = [&](Vertex y) -> Vertex {
            if (y == root) return x;
            const Vertex j = y < root ? y : y - 1;
            return g.vertex_count() + x * k + j;
        };
        for (const auto& e : gamma.edges()) pairs.emplace_back(label(e.u), label(e.v));
    }
    return Graph(g.vertex_count() * (k + 1), pairs);
}

inline Graph rooted_product(const Graph& g, const RootedTree& gamma) {
    return rooted_product(g, gamma.tree, gamma.root);
}

/// T(a) (-) U(w): disjoint union plus the edge {a, w}. U's vertices follow T's.
inline Graph ominus_join(const Graph& t, Vertex a, const Graph& u, Vertex w) {
    if (a >= t.vertex_count() || w >= u.vertex_count())
        throw InvalidParameter("ominus_join: vertex out of range");
    auto pairs = disjoint_union(t, u).pairs();
    pairs.emplace_back(a, t.vertex_count() + w);
    return Graph(t.vertex_count() + u.vertex_count(), pairs);
}

// ---------------------------------------------------------------------------

/// Cycle plus the rooted trees hanging from each cycle vertex.
struct UnicyclicDecomposition {
    std::vector<Vertex> cycle_vertices;               // v_1..v_n, original labels
    std::vector<RootedTree> attached;                 // T_i rooted at v_i
    std::vector<std::vector<Vertex>> attached_labels;  // T_i local -> original label
};

/// Cycle order starts at the smallest cycle vertex and proceeds towards its
/// smaller cycle neighbor.
inline UnicyclicDecomposition unicyclic_decompose(const Graph& g) {
    if (!is_unicyclic(g)) throw ClassificationError("unicyclic_decompose: graph is not unicyclic");
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        removed[v] = 1;
        for (Vertex y : g.neighbors(v))
            if (!removed[y] && --deg[y] == 1) stack.push_back(y);
    }
    std::vector<char> on_cycle(n, 0);
    Vertex start = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) {
            on_cycle[v] = 1;
            if (start == SIZE_MAX) start = v;
        }
    UnicyclicDecomposition dec;
    auto cyc_nb = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex y : g.neighbors(v))
            if (on_cycle[y]) out.push_back(y);
        return out;  // ascending: neighbors are sorted
    };
    Vertex prev = start;
    Vertex cur = start;
    do {
        dec.cycle_vertices.push_back(cur);
        auto nb = cyc_nb(cur);
        Vertex nxt = (cur == start) ? nb.front() : (nb[0] == prev ? nb[1] : nb[0]);
        prev = cur;
        cur = nxt;
    } while (cur != start);

    for (Vertex root : dec.cycle_vertices) {
        std::vector<Vertex> comp{root};
        std::vector<char> seen(n, 0);
        seen[root] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex y : g.neighbors(comp[i]))
                if (!seen[y] && !on_cycle[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        Graph t = induced_subgraph(g, comp);
        dec.attached.push_back(RootedTree{std::move(t), 0});
        dec.attached_labels.push_back(std::move(comp));
    }
    return dec;
}

// ---------------------------------------------------------------------------

struct SchwenkBase {
    Graph tree;
    Vertex u = 0;
    Vertex v = 0;
};

/// First tree (by vertex count, then canonical order) holding two vertices
/// u < v in different automorphism orbits with char(T-u) == char(T-v).
inline std::optional<SchwenkBase> find_schwenk_base(std::size_t max_vertices) {
    for (std::size_t nv = 2; nv <= max_vertices; ++nv) {
        for (const Graph& t : enumerate_trees(nv - 1)) {
            std::vector<std::string> orbit_code;
            std::vector<CharPoly> deleted;
            for (Vertex x = 0; x < nv; ++x) {
                orbit_code.push_back(canonical_code(t, x).code);
                deleted.push_back(char_poly(remove_vertex(t, x)));
            }
            for (Vertex a = 0; a < nv; ++a)
                for (Vertex b = a + 1; b < nv; ++b)
                    if (orbit_code[a] != orbit_code[b] && deleted[a] == deleted[b])
                        return SchwenkBase{t, a, b};
        }
    }
    return std::nullopt;
}

}  // namespace hyptrace
