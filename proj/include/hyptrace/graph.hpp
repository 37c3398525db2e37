#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyptrace/errors.hpp"

namespace hyptrace {

using Vertex = std::size_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool contains(Vertex x) const { return x == u || x == v; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws MalformedInput on loops, duplicates or out-of-range endpoints.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) : n_(n), adj_(n) {
        std::set<Edge> seen;
        edges_.reserve(pairs.size());
        for (auto [a, b] : pairs) {
            if (a >= n || b >= n)
                throw MalformedInput("edge endpoint out of range: (" + std::to_string(a) + "," +
                                     std::to_string(b) + ") with n=" + std::to_string(n));
            if (a == b) throw MalformedInput("loop at vertex " + std::to_string(a));
            Edge e(a, b);
            if (!seen.insert(e).second)
                throw MalformedInput("duplicate edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ")");
            edges_.push_back(e);
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size())) {}

    Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n, to_pairs(edges)) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a >= n_ || b >= n_) return false;
        return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
    }

    /// Index of edge {a,b} in edges(), or nullopt.
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
        Edge key(a, b);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i] == key) return i;
        return std::nullopt;
    }

    std::vector<std::pair<Vertex, Vertex>> pairs() const { return to_pairs(edges_); }

    /// Edge sets compared as sets, independent of insertion order.
    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
        std::vector<Edge> x = a.edges_, y = b.edges_;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }

private:
    static std::vector<std::pair<Vertex, Vertex>> to_pairs(const std::vector<Edge>& edges) {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edges.size());
        for (const auto& e : edges) out.emplace_back(e.u, e.v);
        return out;
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

inline Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    return Graph(n, pairs);
}

inline Graph graph_from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return Graph(n, pairs);
}

/// Shortest cycle length; nullopt stands for +infinity (forests).
using Girth = std::optional<std::size_t>;

/// True when ell < g, treating nullopt as +infinity.
inline bool below_girth(std::size_t ell, const Girth& g) { return !g || ell < *g; }

inline std::string girth_to_string(const Girth& g) { return g ? std::to_string(*g) : "inf"; }

inline Girth girth(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::optional<std::size_t> best;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        dist[s] = 0;
        parent[s] = s;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == SIZE_MAX) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (parent[x] != y) {
                    std::size_t len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex y : g.neighbors(comp[i]))
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return g.vertex_count() <= 1 || components(g).size() == 1; }

inline bool is_forest(const Graph& g) { return g.edge_count() + components(g).size() == g.vertex_count(); }

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

inline bool is_unicyclic(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && g.edge_count() == g.vertex_count();
}

/// Subgraph induced on `verts`, relabelled 0..k-1 in the order given.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> verts) {
    std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : g.edges())
        if (pos[e.u] != SIZE_MAX && pos[e.v] != SIZE_MAX) pairs.emplace_back(pos[e.u], pos[e.v]);
    return Graph(verts.size(), pairs);
}

/// Graph formed by the edges with the given indices, vertices compacted in
/// first-seen order. `vertex_map`, when given, receives new->old labels.
inline Graph edge_subgraph(const Graph& g, std::span<const std::size_t> edge_ids,
                           std::vector<Vertex>* vertex_map = nullptr) {
    std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
    std::vector<Vertex> back;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    auto id = [&](Vertex x) {
        if (pos[x] == SIZE_MAX) {
            pos[x] = back.size();
            back.push_back(x);
        }
        return pos[x];
    };
    for (std::size_t ei : edge_ids) {
        const Edge& e = g.edges().at(ei);
        Vertex a = id(e.u);
        Vertex b = id(e.v);
        pairs.emplace_back(a, b);
    }
    if (vertex_map) *vertex_map = back;
    return Graph(back.size(), pairs);
}

/// Relabel vertex x as perm[x].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.vertex_count(), pairs);
}

inline Graph remove_vertex(const Graph& g, Vertex x) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != x) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto pairs = a.pairs();
    const std::size_t off = a.vertex_count();
    for (const auto& e : b.edges()) pairs.emplace_back(e.u + off, e.v + off);
    return Graph(a.vertex_count() + b.vertex_count(), pairs);
}

// ---------------------------------------------------------------------------
// Uniform hypergraphs

/// m-uniform hypergraph; each edge is a sorted list of m distinct vertices.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::size_t n, std::size_t m, std::vector<std::vector<Vertex>> edges)
        : n_(n), m_(m), edges_(std::move(edges)), incident_(n) {
        if (m < 2) throw InvalidParameter("hypergraph order m must be >= 2");
        std::set<std::vector<Vertex>> seen;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto& e = edges_[i];
            std::sort(e.begin(), e.end());
            if (e.size() != m) throw MalformedInput("hyperedge size differs from m");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw MalformedInput("hyperedge with a repeated vertex");
            if (e.back() >= n) throw MalformedInput("hyperedge vertex out of range");
            if (!seen.insert(e).second) throw MalformedInput("duplicate hyperedge");
            for (Vertex v : e) incident_[v].push_back(i);
        }
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t order() const { return m_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& edge(std::size_t i) const { return edges_.at(i); }
    /// Indices of edges containing v, ascending.
    const std::vector<std::size_t>& incident(Vertex v) const { return incident_.at(v); }
    std::size_t degree(Vertex v) const { return incident_.at(v).size(); }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 2;
    std::vector<std::vector<Vertex>> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

inline Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
    auto edges = h.edges();
    for (auto& e : edges)
        for (auto& v : e) v = perm[v];
    return Hypergraph(h.vertex_count(), h.order(), std::move(edges));
}

/// Connected components of a hypergraph (isolated vertices count).
inline std::size_t hypergraph_component_count(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    std::vector<char> seen(n, 0);
    std::size_t count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (std::size_t e : h.incident(x))
                for (Vertex y : h.edge(e))
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
        }
    }
    return count;
}

/// Connected and acyclic: |V| = (m-1)|E| + 1 with at least one edge.
inline bool is_hypertree(const Hypergraph& h) {
    return h.edge_count() > 0 && h.vertex_count() == (h.order() - 1) * h.edge_count() + 1 &&
           hypergraph_component_count(h) == 1;
}

/// m-th power G^m: every edge {u,v} becomes {u,v,i_1..i_{m-2}} with fresh
/// degree-one vertices. Inserted vertices of edge j are numbered
/// n + j(m-2) .. n + (j+1)(m-2) - 1.
struct PowerHypergraph {
    Graph base;
    std::size_t m = 2;
    Hypergraph hyper;
    std::vector<std::vector<Vertex>> cored_map;  // base edge index -> inserted vertices
};

inline PowerHypergraph power_hypergraph(const Graph& g, std::size_t m) {
    if (m < 2) throw InvalidParameter("power order m must be >= 2, got " + std::to_string(m));
    const std::size_t n = g.vertex_count();
    const std::size_t extra = m - 2;
    PowerHypergraph p;
    p.base = g;
    p.m = m;
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[j];
        std::vector<Vertex> inserted;
        for (std::size_t t = 0; t < extra; ++t) inserted.push_back(n + j * extra + t);
        std::vector<Vertex> he{e.u, e.v};
        he.insert(he.end(), inserted.begin(), inserted.end());
        edges.push_back(std::move(he));
        p.cored_map.push_back(std::move(inserted));
    }
    p.hyper = Hypergraph(n + extra * g.edge_count(), m, std::move(edges));
    return p;
}

/// Number of vertices of G^m.
inline std::size_t power_vertex_count(const Graph& g, std::size_t m) {
    return g.vertex_count() + (m - 2) * g.edge_count();
}

}  // namespace hyptrace
