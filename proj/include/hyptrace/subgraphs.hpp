#pragma once

// Counting subgraphs: connected edge subsets, tree patterns, cycles.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hyptrace/errors.hpp"
#include "hyptrace/graph.hpp"
#include "hyptrace/trees.hpp"

namespace hyptrace {

/// Edge adjacency (edges sharing a vertex), neighbor lists ascending.
inline std::vector<std::vector<std::size_t>> edge_adjacency(const Graph& g) {
    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        incident[g.edges()[i].u].push_back(i);
        incident[g.edges()[i].v].push_back(i);
    }
    std::vector<std::vector<std::size_t>> adj(g.edge_count());
    for (const auto& inc : incident)
        for (std::size_t a : inc)
            for (std::size_t b : inc)
                if (a != b) adj[a].push_back(b);
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

inline std::vector<std::vector<std::size_t>> edge_adjacency(const Hypergraph& h) {
    std::vector<std::vector<std::size_t>> adj(h.edge_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        for (std::size_t a : h.incident(v))
            for (std::size_t b : h.incident(v))
                if (a != b) adj[a].push_back(b);
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return adj;
}

namespace detail {

// ESU-style extension: `blocked` holds the subset plus every edge that ever
// entered an extension list on this path, so each connected set is produced
// exactly once, from its anchor.
template <typename Visit>
void extend_edge_set(const std::vector<std::vector<std::size_t>>& adj, std::size_t floor,
                     std::size_t max_size, std::vector<std::size_t>& subset,
                     std::vector<std::size_t> ext, std::vector<char>& blocked, Visit& visit) {
    visit(std::span<const std::size_t>(subset));
    if (subset.size() == max_size) return;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        const std::size_t c = ext[i];
        std::vector<std::size_t> next(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
        std::vector<std::size_t> added;
        for (std::size_t nb : adj[c])
            if (nb >= floor && !blocked[nb]) {
                blocked[nb] = 1;
                added.push_back(nb);
                next.push_back(nb);
            }
        subset.push_back(c);
        extend_edge_set(adj, floor, max_size, subset, std::move(next), blocked, visit);
        subset.pop_back();
        for (std::size_t nb : added) blocked[nb] = 0;
    }
}

}  // namespace detail

/// Calls visit(span of edge ids) once for every connected edge subset with
/// 1..max_size edges. Subsets are reported with their minimum edge first.
template <typename Visit>
void for_each_connected_edge_set(const std::vector<std::vector<std::size_t>>& adj,
                                 std::size_t max_size, Visit&& visit) {
    if (max_size == 0) return;
    const std::size_t ne = adj.size();
    std::vector<char> blocked(ne, 0);
    std::vector<std::size_t> subset;
    for (std::size_t anchor = 0; anchor < ne; ++anchor) {
        std::vector<std::size_t> ext;
        blocked[anchor] = 1;
        for (std::size_t nb : adj[anchor])
            if (nb > anchor && !blocked[nb]) {
                blocked[nb] = 1;
                ext.push_back(nb);
            }
        subset.assign(1, anchor);
        detail::extend_edge_set(adj, anchor + 1, max_size, subset, ext, blocked, visit);
        blocked[anchor] = 0;
        for (std::size_t nb : ext) blocked[nb] = 0;
    }
}

/// Connected edge subsets (1..max_size edges) that touch the seed edges'
/// common vertex, i.e. every subset whose union contains `seeds` as the
/// first extension layer. Used with seeds = edges incident to a root.
template <typename Visit>
void for_each_connected_edge_set_from(const std::vector<std::vector<std::size_t>>& adj,
                                      std::span<const std::size_t> seeds, std::size_t max_size,
                                      Visit&& visit) {
    if (max_size == 0) return;
    std::vector<char> blocked(adj.size(), 0);
    std::vector<std::size_t> ext(seeds.begin(), seeds.end());
    for (std::size_t s : ext) blocked[s] = 1;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        const std::size_t c = ext[i];
        std::vector<std::size_t> next(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
        std::vector<std::size_t> added;
        for (std::size_t nb : adj[c])
            if (!blocked[nb]) {
                blocked[nb] = 1;
                added.push_back(nb);
                next.push_back(nb);
            }
        subset.assign(1, c);
        detail::extend_edge_set(adj, 0, max_size, subset, std::move(next), blocked, visit);
        for (std::size_t nb : added) blocked[nb] = 0;
    }
}

/// A tree isomorphism class found inside a host graph.
struct SubtreeClass {
    Graph representative;
    Vertex root = 0;  // meaningful for rooted classes only
    std::uint64_t count = 0;
};

/// by_size[k] maps canonical code -> class, for every tree with k edges
/// occurring as a subgraph (k = 1..max_edges; by_size[0] is empty).
using SubtreeCensus = std::vector<std::map<std::string, SubtreeClass>>;

inline SubtreeCensus count_all_subtrees(const Graph& g, std::size_t max_edges) {
    SubtreeCensus census(max_edges + 1);
    const auto adj = edge_adjacency(g);
    std::vector<int> mark(g.vertex_count(), 0);
    int stamp = 0;
    for_each_connected_edge_set(adj, max_edges, [&](std::span<const std::size_t> ids) {
        ++stamp;
        std::size_t nv = 0;
        for (std::size_t ei : ids) {
            const Edge& e = g.edges()[ei];
            if (mark[e.u] != stamp) mark[e.u] = stamp, ++nv;
            if (mark[e.v] != stamp) mark[e.v] = stamp, ++nv;
        }
        if (nv != ids.size() + 1) return;
        Graph sub = edge_subgraph(g, ids);
        auto code = canonical_code(sub).code;
        auto [it, fresh] = census[ids.size()].try_emplace(std::move(code));
        if (fresh) it->second.representative = std::move(sub);
        ++it->second.count;
    });
    return census;
}

/// N_G(pattern): number of subgraphs of G isomorphic to the tree `pattern`.
inline std::uint64_t count_tree_subgraphs(const Graph& g, const Graph& pattern) {
    if (!is_tree(pattern)) throw ClassificationError("count_tree_subgraphs: pattern is not a tree");
    const std::size_t k = pattern.edge_count();
    if (k == 0) return g.vertex_count();
    auto census = count_all_subtrees(g, k);
    auto it = census[k].find(canonical_code(pattern).code);
    return it == census[k].end() ? 0 : it->second.count;
}

/// Rooted-isomorphism classes of subtrees of T containing the root, by edge
/// count: result[k] lists the k-edge classes ordered by rooted canonical
/// code (result[0] is empty).
inline std::vector<std::vector<SubtreeClass>> rooted_subtree_census(const RootedTree& t, std::size_t max_edges) {
    std::vector<std::map<std::string, SubtreeClass>> classes(max_edges + 1);
    const auto adj = edge_adjacency(t.tree);
    std::vector<std::size_t> seeds;
    for (std::size_t i = 0; i < t.tree.edge_count(); ++i)
        if (t.tree.edges()[i].contains(t.root)) seeds.push_back(i);
    for_each_connected_edge_set_from(adj, seeds, max_edges, [&](std::span<const std::size_t> ids) {
        std::vector<Vertex> back;
        Graph sub = edge_subgraph(t.tree, ids, &back);
        Vertex r = static_cast<Vertex>(std::find(back.begin(), back.end(), t.root) - back.begin());
        auto code = canonical_code(sub, r).code;
        auto [it, fresh] = classes[ids.size()].try_emplace(std::move(code));
        if (fresh) {
            it->second.representative = std::move(sub);
            it->second.root = r;
        }
        ++it->second.count;
    });
    std::vector<std::vector<SubtreeClass>> out(max_edges + 1);
    for (std::size_t k = 1; k <= max_edges; ++k)
        for (auto& [code, c] : classes[k]) out[k].push_back(std::move(c));
    return out;
}

/// Rooted-isomorphism classes of k-edge subtrees of T containing the root,
/// with occurrence counts, ordered by rooted canonical code.
inline std::vector<SubtreeClass> enumerate_rooted_subtrees(const RootedTree& t, std::size_t k) {
    if (k < 1) throw InvalidParameter("enumerate_rooted_subtrees: k must be >= 1");
    return std::move(rooted_subtree_census(t, k)[k]);
}

/// N_G(C_k): number of k-cycles as subgraphs.
inline std::uint64_t count_cycle_subgraphs(const Graph& g, std::size_t k) {
    if (k < 3) throw InvalidParameter("count_cycle_subgraphs: k must be >= 3");
    const std::size_t n = g.vertex_count();
    std::uint64_t closed = 0;
    std::vector<char> on_path(n, 0);
    // Paths start at their minimum vertex; each cycle is met in both directions.
    auto dfs = [&](auto&& self, Vertex start, Vertex x, std::size_t len) -> void {
        for (Vertex y : g.neighbors(x)) {
            if (y == start && len == k) ++closed;
            if (y <= start || on_path[y] || len == k) continue;
            on_path[y] = 1;
            self(self, start, y, len + 1);
            on_path[y] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[s] = 1;
        dfs(dfs, s, s, 1);
        on_path[s] = 0;
    }
    return closed / 2;
}

}  // namespace hyptrace
