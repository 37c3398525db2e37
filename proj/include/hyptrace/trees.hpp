#pragma once

// Tree canonical forms (AHU nested parentheses) and unlabeled tree
// enumeration.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyptrace/errors.hpp"
#include "hyptrace/graph.hpp"

namespace hyptrace {

struct RootedTree {
    Graph tree;
    Vertex root = 0;
};

/// Throws ClassificationError unless `t` is a tree and `root` one of its vertices.
inline RootedTree make_rooted_tree(Graph t, Vertex root) {
    if (!is_tree(t)) throw ClassificationError("rooted tree: graph is not a tree");
    if (root >= t.vertex_count()) throw InvalidParameter("rooted tree: root out of range");
    return RootedTree{std::move(t), root};
}

/// Canonical code. Equal codes <=> isomorphic trees (root-preserving when
/// `rooted`).
struct CanonicalTreeCode {
    std::string code;
    bool rooted = false;

    friend auto operator<=>(const CanonicalTreeCode&, const CanonicalTreeCode&) = default;
};

namespace detail {

inline std::string ahu_code(const Graph& t, Vertex root) {
    const std::size_t n = t.vertex_count();
    std::vector<Vertex> order{root};
    std::vector<Vertex> parent(n, SIZE_MAX);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex y : t.neighbors(order[i]))
            if (parent[y] == SIZE_MAX) {
                parent[y] = order[i];
                order.push_back(y);
            }
    std::vector<std::vector<std::string>> kids(n);
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end());
        std::string c = "(";
        for (auto& k : ks) c += k;
        c += ")";
        code[v] = std::move(c);
        if (v != root) kids[parent[v]].push_back(code[v]);
    }
    return code[root];
}

/// One or two centers, found by repeated leaf removal.
inline std::vector<Vertex> tree_centers(const Graph& t) {
    const std::size_t n = t.vertex_count();
    if (n <= 2) {
        std::vector<Vertex> all;
        for (Vertex v = 0; v < n; ++v) all.push_back(v);
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex y : t.neighbors(v))
                if (--deg[y] == 1) next.push_back(y);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace detail

inline CanonicalTreeCode canonical_code(const Graph& t, std::optional<Vertex> root = std::nullopt) {
    if (!is_tree(t)) throw ClassificationError("canonical_code: input is not a tree");
    if (root) {
        if (*root >= t.vertex_count()) throw InvalidParameter("canonical_code: root out of range");
        return {detail::ahu_code(t, *root), true};
    }
    std::string best;
    for (Vertex c : detail::tree_centers(t)) {
        std::string s = detail::ahu_code(t, c);
        if (best.empty() || s < best) best = std::move(s);
    }
    return {best, false};
}

inline CanonicalTreeCode canonical_code(const RootedTree& t) { return canonical_code(t.tree, t.root); }

/// Add a pendant vertex at `at`.
inline Graph add_leaf(const Graph& t, Vertex at) {
    auto pairs = t.pairs();
    pairs.emplace_back(at, t.vertex_count());
    return Graph(t.vertex_count() + 1, pairs);
}

/// One representative per isomorphism class of trees with exactly k edges,
/// ordered by canonical code. Built by leaf-addition closure from k-1.
inline std::vector<Graph> enumerate_trees(std::size_t k) {
    if (k < 1) throw InvalidParameter("enumerate_trees: k must be >= 1");
    std::map<std::string, Graph> level;
    Graph p2(2, {{0, 1}});
    level.emplace(canonical_code(p2).code, p2);
    for (std::size_t e = 2; e <= k; ++e) {
        std::map<std::string, Graph> next;
        for (const auto& [code, t] : level)
            for (Vertex v = 0; v < t.vertex_count(); ++v) {
                Graph g = add_leaf(t, v);
                next.try_emplace(canonical_code(g).code, std::move(g));
            }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [code, t] : level) out.push_back(std::move(t));
    return out;
}

}  // namespace hyptrace
