#pragma once

// Closed-form traces of hypertrees and of powers of trees.
//
// For a tree T-hat and a positive weight function w on its edges with
// sum w = l:
//
//   c~_l(T-hat) = sum_w  prod_e w(e) * prod_v (d_v(w) - 1)! / r_v(w)
//
// with d_v(w) = sum_{e ni v} w(e) and r_v(w) = prod_{e ni v} w(e)!.

#include <cstdint>
#include <span>
#include <vector>

#include "hyptrace/errors.hpp"
#include "hyptrace/exact.hpp"
#include "hyptrace/graph.hpp"
#include "hyptrace/subgraphs.hpp"
#include "hyptrace/trace_oracle.hpp"
#include "hyptrace/trees.hpp"

namespace hyptrace {

/// w: edge index -> positive weight.
struct WeightFunction {
    std::vector<std::uint64_t> weights;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto w : weights) t += w;
        return t;
    }

    void validate() const {
        for (auto w : weights)
            if (w == 0) throw InvalidParameter("edge weights must be positive");
    }
};

/// Calls visit(span) for every composition of `total` into `parts` positive
/// parts, in lexicographic order.
template <typename Visit>
void for_each_composition(std::uint64_t total, std::size_t parts, Visit&& visit) {
    if (parts == 0) {
        if (total == 0) visit(std::span<const std::uint64_t>());
        return;
    }
    if (total < parts) return;
    std::vector<std::uint64_t> w(parts, 1);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
        if (i + 1 == parts) {
            w[i] = left;
            visit(std::span<const std::uint64_t>(w));
            return;
        }
        const std::uint64_t rest = parts - i - 1;
        for (std::uint64_t c = 1; c + rest <= left; ++c) {
            w[i] = c;
            self(self, i + 1, left - c);
        }
    };
    rec(rec, 0, total);
}

namespace detail {

/// One summand of c~: prod w(e) * prod_v (d_v - 1)! / r_v.
inline Rational tree_weight_term(const Graph& t, std::span<const std::uint64_t> w) {
    BigInt num = 1, den = 1;
    std::vector<std::uint64_t> deg(t.vertex_count(), 0);
    for (std::size_t i = 0; i < t.edge_count(); ++i) {
        const Edge& e = t.edges()[i];
        num *= static_cast<unsigned long>(w[i]);
        const BigInt f = factorial(w[i]);
        den *= f * f;  // w(e)! appears in r_u and in r_v
        deg[e.u] += w[i];
        deg[e.v] += w[i];
    }
    for (auto dv : deg)
        if (dv > 0) num *= factorial(dv - 1);
    return make_rational(num, den);
}

inline std::uint64_t weighted_degree(const Graph& t, std::span<const std::uint64_t> w, Vertex v) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < t.edge_count(); ++i)
        if (t.edges()[i].contains(v)) d += w[i];
    return d;
}

}  // namespace detail

inline Rational c_tilde(const Graph& t, std::uint64_t ell) {
    if (!is_tree(t)) throw ClassificationError("c_tilde: input is not a tree");
    Rational sum = 0;
    if (t.edge_count() == 0) return sum;
    for_each_composition(ell, t.edge_count(),
                         [&](std::span<const std::uint64_t> w) { sum += detail::tree_weight_term(t, w); });
    return sum;
}

/// c~_{l;s}: the c~_l sum restricted to weightings with root degree s.
inline Rational c_tilde_rooted(const RootedTree& t, std::uint64_t ell, std::uint64_t s) {
    if (!is_tree(t.tree)) throw ClassificationError("c_tilde_rooted: input is not a tree");
    if (t.root >= t.tree.vertex_count()) throw InvalidParameter("c_tilde_rooted: root out of range");
    Rational sum = 0;
    if (t.tree.edge_count() == 0) return sum;
    for_each_composition(ell, t.tree.edge_count(), [&](std::span<const std::uint64_t> w) {
        if (detail::weighted_degree(t.tree, w, t.root) == s) sum += detail::tree_weight_term(t.tree, w);
    });
    return sum;
}

/// C_H of the Veblen hypertree whose edge e is repeated m*w(e) times:
/// (m-1)^{-|V|} m^{(m-2)|E|} (prod w)^{m-1} prod_v (d_v - 1)! / r_v.
inline Rational C_weighted_hypertree(const Hypergraph& t, const WeightFunction& w, std::size_t m) {
    if (t.order() != m) throw InvalidParameter("C_weighted_hypertree: m does not match the hypergraph");
    if (m < 2) throw InvalidParameter("C_weighted_hypertree: m must be >= 2");
    if (w.weights.size() != t.edge_count()) throw InvalidParameter("C_weighted_hypertree: one weight per edge");
    w.validate();
    if (!is_hypertree(t))
        throw ClassificationError("C_weighted_hypertree: not a hypertree");
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < t.edge_count(); ++i) num *= ipow(BigInt(static_cast<unsigned long>(w.weights[i])), m - 1);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        std::uint64_t dv = 0;
        for (std::size_t e : t.incident(v)) {
            dv += w.weights[e];
            den *= factorial(w.weights[e]);
        }
        num *= factorial(dv - 1);
    }
    Rational r = make_rational(num, den);
    r *= rpow(static_cast<long>(m - 1), -static_cast<long>(t.vertex_count()));
    r *= rpow(static_cast<long>(m), static_cast<long>((m - 2) * t.edge_count()));
    return r;
}

/// Tr_d(T^m) for a forest T:
///   sum_k d (m-1)^{n-1-p+(m-1)(p-k)} m^{k(m-2)} sum_{T-hat, k edges} c~_{d/m}(T-hat) N_T(T-hat).
/// For a tree the exponent is (m-1)(p-k).
inline Rational trace_tree_power(const Graph& t, std::size_t m, std::size_t d) {
    if (!is_forest(t)) throw ClassificationError("trace_tree_power: graph is not acyclic");
    if (m < 2) throw InvalidParameter("trace_tree_power: m must be >= 2");
    if (d == 0) throw InvalidParameter("trace order d must be >= 1");
    Rational sum = 0;
    if (d % m != 0) return sum;
    const std::size_t ell = d / m;
    const long n = static_cast<long>(t.vertex_count());
    const long p = static_cast<long>(t.edge_count());
    const auto census = count_all_subtrees(t, ell);
    for (std::size_t k = 1; k <= ell && k < census.size(); ++k) {
        Rational inner = 0;
        for (const auto& [code, cls] : census[k])
            inner += c_tilde(cls.representative, ell) * Rational(BigInt(static_cast<unsigned long>(cls.count)));
        if (inner == 0) continue;
        const long kk = static_cast<long>(k);
        sum += inner * rpow(static_cast<long>(m - 1), n - 1 - p + static_cast<long>(m - 1) * (p - kk)) *
               rpow(static_cast<long>(m), kk * static_cast<long>(m - 2));
    }
    return sum * Rational(static_cast<long>(d));
}

/// Tr_d of an m-uniform hypertree, summing C_weighted_hypertree over every
/// concrete connected sub-hypertree and every weighting with total d/m.
inline Rational trace_hypertree(const Hypergraph& t, std::size_t d) {
    if (!is_hypertree(t)) throw ClassificationError("trace_hypertree: not a hypertree");
    if (d == 0) throw InvalidParameter("trace order d must be >= 1");
    const std::size_t m = t.order();
    Rational sum = 0;
    if (d % m != 0) return sum;
    const std::size_t ell = d / m;
    for_each_connected_edge_set(edge_adjacency(t), ell, [&](std::span<const std::size_t> ids) {
        const Hypergraph sub = edge_subhypergraph(t, ids);
        for_each_composition(ell, ids.size(), [&](std::span<const std::uint64_t> w) {
            sum += C_weighted_hypertree(sub, WeightFunction{{w.begin(), w.end()}}, m);
        });
    });
    return sum * Rational(static_cast<long>(d)) *
           rpow(static_cast<long>(m - 1), static_cast<long>(t.vertex_count()));
}

/// sum_k (m-1)^{-(m-1)k} m^{(m-2)k} sum_{T-hat in T(k;[v])} c~_{l;s}(T-hat) N_T(T-hat),
/// the rooted-tree factor shared by the rooted trace and the unicyclic formula.
inline Rational rooted_tree_factor(const std::vector<std::vector<SubtreeClass>>& census, std::size_t m,
                                   std::uint64_t ell, std::uint64_t s) {
    Rational sum = 0;
    for (std::size_t k = 1; k <= ell && k < census.size(); ++k) {
        Rational inner = 0;
        for (const auto& cls : census[k])
            inner += c_tilde_rooted(RootedTree{cls.representative, cls.root}, ell, s) *
                     Rational(BigInt(static_cast<unsigned long>(cls.count)));
        if (inner == 0) continue;
        const long kk = static_cast<long>(k);
        sum += inner * rpow(static_cast<long>(m - 1), -static_cast<long>(m - 1) * kk) *
               rpow(static_cast<long>(m), static_cast<long>(m - 2) * kk);
    }
    return sum;
}

/// Tr_{d;s}(T^m;[v]): contributions of Veblen hypergraphs containing the
/// root whose root degree in the underlying weighted tree is s.
inline Rational trace_rooted(const RootedTree& t, std::size_t m, std::size_t d, std::uint64_t s) {
    if (!is_tree(t.tree)) throw ClassificationError("trace_rooted: graph is not a tree");
    if (t.root >= t.tree.vertex_count()) throw InvalidParameter("trace_rooted: root out of range");
    if (m < 2) throw InvalidParameter("trace_rooted: m must be >= 2");
    if (d == 0 || d % m != 0) throw InvalidParameter("trace_rooted: d must be a positive multiple of m");
    const std::uint64_t ell = d / m;
    if (s < 1 || s > ell) throw InvalidParameter("trace_rooted: s must lie in [1, d/m]");
    const auto census = rooted_subtree_census(t, ell);
    const long p = static_cast<long>(t.tree.edge_count());
    return rooted_tree_factor(census, m, ell, s) * Rational(static_cast<long>(d)) *
           rpow(static_cast<long>(m - 1), static_cast<long>(m - 1) * p);
}

}  // namespace hyptrace
