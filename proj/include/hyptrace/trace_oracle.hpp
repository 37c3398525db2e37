#pragma once

// Ground-truth traces of uniform hypergraphs by direct enumeration of Euler
// configurations:
//
//   Tr_d(H) = d (m-1)^n  sum_F  tau(F) / prod_{v in V(F)} d_v^+(F)
//
// over all d-tuples F of rooted edges with non-decreasing roots whose
// star-union digraph R(F) is Eulerian. Tuples are grouped into multisets of
// rooted edges and weighted by the number of tuples realising each one.
//
// A vertex v is balanced in R(F) iff  m * r_v = sum_{e ni v} M_e , where
// r_v counts rooted edges with root v and M_e is the total multiplicity of
// edge e. The enumeration first fixes M, then distributes each M_e over the
// vertices of e.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hyptrace/errors.hpp"
#include "hyptrace/exact.hpp"
#include "hyptrace/graph.hpp"
#include "hyptrace/linalg.hpp"
#include "hyptrace/subgraphs.hpp"

namespace hyptrace {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct RootedEdge {
    std::size_t edge_index = 0;
    Vertex root = 0;

    friend auto operator<=>(const RootedEdge&, const RootedEdge&) = default;
};

/// Multiset of rooted edges (sorted by edge, then root; positive counts).
struct EulerConfig {
    std::vector<std::pair<RootedEdge, std::uint64_t>> multiplicities;
    std::size_t total = 0;

    /// r_v: number of rooted edges with root v.
    std::map<Vertex, std::uint64_t> root_counts() const {
        std::map<Vertex, std::uint64_t> r;
        for (const auto& [re, c] : multiplicities) r[re.root] += c;
        return r;
    }
};

struct OracleOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Only configurations that use every edge of H at least once.
    bool require_all_edges = false;
};

namespace detail {

class EulerEnumerator {
public:
    EulerEnumerator(const Hypergraph& h, std::size_t d, const OracleOptions& opt,
                    std::function<void(const EulerConfig&)> visit)
        : h_(h), d_(d), m_(h.order()), opt_(opt), visit_(std::move(visit)),
          mult_(h.edge_count(), 0), vsum_(h.vertex_count(), 0),
          last_edge_(h.vertex_count(), SIZE_MAX) {
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > 0) last_edge_[v] = h.incident(v).back();
    }

    void run() {
        if (d_ == 0) throw InvalidParameter("trace order d must be >= 1");
        choose_multiplicity(0, d_);
    }

private:
    void tick() {
        if (++nodes_ > opt_.budget) throw BudgetExceeded(opt_.budget);
    }

    // Phase 1: total multiplicity M_e of every edge.
    void choose_multiplicity(std::size_t e, std::size_t left) {
        tick();
        const std::size_t ne = h_.edge_count();
        if (e == ne) {
            if (left == 0) distribute_start();
            return;
        }
        const std::size_t lo = opt_.require_all_edges ? 1 : 0;
        if (left < lo * (ne - e)) return;
        const std::size_t hi = (e + 1 == ne) ? left : left - lo * (ne - e - 1);
        const std::size_t first = (e + 1 == ne) ? left : lo;
        for (std::size_t c = first; c <= hi; ++c) {
            mult_[e] = c;
            bool ok = true;
            for (Vertex v : h_.edge(e)) {
                vsum_[v] += c;
                if (last_edge_[v] == e && vsum_[v] % m_ != 0) ok = false;
            }
            if (ok) choose_multiplicity(e + 1, left - c);
            for (Vertex v : h_.edge(e)) vsum_[v] -= c;
        }
        mult_[e] = 0;
    }

    bool support_connected() const {
        const std::size_t ne = h_.edge_count();
        std::vector<std::size_t> used;
        for (std::size_t e = 0; e < ne; ++e)
            if (mult_[e] > 0) used.push_back(e);
        if (used.empty()) return false;
        std::vector<char> seen_edge(ne, 0), seen_vertex(h_.vertex_count(), 0);
        std::vector<std::size_t> queue{used.front()};
        seen_edge[used.front()] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex v : h_.edge(queue[i])) {
                if (seen_vertex[v]) continue;
                seen_vertex[v] = 1;
                for (std::size_t f : h_.incident(v))
                    if (mult_[f] > 0 && !seen_edge[f]) {
                        seen_edge[f] = 1;
                        queue.push_back(f);
                    }
            }
        return queue.size() == used.size();
    }

    void distribute_start() {
        if (!support_connected()) return;
        rem_.assign(h_.vertex_count(), 0);
        last_active_.assign(h_.vertex_count(), SIZE_MAX);
        for (Vertex v = 0; v < h_.vertex_count(); ++v) {
            rem_[v] = vsum_[v] / m_;
            for (std::size_t f : h_.incident(v))
                if (mult_[f] > 0) last_active_[v] = f;
        }
        rooted_.assign(h_.edge_count(), std::vector<std::uint64_t>(m_, 0));
        distribute(0, 0, mult_.empty() ? 0 : mult_[0]);
    }

    // Phase 2: how often each vertex of edge e is its root.
    void distribute(std::size_t e, std::size_t pos, std::uint64_t left) {
        tick();
        const std::size_t ne = h_.edge_count();
        while (e < ne && mult_[e] == 0) {
            ++e;
            pos = 0;
            left = e < ne ? mult_[e] : 0;
        }
        if (e == ne) {
            emit();
            return;
        }
        const Vertex v = h_.edge(e)[pos];
        const bool last_pos = pos + 1 == m_;
        const bool last_for_vertex = last_active_[v] == e;
        std::uint64_t lo = 0, hi = std::min<std::uint64_t>(left, rem_[v]);
        if (last_for_vertex) {
            if (rem_[v] > left) return;
            lo = hi = rem_[v];
        }
        if (last_pos) {
            if (left > hi || left < lo) return;
            lo = hi = left;
        }
        for (std::uint64_t c = lo; c <= hi; ++c) {
            rooted_[e][pos] = c;
            rem_[v] -= c;
            if (last_pos)
                distribute(e + 1, 0, e + 1 < ne ? mult_[e + 1] : 0);
            else
                distribute(e, pos + 1, left - c);
            rem_[v] += c;
        }
        rooted_[e][pos] = 0;
    }

    void emit() {
        EulerConfig cfg;
        cfg.total = d_;
        for (std::size_t e = 0; e < h_.edge_count(); ++e)
            for (std::size_t p = 0; p < m_; ++p)
                if (rooted_[e][p] > 0) cfg.multiplicities.push_back({{e, h_.edge(e)[p]}, rooted_[e][p]});
        std::sort(cfg.multiplicities.begin(), cfg.multiplicities.end());
        visit_(cfg);
    }

    const Hypergraph& h_;
    std::size_t d_;
    std::size_t m_;
    OracleOptions opt_;
    std::function<void(const EulerConfig&)> visit_;
    std::vector<std::size_t> mult_;
    std::vector<std::size_t> vsum_;
    std::vector<std::size_t> last_edge_;
    std::vector<std::uint64_t> rem_;
    std::vector<std::size_t> last_active_;
    std::vector<std::vector<std::uint64_t>> rooted_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Streams every multiset of d rooted edges of H whose R(F) is Eulerian,
/// each exactly once, in a deterministic order. Throws BudgetExceeded when
/// the search visits more than opt.budget candidates.
inline void enumerate_euler_configs(const Hypergraph& h, std::size_t d,
                                    const std::function<void(const EulerConfig&)>& visit,
                                    const OracleOptions& opt = {}) {
    detail::EulerEnumerator(h, d, opt, visit).run();
}

inline std::vector<EulerConfig> enumerate_euler_configs(const Hypergraph& h, std::size_t d,
                                                        const OracleOptions& opt = {}) {
    std::vector<EulerConfig> out;
    enumerate_euler_configs(h, d, [&](const EulerConfig& c) { out.push_back(c); }, opt);
    return out;
}

/// Number of non-decreasing-root tuples realising the multiset:
/// prod_v r_v! / prod_{rooted edges} mult!.
inline BigInt ordering_count(const EulerConfig& f) {
    BigInt num = 1, den = 1;
    for (const auto& [v, r] : f.root_counts()) num *= factorial(r);
    for (const auto& [re, c] : f.multiplicities) den *= factorial(c);
    return num / den;
}

/// R(F) on its support vertices, relabelled 0..k-1 in ascending label order.
inline MultiDigraph star_union_digraph(const Hypergraph& h, const EulerConfig& f) {
    std::map<Vertex, Vertex> pos;
    for (const auto& [re, c] : f.multiplicities)
        for (Vertex x : h.edge(re.edge_index)) pos.emplace(x, 0);
    Vertex next = 0;
    for (auto& [x, p] : pos) p = next++;
    MultiDigraph d(pos.size());
    for (const auto& [re, c] : f.multiplicities)
        for (Vertex x : h.edge(re.edge_index))
            if (x != re.root) d.add_arcs(pos.at(re.root), pos.at(x), c);
    return d;
}

/// Arborescence count of R(F), rooted at its first support vertex.
inline BigInt tau_of_config(const Hypergraph& h, const EulerConfig& f) {
    MultiDigraph d = star_union_digraph(h, f);
    if (d.vertex_count() == 0) return 0;
    return arborescence_count(d, 0);
}

/// ordering_count(F) * tau(F) / prod_v d_v^+(F).
inline Rational config_weight(const Hypergraph& h, const EulerConfig& f) {
    const std::uint64_t m1 = h.order() - 1;
    BigInt den = 1;
    for (const auto& [v, r] : f.root_counts()) den *= BigInt(static_cast<unsigned long>(m1 * r));
    return make_rational(ordering_count(f) * tau_of_config(h, f), den);
}

/// Exact Tr_d(H) by Euler-configuration enumeration.
inline Rational trace_oracle(const Hypergraph& h, std::size_t d, const OracleOptions& opt = {}) {
    Rational sum = 0;
    enumerate_euler_configs(h, d, [&](const EulerConfig& f) { sum += config_weight(h, f); }, opt);
    sum *= Rational(static_cast<long>(d));
    sum *= rpow(static_cast<long>(h.order() - 1), static_cast<long>(h.vertex_count()));
    return sum;
}

inline Rational trace_oracle(const Graph& g, std::size_t m, std::size_t d, const OracleOptions& opt = {}) {
    return trace_oracle(power_hypergraph(g, m).hyper, d, opt);
}

// ---------------------------------------------------------------------------
// Grouped evaluation: Tr_d = d (m-1)^n sum_{classes S} C_S N_H(S), where S
// ranges over isomorphism classes of connected sub-hypergraphs, N_H(S) is
// the number of copies of S in H and C_S sums config weights over the
// Veblen hypergraphs whose underlying hypergraph is exactly S.

/// Canonical key of a small uniform hypergraph. Degree-one vertices only
/// contribute a per-edge count; the remaining vertices are labelled by
/// colour refinement followed by exhaustive search within colour classes.
inline std::string hypergraph_canonical_key(const Hypergraph& h) {
    const std::size_t n = h.vertex_count();
    std::vector<Vertex> core;
    std::vector<std::size_t> core_pos(n, SIZE_MAX);
    for (Vertex v = 0; v < n; ++v)
        if (h.degree(v) >= 2) {
            core_pos[v] = core.size();
            core.push_back(v);
        }
    const std::size_t k = core.size();
    struct Sig {
        std::vector<std::size_t> core;  // core positions
        std::size_t cored = 0;
    };
    std::vector<Sig> sigs;
    for (const auto& e : h.edges()) {
        Sig s;
        for (Vertex v : e)
            if (core_pos[v] != SIZE_MAX) s.core.push_back(core_pos[v]);
            else ++s.cored;
        sigs.push_back(std::move(s));
    }
    std::vector<std::vector<std::size_t>> inc(k);
    for (std::size_t i = 0; i < sigs.size(); ++i)
        for (std::size_t p : sigs[i].core) inc[p].push_back(i);

    // colour refinement
    std::vector<std::size_t> colour(k);
    for (std::size_t p = 0; p < k; ++p) colour[p] = inc[p].size();
    for (std::size_t round = 0; round <= k; ++round) {
        std::vector<std::vector<std::size_t>> sig(k);
        for (std::size_t p = 0; p < k; ++p) {
            std::vector<std::vector<std::size_t>> around;
            for (std::size_t ei : inc[p]) {
                std::vector<std::size_t> c;
                for (std::size_t q : sigs[ei].core)
                    if (q != p) c.push_back(colour[q]);
                std::sort(c.begin(), c.end());
                c.push_back(1000000 + sigs[ei].cored);
                around.push_back(std::move(c));
            }
            std::sort(around.begin(), around.end());
            sig[p].push_back(colour[p]);
            for (auto& a : around) {
                sig[p].push_back(SIZE_MAX);
                sig[p].insert(sig[p].end(), a.begin(), a.end());
            }
        }
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<std::size_t> next(k);
        for (std::size_t p = 0; p < k; ++p)
            next[p] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sig[p]) - uniq.begin());
        const bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                            std::set<std::size_t>(colour.begin(), colour.end()).size();
        colour = std::move(next);
        if (stable) break;
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin,end) in order
    for (std::size_t i = 0; i < k;) {
        std::size_t j = i;
        while (j < k && colour[order[j]] == colour[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::vector<std::vector<std::size_t>> best;
    bool have_best = false;
    std::vector<std::size_t> label(k);
    auto evaluate = [&]() {
        for (std::size_t i = 0; i < k; ++i) label[order[i]] = i;
        std::vector<std::vector<std::size_t>> edges;
        for (const auto& s : sigs) {
            std::vector<std::size_t> e;
            for (std::size_t p : s.core) e.push_back(label[p]);
            std::sort(e.begin(), e.end());
            e.push_back(n + s.cored);
            edges.push_back(std::move(e));
        }
        std::sort(edges.begin(), edges.end());
        if (!have_best || edges < best) {
            best = std::move(edges);
            have_best = true;
        }
    };
    auto permute = [&](auto&& self, std::size_t ci) -> void {
        if (ci == classes.size()) {
            evaluate();
            return;
        }
        auto [b, e] = classes[ci];
        auto first = order.begin() + static_cast<std::ptrdiff_t>(b);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(e);
        std::sort(first, last);
        do {
            self(self, ci + 1);
        } while (std::next_permutation(first, last));
    };
    permute(permute, 0);

    std::string key = "n" + std::to_string(n) + "m" + std::to_string(h.order()) + "k" + std::to_string(k) + ":";
    for (std::size_t c = 0; c < classes.size(); ++c)
        key += std::to_string(colour[order[classes[c].first]]) + "x" +
               std::to_string(classes[c].second - classes[c].first) + ",";
    key += "|";
    for (const auto& e : best) {
        for (std::size_t x : e) key += std::to_string(x) + ".";
        key += ";";
    }
    return key;
}

/// Sub-hypergraph formed by the given edges, vertices compacted.
inline Hypergraph edge_subhypergraph(const Hypergraph& h, std::span<const std::size_t> ids) {
    std::map<Vertex, Vertex> pos;
    for (std::size_t ei : ids)
        for (Vertex v : h.edge(ei)) pos.emplace(v, 0);
    Vertex next = 0;
    for (auto& [v, p] : pos) p = next++;
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t ei : ids) {
        std::vector<Vertex> e;
        for (Vertex v : h.edge(ei)) e.push_back(pos.at(v));
        edges.push_back(std::move(e));
    }
    return Hypergraph(pos.size(), h.order(), std::move(edges));
}

/// C_S: config weights summed over Veblen hypergraphs with underlying S and
/// d edges in total.
inline Rational veblen_class_weight(const Hypergraph& s, std::size_t d, const OracleOptions& opt = {}) {
    OracleOptions o = opt;
    o.require_all_edges = true;
    Rational sum = 0;
    enumerate_euler_configs(s, d, [&](const EulerConfig& f) { sum += config_weight(s, f); }, o);
    return sum;
}

/// Same value as trace_oracle, computed class by class.
inline Rational trace_grouped(const Hypergraph& h, std::size_t d, const OracleOptions& opt = {}) {
    if (d == 0) throw InvalidParameter("trace order d must be >= 1");
    struct Cls {
        Hypergraph rep;
        std::uint64_t count = 0;
    };
    std::map<std::string, Cls> classes;
    std::uint64_t seen = 0;
    for_each_connected_edge_set(edge_adjacency(h), d, [&](std::span<const std::size_t> ids) {
        if (++seen > opt.budget) throw BudgetExceeded(opt.budget);
        Hypergraph sub = edge_subhypergraph(h, ids);
        auto [it, fresh] = classes.try_emplace(hypergraph_canonical_key(sub));
        if (fresh) it->second.rep = std::move(sub);
        ++it->second.count;
    });
    Rational sum = 0;
    for (const auto& [key, c] : classes) sum += veblen_class_weight(c.rep, d, opt) * Rational(BigInt(static_cast<unsigned long>(c.count)));
    sum *= Rational(static_cast<long>(d));
    sum *= rpow(static_cast<long>(h.order() - 1), static_cast<long>(h.vertex_count()));
    return sum;
}

}  // namespace hyptrace
