#pragma once

// Trace tables over an (m, l) grid, cospectrality checks, distinguishing
// pairs and the cospectral-pair constructions.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hyptrace/constructions.hpp"
#include "hyptrace/cycle_traces.hpp"
#include "hyptrace/errors.hpp"
#include "hyptrace/exact.hpp"
#include "hyptrace/graph.hpp"
#include "hyptrace/linalg.hpp"
#include "hyptrace/subgraphs.hpp"
#include "hyptrace/trace_oracle.hpp"
#include "hyptrace/tree_traces.hpp"

namespace hyptrace {

inline bool is_cospectral(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && char_poly(a) == char_poly(b);
}

/// Tr_{m*ell}(G^m).
struct TraceQuery {
    std::size_t m = 3;
    std::size_t ell = 1;

    std::size_t d() const { return m * ell; }
    friend auto operator<=>(const TraceQuery&, const TraceQuery&) = default;
};

inline std::string to_string(const TraceQuery& q) {
    return "(m=" + std::to_string(q.m) + ", ell=" + std::to_string(q.ell) + ")";
}

enum class TraceMethod { Auto, Formula, Oracle };

inline TraceMethod parse_trace_method(const std::string& s) {
    if (s == "auto") return TraceMethod::Auto;
    if (s == "formula") return TraceMethod::Formula;
    if (s == "oracle") return TraceMethod::Oracle;
    throw InvalidParameter("unknown method \"" + s + "\" (expected oracle, formula or auto)");
}

struct TraceOptions {
    TraceMethod method = TraceMethod::Auto;
    std::uint64_t budget = kDefaultBudget;
    /// 0: HYPTRACE_THREADS if set, else hardware concurrency.
    unsigned threads = 0;
};

struct TraceEntry {
    TraceQuery query;
    Rational value;
    /// "walks", "tree", "unicyclic", "girth", "oracle", "vanishing", or a
    /// '+'-joined list when components used different methods.
    std::string method;
};

namespace detail {

inline unsigned worker_count(unsigned requested, std::size_t jobs) {
    unsigned n = requested;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("HYPTRACE_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(v);
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

/// Tr_d of a connected graph with at least one edge, m >= 3, m | d.
inline std::pair<Rational, std::string> connected_trace(const Graph& c, std::size_t m, std::size_t d,
                                                        const TraceOptions& opt) {
    if (is_tree(c)) return {trace_tree_power(c, m, d), "tree"};
    if (is_unicyclic(c)) return {trace_unicyclic(c, m, d), "unicyclic"};
    if (below_girth(d / m, girth(c))) return {trace_girth_bounded(c, m, d), "girth"};
    if (opt.method == TraceMethod::Formula)
        throw UnsupportedInstance("no closed form applies (d/m >= girth on a component with several cycles)");
    return {trace_oracle(c, m, d, OracleOptions{opt.budget, false}), "oracle"};
}

inline TraceEntry evaluate_query(const Graph& g, const TraceQuery& q, const TraceOptions& opt) {
    if (q.m < 2) throw InvalidParameter("m must be >= 2");
    if (q.ell < 1) throw InvalidParameter("ell must be >= 1");
    const std::size_t m = q.m, d = q.d();
    try {
        if (opt.method == TraceMethod::Oracle)
            return {q, trace_oracle(g, m, d, OracleOptions{opt.budget, false}), "oracle"};
        if (m == 2) return {q, Rational(power_sum_traces(g, d).back()), "walks"};
        // The whole-power prefactor (m-1)^{|V(G^m)|} splits over components:
        // a component C contributes (m-1)^{|V(G^m)| - |V(C^m)|} Tr_d(C^m).
        const long total = static_cast<long>(power_vertex_count(g, m));
        Rational sum = 0;
        std::vector<std::string> methods;
        for (const auto& comp : components(g)) {
            const Graph c = induced_subgraph(g, comp);
            if (c.edge_count() == 0) continue;
            auto [value, how] = connected_trace(c, m, d, opt);
            sum += value * rpow(static_cast<long>(m - 1), total - static_cast<long>(power_vertex_count(c, m)));
            if (std::find(methods.begin(), methods.end(), how) == methods.end()) methods.push_back(how);
        }
        std::string method;
        for (const auto& s : methods) method += (method.empty() ? "" : "+") + s;
        if (method.empty()) method = "vanishing";
        return {q, sum, method};
    } catch (const BudgetExceeded& e) {
        throw UnsupportedInstance("query " + to_string(q) + ": " + e.what());
    } catch (const UnsupportedInstance& e) {
        throw UnsupportedInstance("query " + to_string(q) + ": " + e.what());
    }
}

}  // namespace detail

/// Tr_{m*ell}(G^m) for every query, in query order. Queries are evaluated
/// concurrently; results do not depend on the thread count.
inline std::vector<TraceEntry> trace_table(const Graph& g, const std::vector<TraceQuery>& queries,
                                           const TraceOptions& opt = {}) {
    std::vector<std::optional<TraceEntry>> out(queries.size());
    std::vector<std::exception_ptr> errors(queries.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < queries.size();) {
            try {
                out[i] = detail::evaluate_query(g, queries[i], opt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = detail::worker_count(opt.threads, queries.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<TraceEntry> result;
    result.reserve(out.size());
    for (auto& e : out) result.push_back(std::move(*e));
    return result;
}

inline TraceEntry trace_query(const Graph& g, const TraceQuery& q, const TraceOptions& opt = {}) {
    return detail::evaluate_query(g, q, opt);
}

struct Distinguisher {
    std::size_t m = 0;
    std::size_t d = 0;
    Rational gap;  // Tr_d(G1^m) - Tr_d(G2^m)
};

/// First (m, ell), scanning ell = 1..ell_max in the outer loop and
/// m = 2..m_max in the inner loop, where the traces of G1^m and G2^m differ.
inline std::optional<Distinguisher> find_distinguisher(const Graph& g1, const Graph& g2, std::size_t m_max,
                                                       std::size_t ell_max, const TraceOptions& opt = {}) {
    if (m_max < 2) throw InvalidParameter("m_max must be >= 2");
    std::vector<TraceQuery> grid;
    for (std::size_t ell = 1; ell <= ell_max; ++ell)
        for (std::size_t m = 2; m <= m_max; ++m) grid.push_back({m, ell});
    for (const auto& q : grid) {
        const Rational a = trace_query(g1, q, opt).value;
        const Rational b = trace_query(g2, q, opt).value;
        if (a != b) return Distinguisher{q.m, q.d(), a - b};
    }
    return std::nullopt;
}

struct InvariantReport {
    std::uint64_t n_P1 = 0;
    std::uint64_t n_P2 = 0;
    std::uint64_t n_P3 = 0;
    std::uint64_t n_C3 = 0;
    std::uint64_t n_C4 = 0;
    Girth girth;
};

/// Direct subgraph counts, with the triangle and 4-cycle counts checked
/// against tr(A^3) = 6 N(C_3) and tr(A^4) = 2 N(P_2) + 4 N(P_3) + 8 N(C_4).
inline InvariantReport invariants_report(const Graph& g) {
    InvariantReport r;
    r.n_P1 = g.vertex_count();
    r.n_P2 = g.edge_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v) r.n_P3 += g.degree(v) * (g.degree(v) - (g.degree(v) > 0)) / 2;
    r.n_C3 = count_cycle_subgraphs(g, 3);
    r.n_C4 = count_cycle_subgraphs(g, 4);
    r.girth = girth(g);
    const auto tr = power_sum_traces(g, 4);
    const BigInt c3 = tr[2] / 6;
    const BigInt c4 = (tr[3] - 2 * BigInt(static_cast<unsigned long>(r.n_P2)) - 4 * BigInt(static_cast<unsigned long>(r.n_P3))) / 8;
    if (tr[2] % 6 != 0 || c3 != static_cast<unsigned long>(r.n_C3))
        throw ConsistencyError("tr(A^3)/6 = " + tr[2].get_str() + "/6 disagrees with the triangle count " + std::to_string(r.n_C3));
    if (c4 * 8 + 2 * BigInt(static_cast<unsigned long>(r.n_P2)) + 4 * BigInt(static_cast<unsigned long>(r.n_P3)) != tr[3] ||
        c4 != static_cast<unsigned long>(r.n_C4))
        throw ConsistencyError("tr(A^4) identity disagrees with the 4-cycle count " + std::to_string(r.n_C4));
    return r;
}

// ---------------------------------------------------------------------------

/// Short names for small trees: P_k, S_k (star on k vertices), Q_5, Q_6,
/// H_6; anything else is reported by canonical code.
inline std::string tree_display_name(const Graph& t) {
    const auto code = canonical_code(t).code;
    const std::size_t k = t.vertex_count();
    if (k >= 1 && code == canonical_code(path_graph(k)).code) return "P" + std::to_string(k);
    if (k >= 4 && code == canonical_code(tree_S(k)).code) return "S" + std::to_string(k);
    if ((k == 5 || k == 6) && code == canonical_code(tree_Q(k)).code) return "Q" + std::to_string(k);
    if (k == 6 && code == canonical_code(tree_H6()).code) return "H6";
    return code;
}

struct SchwenkPair {
    SchwenkBase base;
    Graph uw;  // T(u) (-) U(w)
    Graph vw;  // T(v) (-) U(w)
};

/// Searches the smallest Schwenk base tree (T, u, v) with at most
/// `max_vertices` vertices and joins it to U at w through u and through v.
inline SchwenkPair schwenk_ominus_pair(const Graph& u, Vertex w, std::size_t max_vertices = 9) {
    if (!is_unicyclic(u)) throw ClassificationError("schwenk_ominus_pair: U must be unicyclic");
    if (w >= u.vertex_count()) throw InvalidParameter("schwenk_ominus_pair: w out of range");
    auto base = find_schwenk_base(max_vertices);
    if (!base) throw UnsupportedInstance("no Schwenk base tree with at most " + std::to_string(max_vertices) + " vertices");
    SchwenkPair p{*base, ominus_join(base->tree, base->u, u, w), ominus_join(base->tree, base->v, u, w)};
    return p;
}

struct TreeCountDifference {
    Graph tree;
    std::string name;
    long long difference = 0;  // N_{G1}(tree) - N_{G2}(tree)
};

/// Every tree with 1..max_edges edges whose subgraph counts in G1 and G2
/// differ, ordered by edge count then canonical code.
inline std::vector<TreeCountDifference> tree_count_differences(const Graph& g1, const Graph& g2, std::size_t max_edges) {
    const auto a = count_all_subtrees(g1, max_edges);
    const auto b = count_all_subtrees(g2, max_edges);
    std::vector<TreeCountDifference> out;
    for (std::size_t k = 1; k <= max_edges; ++k) {
        std::map<std::string, std::pair<const Graph*, long long>> diff;
        for (const auto& [code, c] : a[k]) diff[code] = {&c.representative, static_cast<long long>(c.count)};
        for (const auto& [code, c] : b[k]) {
            auto& slot = diff[code];
            if (!slot.first) slot.first = &c.representative;
            slot.second -= static_cast<long long>(c.count);
        }
        for (const auto& [code, v] : diff)
            if (v.second != 0) out.push_back({*v.first, tree_display_name(*v.first), v.second});
    }
    return out;
}

/// Predicted Tr_{5m}(G_uw^m) - Tr_{5m}(G_vw^m) for a pair with p edges:
/// 2d g(m,4,p) - 2d g(m,5,p) = 2d (m-1)^{(m-1)(p-5)-1} m^{4(m-2)} ((m-1)^{m-1} - m^{m-2}).
inline Rational ominus_gap(std::size_t m, std::size_t p) {
    if (m < 3) throw InvalidParameter("ominus_gap needs m >= 3");
    const long d = static_cast<long>(5 * m);
    return 2 * d * (g_coeff(m, 4, p) - g_coeff(m, 5, p));
}

}  // namespace hyptrace
