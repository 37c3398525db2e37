#pragma once

// Traces of power cycles, powers of unicyclic graphs, and of general graphs
// below their girth.

#include <cstdint>
#include <span>
#include <vector>

#include "hyptrace/constructions.hpp"
#include "hyptrace/errors.hpp"
#include "hyptrace/exact.hpp"
#include "hyptrace/graph.hpp"
#include "hyptrace/subgraphs.hpp"
#include "hyptrace/tree_traces.hpp"

namespace hyptrace {

/// Edge weights w_1..w_n of a cycle; w_i sits on the edge v_i v_{i+1}, and
/// w_0 means w_n.
struct CycleWeight {
    std::vector<std::uint64_t> omega;

    std::size_t length() const { return omega.size(); }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto w : omega) t += w;
        return t;
    }

    /// 1-based, cyclic: at(0) == at(n).
    std::uint64_t at(std::size_t i) const { return omega[(i + omega.size() - 1) % omega.size()]; }

    void validate() const {
        if (omega.size() < 3) throw InvalidParameter("cycle weight needs n >= 3");
        for (auto w : omega)
            if (w == 0) throw InvalidParameter("cycle weights must be positive");
    }
};

/// f_{C_n}(w) = (prod_i (w_{i-1}+w_i))^{-1} sum_{x=0}^{2 w_min} prod_i C(w_{i-1}+w_i, w_i-w_min+x)
///              * sum_{l=0}^{n-1} prod_{i=1}^{l} (w_i+w_min-x) prod_{i=l+2}^{n} (w_i-w_min+x).
inline Rational f_cycle(const CycleWeight& w) {
    w.validate();
    const std::size_t n = w.length();
    const std::uint64_t wmin = *std::min_element(w.omega.begin(), w.omega.end());
    BigInt den = 1;
    for (std::size_t i = 1; i <= n; ++i) den *= static_cast<unsigned long>(w.at(i - 1) + w.at(i));
    BigInt num = 0;
    for (std::uint64_t x = 0; x <= 2 * wmin; ++x) {
        BigInt binoms = 1;
        for (std::size_t i = 1; i <= n && binoms != 0; ++i)
            binoms *= binomial(w.at(i - 1) + w.at(i), w.at(i) + x - wmin);
        if (binoms == 0) continue;
        // inner sum via prefix products of (w_i+w_min-x) and suffix products of (w_i-w_min+x)
        std::vector<BigInt> pre(n + 1, 1), suf(n + 2, 1);
        for (std::size_t i = 1; i <= n; ++i) pre[i] = pre[i - 1] * static_cast<unsigned long>(w.at(i) + wmin - x);
        for (std::size_t i = n; i >= 1; --i) suf[i] = suf[i + 1] * static_cast<unsigned long>(w.at(i) + x - wmin);
        BigInt inner = 0;
        for (std::size_t l = 0; l < n; ++l) inner += pre[l] * suf[l + 2];
        num += binoms * inner;
    }
    return make_rational(num, den);
}

/// C_H for the Veblen cycle C_n^m(w): 2 m^{n(m-2)-1} (m-1)^{-n(m-1)} f_{C_n}(w).
inline Rational c_weighted_cycle(const CycleWeight& w, std::size_t m) {
    if (m < 3) throw InvalidParameter("cycle formulas need m >= 3");
    const long n = static_cast<long>(w.length());
    const long mm = static_cast<long>(m);
    return 2 * rpow(mm, n * (mm - 2) - 1) * rpow(mm - 1, -n * (mm - 1)) * f_cycle(w);
}

/// Tr_d(C_n^m; [C_n^m]) = sum_{w: |w| = d/m} 2d m^{n(m-2)-1} f_{C_n}(w): the
/// part of the trace carried by Veblen hypergraphs using every cycle edge.
inline Rational trace_cycle_restricted(std::size_t n, std::size_t m, std::size_t d) {
    if (n < 3) throw InvalidParameter("cycle length must be >= 3");
    if (m < 3) throw InvalidParameter("cycle formulas need m >= 3");
    if (d == 0) throw InvalidParameter("trace order d must be >= 1");
    Rational sum = 0;
    if (d % m != 0 || d / m < n) return sum;
    for_each_composition(d / m, n, [&](std::span<const std::uint64_t> w) {
        sum += f_cycle(CycleWeight{{w.begin(), w.end()}});
    });
    const long nn = static_cast<long>(n), mm = static_cast<long>(m);
    return sum * 2 * static_cast<long>(d) * rpow(mm, nn * (mm - 2) - 1);
}

/// (m-1)^{(m-1)(p-k)-1} m^{k(m-2)}.
inline Rational g_coeff(std::size_t m, std::size_t k, std::size_t p) {
    if (m < 3) throw InvalidParameter("g_coeff needs m >= 3");
    const long mm = static_cast<long>(m);
    return rpow(mm - 1, (mm - 1) * (static_cast<long>(p) - static_cast<long>(k)) - 1) *
           rpow(mm, static_cast<long>(k) * (mm - 2));
}

namespace detail {

/// sum_k (m-1)^{e0 + (m-1)(p-k)} m^{k(m-2)} sum_{T-hat, k edges} c~_l(T-hat) N_G(T-hat)
/// with l = d/m; the shared shape of the tree-part formulas.
inline Rational subtree_sum(const Graph& g, std::size_t m, std::size_t d, long e0) {
    const std::size_t ell = d / m;
    const long p = static_cast<long>(g.edge_count());
    const long mm = static_cast<long>(m);
    const auto census = count_all_subtrees(g, ell);
    Rational sum = 0;
    for (std::size_t k = 1; k <= ell && k < census.size(); ++k) {
        Rational inner = 0;
        for (const auto& [code, cls] : census[k])
            inner += c_tilde(cls.representative, ell) * Rational(BigInt(static_cast<unsigned long>(cls.count)));
        if (inner == 0) continue;
        const long kk = static_cast<long>(k);
        sum += inner * rpow(mm - 1, e0 + (mm - 1) * (p - kk)) * rpow(mm, kk * (mm - 2));
    }
    return sum * Rational(static_cast<long>(d));
}

}  // namespace detail

struct UnicyclicTrace {
    Rational tree_part;   // Veblen hypergraphs missing some cycle edge
    Rational cycle_part;  // Veblen hypergraphs using every cycle edge
    Rational total() const { return tree_part + cycle_part; }
};

struct UnicyclicOptions {
    /// Use the closed forms for d/m == n (and the trivially empty cycle part
    /// for d/m < n) instead of the general coupled sum.
    bool fast_paths = true;
};

/// Both parts of Tr_d(U^m) for a unicyclic U with cycle C_n and rooted trees
/// T_1..T_n hanging from the cycle.
///
/// tree part:  sum_k d (m-1)^{(m-1)(|E(U)|-k)-1} m^{k(m-2)} sum c~_{d/m}(T-hat) N_U(T-hat)
/// cycle part: 2d m^{n(m-2)-1} (m-1)^{(m-1)(|E(U)|-n)}
///             sum_{l_0 >= n, l_1..l_n >= 0, sum = d/m} sum_{w0: |w0| = l_0} f_{C_n}(w0)
///             prod_{i: l_i > 0} sum_{s=1}^{l_i} s C(t_i+s-1, s) A_i(l_i, s)
/// where t_i = w0_{i-1} + w0_i and A_i is the rooted-tree factor of T_i.
inline UnicyclicTrace trace_unicyclic_parts(const Graph& u, std::size_t m, std::size_t d,
                                            const UnicyclicOptions& opt = {}) {
    if (!is_unicyclic(u)) throw ClassificationError("trace_unicyclic: graph is not unicyclic");
    if (m < 3) throw InvalidParameter("unicyclic formulas need m >= 3");
    if (d == 0) throw InvalidParameter("trace order d must be >= 1");
    UnicyclicTrace out{0, 0};
    if (d % m != 0) return out;
    const std::size_t ell = d / m;
    const long mm = static_cast<long>(m);
    const long p = static_cast<long>(u.edge_count());
    out.tree_part = detail::subtree_sum(u, m, d, -1);

    const auto dec = unicyclic_decompose(u);
    const std::size_t n = dec.cycle_vertices.size();
    const long nn = static_cast<long>(n);
    if (ell < n) return out;
    if (ell == n && opt.fast_paths) {
        out.cycle_part = Rational(static_cast<long>(2 * n * (n + 1))) * rpow(mm - 1, (mm - 1) * (p - nn)) *
                         rpow(mm, nn * (mm - 2));
        return out;
    }

    // A_i(l, s) for l = 1..ell-n, s = 1..l.
    const std::size_t spare = ell - n;
    std::vector<std::vector<std::vector<Rational>>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i].assign(spare + 1, {});
        const auto census = rooted_subtree_census(dec.attached[i], spare);
        for (std::size_t l = 1; l <= spare; ++l) {
            a[i][l].assign(l + 1, 0);
            for (std::size_t s = 1; s <= l; ++s) a[i][l][s] = rooted_tree_factor(census, m, l, s);
        }
    }

    Rational sum = 0;
    for (std::size_t l0 = n; l0 <= ell; ++l0) {
        const std::size_t rest = ell - l0;
        for_each_composition(l0, n, [&](std::span<const std::uint64_t> w0) {
            const CycleWeight cw{{w0.begin(), w0.end()}};
            const Rational f = f_cycle(cw);
            // poly[j] = sum over (l_1..l_i) with total j of the branch products
            std::vector<Rational> poly(rest + 1, 0);
            poly[0] = 1;
            for (std::size_t i = 0; i < n; ++i) {
                // cycle vertex i (0-based) meets edges i-1 and i
                const std::uint64_t t = cw.at(i) + cw.at(i + 1);
                std::vector<Rational> branch(rest + 1, 0);
                branch[0] = 1;
                for (std::size_t l = 1; l <= rest; ++l)
                    for (std::size_t s = 1; s <= l; ++s)
                        if (a[i][l][s] != 0)
                            branch[l] += Rational(BigInt(static_cast<unsigned long>(s)) * binomial(t + s - 1, s)) *
                                         a[i][l][s];
                std::vector<Rational> next(rest + 1, 0);
                for (std::size_t x = 0; x <= rest; ++x) {
                    if (poly[x] == 0) continue;
                    for (std::size_t y = 0; x + y <= rest; ++y)
                        if (branch[y] != 0) next[x + y] += poly[x] * branch[y];
                }
                poly = std::move(next);
            }
            sum += f * poly[rest];
        });
    }
    out.cycle_part = sum * 2 * static_cast<long>(d) * rpow(mm, nn * (mm - 2) - 1) *
                     rpow(mm - 1, (mm - 1) * (p - nn));
    return out;
}

inline Rational trace_unicyclic(const Graph& u, std::size_t m, std::size_t d, const UnicyclicOptions& opt = {}) {
    return trace_unicyclic_parts(u, m, d, opt).total();
}

/// Tr_d(G^m) from subtree counts alone, valid while d/m < girth(G):
///   sum_k d (m-1)^{n-1-p+(m-1)(p-k)} m^{k(m-2)} sum c~_{d/m}(T-hat) N_G(T-hat).
inline Rational trace_girth_bounded(const Graph& g, std::size_t m, std::size_t d) {
    if (m < 3) throw InvalidParameter("girth-bounded formula needs m >= 3");
    if (d == 0) throw InvalidParameter("trace order d must be >= 1");
    if (d % m != 0) return 0;
    const Girth gi = girth(g);
    if (!below_girth(d / m, gi))
        throw FormulaOutOfRange("d/m = " + std::to_string(d / m) + " is not below the girth " + girth_to_string(gi));
    const long n = static_cast<long>(g.vertex_count());
    const long p = static_cast<long>(g.edge_count());
    return detail::subtree_sum(g, m, d, n - 1 - p);
}

}  // namespace hyptrace
