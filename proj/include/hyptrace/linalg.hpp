#pragma once

// Exact integer linear algebra: fraction-free determinants, the directed
// matrix-tree theorem, closed-walk counts and characteristic polynomials.

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyptrace/exact.hpp"
#include "hyptrace/graph.hpp"

namespace hyptrace {

template <typename Int>
using IntMatrix = std::vector<std::vector<Int>>;

/// Determinant by Bareiss elimination. Every intermediate value is an
/// integer and every division is exact.
template <typename Int = BigInt>
Int det_int(IntMatrix<Int> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw InvalidParameter("det_int: matrix is not square");
    if (n == 0) return Int(1);
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Int(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] /= prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Directed multigraph with natural arc multiplicities.
class MultiDigraph {
public:
    explicit MultiDigraph(std::size_t n = 0) : n_(n), out_(n, 0), in_(n, 0) {}

    void add_arcs(Vertex tail, Vertex head, std::uint64_t mult = 1) {
        if (tail >= n_ || head >= n_) throw InvalidParameter("arc endpoint out of range");
        if (mult == 0) return;
        arcs_[{tail, head}] += mult;
        out_[tail] += mult;
        in_[head] += mult;
    }

    std::size_t vertex_count() const { return n_; }
    const std::map<std::pair<Vertex, Vertex>, std::uint64_t>& arcs() const { return arcs_; }
    std::uint64_t out_degree(Vertex v) const { return out_.at(v); }
    std::uint64_t in_degree(Vertex v) const { return in_.at(v); }

    bool is_balanced() const {
        for (std::size_t v = 0; v < n_; ++v)
            if (out_[v] != in_[v]) return false;
        return true;
    }

    /// Out-degree Laplacian L = D_out - A (self-arcs cancel).
    IntMatrix<BigInt> laplacian() const {
        IntMatrix<BigInt> l(n_, std::vector<BigInt>(n_, 0));
        for (const auto& [arc, mult] : arcs_) {
            auto [t, h] = arc;
            if (t == h) continue;
            l[t][t] += mult;
            l[t][h] -= mult;
        }
        return l;
    }

private:
    std::size_t n_;
    std::map<std::pair<Vertex, Vertex>, std::uint64_t> arcs_;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

/// Number of spanning arborescences oriented towards `root` (every vertex
/// has a directed path to the root): the principal minor of the out-degree
/// Laplacian with the root's row and column removed.
inline BigInt arborescence_count(const MultiDigraph& d, Vertex root) {
    const std::size_t n = d.vertex_count();
    if (root >= n) throw InvalidParameter("arborescence root out of range");
    auto l = d.laplacian();
    IntMatrix<BigInt> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == root) continue;
        std::vector<BigInt> row;
        row.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != root) row.push_back(l[i][j]);
        minor.push_back(std::move(row));
    }
    return det_int(std::move(minor));
}

inline IntMatrix<BigInt> adjacency_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    IntMatrix<BigInt> a(n, std::vector<BigInt>(n, 0));
    for (const auto& e : g.edges()) {
        a[e.u][e.v] = 1;
        a[e.v][e.u] = 1;
    }
    return a;
}

/// [tr(A), tr(A^2), ..., tr(A^d_max)]: closed-walk counts.
inline std::vector<BigInt> power_sum_traces(const Graph& g, std::size_t d_max) {
    const std::size_t n = g.vertex_count();
    const auto a = adjacency_matrix(g);
    std::vector<BigInt> out;
    out.reserve(d_max);
    IntMatrix<BigInt> p = a;
    for (std::size_t k = 1; k <= d_max; ++k) {
        BigInt t = 0;
        for (std::size_t i = 0; i < n; ++i) t += p[i][i];
        out.push_back(t);
        if (k == d_max) break;
        IntMatrix<BigInt> next(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (p[i][j] == 0) continue;
                for (Vertex x : g.neighbors(j)) next[i][x] += p[i][j];
            }
        p = std::move(next);
    }
    return out;
}

/// Monic characteristic polynomial det(xI - A). coefficients[k] is the
/// coefficient of x^(n-k), so coefficients[0] == 1 and coefficients[1] == 0.
struct CharPoly {
    std::vector<BigInt> coefficients;

    std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

    BigInt evaluate(const BigInt& x) const {
        BigInt r = 0;
        for (const auto& c : coefficients) r = r * x + c;
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        const std::size_t n = degree();
        bool first = true;
        for (std::size_t k = 0; k <= n; ++k) {
            const BigInt& c = coefficients[k];
            if (c == 0) continue;
            const std::size_t pw = n - k;
            BigInt mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || pw == 0) os << mag.get_str();
            if (pw >= 1) os << "x";
            if (pw >= 2) os << "^" << pw;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Characteristic polynomial from the power sums tr(A^k) via Newton's
/// identities: k c_k = -sum_{i=1..k} p_i c_{k-i}.
inline CharPoly char_poly(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto p = power_sum_traces(g, n);
    CharPoly cp;
    cp.coefficients.assign(n + 1, 0);
    cp.coefficients[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc -= Rational(p[i - 1] * cp.coefficients[k - i]);
        acc /= Rational(static_cast<long>(k));
        cp.coefficients[k] = to_integer(acc);
    }
    return cp;
}

}  // namespace hyptrace
