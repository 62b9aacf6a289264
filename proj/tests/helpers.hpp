#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here must stay independent of the library code paths it checks.

#include <algorithm>
#include <numeric>
#include <vector>

#include "spectree/charpoly.hpp"
#include "spectree/graph.hpp"
#include "spectree/polynomial.hpp"

namespace spectree::testing {

inline Tree path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

inline Tree star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Tree(leaves + 1, std::move(edges));
}

// Spider: legs of the given lengths hanging off vertex 0.
inline Tree spider(const std::vector<int>& legs) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(next, std::move(edges));
}

inline Tree relabel(const Tree& t, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
    return Tree(t.p(), std::move(edges));
}

// Exhaustive adjacency-preserving bijection search; feasible for p <= 8.
inline bool isomorphic_brute_force(const Tree& a, const Tree& b) {
    if (a.p() != b.p() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.p());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Independent route to dirichlet_poly: evaluate the integer determinant
// det(t*W - A) at deg+1 points and interpolate exactly over Q.
inline IntPoly dirichlet_poly_interpolated(const Graph& g, const BoundaryConfig& b) {
    InteriorSubgraph sub = interior_subgraph(g, b);
    int n = sub.size();

    std::vector<Rat> xs(n + 1), ys(n + 1);
    for (int k = 0; k <= n; ++k) {
        Int t = k - n / 2;
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i) {
            m[i][i] = t * sub.weights[i];
            for (int j = 0; j < n; ++j)
                if (j != i && sub.adjacency[i][j]) m[i][j] = -1;
        }
        xs[k] = Rat(t);
        ys[k] = Rat(det_bareiss(std::move(m)));
    }

    // Lagrange interpolation in coefficient form over Q.
    std::vector<Rat> acc(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] -= basis[k] * xs[j];
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += ys[i] * basis[k] / denom;
    }

    std::vector<Int> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (boost::multiprecision::denominator(acc[k]) != 1)
            throw std::logic_error("interpolated determinant is not an integer polynomial");
        coeffs[k] = boost::multiprecision::numerator(acc[k]);
    }
    return IntPoly(std::move(coeffs));
}

// Labeled tree from a Pruefer sequence (values in 0..p-1, length p-2).
inline Tree tree_from_pruefer(const std::vector<int>& seq, int p) {
    std::vector<int> degree(p, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(p, 0);
    int leaf = -1, ptr = 0;
    auto next_leaf = [&]() {
        while (degree[ptr] != 1 || used[ptr]) ++ptr;
        return ptr;
    };
    leaf = next_leaf();
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        used[leaf] = 1;
        if (--degree[v] == 1 && v < ptr)
            leaf = v;
        else
            leaf = next_leaf();
    }
    std::vector<int> last;
    for (int i = 0; i < p; ++i)
        if (!used[i] && degree[i] == 1) last.push_back(i);
    edges.emplace_back(last.at(0), last.at(1));
    return Tree(p, std::move(edges));
}

// Rooted-tree counts by the Euler-transform recurrence, then free-tree
// counts by the dissimilarity characteristic. A counting oracle wholly
// independent of the generator.
inline std::vector<Int> rooted_tree_counts(int nmax) {
    std::vector<Int> r(nmax + 1, 0);
    r[1] = 1;
    for (int n = 2; n <= nmax; ++n) {
        Int total = 0;
        for (int k = 1; k <= n - 1; ++k) {
            Int c = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) c += Int(d) * r[d];
            total += c * r[n - k];
        }
        if (total % (n - 1) != 0) throw std::logic_error("rooted count recurrence not divisible");
        r[n] = total / (n - 1);
    }
    return r;
}

inline Int free_tree_count(int n, const std::vector<Int>& r) {
    if (n == 1) return 1;
    Int s = 0;
    for (int i = 1; i <= n - 1; ++i) s += r[i] * r[n - i];
    Int half = (n % 2 == 0) ? r[n / 2] : Int(0);
    if ((s - half) % 2 != 0) throw std::logic_error("dissimilarity sum has wrong parity");
    return r[n] - (s - half) / 2;
}

} // namespace spectree::testing
