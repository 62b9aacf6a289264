#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spectree {

/// Simple connected undirected graph on vertices 0..p-1. Immutable after
/// construction; construction validates simplicity and connectivity.
class Graph {
public:
    Graph(int p, std::vector<std::pair<int, int>> edges);

    int p() const { return p_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Normalized (u < v), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

private:
    int p_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Connected graph with exactly p-1 edges (hence acyclic).
class Tree : public Graph {
public:
    Tree(int p, std::vector<std::pair<int, int>> edges);
    explicit Tree(const Graph& g);
};

std::vector<int> degrees(const Graph& g);
std::vector<int> pendant_vertices(const Graph& g); // ascending

/// Which pendant vertices carry a Dirichlet condition; the remaining
/// pendants are Neumann.
class BoundaryConfig {
public:
    BoundaryConfig(const Graph& g, std::vector<int> dirichlet);
    static BoundaryConfig all_dirichlet(const Graph& g);

    const std::vector<int>& dirichlet() const { return dirichlet_; } // ascending
    int r() const { return static_cast<int>(dirichlet_.size()); }
    bool is_dirichlet(int v) const;

private:
    std::vector<int> dirichlet_;
};

/// The graph left after deleting the Dirichlet pendants, keeping each
/// retained vertex's original degree as its weight.
struct InteriorSubgraph {
    std::vector<int> vertices;                // retained original indices, ascending
    std::vector<std::vector<int>> adjacency;  // 0/1 matrix over retained vertices
    std::vector<int> weights;                 // degrees in the host graph
    int size() const { return static_cast<int>(vertices.size()); }
};

// Throws EmptyInteriorError when the Dirichlet set covers every vertex.
InteriorSubgraph interior_subgraph(const Graph& g, const BoundaryConfig& b);

/// Complete isomorphism invariant for trees (center-rooted AHU string).
struct CanonicalCode {
    std::string code;
    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Tree& t);
// The tree relabeled into canonical preorder; equal for isomorphic inputs.
Tree canonical_form(const Tree& t);
bool is_isomorphic(const Tree& a, const Tree& b);

// One or two middle vertices found by leaf peeling.
std::vector<int> tree_centers(const Tree& t);

// Entry (i,j) = A_ij / sqrt(d_i d_j). Requires no isolated vertices.
Eigen::MatrixXd normalized_adjacency(const Graph& g);

// Text format: first line "p <count>", then one "u v" line per edge.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

} // namespace spectree
