#include "spectree/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spectree/errors.hpp"

namespace spectree {

Graph::Graph(int p, std::vector<std::pair<int, int>> edges) : p_(p) {
    if (p < 1) throw ParseError("vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= p || v >= p) throw ParseError("edge endpoint out of range");
        if (u == v) throw ParseError("loops are not allowed");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw ParseError("duplicate edge");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(p, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // Connectivity check (BFS from vertex 0).
    std::vector<char> visited(p, 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : adj_[v])
            if (!visited[w]) {
                visited[w] = 1;
                queue.push_back(w);
            }
    }
    if (std::count(visited.begin(), visited.end(), 1) != p)
        throw ParseError("graph is not connected");
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Tree::Tree(int p, std::vector<std::pair<int, int>> edges) : Graph(p, std::move(edges)) {
    if (edge_count() != p - 1) throw ParseError("a tree on p vertices must have p-1 edges");
}

Tree::Tree(const Graph& g) : Graph(g) {
    if (edge_count() != p() - 1) throw ParseError("a tree on p vertices must have p-1 edges");
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.p());
    for (int v = 0; v < g.p(); ++v) d[v] = g.degree(v);
    return d;
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.p(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

BoundaryConfig::BoundaryConfig(const Graph& g, std::vector<int> dirichlet)
    : dirichlet_(std::move(dirichlet)) {
    std::sort(dirichlet_.begin(), dirichlet_.end());
    dirichlet_.erase(std::unique(dirichlet_.begin(), dirichlet_.end()), dirichlet_.end());
    for (int v : dirichlet_) {
        if (v < 0 || v >= g.p()) throw ParseError("Dirichlet vertex out of range");
        if (g.degree(v) != 1) throw ParseError("Dirichlet conditions only apply to pendant vertices");
    }
}

BoundaryConfig BoundaryConfig::all_dirichlet(const Graph& g) {
    return BoundaryConfig(g, pendant_vertices(g));
}

bool BoundaryConfig::is_dirichlet(int v) const {
    return std::binary_search(dirichlet_.begin(), dirichlet_.end(), v);
}

InteriorSubgraph interior_subgraph(const Graph& g, const BoundaryConfig& b) {
    InteriorSubgraph sub;
    for (int v = 0; v < g.p(); ++v)
        if (!b.is_dirichlet(v)) sub.vertices.push_back(v);
    if (sub.vertices.empty())
        throw EmptyInteriorError("Dirichlet set covers every vertex; nothing is retained");
    int n = sub.size();
    sub.adjacency.assign(n, std::vector<int>(n, 0));
    sub.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        sub.weights[i] = g.degree(sub.vertices[i]);
        for (int j = 0; j < n; ++j)
            sub.adjacency[i][j] = g.adjacent(sub.vertices[i], sub.vertices[j]) ? 1 : 0;
    }
    return sub;
}

namespace {

// AHU encoding of the subtree rooted at v, children sorted by code.
std::string rooted_code(const Tree& t, int root) {
    std::function<std::string(int, int)> enc = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : t.neighbors(v))
            if (w != parent) kids.push_back(enc(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };
    return enc(root, -1);
}

} // namespace

std::vector<int> tree_centers(const Tree& t) {
    int n = t.p();
    if (n == 1) return {0};
    std::vector<int> deg = degrees(t);
    std::vector<int> layer = pendant_vertices(t);
    int removed = 0;
    while (n - removed > 2) {
        removed += static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        for (int v : layer) deg[v] = 0;
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

CanonicalCode canonical_code(const Tree& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(t, c);
        if (best.empty() || code < best) best = code;
    }
    return CanonicalCode{best};
}

Tree canonical_form(const Tree& t) {
    // Pick the center whose rooted code is minimal, then relabel in
    // preorder with children visited in sorted code order.
    int best_root = -1;
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(t, c);
        if (best_root < 0 || code < best) {
            best = code;
            best_root = c;
        }
    }
    std::function<std::string(int, int)> enc = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : t.neighbors(v))
            if (w != parent) kids.push_back(enc(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };
    std::vector<std::pair<int, int>> edges;
    int next_label = 0;
    std::function<int(int, int)> relabel = [&](int v, int parent) {
        int my = next_label++;
        std::vector<std::pair<std::string, int>> kids;
        for (int w : t.neighbors(v))
            if (w != parent) kids.emplace_back(enc(w, v), w);
        std::sort(kids.begin(), kids.end());
        for (const auto& [code, w] : kids) {
            int child = relabel(w, v);
            edges.emplace_back(my, child);
        }
        return my;
    };
    relabel(best_root, -1);
    return Tree(t.p(), std::move(edges));
}

bool is_isomorphic(const Tree& a, const Tree& b) {
    return canonical_code(a) == canonical_code(b);
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
    for (int v = 0; v < g.p(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex has no normalization");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.p(), g.p());
    for (auto [u, v] : g.edges()) {
        double w = 1.0 / std::sqrt(double(g.degree(u)) * double(g.degree(v)));
        m(u, v) = w;
        m(v, u) = w;
    }
    return m;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int p = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (p < 0) {
            if (first != "p") throw ParseError("expected header line \"p <count>\"");
            if (!(ls >> p) || p < 1) throw ParseError("invalid vertex count");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw ParseError("invalid edge line: " + line);
        }
        if (!(ls >> v)) throw ParseError("invalid edge line: " + line);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens on edge line: " + line);
        edges.emplace_back(u, v);
    }
    if (p < 0) throw ParseError("missing header line \"p <count>\"");
    return Graph(p, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "p " << g.p() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

} // namespace spectree
