#include "spectree/enumerate.hpp"

#include <numeric>
#include <stdexcept>

namespace spectree {

std::vector<std::vector<int>> rooted_level_sequences(int n) {
    std::vector<std::vector<int>> out;
    if (n < 1) return out;
    std::vector<int> level(n);
    std::iota(level.begin(), level.end(), 1); // the path, lexicographically largest
    out.push_back(level);
    if (n < 3) return out;
    while (true) {
        // Beyer-Hedetniemi successor: find the last entry above level 2,
        // then copy the block starting at its level-(L-1) anchor.
        int p = n - 1;
        while (p >= 0 && level[p] <= 2) --p;
        if (p < 0) break;
        int q = p - 1;
        while (level[q] != level[p] - 1) --q;
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
        out.push_back(level);
    }
    return out;
}

Tree tree_from_level_sequence(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> parent_at_level(n + 2, -1);
    for (int i = 0; i < n; ++i) {
        int lv = levels[i];
        if (i > 0) edges.emplace_back(parent_at_level[lv - 1], i);
        parent_at_level[lv] = i;
    }
    return Tree(n, std::move(edges));
}

TreeCatalog enumerate_trees(int p) {
    if (p < 1) throw std::invalid_argument("enumerate_trees: p must be positive");
    std::map<CanonicalCode, Tree> classes;
    for (const auto& levels : rooted_level_sequences(p)) {
        Tree t = tree_from_level_sequence(levels);
        CanonicalCode code = canonical_code(t);
        if (!classes.contains(code)) classes.emplace(code, canonical_form(t));
    }
    TreeCatalog catalog{p, {}};
    for (auto& [code, tree] : classes) {
        int p_pen = static_cast<int>(pendant_vertices(tree).size());
        catalog.trees.push_back({std::move(tree), code, p_pen});
    }
    return catalog;
}

std::map<int, int> count_by_pendants(const TreeCatalog& catalog) {
    std::map<int, int> counts;
    for (const auto& entry : catalog.trees) ++counts[entry.p_pen];
    return counts;
}

} // namespace spectree
