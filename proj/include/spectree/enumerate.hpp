#pragma once

#include <map>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

struct CatalogEntry {
    Tree tree; // canonical labeling (preorder from the canonical root)
    CanonicalCode code;
    int p_pen;
};

/// Exactly one representative per isomorphism class of free trees on p
/// vertices, sorted by canonical code.
struct TreeCatalog {
    int p;
    std::vector<CatalogEntry> trees;
    int size() const { return static_cast<int>(trees.size()); }
};

TreeCatalog enumerate_trees(int p);

// Pendant count -> number of catalog trees with that count.
std::map<int, int> count_by_pendants(const TreeCatalog& catalog);

// All rooted trees on n vertices as canonical level sequences
// (Beyer-Hedetniemi order). Level of the root is 1; entry i is the level
// of the i-th vertex in preorder. Exposed for the enumeration oracle.
std::vector<std::vector<int>> rooted_level_sequences(int n);

// Tree on n vertices from a level sequence, vertex i = preorder index i.
Tree tree_from_level_sequence(const std::vector<int>& levels);

} // namespace spectree
