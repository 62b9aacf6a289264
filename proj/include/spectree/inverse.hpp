#pragma once

#include <string>
#include <vector>

#include "spectree/cospectral.hpp"
#include "spectree/graph.hpp"
#include "spectree/roots.hpp"
#include "spectree/spectrum.hpp"

namespace spectree {

struct DictionaryEntry {
    SpectralKey key;
    std::vector<CanonicalCode> codes; // sorted; >= 2 only for cospectral classes
    std::vector<Tree> trees;          // same order as codes
    std::vector<IsolatedRoot> roots;  // exact isolation of key.poly's roots
};

/// Map from spectral keys to the trees realizing them, for every tree
/// with 3 <= p <= max_p.
struct ShapeDictionary {
    int max_p = 0;
    std::vector<DictionaryEntry> entries; // sorted by key
};

ShapeDictionary build_dictionary(int max_p);

// Versioned JSON persistence (coefficients as decimal strings).
void save_dictionary(const ShapeDictionary& dict, const std::string& path);
ShapeDictionary load_dictionary(const std::string& path);

// All trees whose polynomial's real roots match the alpha multiset to
// 1e-9 per root. An empty result means no match; a multiset whose
// cardinality disagrees with p_tilde raises AmbiguousInputError.
std::vector<CanonicalCode> recover_trees(const BranchData& branches, double l,
                                         const ShapeDictionary& dict);

// spectrum -> branch extraction -> recovery, end to end.
std::vector<CanonicalCode> round_trip(const Tree& t, double l, const ShapeDictionary& dict);

} // namespace spectree
