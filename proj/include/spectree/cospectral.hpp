#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectree/enumerate.hpp"
#include "spectree/graph.hpp"
#include "spectree/polynomial.hpp"

namespace spectree {

/// Everything the eigenvalue asymptotics expose about an all-Dirichlet
/// tree: vertex count, pendant count, normalized polynomial.
struct SpectralKey {
    int p;
    int p_pen;
    NormalizedPoly poly;

    bool operator==(const SpectralKey&) const = default;
    bool operator<(const SpectralKey& other) const;
};

// Requires p >= 3; all pendants are taken Dirichlet.
SpectralKey spectral_key(const Tree& t);

struct CospectralClass {
    SpectralKey key;
    std::vector<CanonicalCode> members; // pairwise non-isomorphic, sorted
    std::vector<Tree> trees;            // same order as members
};

// Nontrivial (size >= 2) classes among the p-vertex trees, sorted by key.
std::vector<CospectralClass> find_classes(int p);
std::vector<CospectralClass> find_classes(const TreeCatalog& catalog);

/// One transcribed row of the bundled reference tables.
struct TableEntry {
    int p = 0;
    int p_pen = 0;
    std::string label;                 // e.g. "9,4^5"
    std::string printed;               // the string as published
    std::optional<IntPoly> coeffs;     // exact reading when unambiguous
    bool typo = false;                 // typographically defective entry
    std::optional<IntPoly> conjectured; // best-guess reading, if any
};

std::vector<TableEntry> load_reference_table(const std::string& path);

struct Correction {
    enum class Kind { Typographic, Erroneous };
    std::string label;
    std::string printed;
    IntPoly computed; // sign chosen to match the printed leading sign
    Kind kind;
};

struct CatalogReport {
    int p = 0;
    int matched = 0;                          // clean entries matched exactly
    std::vector<std::string> matched_labels;
    std::vector<Correction> corrections;      // typo or erroneous entries, with computed value
    std::vector<std::string> unmatched_entries; // entries left without any partner
    std::vector<IntPoly> unmatched_computed;  // computed polys with no table row
};

// Reconcile the computed p-vertex catalog with the table rows for p.
// Mismatches are report content, not errors.
CatalogReport verify_catalog(int p, const std::vector<TableEntry>& table);

std::string render_report(const CatalogReport& report);

} // namespace spectree
