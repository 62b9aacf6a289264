#include "spectree/cospectral.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spectree/charpoly.hpp"
#include "spectree/errors.hpp"

namespace spectree {

bool SpectralKey::operator<(const SpectralKey& other) const {
    if (p != other.p) return p < other.p;
    if (p_pen != other.p_pen) return p_pen < other.p_pen;
    return poly_less(poly.poly(), other.poly.poly());
}

SpectralKey spectral_key(const Tree& t) {
    if (t.p() < 3) throw std::invalid_argument("spectral_key requires p >= 3");
    BoundaryConfig b = BoundaryConfig::all_dirichlet(t);
    return SpectralKey{t.p(), b.r(), normalize(dirichlet_poly(t, b))};
}

std::vector<CospectralClass> find_classes(const TreeCatalog& catalog) {
    std::map<SpectralKey, CospectralClass> groups;
    for (const auto& entry : catalog.trees) {
        SpectralKey key = spectral_key(entry.tree);
        auto it = groups.find(key);
        if (it == groups.end())
            it = groups.emplace(key, CospectralClass{key, {}, {}}).first;
        it->second.members.push_back(entry.code);
        it->second.trees.push_back(entry.tree);
    }
    std::vector<CospectralClass> out;
    for (auto& [key, cls] : groups)
        if (cls.members.size() >= 2) out.push_back(std::move(cls));
    return out;
}

std::vector<CospectralClass> find_classes(int p) {
    if (p < 3) throw std::invalid_argument("find_classes requires p >= 3");
    return find_classes(enumerate_trees(p));
}

namespace {

IntPoly poly_from_json(const nlohmann::json& arr) {
    std::vector<Int> coeffs;
    for (const auto& c : arr) coeffs.emplace_back(Int(c.get<std::string>()));
    return IntPoly(std::move(coeffs));
}

// Sign-canonical copy: leading coefficient made positive.
IntPoly sign_canonical(const IntPoly& p) {
    if (p.is_zero() || p.lead() > 0) return p;
    return -p;
}

Int coefficient_distance(const IntPoly& a, const IntPoly& b) {
    Int d = 0;
    int deg = std::max(a.degree(), b.degree());
    for (int k = 0; k <= deg; ++k)
        d += boost::multiprecision::abs(a.coeff(k) - b.coeff(k));
    return d;
}

} // namespace

std::vector<TableEntry> load_reference_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open reference table: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid reference table JSON: " + std::string(e.what()));
    }
    std::vector<TableEntry> table;
    for (const auto& row : doc.at("entries")) {
        TableEntry entry;
        entry.p = row.at("p").get<int>();
        entry.p_pen = row.at("p_pen").get<int>();
        entry.label = row.at("label").get<std::string>();
        entry.printed = row.at("printed").get<std::string>();
        entry.typo = row.value("typo", false);
        if (row.contains("coeffs")) entry.coeffs = poly_from_json(row.at("coeffs"));
        if (row.contains("conjectured")) entry.conjectured = poly_from_json(row.at("conjectured"));
        if (!entry.typo && !entry.coeffs)
            throw ParseError("table entry " + entry.label + " lacks coefficients");
        table.push_back(std::move(entry));
    }
    return table;
}

CatalogReport verify_catalog(int p, const std::vector<TableEntry>& table) {
    CatalogReport report;
    report.p = p;

    // Computed polynomials, sign-canonical, grouped by pendant count.
    TreeCatalog catalog = enumerate_trees(p);
    std::map<int, std::vector<IntPoly>> computed;
    for (const auto& entry : catalog.trees) {
        if (entry.tree.p() < 3) continue;
        IntPoly poly = dirichlet_poly(entry.tree, BoundaryConfig::all_dirichlet(entry.tree));
        computed[entry.p_pen].push_back(sign_canonical(poly));
    }
    for (auto& [p_pen, polys] : computed)
        std::sort(polys.begin(), polys.end(), poly_less);

    std::map<int, std::vector<const TableEntry*>> rows;
    for (const auto& entry : table)
        if (entry.p == p) rows[entry.p_pen].push_back(&entry);

    for (auto& [p_pen, bucket] : rows) {
        auto polys = computed[p_pen]; // local working copy, consumed as matched
        std::vector<char> used(polys.size(), 0);

        // First pass: exact matches for cleanly printed entries. Entries
        // that fail here are erroneous as printed; they join the flagged
        // ones in the correction pass.
        std::vector<const TableEntry*> pending;
        for (const TableEntry* entry : bucket) {
            if (entry->typo) {
                pending.push_back(entry);
                continue;
            }
            IntPoly want = sign_canonical(*entry->coeffs);
            bool found = false;
            for (std::size_t i = 0; i < polys.size(); ++i) {
                if (!used[i] && polys[i] == want) {
                    used[i] = 1;
                    found = true;
                    break;
                }
            }
            if (found) {
                ++report.matched;
                report.matched_labels.push_back(entry->label);
            } else {
                pending.push_back(entry);
            }
        }

        // Correction pass: assign the leftover computed polynomials to
        // the pending entries so the total coefficient distance is
        // minimal (the exact values outrank the typography).
        std::vector<std::size_t> leftovers;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (!used[i]) leftovers.push_back(i);

        auto target_of = [](const TableEntry* entry) {
            if (entry->typo)
                return entry->conjectured ? sign_canonical(*entry->conjectured) : IntPoly{};
            return sign_canonical(*entry->coeffs);
        };

        std::size_t n_assign = std::min(pending.size(), leftovers.size());
        std::vector<std::size_t> best_perm;
        if (n_assign > 0) {
            std::vector<std::size_t> perm(leftovers.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            Int best_total(-1);
            do {
                Int total = 0;
                for (std::size_t i = 0; i < n_assign; ++i)
                    total += coefficient_distance(polys[leftovers[perm[i]]], target_of(pending[i]));
                if (best_total < 0 || total < best_total) {
                    best_total = total;
                    best_perm.assign(perm.begin(), perm.begin() + n_assign);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        for (std::size_t i = 0; i < n_assign; ++i) {
            const TableEntry* entry = pending[i];
            IntPoly corrected = polys[leftovers[best_perm[i]]];
            used[leftovers[best_perm[i]]] = 1;
            // Present the correction with the published leading sign.
            if (entry->printed.starts_with("-")) corrected = -corrected;
            report.corrections.push_back(
                {entry->label, entry->printed, corrected,
                 entry->typo ? Correction::Kind::Typographic : Correction::Kind::Erroneous});
        }
        for (std::size_t i = n_assign; i < pending.size(); ++i)
            report.unmatched_entries.push_back(pending[i]->label);

        for (std::size_t i = 0; i < polys.size(); ++i)
            if (!used[i]) report.unmatched_computed.push_back(polys[i]);
    }
    std::sort(report.corrections.begin(), report.corrections.end(),
              [](const Correction& a, const Correction& b) { return a.label < b.label; });
    return report;
}

std::string render_report(const CatalogReport& report) {
    std::ostringstream os;
    os << "p=" << report.p << ": " << report.matched << " entries matched exactly";
    if (!report.corrections.empty()) {
        os << "; " << report.corrections.size() << " corrections:";
        for (const auto& c : report.corrections)
            os << "\n  " << c.label << " ("
               << (c.kind == Correction::Kind::Typographic ? "typographic" : "erroneous")
               << "): printed \"" << c.printed << "\" -> computed " << c.computed.to_string();
    }
    if (!report.unmatched_entries.empty()) {
        os << "\n  UNRESOLVED table entries:";
        for (const auto& label : report.unmatched_entries) os << " " << label;
    }
    if (!report.unmatched_computed.empty()) {
        os << "\n  computed without table row:";
        for (const auto& poly : report.unmatched_computed) os << " " << poly.to_string();
    }
    os << "\n";
    return os.str();
}

} // namespace spectree
