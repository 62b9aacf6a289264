#include "spectree/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "spectree/charpoly.hpp"
#include "spectree/errors.hpp"

namespace spectree {

ShapeDictionary build_dictionary(int max_p) {
    if (max_p < 3) throw std::invalid_argument("build_dictionary requires max_p >= 3");
    std::map<SpectralKey, DictionaryEntry> entries;
    for (int p = 3; p <= max_p; ++p) {
        TreeCatalog catalog = enumerate_trees(p);
        for (const auto& item : catalog.trees) {
            SpectralKey key = spectral_key(item.tree);
            auto it = entries.find(key);
            if (it == entries.end()) {
                DictionaryEntry entry{key, {}, {}, isolate_real_roots(key.poly.poly())};
                it = entries.emplace(key, std::move(entry)).first;
            }
            it->second.codes.push_back(item.code);
            it->second.trees.push_back(item.tree);
        }
    }
    ShapeDictionary dict{max_p, {}};
    dict.entries.reserve(entries.size());
    for (auto& [key, entry] : entries) dict.entries.push_back(std::move(entry));
    return dict;
}

namespace {

constexpr int kDictionaryVersion = 1;

nlohmann::json poly_to_json(const IntPoly& poly) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& c : poly.coeffs()) arr.push_back(c.str());
    return arr;
}

} // namespace

void save_dictionary(const ShapeDictionary& dict, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["version"] = kDictionaryVersion;
    doc["max_p"] = dict.max_p;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& entry : dict.entries) {
        nlohmann::ordered_json e;
        e["p"] = entry.key.p;
        e["p_pen"] = entry.key.p_pen;
        e["coeffs"] = poly_to_json(entry.key.poly.poly());
        nlohmann::ordered_json trees = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < entry.trees.size(); ++i) {
            nlohmann::ordered_json t;
            t["code"] = entry.codes[i].code;
            nlohmann::ordered_json edges = nlohmann::ordered_json::array();
            for (auto [u, v] : entry.trees[i].edges()) edges.push_back({u, v});
            t["edges"] = edges;
            trees.push_back(std::move(t));
        }
        e["trees"] = std::move(trees);
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write dictionary: " + path);
    out << doc.dump(1) << "\n";
}

ShapeDictionary load_dictionary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dictionary: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid dictionary JSON: " + std::string(e.what()));
    }
    if (doc.value("version", 0) != kDictionaryVersion)
        throw ParseError("unsupported dictionary version");
    ShapeDictionary dict{doc.at("max_p").get<int>(), {}};
    for (const auto& e : doc.at("entries")) {
        std::vector<Int> coeffs;
        for (const auto& c : e.at("coeffs")) coeffs.emplace_back(Int(c.get<std::string>()));
        IntPoly poly(std::move(coeffs));
        DictionaryEntry entry{
            SpectralKey{e.at("p").get<int>(), e.at("p_pen").get<int>(), normalize(poly)},
            {},
            {},
            isolate_real_roots(poly)};
        for (const auto& t : e.at("trees")) {
            entry.codes.push_back(CanonicalCode{t.at("code").get<std::string>()});
            std::vector<std::pair<int, int>> edges;
            for (const auto& uv : t.at("edges")) edges.emplace_back(uv[0].get<int>(), uv[1].get<int>());
            entry.trees.emplace_back(entry.key.p, std::move(edges));
        }
        dict.entries.push_back(std::move(entry));
    }
    return dict;
}

namespace {

std::vector<double> expand_multiset(const std::vector<std::pair<double, int>>& values) {
    std::vector<double> out;
    for (const auto& [v, m] : values)
        for (int k = 0; k < m; ++k) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> expand_multiset(const std::vector<IsolatedRoot>& roots) {
    std::vector<double> out;
    for (const auto& r : roots)
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<CanonicalCode> recover_trees(const BranchData& branches, double /*l*/,
                                         const ShapeDictionary& dict) {
    if (branches.p_tilde < 1 || branches.p_pen_tilde < 2)
        throw std::invalid_argument("recover_trees needs p_tilde >= 1 and p_pen_tilde >= 2");
    if (branches.alpha_total() != branches.p_tilde)
        throw AmbiguousInputError("alpha multiset cardinality disagrees with p - p_pen");
    int p = branches.p_tilde + branches.p_pen_tilde;
    if (p > dict.max_p)
        throw std::invalid_argument("dictionary does not cover the requested vertex count");

    const double tol = 1e-9;
    std::vector<double> want = expand_multiset(branches.alpha_values);
    std::vector<CanonicalCode> out;
    for (const auto& entry : dict.entries) {
        if (entry.key.p != p || entry.key.p_pen != branches.p_pen_tilde) continue;
        std::vector<double> have = expand_multiset(entry.roots);
        if (have.size() != want.size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < want.size(); ++i)
            if (std::abs(have[i] - want[i]) > tol) {
                match = false;
                break;
            }
        if (match) out.insert(out.end(), entry.codes.begin(), entry.codes.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CanonicalCode> round_trip(const Tree& t, double l, const ShapeDictionary& dict) {
    if (t.p() > dict.max_p)
        throw std::invalid_argument("dictionary does not cover the requested vertex count");
    BoundaryConfig b = BoundaryConfig::all_dirichlet(t);
    SpectrumSample sample = closed_form_spectrum(t, b, l, 6 * std::numbers::pi);
    BranchData branches = extract_branches(sample, t.p(), b.r(), l);
    return recover_trees(branches, l, dict);
}

} // namespace spectree
