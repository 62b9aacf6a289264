// spectree: spectral toolkit for equilateral metric trees with Dirichlet
// pendant conditions. Exit codes: 0 success, 2 flag/usage error, 3 input
// data error, 4 internal convergence failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectree/charpoly.hpp"
#include "spectree/cospectral.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/errors.hpp"
#include "spectree/graph.hpp"
#include "spectree/inverse.hpp"
#include "spectree/polynomial.hpp"
#include "spectree/spectrum.hpp"

namespace {

using namespace spectree;
using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInputData = 3;
constexpr int kExitInternal = 4;

ordered_json poly_json(const IntPoly& poly) {
    ordered_json j;
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : poly.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = std::move(coeffs);
    j["string"] = poly.to_string();
    return j;
}

ordered_json edges_json(const Graph& g) {
    ordered_json arr = ordered_json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    return arr;
}

std::string edges_string(const Graph& g) {
    std::ostringstream os;
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) os << ",";
        os << u << "-" << v;
        first = false;
    }
    return os.str();
}

Graph read_graph(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    return parse_edge_list(in);
}

BoundaryConfig boundary_from_flag(const Graph& g, const std::string& flag) {
    if (flag == "all") return BoundaryConfig::all_dirichlet(g);
    std::vector<int> vertices;
    std::stringstream ss(flag);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            vertices.push_back(std::stoi(item));
        } catch (...) {
            throw ParseError("invalid --dirichlet vertex: " + item);
        }
    }
    return BoundaryConfig(g, std::move(vertices));
}

int cmd_enumerate(int p, const std::string& format) {
    TreeCatalog catalog = enumerate_trees(p);
    auto buckets = count_by_pendants(catalog);
    if (format == "json") {
        ordered_json j;
        j["p"] = p;
        j["count"] = catalog.size();
        ordered_json bj;
        for (auto [pen, cnt] : buckets) bj[std::to_string(pen)] = cnt;
        j["by_pendants"] = std::move(bj);
        ordered_json trees = ordered_json::array();
        for (const auto& entry : catalog.trees) {
            ordered_json t;
            t["edges"] = edges_json(entry.tree);
            t["code"] = entry.code.code;
            t["p_pen"] = entry.p_pen;
            trees.push_back(std::move(t));
        }
        j["trees"] = std::move(trees);
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "p=" << p << ": " << catalog.size() << " trees\n";
        for (const auto& entry : catalog.trees)
            std::cout << edges_string(entry.tree) << " " << entry.code.code << "\n";
        std::cout << "pendant buckets:";
        for (auto [pen, cnt] : buckets) std::cout << " " << pen << ":" << cnt;
        std::cout << "\n";
    }
    return 0;
}

int cmd_poly(const std::string& input, const std::string& dirichlet, const std::string& format) {
    Graph g = read_graph(input);
    BoundaryConfig b = boundary_from_flag(g, dirichlet);
    IntPoly poly = dirichlet_poly(g, b);
    if (format == "json") {
        ordered_json j = poly_json(poly);
        j["normalized"] = normalize(poly).to_string();
        j["degree"] = poly.degree();
        j["sine_exponent"] = sine_exponent(g, b);
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "P(z) = " << poly.to_string() << "\n";
        std::cout << "sine exponent: " << sine_exponent(g, b) << "\n";
        std::cout << "note: P is det(z*D - A) on the interior left after removing Dirichlet "
                     "pendants;\n      published sign conventions may differ by a constant "
                     "multiple\n";
    }
    return 0;
}

int cmd_classes(int p, const std::string& format) {
    auto classes = find_classes(p);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& cls : classes) {
            ordered_json j;
            j["p"] = cls.key.p;
            j["p_pen"] = cls.key.p_pen;
            j["poly"] = poly_json(cls.key.poly.poly());
            ordered_json members = ordered_json::array();
            for (std::size_t i = 0; i < cls.members.size(); ++i) {
                ordered_json m;
                m["code"] = cls.members[i].code;
                m["edges"] = edges_json(cls.trees[i]);
                members.push_back(std::move(m));
            }
            j["members"] = std::move(members);
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(1) << "\n";
    } else if (classes.empty()) {
        std::cout << "no cospectral classes for p=" << p << "\n";
    } else {
        std::cout << classes.size() << " cospectral class(es) for p=" << p << "\n";
        for (const auto& cls : classes) {
            std::cout << "(p=" << cls.key.p << ", p_pen=" << cls.key.p_pen
                      << ") poly=" << cls.key.poly.to_string() << " size=" << cls.members.size()
                      << "\n";
            for (std::size_t i = 0; i < cls.members.size(); ++i)
                std::cout << "  " << cls.members[i].code << "  " << edges_string(cls.trees[i])
                          << "\n";
        }
    }
    return 0;
}

int cmd_spectrum(const std::string& input, const std::string& dirichlet, double l, double x_max,
                 const std::string& method, const std::string& format) {
    Graph g = read_graph(input);
    BoundaryConfig b = boundary_from_flag(g, dirichlet);

    SpectrumSample closed{l, false, {}}, direct{l, false, {}};
    if (method != "direct") closed = closed_form_spectrum(Tree(g), b, l, x_max);
    if (method != "closed") direct = direct_spectrum(g, b, l, x_max);
    const SpectrumSample& primary = (method == "direct") ? direct : closed;

    if (method == "both" && closed.eigenvalues.size() != direct.eigenvalues.size())
        throw ConvergenceFailureError("closed-form and direct spectra disagree in count");

    double max_dx = 0;
    if (method == "both")
        for (std::size_t i = 0; i < closed.eigenvalues.size(); ++i)
            max_dx = std::max(max_dx,
                              std::abs(closed.eigenvalues[i].x - direct.eigenvalues[i].x));

    if (format == "json") {
        ordered_json j;
        j["l"] = l;
        j["x_max"] = x_max;
        j["method"] = method;
        j["lambda_zero"] = primary.lambda_zero;
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < primary.eigenvalues.size(); ++i) {
            const auto& e = primary.eigenvalues[i];
            ordered_json row;
            row["x"] = e.x;
            row["lambda"] = e.lambda;
            row["multiplicity"] = e.multiplicity;
            if (method == "both") row["dx"] = closed.eigenvalues[i].x - direct.eigenvalues[i].x;
            arr.push_back(std::move(row));
        }
        j["eigenvalues"] = std::move(arr);
        if (method == "both") j["max_abs_dx"] = max_dx;
        std::cout << j.dump(1) << "\n";
    } else if (format == "csv") {
        if (method == "both") {
            std::cout << "x_closed,x_direct,dx,lambda,multiplicity\n";
            for (std::size_t i = 0; i < closed.eigenvalues.size(); ++i) {
                const auto& c = closed.eigenvalues[i];
                const auto& d = direct.eigenvalues[i];
                std::printf("%.12f,%.12f,%.3e,%.12f,%d\n", c.x, d.x, c.x - d.x, c.lambda,
                            c.multiplicity);
            }
        } else {
            std::cout << "x,lambda,multiplicity\n";
            for (const auto& e : primary.eigenvalues)
                std::printf("%.12f,%.12f,%d\n", e.x, e.lambda, e.multiplicity);
        }
    } else {
        std::cout << "lambda = 0 eigenvalue: " << (primary.lambda_zero ? "yes" : "no") << "\n";
        if (method == "both") {
            std::printf("%16s %16s %10s %6s\n", "x_closed", "x_direct", "dx", "mult");
            for (std::size_t i = 0; i < closed.eigenvalues.size(); ++i)
                std::printf("%16.10f %16.10f %10.2e %6d\n", closed.eigenvalues[i].x,
                            direct.eigenvalues[i].x,
                            closed.eigenvalues[i].x - direct.eigenvalues[i].x,
                            closed.eigenvalues[i].multiplicity);
            std::printf("max |dx| = %.3e\n", max_dx);
        } else {
            std::printf("%16s %16s %6s\n", "x", "lambda", "mult");
            for (const auto& e : primary.eigenvalues)
                std::printf("%16.10f %16.10f %6d\n", e.x, e.lambda, e.multiplicity);
        }
    }
    return 0;
}

int cmd_invert(const std::vector<double>& alphas, int ppen, double l, const std::string& dict_path,
               const std::string& format) {
    int p_tilde = static_cast<int>(alphas.size());
    int p = p_tilde + ppen;

    ShapeDictionary dict;
    if (!dict_path.empty()) {
        std::ifstream probe(dict_path);
        if (probe.good()) {
            dict = load_dictionary(dict_path);
        } else {
            dict = build_dictionary(std::max(p, 3));
            save_dictionary(dict, dict_path);
        }
    } else {
        dict = build_dictionary(std::max(p, 3));
    }

    // Collapse repeated values into a multiset (1e-9 resolution).
    std::vector<double> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, int>> grouped;
    for (double a : sorted) {
        if (!grouped.empty() && std::abs(a - grouped.back().first) < 1e-9)
            ++grouped.back().second;
        else
            grouped.emplace_back(a, 1);
    }
    BranchData branches{std::move(grouped), ppen - 1, p_tilde, ppen};
    auto codes = recover_trees(branches, l, dict);

    // Resolve codes back to trees for display.
    std::vector<std::pair<CanonicalCode, const Tree*>> hits;
    for (const auto& code : codes)
        for (const auto& entry : dict.entries)
            for (std::size_t i = 0; i < entry.codes.size(); ++i)
                if (entry.codes[i] == code) hits.emplace_back(code, &entry.trees[i]);

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& [code, tree] : hits) {
            ordered_json j;
            j["code"] = code.code;
            j["edges"] = edges_json(*tree);
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(1) << "\n";
    } else if (hits.empty()) {
        std::cout << "no matching tree\n";
    } else {
        std::cout << hits.size() << " candidate tree(s):\n";
        for (const auto& [code, tree] : hits)
            std::cout << "  " << code.code << "  " << edges_string(*tree) << "\n";
    }
    return 0;
}

int cmd_verify_paper(int p_min, int p_max, const std::string& table_path,
                     const std::string& format) {
    auto table = load_reference_table(table_path);
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (int p = p_min; p <= p_max; ++p) {
            CatalogReport report = verify_catalog(p, table);
            ordered_json j;
            j["p"] = p;
            j["matched"] = report.matched;
            ordered_json corr = ordered_json::array();
            for (const auto& c : report.corrections) {
                ordered_json cj;
                cj["label"] = c.label;
                cj["kind"] =
                    c.kind == Correction::Kind::Typographic ? "typographic" : "erroneous";
                cj["printed"] = c.printed;
                cj["computed"] = c.computed.to_string();
                corr.push_back(std::move(cj));
            }
            j["corrections"] = std::move(corr);
            j["unmatched_entries"] = report.unmatched_entries;
            ordered_json classes = ordered_json::array();
            for (const auto& cls : find_classes(p)) {
                ordered_json cj;
                cj["p_pen"] = cls.key.p_pen;
                cj["poly"] = cls.key.poly.to_string();
                ordered_json members = ordered_json::array();
                for (const auto& m : cls.members) members.push_back(m.code);
                cj["members"] = std::move(members);
                classes.push_back(std::move(cj));
            }
            j["cospectral_classes"] = std::move(classes);
            out.push_back(std::move(j));
        }
        std::cout << out.dump(1) << "\n";
    } else {
        for (int p = p_min; p <= p_max; ++p) {
            CatalogReport report = verify_catalog(p, table);
            std::cout << render_report(report);
            auto classes = find_classes(p);
            if (classes.empty()) {
                std::cout << "  no cospectral classes\n";
            } else {
                for (const auto& cls : classes) {
                    std::cout << "  cospectral class (p_pen=" << cls.key.p_pen
                              << ", poly=" << cls.key.poly.to_string() << "):";
                    for (const auto& m : cls.members) std::cout << " " << m.code;
                    std::cout << "\n";
                }
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for equilateral metric trees"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    int p = 0, p_min = 3, p_max = 9, ppen = 0;
    double l = 1.0, x_max = 6 * std::numbers::pi;
    std::string input, dirichlet = "all", method = "closed", table_path = "data/published_tables.json";
    std::string dict_path;
    std::vector<double> alphas;
    if (const char* env = std::getenv("SPECTREE_DICT")) dict_path = env;

    auto* enumerate = app.add_subcommand("enumerate", "list all trees with p vertices");
    enumerate->add_option("--p", p, "vertex count")->required();

    auto* poly = app.add_subcommand("poly", "characteristic polynomial of a tree file");
    poly->add_option("input", input, "edge-list file (- for stdin)")->required();
    poly->add_option("--dirichlet", dirichlet, "\"all\" or comma-separated pendant vertices");

    auto* classes = app.add_subcommand("classes", "cospectral classes among p-vertex trees");
    classes->add_option("--p", p, "vertex count")->required();

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the quantum-graph problem");
    spectrum->add_option("input", input, "edge-list file (- for stdin)")->required();
    spectrum->add_option("--dirichlet", dirichlet, "\"all\" or comma-separated pendant vertices");
    spectrum->add_option("--l", l, "edge length")->capture_default_str();
    spectrum->add_option("--x-max", x_max, "scan limit for x = sqrt(lambda)*l");
    spectrum->add_option("--method", method, "closed | direct | both")
        ->check(CLI::IsMember({"closed", "direct", "both"}));

    auto* invert = app.add_subcommand("invert", "recover tree shapes from branch data");
    invert->add_option("--alphas", alphas, "cos values of the arccos branches")
        ->required()
        ->delimiter(',');
    invert->add_option("--ppen", ppen, "pendant count of the sought tree")->required();
    invert->add_option("--l", l, "edge length")->capture_default_str();
    invert->add_option("--dict", dict_path, "dictionary cache path (env SPECTREE_DICT)");

    auto* verify = app.add_subcommand("verify-paper", "reconcile the computed catalog with the "
                                                      "bundled reference tables");
    verify->add_option("--p-min", p_min, "first vertex count")->capture_default_str();
    verify->add_option("--p-max", p_max, "last vertex count")->capture_default_str();
    verify->add_option("--table", table_path, "reference table JSON")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    // Flag-value validation beyond what CLI11 encodes.
    if ((enumerate->parsed() || classes->parsed()) && p < 1) {
        std::cerr << "error: --p must be a positive vertex count\n";
        return kExitUsage;
    }
    if (classes->parsed() && p < 3) {
        std::cerr << "error: classes requires --p >= 3\n";
        return kExitUsage;
    }
    if (spectrum->parsed() && (x_max <= 0 || l <= 0)) {
        std::cerr << "error: --x-max and --l must be positive\n";
        return kExitUsage;
    }
    if (invert->parsed()) {
        if (ppen < 2) {
            std::cerr << "error: --ppen must be at least 2\n";
            return kExitUsage;
        }
        if (l <= 0) {
            std::cerr << "error: --l must be positive\n";
            return kExitUsage;
        }
        for (double a : alphas)
            if (!(a > -1.0 && a < 1.0)) {
                std::cerr << "error: every alpha must lie strictly inside (-1, 1); "
                          << "cos(gamma*l) cannot reach " << a << "\n";
                return kExitUsage;
            }
    }
    if (verify->parsed() && (p_min < 3 || p_max < p_min)) {
        std::cerr << "error: need 3 <= p-min <= p-max\n";
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(p, format);
        if (poly->parsed()) return cmd_poly(input, dirichlet, format);
        if (classes->parsed()) return cmd_classes(p, format);
        if (spectrum->parsed()) return cmd_spectrum(input, dirichlet, l, x_max, method, format);
        if (invert->parsed()) return cmd_invert(alphas, ppen, l, dict_path, format);
        if (verify->parsed()) return cmd_verify_paper(p_min, p_max, table_path, format);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputData;
    } catch (const EmptyInteriorError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputData;
    } catch (const AmbiguousInputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputData;
    } catch (const InvalidRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
