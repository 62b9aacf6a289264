#include "spectree/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "spectree/charpoly.hpp"
#include "spectree/errors.hpp"
#include "spectree/roots.hpp"

namespace spectree {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

EdgeOrientation default_orientation(const Graph& g) {
    EdgeOrientation o;
    o.directed.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        if (g.degree(v) == 1 && g.degree(u) != 1)
            o.directed.emplace_back(v, u);
        else
            o.directed.emplace_back(u, v);
    }
    return o;
}

namespace {

// Coefficients of the two basis solutions and their (rescaled)
// derivatives at both endpoints of an edge.
struct BasisValues {
    double val0_s, val0_c; // y(0)
    double vall_s, vall_c; // y(l)
    double der0_s, der0_c; // y'(0), up to a common positive factor
    double derl_s, derl_c; // y'(l), same factor
};

Eigen::MatrixXd assemble_char_matrix(const Graph& g, const BoundaryConfig& b,
                                     const EdgeOrientation& orient, const BasisValues& bv) {
    int ge = g.edge_count();
    int n = 2 * ge;
    if (static_cast<int>(orient.directed.size()) != ge)
        throw std::invalid_argument("orientation does not match the edge list");

    // incident edge indices per vertex
    std::vector<std::vector<int>> incident(g.p());
    for (int j = 0; j < ge; ++j) {
        auto [t, h] = orient.directed[j];
        incident[t].push_back(j);
        incident[h].push_back(j);
    }

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    int row = 0;
    auto value_coefs = [&](int j, int v) -> std::pair<double, double> {
        return orient.directed[j].first == v ? std::pair{bv.val0_s, bv.val0_c}
                                             : std::pair{bv.vall_s, bv.vall_c};
    };
    auto deriv_coefs = [&](int j, int v) -> std::pair<double, double> {
        return orient.directed[j].first == v ? std::pair{bv.der0_s, bv.der0_c}
                                             : std::pair{bv.derl_s, bv.derl_c};
    };

    for (int v = 0; v < g.p(); ++v) {
        if (g.degree(v) != 1) continue;
        int j = incident[v].front();
        auto [cs, cc] = b.is_dirichlet(v) ? value_coefs(j, v) : deriv_coefs(j, v);
        m(row, j) = cs;
        m(row, ge + j) = cc;
        ++row;
    }
    for (int v = 0; v < g.p(); ++v) {
        if (g.degree(v) < 2) continue;
        const auto& inc = incident[v];
        auto [s0, c0] = value_coefs(inc[0], v);
        for (std::size_t t = 1; t < inc.size(); ++t) {
            auto [st, ct] = value_coefs(inc[t], v);
            m(row, inc[0]) = s0;
            m(row, ge + inc[0]) = c0;
            m(row, inc[t]) -= st;
            m(row, ge + inc[t]) -= ct;
            ++row;
        }
        // Kirchhoff: incoming derivatives at l balance outgoing ones at 0.
        for (int j : inc) {
            auto [ds, dc] = deriv_coefs(j, v);
            double sgn = (orient.directed[j].first == v) ? -1.0 : 1.0;
            m(row, j) += sgn * ds;
            m(row, ge + j) += sgn * dc;
        }
        ++row;
    }
    if (row != n) throw std::logic_error("characteristic matrix row count mismatch");
    return m;
}

} // namespace

Eigen::MatrixXd build_char_matrix(const Graph& g, const BoundaryConfig& b,
                                  const EdgeOrientation& orient, double x, double /*l*/) {
    // Basis sin(sqrt(lambda) t), cos(sqrt(lambda) t); derivative rows are
    // divided by sqrt(lambda). All entries stay within [-1, 1].
    BasisValues bv{0.0, 1.0, std::sin(x), std::cos(x), 1.0, 0.0, std::cos(x), -std::sin(x)};
    return assemble_char_matrix(g, b, orient, bv);
}

Eigen::MatrixXd build_char_matrix_zero(const Graph& g, const BoundaryConfig& b,
                                       const EdgeOrientation& orient, double l) {
    // lambda -> 0 limits: s(t) -> t, c(t) -> 1.
    BasisValues bv{0.0, 1.0, l, 1.0, 1.0, 0.0, 1.0, 0.0};
    return assemble_char_matrix(g, b, orient, bv);
}

namespace {

bool lambda_zero_is_eigenvalue(const Graph& g, const BoundaryConfig& b,
                               const EdgeOrientation& orient, double l) {
    Eigen::MatrixXd m = build_char_matrix_zero(g, b, orient, l);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    return sv(sv.size() - 1) < 1e-12 * std::max(1.0, sv(0));
}

double bisect_sign_change(const std::function<double(double)>& f, double lo, double hi,
                          double flo) {
    const double tol = 1e-11;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol) return mid;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0) != (fm < 0))
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    throw ConvergenceFailureError("bisection did not reach tolerance 1e-10");
}

// Root of f' inside (lo, hi), for even-order zeros of f.
double bisect_derivative(const std::function<double(double)>& f, double lo, double hi) {
    const double h = 1e-7;
    auto fp = [&](double y) { return (f(y + h) - f(y - h)) / (2 * h); };
    double flo = fp(lo), fhi = fp(hi);
    if ((flo < 0) == (fhi < 0)) {
        // No derivative sign change resolved; fall back to ternary search
        // on |f|.
        for (int iter = 0; iter < 300 && hi - lo > 1e-11; ++iter) {
            double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (std::abs(f(m1)) < std::abs(f(m2)))
                hi = m2;
            else
                lo = m1;
        }
        return 0.5 * (lo + hi);
    }
    const double tol = 1e-11;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol) return mid;
        double fm = fp(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0) != (fm < 0))
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    throw ConvergenceFailureError("derivative bisection did not reach tolerance 1e-10");
}

// Order of the zero of f at x0 from the symmetric logarithmic
// derivative: delta/2 * (f'/f(x0+delta) - f'/f(x0-delta)) -> m.
int estimate_multiplicity(const std::function<double(double)>& f, double x0, double gap,
                          double scale, bool from_sign_change) {
    double dmax = std::min(0.08, gap / 3.0);
    std::vector<double> estimates;
    for (double delta : {dmax, dmax * 0.5}) {
        if (delta < 1e-4) break;
        double h = delta * 1e-2;
        auto fp = [&](double y) { return (f(y + h) - f(y - h)) / (2 * h); };
        double fr = f(x0 + delta), fl = f(x0 - delta);
        if (std::abs(fr) < 1e-11 * scale || std::abs(fl) < 1e-11 * scale) continue;
        double m = 0.5 * delta * (fp(x0 + delta) / fr - fp(x0 - delta) / fl);
        if (std::isfinite(m) && m > 0.3) estimates.push_back(m);
    }
    if (estimates.empty()) return from_sign_change ? 1 : 2;
    double avg = 0;
    for (double m : estimates) avg += m;
    avg /= static_cast<double>(estimates.size());
    int m = static_cast<int>(std::lround(avg));
    return std::max(1, m);
}

} // namespace

SpectrumSample direct_spectrum(const Graph& g, const BoundaryConfig& b,
                               const EdgeOrientation& orient, double l, double x_max) {
    if (x_max <= 0) throw InvalidRangeError("x_max must be positive");
    if (l <= 0) throw InvalidRangeError("edge length must be positive");

    std::function<double(double)> f = [&](double x) {
        return build_char_matrix(g, b, orient, x, l).determinant();
    };

    const double step = kPi / 1000.0;
    const double x_end = x_max + 10 * step;
    int n = static_cast<int>(std::ceil(x_end / step));
    std::vector<double> vals(n + 1, 0.0);
    double scale = 0.0;
    for (int i = 1; i <= n; ++i) {
        vals[i] = f(i * step);
        scale = std::max(scale, std::abs(vals[i]));
    }
    if (scale == 0.0) throw ConvergenceFailureError("determinant vanished identically on the grid");

    struct Found {
        double x;
        bool sign_change;
    };
    std::vector<Found> found;
    for (int i = 1; i < n; ++i) {
        double a = i * step, c = (i + 1) * step;
        if (vals[i] == 0.0) {
            found.push_back({a, true});
            continue;
        }
        if ((vals[i] < 0) != (vals[i + 1] < 0) && vals[i + 1] != 0.0) {
            found.push_back({bisect_sign_change(f, a, c, vals[i]), true});
            continue;
        }
        if (i >= 2 && std::abs(vals[i]) < std::abs(vals[i - 1]) &&
            std::abs(vals[i]) <= std::abs(vals[i + 1]) && vals[i - 1] * vals[i + 1] > 0 &&
            std::abs(vals[i]) < 1e-4 * scale) {
            double x0 = bisect_derivative(f, (i - 1) * step, c);
            if (std::abs(f(x0)) < 1e-8 * scale) found.push_back({x0, false});
        }
    }

    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.x < b.x; });
    // Merge duplicates and trim to the requested window.
    std::vector<Found> roots;
    for (const Found& r : found) {
        if (r.x > x_max + 1e-9) break;
        if (!roots.empty() && std::abs(r.x - roots.back().x) < 1e-8) continue;
        roots.push_back(r);
    }

    SpectrumSample sample{l, lambda_zero_is_eigenvalue(g, b, orient, l), {}};
    for (std::size_t i = 0; i < roots.size(); ++i) {
        double gap = x_max;
        if (i > 0) gap = std::min(gap, roots[i].x - roots[i - 1].x);
        if (i + 1 < roots.size()) gap = std::min(gap, roots[i + 1].x - roots[i].x);
        gap = std::min(gap, roots[i].x); // stay away from x = 0
        int mult = estimate_multiplicity(f, roots[i].x, gap, scale, roots[i].sign_change);
        double x = roots[i].x;
        sample.eigenvalues.push_back({x, (x / l) * (x / l), mult});
    }
    return sample;
}

SpectrumSample direct_spectrum(const Graph& g, const BoundaryConfig& b, double l, double x_max) {
    return direct_spectrum(g, b, default_orientation(g), l, x_max);
}

SpectrumSample closed_form_spectrum(const Tree& t, const BoundaryConfig& b, double l,
                                    double x_max) {
    if (x_max <= 0) throw InvalidRangeError("x_max must be positive");
    if (l <= 0) throw InvalidRangeError("edge length must be positive");

    int e = sine_exponent(t, b);
    IntPoly P = (b.r() == t.p()) ? IntPoly::constant(1)
                                 : interior_char_poly(interior_subgraph(t, b));

    int m_plus = root_multiplicity_at(P, Rat(1));
    int m_minus = root_multiplicity_at(P, Rat(-1));
    IntPoly Q = divide_out_root(divide_out_root(P, Rat(1), m_plus), Rat(-1), m_minus);
    auto interior_roots = isolate_real_roots(Q);
    for (const auto& r : interior_roots)
        if (std::abs(r.value) >= 1.0)
            throw std::logic_error("interior polynomial root outside [-1, 1]");

    const double tol = 1e-9;
    std::vector<EigenvalueEntry> ev;
    for (int k = 1; k * kPi <= x_max + tol; ++k) {
        int mult = e + 2 * (k % 2 == 0 ? m_plus : m_minus);
        if (mult < 0) throw std::logic_error("negative multiplicity in factorized spectrum");
        if (mult > 0) ev.push_back({k * kPi, 0.0, mult});
    }
    for (const auto& r : interior_roots) {
        double base = std::acos(r.value); // in (0, pi)
        for (int k = 0;; ++k) {
            bool any = false;
            double x1 = base + kTwoPi * k;
            if (x1 <= x_max + tol) {
                ev.push_back({x1, 0.0, r.multiplicity});
                any = true;
            }
            double x2 = kTwoPi * (k + 1) - base;
            if (x2 <= x_max + tol) {
                ev.push_back({x2, 0.0, r.multiplicity});
                any = true;
            }
            if (!any) break;
        }
    }
    std::sort(ev.begin(), ev.end(),
              [](const EigenvalueEntry& a, const EigenvalueEntry& b) { return a.x < b.x; });
    for (auto& entry : ev) entry.lambda = (entry.x / l) * (entry.x / l);

    EdgeOrientation orient = default_orientation(t);
    return SpectrumSample{l, lambda_zero_is_eigenvalue(t, b, orient, l), std::move(ev)};
}

int BranchData::alpha_total() const {
    int total = 0;
    for (const auto& [alpha, mult] : alpha_values) total += mult;
    return total;
}

BranchData extract_branches(const SpectrumSample& sample, int p, int p_pen, double l) {
    if (p_pen < 2 || p <= p_pen)
        throw std::invalid_argument("extract_branches needs p > p_pen >= 2");
    if (l <= 0) throw InvalidRangeError("edge length must be positive");

    const int e = p_pen - 1;
    const int p_tilde = p - p_pen;

    double max_x = 0;
    for (const auto& entry : sample.eigenvalues)
        max_x = std::max(max_x, std::sqrt(entry.lambda) * l);
    int periods = static_cast<int>(std::floor(max_x / kTwoPi + 1e-9));
    if (periods < 3)
        throw std::invalid_argument("extract_branches needs at least 3 full periods (x_max >= 6 pi)");
    const double window = periods * kTwoPi + 1e-9;

    const double lattice_tol = 1e-6;
    int even_count = 0, odd_count = 0;
    int even_mult = -1, odd_mult = -1;
    std::vector<std::pair<double, int>> cos_entries; // (cos x, multiplicity)
    for (const auto& entry : sample.eigenvalues) {
        double x = std::sqrt(entry.lambda) * l;
        if (x > window) continue;
        long k = std::lround(x / kPi);
        if (std::abs(x - k * kPi) < lattice_tol) {
            bool even = (k % 2 == 0);
            int& mult = even ? even_mult : odd_mult;
            int& count = even ? even_count : odd_count;
            if (mult >= 0 && mult != entry.multiplicity)
                throw ClusterAmbiguityError("pi-lattice eigenvalues have inconsistent multiplicity");
            mult = entry.multiplicity;
            ++count;
        } else {
            cos_entries.emplace_back(std::cos(x), entry.multiplicity);
        }
    }

    auto lattice_check = [&](int count, int mult) {
        if (count == 0) return 0; // no lattice branch observed
        if (count != periods)
            throw ClusterAmbiguityError("pi-lattice branch does not recur once per period");
        return mult;
    };
    int observed_even = lattice_check(even_count, std::max(even_mult, 0));
    int observed_odd = lattice_check(odd_count, std::max(odd_mult, 0));

    auto boundary_root_mult = [&](int observed, const char* side) {
        int excess = observed - e;
        if (excess < 0 || excess % 2 != 0)
            throw ClusterAmbiguityError(std::string("pi-lattice multiplicity incompatible with "
                                                    "the sine exponent at cos x = ") +
                                        side);
        return excess / 2;
    };
    int m_plus = boundary_root_mult(observed_even, "+1");
    int m_minus = boundary_root_mult(observed_odd, "-1");

    std::sort(cos_entries.begin(), cos_entries.end());
    const double cluster_tol = 1e-6;
    std::vector<std::pair<double, int>> alphas;
    std::size_t i = 0;
    while (i < cos_entries.size()) {
        std::size_t j = i + 1;
        while (j < cos_entries.size() && cos_entries[j].first - cos_entries[j - 1].first < cluster_tol)
            ++j;
        double lo = cos_entries[i].first, hi = cos_entries[j - 1].first;
        if (hi - lo > 1e-7)
            throw ClusterAmbiguityError("eigenvalue cluster wider than the resolution tolerance");
        int mult = cos_entries[i].second;
        double center = 0;
        for (std::size_t k = i; k < j; ++k) {
            if (cos_entries[k].second != mult)
                throw ClusterAmbiguityError("cluster members disagree on multiplicity");
            center += cos_entries[k].first;
        }
        center /= static_cast<double>(j - i);
        if (static_cast<int>(j - i) != 2 * periods)
            throw ClusterAmbiguityError("cluster does not recur twice per period");
        alphas.emplace_back(center, mult);
        i = j;
    }
    if (m_minus > 0) alphas.insert(alphas.begin(), {-1.0, m_minus});
    if (m_plus > 0) alphas.emplace_back(1.0, m_plus);

    BranchData data{std::move(alphas), e, p_tilde, p_pen};
    if (data.alpha_total() != p_tilde)
        throw ClusterAmbiguityError("branch multiplicities do not add up to p - p_pen");
    return data;
}

} // namespace spectree
