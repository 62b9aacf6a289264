#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spectree/graph.hpp"

namespace spectree {

/// Per-edge (tail, head) pairs, indexed like Graph::edges(). Pendant
/// edges are directed away from their pendant wherever possible.
struct EdgeOrientation {
    std::vector<std::pair<int, int>> directed;
};

EdgeOrientation default_orientation(const Graph& g);

// The 2g x 2g matrix of the vertex conditions at x = sqrt(lambda)*l.
// Columns 0..g-1 hold the sine component per edge, columns g..2g-1 the
// cosine component. Rows: one boundary row per pendant, then per
// interior vertex d(v)-1 continuity rows and one Kirchhoff row. Rows and
// columns are rescaled by positive factors of sqrt(lambda), so the
// determinant is a positive multiple of the characteristic function and
// has the same zeros and zero orders on x > 0.
Eigen::MatrixXd build_char_matrix(const Graph& g, const BoundaryConfig& b,
                                  const EdgeOrientation& orient, double x, double l);

// The lambda -> 0 limit (s -> x, c -> 1) in the unscaled basis; singular
// exactly when lambda = 0 is an eigenvalue.
Eigen::MatrixXd build_char_matrix_zero(const Graph& g, const BoundaryConfig& b,
                                       const EdgeOrientation& orient, double l);

struct EigenvalueEntry {
    double x;      // sqrt(lambda) * l
    double lambda; // (x/l)^2
    int multiplicity;
};

struct SpectrumSample {
    double l;
    bool lambda_zero; // whether lambda = 0 is an eigenvalue (kept out of the list)
    std::vector<EigenvalueEntry> eigenvalues; // strictly increasing x
};

// Zeros of sin(x)^e * P(cos x) on (0, x_max], with exact multiplicities
// from the sine exponent and the root multiplicities of P.
SpectrumSample closed_form_spectrum(const Tree& t, const BoundaryConfig& b, double l,
                                    double x_max);

// Zeros of the characteristic-matrix determinant on (0, x_max] by grid
// scan plus bisection; multiplicities estimated from the logarithmic
// derivative. Independent of the closed form and of the orientation.
SpectrumSample direct_spectrum(const Graph& g, const BoundaryConfig& b, double l, double x_max);
SpectrumSample direct_spectrum(const Graph& g, const BoundaryConfig& b,
                               const EdgeOrientation& orient, double l, double x_max);

/// Asymptotic branch data recovered from a spectrum: the cosine values
/// of the arccos-type branches (with multiplicity) plus the pi-lattice
/// branch count.
struct BranchData {
    std::vector<std::pair<double, int>> alpha_values; // (alpha, multiplicity), ascending
    int pi_branch_count;
    int p_tilde;
    int p_pen_tilde;
    int alpha_total() const;
};

// Requires at least 3 full periods of data (x up to 6*pi). The sample
// must come from an all-Dirichlet problem on a p-vertex tree.
BranchData extract_branches(const SpectrumSample& sample, int p, int p_pen, double l);

} // namespace spectree
