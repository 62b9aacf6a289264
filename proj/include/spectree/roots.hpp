#pragma once

#include <utility>
#include <vector>

#include "spectree/polynomial.hpp"

namespace spectree {

/// A real root refined to double precision, with its exact multiplicity.
struct IsolatedRoot {
    double value;
    int multiplicity;
};

// Sturm chain with integer coefficients (pseudo-remainders, sign-corrected).
std::vector<IntPoly> sturm_chain(const IntPoly& p);

// Sign variations of the chain at t (zeros skipped).
int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& t);

// Number of distinct real roots of p in the half-open interval (a, b].
int count_roots_in(const IntPoly& p, const Rat& a, const Rat& b);

// Number of distinct real roots of p on the whole line.
int count_distinct_real_roots(const IntPoly& p);

// An integer B with every real root of p strictly inside (-B, B).
Int root_bound(const IntPoly& p);

// Yun's squarefree decomposition: pairwise-coprime squarefree factors
// with their multiplicities, so that the product of f^m matches p up to
// a nonzero constant. Factors are primitive with positive lead.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Product of the distinct-root factors (radical), up to constant.
IntPoly squarefree_part(const IntPoly& p);

// Exact multiplicity of the rational point t as a root of p.
int root_multiplicity_at(const IntPoly& p, const Rat& t);

// Exact synthetic division of p by (z - t)^m for rational t; p must be
// divisible. Returns the integer quotient times the needed content.
IntPoly divide_out_root(const IntPoly& p, const Rat& t, int m);

// All real roots with multiplicities, sorted ascending. Each value is
// accurate to better than 1e-12 (dyadic bisection to width 2^-48).
std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p);

// True iff every complex root of p is real (multiplicities included).
bool all_roots_real(const IntPoly& p);

} // namespace spectree
