#include "spectree/charpoly.hpp"

#include <stdexcept>

namespace spectree {

namespace {

// One elimination template shared by the polynomial and integer variants.
template <typename Entry, typename IsZero, typename Combine>
Entry det_bareiss_impl(std::vector<std::vector<Entry>>& m, Entry one, IsZero is_zero,
                       Combine combine) {
    int n = static_cast<int>(m.size());
    if (n == 0) return one;
    int sign = 1;
    Entry prev = one;
    for (int k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(m[i][k])) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Entry{}; // whole column zero: singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = combine(m[i][j], m[k][k], m[i][k], m[k][j], prev);
            m[i][k] = Entry{};
        }
        prev = m[k][k];
    }
    Entry det = m[n - 1][n - 1];
    if (sign < 0) det = Entry{} - det;
    return det;
}

} // namespace

IntPoly det_bareiss(std::vector<std::vector<IntPoly>> m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::logic_error("determinant of non-square matrix");
    return det_bareiss_impl(
        m, IntPoly::constant(1), [](const IntPoly& p) { return p.is_zero(); },
        [](const IntPoly& a, const IntPoly& pivot, const IntPoly& c, const IntPoly& r,
           const IntPoly& prev) { return div_exact(a * pivot - c * r, prev); });
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::logic_error("determinant of non-square matrix");
    return det_bareiss_impl(
        m, Int(1), [](const Int& v) { return v == 0; },
        [](const Int& a, const Int& pivot, const Int& c, const Int& r, const Int& prev) {
            Int num = a * pivot - c * r;
            Int q = num / prev;
            if (q * prev != num) throw std::logic_error("Bareiss division not exact");
            return q;
        });
}

IntPoly interior_char_poly(const InteriorSubgraph& sub) {
    int n = sub.size();
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (int i = 0; i < n; ++i) {
        m[i][i] = IntPoly::monomial(sub.weights[i], 1);
        for (int j = 0; j < n; ++j)
            if (j != i && sub.adjacency[i][j]) m[i][j] = IntPoly::constant(-1);
    }
    return det_bareiss(std::move(m));
}

IntPoly dirichlet_poly(const Graph& g, const BoundaryConfig& b) {
    return interior_char_poly(interior_subgraph(g, b));
}

int sine_exponent(const Graph& g, const BoundaryConfig& b) {
    return g.edge_count() - g.p() + b.r();
}

} // namespace spectree
