#include <doctest.h>

#include "helpers.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/errors.hpp"
#include "spectree/roots.hpp"

using namespace spectree;
using namespace spectree::testing;

namespace {

IntPoly all_dirichlet_poly(const Tree& t) {
    return dirichlet_poly(t, BoundaryConfig::all_dirichlet(t));
}

} // namespace

TEST_CASE("published example polynomials, up to sign") {
    CHECK(all_dirichlet_poly(path(3)) == IntPoly{0, 2});
    CHECK(all_dirichlet_poly(path(4)) == IntPoly{-1, 0, 4});
    CHECK(all_dirichlet_poly(star(3)) == IntPoly{0, 3});
    CHECK(all_dirichlet_poly(spider({1, 1, 3})) == IntPoly{0, -5, 0, 12});
    CHECK(all_dirichlet_poly(spider({2, 2, 1})) == IntPoly{0, -4, 0, 12});
}

TEST_CASE("empty interior is an error") {
    Tree p2 = path(2);
    CHECK_THROWS_AS(dirichlet_poly(p2, BoundaryConfig::all_dirichlet(p2)), EmptyInteriorError);
}

TEST_CASE("sine exponent") {
    Tree p3 = path(3);
    CHECK(sine_exponent(p3, BoundaryConfig::all_dirichlet(p3)) == 1);
    Tree s4 = star(4);
    CHECK(sine_exponent(s4, BoundaryConfig::all_dirichlet(s4)) == 3);
    CHECK(sine_exponent(s4, BoundaryConfig(s4, {1})) == 0);
    for (int p : {5, 8}) {
        for (const auto& entry : enumerate_trees(p).trees) {
            BoundaryConfig b = BoundaryConfig::all_dirichlet(entry.tree);
            CHECK(sine_exponent(entry.tree, b) == entry.p_pen - 1);
        }
    }
}

TEST_CASE("integer Bareiss determinant") {
    CHECK(det_bareiss(std::vector<std::vector<Int>>{{Int(2)}}) == 2);
    CHECK(det_bareiss(std::vector<std::vector<Int>>{{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
    // singular
    CHECK(det_bareiss(std::vector<std::vector<Int>>{{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
    // needs a row swap
    CHECK(det_bareiss(std::vector<std::vector<Int>>{{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
}

TEST_CASE("dual-route determinant: elimination vs evaluation-interpolation") {
    // The build-time oracle: both exact routes must agree coefficientwise
    // for every tree up to 9 vertices, all-Dirichlet.
    for (int p = 3; p <= 9; ++p) {
        for (const auto& entry : enumerate_trees(p).trees) {
            BoundaryConfig b = BoundaryConfig::all_dirichlet(entry.tree);
            CHECK(dirichlet_poly(entry.tree, b) == dirichlet_poly_interpolated(entry.tree, b));
        }
    }
}

TEST_CASE("mixed Dirichlet subsets agree with the interpolation oracle") {
    for (int p = 3; p <= 7; ++p) {
        for (const auto& entry : enumerate_trees(p).trees) {
            auto pendants = pendant_vertices(entry.tree);
            // one mixed case per tree: drop the last pendant from the set
            std::vector<int> subset(pendants.begin(), pendants.end() - 1);
            BoundaryConfig b(entry.tree, subset);
            CHECK(dirichlet_poly(entry.tree, b) == dirichlet_poly_interpolated(entry.tree, b));
            CHECK(dirichlet_poly(entry.tree, b).degree() == entry.tree.p() - b.r());
        }
    }
    // hand-checked mixed values
    Tree s3 = star(3);
    CHECK(dirichlet_poly(s3, BoundaryConfig(s3, {1})) == IntPoly{0, -2, 0, 3});
    Tree p4 = path(4);
    CHECK(dirichlet_poly(p4, BoundaryConfig(p4, {0})) == IntPoly{0, -3, 0, 4});
    Tree p3 = path(3);
    CHECK(dirichlet_poly(p3, BoundaryConfig(p3, {0})) == IntPoly{-1, 0, 2});
}

TEST_CASE("degree and leading coefficient laws") {
    for (int p = 3; p <= 9; ++p) {
        for (const auto& entry : enumerate_trees(p).trees) {
            BoundaryConfig b = BoundaryConfig::all_dirichlet(entry.tree);
            InteriorSubgraph sub = interior_subgraph(entry.tree, b);
            IntPoly poly = dirichlet_poly(entry.tree, b);
            CHECK(poly.degree() == entry.tree.p() - b.r());
            Int lead_expected = 1;
            for (int w : sub.weights) lead_expected *= w;
            CHECK(poly.lead() == lead_expected);
        }
    }
}

TEST_CASE("parity: interior trees are bipartite") {
    for (int p = 3; p <= 9; ++p) {
        for (const auto& entry : enumerate_trees(p).trees) {
            IntPoly poly = all_dirichlet_poly(entry.tree);
            int parity = poly.degree() % 2;
            for (int k = 0; k <= poly.degree(); ++k)
                if (k % 2 != parity) CHECK(poly.coeff(k) == 0);
        }
    }
}

TEST_CASE("all roots are real and lie strictly inside (-1, 1)") {
    for (int p = 3; p <= 10; ++p) {
        for (const auto& entry : enumerate_trees(p).trees) {
            IntPoly poly = all_dirichlet_poly(entry.tree);
            CHECK(all_roots_real(poly));
            CHECK(poly(Int(1)) != 0);
            CHECK(poly(Int(-1)) != 0);
            IntPoly sf = squarefree_part(poly);
            CHECK(count_roots_in(sf, Rat(-1), Rat(1)) == sf.degree());
        }
    }
}
