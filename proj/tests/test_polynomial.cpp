#include <doctest.h>

#include <random>

#include "spectree/errors.hpp"
#include "spectree/polynomial.hpp"

using namespace spectree;

TEST_CASE("construction trims leading zeros") {
    IntPoly p(std::vector<Int>{Int(1), Int(0), Int(0)});
    CHECK(p.degree() == 0);
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{0, 0}.is_zero());
    CHECK(IntPoly::monomial(0, 5).is_zero());
}

TEST_CASE("exact Horner evaluation") {
    IntPoly p{-1, 0, 4}; // 4z^2 - 1
    CHECK(p(Int(1)) == 3);
    IntPoly q{0, -1, 0, 6}; // 6z^3 - z
    CHECK(q(Int(0)) == 0);
    IntPoly two_z{0, 2};
    CHECK(two_z(Rat(1, 2)) == 1);
    CHECK(p(Rat(1, 2)) == 0);
}

TEST_CASE("arithmetic basics") {
    IntPoly a{1, 2};     // 2z + 1
    IntPoly b{-1, 0, 3}; // 3z^2 - 1
    CHECK((a + b) == IntPoly{0, 2, 3});
    CHECK((a - a).is_zero());
    CHECK((a * b) == IntPoly{-1, -2, 3, 6});
    CHECK((-a) == IntPoly{-1, -2});
    CHECK(a.derivative() == IntPoly{2});
    CHECK(IntPoly{-1, 0, 4}.derivative() == IntPoly{0, 8});
}

TEST_CASE("string form uses descending powers") {
    CHECK(IntPoly{0, 5, 0, -12}.to_string() == "-12z^3+5z");
    CHECK(IntPoly{-1, 0, 4}.to_string() == "4z^2-1");
    CHECK(IntPoly{0, 2}.to_string() == "2z");
    CHECK(IntPoly{0, -1, 0, 6}.to_string() == "6z^3-z");
    CHECK(IntPoly{}.to_string() == "0");
    CHECK(IntPoly{-7}.to_string() == "-7");
    CHECK(IntPoly{0, 1}.to_string() == "z");
}

TEST_CASE("normalize strips content and fixes the sign") {
    CHECK(normalize(IntPoly{0, 6, 0, -36}).poly() == IntPoly{0, -1, 0, 6});
    CHECK(normalize(IntPoly{0, 4, 0, -24}).poly() == IntPoly{0, -1, 0, 6});
    CHECK(normalize(IntPoly{0, 5, 0, -30}).poly() == IntPoly{0, -1, 0, 6});
    CHECK(normalize(IntPoly{-1, 0, 4}).poly() == IntPoly{-1, 0, 4});
    // idempotent
    NormalizedPoly n = normalize(IntPoly{0, 6, 0, -36});
    CHECK(normalize(n.poly()) == n);
    CHECK_THROWS_AS(normalize(IntPoly{}), ZeroPolynomialError);
}

TEST_CASE("exact division") {
    IntPoly num{-1, 0, 0, 0, 4}; // 4z^4 - 1
    IntPoly den{-1, 0, 2};       // 2z^2 - 1
    CHECK(div_exact(num, den) == IntPoly{1, 0, 2});
    CHECK_THROWS_AS(div_exact(IntPoly{1, 1}, IntPoly{0, 2}), std::logic_error);
}

TEST_CASE("pseudo-division identity lc^k * a = q*b + r") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Int> ac(5), bc(3);
        for (auto& c : ac) c = coef(rng);
        for (auto& c : bc) c = coef(rng);
        IntPoly a(ac), b(bc);
        if (b.is_zero() || a.degree() < b.degree()) continue;
        auto [q, r] = pseudo_divmod(a, b);
        Int lc = b.lead();
        Int mult = 1;
        for (int k = 0; k < a.degree() - b.degree() + 1; ++k) mult *= lc;
        CHECK(mult * a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("polynomial gcd of products of known factors") {
    IntPoly f{-1, 2};    // 2z - 1
    IntPoly g{3, 1};     // z + 3
    IntPoly h{0, 0, 1};  // z^2
    IntPoly a = f * g * h;
    IntPoly b = f * h;
    IntPoly d = poly_gcd(a, b);
    CHECK(d == f * h);
    CHECK(poly_gcd(f, g).degree() == 0);
}
