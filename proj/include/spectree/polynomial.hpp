#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spectree {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact integer-coefficient polynomial in one variable, coefficients
/// stored ascending by degree. The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& lead() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int k) const;

    Int operator()(const Int& t) const;
    Rat operator()(const Rat& t) const;
    double eval(double t) const;

    IntPoly derivative() const;

    // gcd of all coefficients (nonnegative; 0 for the zero polynomial).
    Int content() const;
    // Divide by the content; leading sign is preserved.
    IntPoly primitive_part() const;

    // Human-readable descending form, e.g. "-12z^3+5z".
    std::string to_string() const;

    bool operator==(const IntPoly&) const = default;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const Int& c, const IntPoly& p);
    friend IntPoly operator-(const IntPoly& p);

private:
    void trim();
    std::vector<Int> coeffs_;
};

// Exact quotient num/den in Z[z]; throws std::logic_error unless den
// divides num exactly.
IntPoly div_exact(const IntPoly& num, const IntPoly& den);

// Pseudo-division: lc(den)^(deg num - deg den + 1) * num = q*den + r.
// Returns {q, r}; exact over the integers.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& num, const IntPoly& den);

// Primitive gcd of the primitive parts, positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Total ordering for use as a map key: by degree, then coefficients.
bool poly_less(const IntPoly& a, const IntPoly& b);

/// Primitive polynomial with positive leading coefficient: the canonical
/// representative of an IntPoly up to nonzero constant multiples.
class NormalizedPoly {
public:
    const IntPoly& poly() const { return poly_; }
    const std::vector<Int>& coeffs() const { return poly_.coeffs(); }
    int degree() const { return poly_.degree(); }
    std::string to_string() const { return poly_.to_string(); }

    bool operator==(const NormalizedPoly&) const = default;

    friend NormalizedPoly normalize(const IntPoly& p);

private:
    explicit NormalizedPoly(IntPoly p) : poly_(std::move(p)) {}
    IntPoly poly_;
};

// Content stripped, leading coefficient made positive. Idempotent.
// Throws ZeroPolynomialError on the zero polynomial.
NormalizedPoly normalize(const IntPoly& p);

} // namespace spectree
