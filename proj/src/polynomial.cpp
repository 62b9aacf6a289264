#include "spectree/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "spectree/errors.hpp"

namespace spectree {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int degree) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Int(0));
        p.coeffs_[degree] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::lead() const {
    if (is_zero()) throw std::logic_error("lead() of zero polynomial");
    return coeffs_.back();
}

Int IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[k];
}

Int IntPoly::operator()(const Int& t) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rat IntPoly::operator()(const Rat& t) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rat(*it);
    return acc;
}

double IntPoly::eval(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + it->convert_to<double>();
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return IntPoly{};
    std::vector<Int> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Int(k) * coeffs_[k];
    return IntPoly(std::move(d));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return boost::multiprecision::abs(g);
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly{};
    Int g = content();
    std::vector<Int> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] / g;
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly{};
    std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& c, const IntPoly& p) {
    if (c == 0) return IntPoly{};
    std::vector<Int> out(p.coeffs_.size());
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = c * p.coeffs_[k];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p) { return Int(-1) * p; }

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeffs_[k];
        if (c == 0) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        Int a = boost::multiprecision::abs(c);
        if (a != 1 || k == 0) os << a;
        if (k >= 1) os << 'z';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::logic_error("pseudo-division by zero polynomial");
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {IntPoly{}, num};
    const Int& lc = den.lead();
    int steps = dn - dd + 1;

    std::vector<Int> rem = num.coeffs();
    std::vector<Int> quo(steps, Int(0));
    // Scale lazily: one factor of lc per elimination step, lc^steps total.
    for (int k = dn; k >= dd; --k) {
        Int t = rem[k];
        for (Int& c : rem) c *= lc;
        for (Int& c : quo) c *= lc;
        quo[k - dd] += t;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= t * den.coeffs()[j];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::logic_error("division by zero polynomial");
    if (num.is_zero()) return IntPoly{};
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) throw std::logic_error("div_exact: degree of numerator too small");

    std::vector<Int> rem = num.coeffs();
    std::vector<Int> quo(dn - dd + 1, Int(0));
    for (int k = dn; k >= dd; --k) {
        if (rem[k] == 0) continue;
        Int q = rem[k] / den.lead();
        if (q * den.lead() != rem[k]) throw std::logic_error("div_exact: not divisible");
        quo[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * den.coeffs()[j];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::logic_error("div_exact: nonzero remainder");
    return IntPoly(std::move(quo));
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly{};
    if (a.is_zero()) std::swap(a, b);
    a = a.primitive_part();
    if (!b.is_zero()) b = b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = pseudo_divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? IntPoly{} : r.primitive_part();
    }
    if (a.lead() < 0) a = -a;
    return a;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    return false;
}

NormalizedPoly normalize(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("cannot normalize the zero polynomial");
    IntPoly q = p.primitive_part();
    if (q.lead() < 0) q = -q;
    return NormalizedPoly(std::move(q));
}

} // namespace spectree
