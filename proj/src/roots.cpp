#include "spectree/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectree {

namespace {

int sign_of(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }
int sign_of(const Rat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

int count_variations(const std::vector<int>& signs) {
    int var = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

} // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p.primitive_part());
    if (p.degree() == 0) return chain;
    IntPoly d = p.derivative().primitive_part();
    chain.push_back(d);
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        int dsteps = a.degree() - b.degree() + 1;
        IntPoly r = pseudo_divmod(a, b).second;
        if (r.is_zero()) break;
        // True remainder is r / lc(b)^dsteps; the chain only needs the
        // sign, so flip when the multiplier is negative.
        bool mult_negative = (b.lead() < 0) && (dsteps % 2 == 1);
        IntPoly next = mult_negative ? r : -r;
        chain.push_back(next.primitive_part());
    }
    return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& t) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPoly& s : chain) signs.push_back(sign_of(s(t)));
    return count_variations(signs);
}

namespace {

int sign_variations_at_infinity(const std::vector<IntPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPoly& s : chain) {
        if (s.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int sg = sign_of(s.lead());
        if (!positive && s.degree() % 2 == 1) sg = -sg;
        signs.push_back(sg);
    }
    return count_variations(signs);
}

} // namespace

int count_roots_in(const IntPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::logic_error("root counting on zero polynomial");
    if (!(a < b)) return 0;
    auto chain = sturm_chain(p);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_distinct_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::logic_error("root counting on zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations_at_infinity(chain, false) -
           sign_variations_at_infinity(chain, true);
}

Int root_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Int(1);
    Int maxc = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Int a = boost::multiprecision::abs(p.coeff(k));
        if (a > maxc) maxc = a;
    }
    Int lead = boost::multiprecision::abs(p.lead());
    return 2 + maxc / lead; // integer >= 1 + max|a_i|/|a_n|
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> result;
    if (p.is_zero() || p.degree() == 0) return result;

    IntPoly pp = p.primitive_part();
    if (pp.lead() < 0) pp = -pp;
    IntPoly g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) {
        result.emplace_back(pp, 1);
        return result;
    }
    // Yun: w carries the remaining distinct factors, z the corrective term.
    IntPoly w = div_exact(pp, g);
    IntPoly y = div_exact(pp.derivative(), g);
    IntPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        IntPoly f = poly_gcd(w, z);
        if (f.degree() > 0) result.emplace_back(f, i);
        w = div_exact(w, f);
        y = div_exact(z, f);
        z = y - w.derivative();
        ++i;
    }
    return result;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    IntPoly out = IntPoly::constant(1);
    for (const auto& [f, m] : squarefree_decomposition(p)) out = out * f;
    return out;
}

int root_multiplicity_at(const IntPoly& p, const Rat& t) {
    if (p.is_zero()) throw std::logic_error("multiplicity in zero polynomial");
    IntPoly lin(std::vector<Int>{-Int(boost::multiprecision::numerator(t)),
                                 Int(boost::multiprecision::denominator(t))});
    IntPoly cur = p;
    int m = 0;
    while (cur.degree() >= 1 && cur(t) == 0) {
        cur = div_exact(cur.primitive_part(), lin);
        ++m;
    }
    return m;
}

IntPoly divide_out_root(const IntPoly& p, const Rat& t, int m) {
    IntPoly lin(std::vector<Int>{-Int(boost::multiprecision::numerator(t)),
                                 Int(boost::multiprecision::denominator(t))});
    IntPoly cur = p;
    for (int k = 0; k < m; ++k) cur = div_exact(cur.primitive_part(), lin);
    return cur;
}

namespace {

// Roots of a squarefree polynomial by Sturm bisection on dyadic intervals.
std::vector<double> isolate_squarefree(const IntPoly& f) {
    std::vector<double> out;
    if (f.degree() < 1) return out;
    if (f.degree() == 1) {
        Rat r = Rat(-f.coeff(0)) / Rat(f.coeff(1));
        out.push_back(r.convert_to<double>());
        return out;
    }
    auto chain = sturm_chain(f);
    Int bound = root_bound(f);
    const Rat eps = Rat(1, Int(1) << 48);

    struct Segment {
        Rat lo, hi;
        int vlo, vhi;
    };
    std::vector<Segment> stack;
    Rat lo = Rat(-bound), hi = Rat(bound);
    stack.push_back({lo, hi, sign_variations_at(chain, lo), sign_variations_at(chain, hi)});

    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        int count = s.vlo - s.vhi;
        if (count <= 0) continue;
        if (count == 1) {
            while (s.hi - s.lo > eps) {
                Rat mid = (s.lo + s.hi) / 2;
                int vmid = sign_variations_at(chain, mid);
                if (s.vlo - vmid == 1) {
                    s.hi = mid;
                    s.vhi = vmid;
                } else {
                    s.lo = mid;
                    s.vlo = vmid;
                }
            }
            out.push_back(((s.lo + s.hi) / 2).convert_to<double>());
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        int vmid = sign_variations_at(chain, mid);
        stack.push_back({s.lo, mid, s.vlo, vmid});
        stack.push_back({mid, s.hi, vmid, s.vhi});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p) {
    std::vector<IsolatedRoot> roots;
    for (const auto& [f, mult] : squarefree_decomposition(p))
        for (double v : isolate_squarefree(f)) roots.push_back({v, mult});
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.value < b.value; });
    return roots;
}

bool all_roots_real(const IntPoly& p) {
    if (p.is_zero()) throw std::logic_error("realness of zero polynomial");
    if (p.degree() <= 0) return true;
    IntPoly sf = squarefree_part(p);
    return count_distinct_real_roots(sf) == sf.degree();
}

} // namespace spectree
