#pragma once

// Exact real-root machinery for integer polynomials: Sturm chains with
// primitive integer entries, squarefree (Yun) decomposition, integer-root
// extraction, and bisection-based isolation/refinement.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgs/bigint.hpp"
#include "sgs/poly.hpp"

namespace sgs {

// One isolated real root: exact rational bracket plus a decimal rendering of
// the midpoint. lo == hi marks an exact rational root.
struct RootInterval {
    Rational lo;
    Rational hi;
    std::string approx;

    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

namespace detail {

// -rem(a, b) over Q, scaled back to a primitive integer polynomial.
// Scaling by a positive rational preserves signs everywhere, which is all
// Sturm's theorem needs.
inline ZPoly neg_rem_primitive(const ZPoly& a, const ZPoly& b) {
    QPoly r = divmod(to_qpoly(a), to_qpoly(b)).second;
    if (r.is_zero()) return ZPoly();
    BigInt den(1);
    for (const auto& q : r.coeffs()) {
        BigInt d = q.get_den();
        den = den * divexact(d, big_gcd(den, d));
    }
    std::vector<BigInt> c;
    c.reserve(r.coeffs().size());
    for (const auto& q : r.coeffs())
        c.push_back(BigInt(q.get_num()) * divexact(den, BigInt(q.get_den())));
    ZPoly z(std::move(c));
    BigInt g = content(z);
    std::vector<BigInt> out;
    out.reserve(z.coeffs().size());
    for (const auto& x : z.coeffs()) out.push_back(-divexact(x, g));
    return ZPoly(std::move(out));
}

}  // namespace detail

inline std::vector<ZPoly> sturm_chain(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    std::vector<ZPoly> chain;
    chain.push_back(primitive_part(p));
    if (p.degree() == 0) return chain;
    chain.push_back(primitive_part(p.derivative()));
    while (chain.back().degree() > 0) {
        ZPoly next = detail::neg_rem_primitive(chain[chain.size() - 2], chain.back());
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

// Sign variations of the chain at a rational point (zeros skipped).
inline int sign_variations_at(const std::vector<ZPoly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Sign variations at -inf (dir = -1) or +inf (dir = +1).
inline int sign_variations_at_infinity(const std::vector<ZPoly>& chain, int dir) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(p.leading());
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Number of distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0.
inline int count_roots(const std::vector<ZPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

inline int count_real_roots(const ZPoly& squarefree) {
    auto chain = sturm_chain(squarefree);
    return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

// Cauchy bound: all real roots lie in (-B, B).
inline BigInt cauchy_root_bound(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    BigInt lead = big_abs(p.leading());
    BigInt maxc(0);
    for (int i = 0; i < p.degree(); ++i) {
        BigInt a = big_abs(p.coeff(i));
        if (a > maxc) maxc = a;
    }
    return 1 + (maxc + lead - 1) / lead;  // ceil(max|a_i| / |a_n|) + 1
}

// Yun squarefree decomposition: p = prod_i f_i^i with the f_i squarefree and
// pairwise coprime. Returns the nontrivial (f_i, i); constant content and
// leading sign are dropped.
inline std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
    std::vector<std::pair<ZPoly, int>> out;
    if (p.degree() == 0) return out;
    ZPoly f = primitive_part(p);
    ZPoly g = poly_gcd(f, f.derivative());
    ZPoly w = exact_div(f, g);
    int i = 1;
    while (w.degree() > 0) {
        ZPoly y = poly_gcd(w, g);
        ZPoly factor = exact_div(w, y);
        if (factor.degree() > 0) out.emplace_back(primitive_part(factor), i);
        g = exact_div(g, y);
        w = std::move(y);
        ++i;
    }
    return out;
}

// synthetic division of a monic-ish polynomial by (λ - r); caller promises
// exact divisibility (p(r) == 0)
inline ZPoly deflate_root(const ZPoly& p, const BigInt& r) {
    std::vector<BigInt> q(p.degree());
    BigInt carry(0);
    for (int i = p.degree(); i >= 1; --i) {
        carry = p.coeff(i) + carry * r;
        q[i - 1] = carry;
    }
    return ZPoly(std::move(q));
}

std::vector<RootInterval> isolate_squarefree_roots(const ZPoly& p, int precision);
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p);

// All integer roots of a monic integer polynomial with multiplicities,
// peeling λ^k first and deflating each root fully. `root_bound` caps the
// divisor scan; callers that know an eigenvalue bound (Gershgorin row sums)
// should pass it. For small bounds this is the divisor scan of the constant
// term; for huge Cauchy bounds the candidates come from Sturm isolation of
// the squarefree part instead, which stays exact.
inline std::vector<std::pair<BigInt, int>> integer_roots(
    ZPoly p, std::optional<BigInt> root_bound = std::nullopt) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("integer_roots: polynomial must be monic");
    std::vector<std::pair<BigInt, int>> roots;
    int zeros = 0;
    while (p.degree() > 0 && sign(p.coeff(0)) == 0) {
        std::vector<BigInt> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = ZPoly(std::move(c));
        ++zeros;
    }
    if (zeros > 0) roots.emplace_back(BigInt(0), zeros);
    if (p.degree() == 0) return roots;

    BigInt bound = cauchy_root_bound(p);
    if (root_bound && *root_bound < bound) bound = *root_bound;

    std::vector<BigInt> candidates;
    if (bound <= 1000000) {
        for (BigInt d(1); d <= bound; ++d) {
            if (!divides(d, p.coeff(0))) continue;
            candidates.push_back(d);
            candidates.push_back(-d);
        }
    } else {
        // isolate below width 1/2; each bracket holds at most one integer
        for (const auto& [factor, mult] : squarefree_decomposition(p)) {
            (void)mult;
            for (const auto& iv : isolate_squarefree_roots(factor, 1)) {
                Rational m = iv.midpoint();
                BigInt lo = m.get_num() / m.get_den();  // truncation; check neighbors
                for (const BigInt& c : {BigInt(lo - 1), BigInt(lo), BigInt(lo + 1)})
                    candidates.push_back(c);
            }
        }
    }
    for (const BigInt& cand : candidates) {
        if (sign(cand) == 0) continue;
        int mult = 0;
        while (p.degree() > 0 && sign(p.eval(cand)) == 0) {
            p = deflate_root(p, cand);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

namespace detail {

inline std::string approx_string(const Rational& lo, const Rational& hi, int precision) {
    return decimal_string((lo + hi) / 2, precision);
}

// Shrink an isolating bracket (one sign change inside) below 10^-precision.
inline RootInterval refine_bracket(const ZPoly& p, Rational lo, Rational hi, int precision) {
    Rational width_target(1, 1);
    width_target /= Rational(pow10(precision));
    int slo = sign(p.eval(lo));
    while (hi - lo >= width_target) {
        Rational mid = (lo + hi) / 2;
        int sm = sign(p.eval(mid));
        if (sm == 0) return RootInterval{mid, mid, decimal_string(mid, precision)};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return RootInterval{lo, hi, approx_string(lo, hi, precision)};
}

inline void isolate_rec(const ZPoly& p, const std::vector<ZPoly>& chain, const Rational& lo,
                        const Rational& hi, int nroots, std::vector<RootInterval>& out,
                        int precision) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.push_back(refine_bracket(p, lo, hi, precision));
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sign(p.eval(mid)) == 0) {
        // rational root exactly on the midpoint: report it and split around it
        out.push_back(RootInterval{mid, mid, decimal_string(mid, precision)});
        Rational eps = (hi - lo) / 4;
        // shrink until (mid-eps, mid+eps] holds only this root and the
        // endpoints are themselves root-free
        Rational lo2 = mid - eps, hi2 = mid + eps;
        while (sign(p.eval(lo2)) == 0 || sign(p.eval(hi2)) == 0 ||
               count_roots(chain, lo2, hi2) > 1) {
            eps /= 2;
            lo2 = mid - eps;
            hi2 = mid + eps;
        }
        isolate_rec(p, chain, lo, lo2, count_roots(chain, lo, lo2), out, precision);
        isolate_rec(p, chain, hi2, hi, count_roots(chain, hi2, hi), out, precision);
        return;
    }
    int left = count_roots(chain, lo, mid);
    isolate_rec(p, chain, lo, mid, left, out, precision);
    isolate_rec(p, chain, mid, hi, nroots - left, out, precision);
}

}  // namespace detail

// Isolating intervals for the distinct real roots of a squarefree polynomial,
// refined below 10^-precision, in increasing order.
inline std::vector<RootInterval> isolate_squarefree_roots(const ZPoly& p, int precision) {
    if (p.is_zero()) throw std::invalid_argument("isolate roots of zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    auto chain = sturm_chain(p);
    Rational bound{cauchy_root_bound(p)};
    int total = count_roots(chain, -bound, bound);
    detail::isolate_rec(p, chain, -bound, bound, total, out, precision);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// General entry point: squarefree-decomposes first, tags every isolated root
// with its multiplicity.
inline std::vector<std::pair<RootInterval, int>> isolate_real_roots(const ZPoly& p,
                                                                    int precision) {
    if (p.is_zero()) throw std::invalid_argument("isolate roots of zero polynomial");
    std::vector<std::pair<RootInterval, int>> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        for (const auto& iv : isolate_squarefree_roots(factor, precision)) out.emplace_back(iv, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    return out;
}

}  // namespace sgs
