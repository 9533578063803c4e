#pragma once

// Dense univariate polynomials, constant coefficient first. ZPoly carries
// exact integer coefficients (characteristic polynomials, Sturm chains);
// QPoly carries rationals (rational-function calculus, gcd over a field).

#include <algorithm>
#include <string>
#include <vector>

#include "sgs/bigint.hpp"

namespace sgs {

template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(K constant) : c_{std::move(constant)} { trim(); }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(K(1)); }
    static Poly constant(K v) { return Poly(std::move(v)); }
    // λ^k
    static Poly monomial(int k, K coeff = K(1)) {
        std::vector<K> c(static_cast<size_t>(k) + 1, K(0));
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }
    static Poly lambda() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K(0);
    }
    const K& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& s, const Poly& p) {
        Poly r = p;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& p, const K& s) { return s * p; }

    // multiply by λ^k
    Poly shifted_up(int k) const {
        if (is_zero()) return Poly();
        std::vector<K> c(c_.size() + k, K(0));
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = K(static_cast<long>(i)) * c_[i];
        return Poly(std::move(d));
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r = one();
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<Rational>;

inline QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.emplace_back(a);
    return QPoly(std::move(c));
}

// Conversion that must lose nothing: throws if any coefficient is non-integral.
inline ZPoly to_zpoly(const QPoly& p) {
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) {
        if (!is_integer(a)) throw std::logic_error("to_zpoly: non-integer coefficient");
        c.push_back(a.get_num());
    }
    return ZPoly(std::move(c));
}

// --- field-only operations (QPoly) ---

inline QPoly monic(const QPoly& p) {
    if (p.is_zero() || p.is_monic()) return p;
    Rational inv = Rational(1) / p.leading();
    return inv * p;
}

inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {QPoly(), a};
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[i] / b.leading();
        if (sign(q) == 0) continue;
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

inline QPoly operator/(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

inline QPoly poly_gcd(QPoly a, QPoly b) {
    // Euclid with monic remainders; keeps coefficient growth in check.
    a = monic(a);
    b = monic(b);
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return a;  // monic (or zero)
}

// --- integer-only operations (ZPoly) ---

inline BigInt content(const ZPoly& p) {
    BigInt g(0);
    for (const auto& a : p.coeffs()) g = big_gcd(g, a);
    return g;
}

inline ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (sign(p.leading()) < 0) g = -g;
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(divexact(a, g));
    return ZPoly(std::move(c));
}

// Long division where b is promised to divide a in Z[λ].
inline ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return ZPoly();
    int db = b.degree();
    if (a.degree() < db) throw std::logic_error("exact_div: degree underflow");
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> quot(a.degree() - db + 1, BigInt(0));
    for (int i = a.degree(); i >= db; --i) {
        if (sign(rem[i]) == 0) continue;
        BigInt q = divexact(rem[i], b.leading());
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    for (const auto& r : rem)
        if (sign(r) != 0) throw std::logic_error("exact_div: nonzero remainder");
    return ZPoly(std::move(quot));
}

// gcd in Z[λ], returned primitive with positive leading coefficient.
inline ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    QPoly g = poly_gcd(to_qpoly(a), to_qpoly(b));
    // monic rational gcd -> primitive integer gcd
    BigInt den(1);
    for (const auto& q : g.coeffs()) den = den * q.get_den() / big_gcd(den, BigInt(q.get_den()));
    std::vector<BigInt> c;
    c.reserve(g.coeffs().size());
    for (const auto& q : g.coeffs()) c.push_back(BigInt(q.get_num()) * divexact(den, BigInt(q.get_den())));
    return primitive_part(ZPoly(std::move(c)));
}

// --- printing ---

namespace detail {
inline void append_term(std::string& out, const std::string& mag, int deg, bool neg, bool first,
                        const std::string& var) {
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    bool unit = mag == "1";
    if (deg == 0) {
        out += mag;
    } else {
        if (!unit) out += mag;
        out += var;
        if (deg > 1) out += "^" + std::to_string(deg);
    }
}
}  // namespace detail

// Human-readable form, highest power first: "x^3 - 3x^2 - 11x + 15".
template <class K>
std::string to_string(const Poly<K>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        K a = p.coeff(d);
        if (sign(a) == 0) continue;
        bool neg = sign(a) < 0;
        K mag = neg ? K(-a) : a;
        detail::append_term(out, to_string(mag), d, neg, first, var);
        first = false;
    }
    return out;
}

}  // namespace sgs
