#pragma once

// Quotients of polynomials in canonical form (reduced, monic denominator).
// This is the carrier of main functions v^t (λI - M)^{-1} u and of the
// Schur-complement determinant identity.

#include <stdexcept>
#include <utility>
#include <vector>

#include "sgs/matrix.hpp"
#include "sgs/poly.hpp"

namespace sgs {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(QPoly::one()) {}
    RationalFunction(int v) : num_(QPoly::constant(Rational(v))), den_(QPoly::one()) {}
    explicit RationalFunction(Rational v) : num_(QPoly::constant(std::move(v))), den_(QPoly::one()) {}
    explicit RationalFunction(QPoly p) : num_(std::move(p)), den_(QPoly::one()) {}
    explicit RationalFunction(const ZPoly& p) : num_(to_qpoly(p)), den_(QPoly::one()) {}
    RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }
    RationalFunction(const ZPoly& num, const ZPoly& den)
        : RationalFunction(to_qpoly(num), to_qpoly(den)) {}

    static RationalFunction lambda() { return RationalFunction(QPoly::lambda()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Extracts an integer polynomial, throwing if the value is not one.
    ZPoly as_zpoly() const {
        if (!is_polynomial()) throw std::logic_error("rational function is not a polynomial");
        return to_zpoly(num_);
    }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;  // canonical form makes this sound
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly::one();
            return;
        }
        QPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lead = den_.leading();
        if (lead != Rational(1)) {
            Rational inv = Rational(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    QPoly num_;
    QPoly den_;
};

// Cramer solves and rational-function eliminations get expensive fast;
// above this cap callers should fall back to the numeric eigensolver.
inline constexpr int kDefaultExactDimensionCap = 64;

// Main function Γ_M(u,v) = v^t (λI - M)^{-1} u. Cramer solves over Z[λ]:
// the i-th entry of (λI - M)^{-1} u is det(λI - M with column i replaced
// by u) / det(λI - M), each determinant fraction-free.
inline RationalFunction main_function(const IntMatrix& m, const std::vector<BigInt>& u,
                                      const std::vector<BigInt>& v,
                                      int dimension_cap = kDefaultExactDimensionCap) {
    if (!m.is_square()) throw std::invalid_argument("main_function: matrix not square");
    int n = m.rows();
    if (n > dimension_cap)
        throw std::invalid_argument("main_function: dimension " + std::to_string(n) +
                                    " exceeds the exact-arithmetic cap of " +
                                    std::to_string(dimension_cap));
    if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw std::invalid_argument("main_function: vector dimension mismatch");
    Matrix<ZPoly> lam = lambda_minus(m);
    ZPoly p = det_bareiss(lam);
    ZPoly acc;
    for (int i = 0; i < n; ++i) {
        if (sign(v[i]) == 0) continue;
        Matrix<ZPoly> mi = lam;
        for (int r = 0; r < n; ++r) mi(r, i) = ZPoly::constant(u[r]);
        acc += ZPoly::constant(v[i]) * det_bareiss(mi);
    }
    return RationalFunction(acc, p);
}

inline RationalFunction main_function(const IntMatrix& m, const std::vector<BigInt>& u,
                                      int dimension_cap = kDefaultExactDimensionCap) {
    return main_function(m, u, u, dimension_cap);
}

// Both sides of det(λI - M) = det(λI - D) det((λI - A) - B (λI - D)^{-1} C)
// for the block split M = [[A, B], [C, D]] at row/column `split`.
struct SchurCheck {
    ZPoly direct;        // det(λI - M)
    ZPoly via_schur;     // det of the D block times det of the Schur complement
    bool equal = false;
};

inline SchurCheck schur_det(const IntMatrix& m, int split,
                            int dimension_cap = kDefaultExactDimensionCap) {
    if (!m.is_square()) throw std::invalid_argument("schur_det: matrix not square");
    int n = m.rows();
    if (n > dimension_cap)
        throw std::invalid_argument("schur_det: dimension " + std::to_string(n) +
                                    " exceeds the exact-arithmetic cap of " +
                                    std::to_string(dimension_cap));
    if (split <= 0 || split >= n) throw std::invalid_argument("schur_det: split out of range");
    int d = n - split;

    Matrix<ZPoly> lam = lambda_minus(m);
    SchurCheck out;
    out.direct = det_bareiss(lam);

    auto rf = [](const ZPoly& p) { return RationalFunction(p, ZPoly::one()); };
    Matrix<ZPoly> dblock = lam.block(split, split, d, d);
    Matrix<RationalFunction> dd(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) dd(i, j) = rf(dblock(i, j));
    RationalFunction det_d = det_gauss(dd);
    if (det_d.is_zero()) throw std::domain_error("schur_det: singular trailing block");

    Matrix<RationalFunction> dinv = inverse_gauss(dd);
    Matrix<RationalFunction> aa(split, split), bb(split, d), cc(d, split);
    for (int i = 0; i < split; ++i)
        for (int j = 0; j < split; ++j) aa(i, j) = rf(lam(i, j));
    for (int i = 0; i < split; ++i)
        for (int j = 0; j < d; ++j) bb(i, j) = rf(lam(i, split + j));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < split; ++j) cc(i, j) = rf(lam(split + i, j));
    Matrix<RationalFunction> schur = aa - bb * (dinv * cc);

    RationalFunction rhs = det_d * det_gauss(schur);
    out.via_schur = rhs.as_zpoly();
    out.equal = out.direct == out.via_schur;
    return out;
}

}  // namespace sgs
