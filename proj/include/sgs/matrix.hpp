#pragma once

// Dense exact matrices and the determinant/characteristic-polynomial kernels:
// Faddeev-LeVerrier over the integers, fraction-free Bareiss elimination
// (both for integer entries and for entries in Z[λ]), and plain Gaussian
// elimination over a field.

#include <stdexcept>
#include <vector>

#include "sgs/bigint.hpp"
#include "sgs/poly.hpp"

namespace sgs {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix difference: shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T t(0);
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix block(int r0, int c0, int nr, int nc) const {
        Matrix b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    template <class U, class F>
    Matrix<U> map(F f) const {
        Matrix<U> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMatrix = Matrix<BigInt>;

// Characteristic polynomial det(λI - M), monic, exact integer coefficients.
// Faddeev-LeVerrier trace recurrence: N_1 = I, c_k = -tr(M N_k)/k,
// N_{k+1} = M N_k + c_k I. Every division is exact.
inline ZPoly char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    int n = m.rows();
    std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
    coeffs[n] = 1;  // λ^n
    IntMatrix nk = IntMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        IntMatrix mk = m * nk;
        BigInt ck = -divexact(mk.trace(), BigInt(k));
        coeffs[n - k] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) mk(i, i) += ck;
            nk = std::move(mk);
        }
    }
    return ZPoly(std::move(coeffs));
}

// Fraction-free determinant (Bareiss). Works over any integral domain with
// exact division; Div must satisfy Div(x*y, x) == y.
template <class T, class Div>
T det_bareiss_generic(Matrix<T> a, Div div) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
    int n = a.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sgn = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!(a(i, k) == T(0))) {
                pivot = i;
                break;
            }
        if (pivot < 0) return T(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a(pivot, j), a(k, j));
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    return sgn < 0 ? T(-d) : d;
}

inline BigInt det_bareiss(const IntMatrix& m) {
    return det_bareiss_generic(m, [](const BigInt& x, const BigInt& y) { return divexact(x, y); });
}

inline ZPoly det_bareiss(const Matrix<ZPoly>& m) {
    return det_bareiss_generic(m, [](const ZPoly& x, const ZPoly& y) { return exact_div(x, y); });
}

// Determinant over a field (rationals, rational functions).
template <class K>
K det_gauss(Matrix<K> a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
    int n = a.rows();
    K det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!(a(i, k) == K(0))) {
                pivot = i;
                break;
            }
        if (pivot < 0) return K(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a(pivot, j), a(k, j));
            det = K(0) - det;
        }
        det = det * a(k, k);
        for (int i = k + 1; i < n; ++i) {
            K f = a(i, k) / a(k, k);
            if (f == K(0)) continue;
            for (int j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    return det;
}

// Gauss-Jordan inverse over a field; throws on singular input.
template <class K>
Matrix<K> inverse_gauss(Matrix<K> a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
    int n = a.rows();
    Matrix<K> inv = Matrix<K>::identity(n);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!(a(i, k) == K(0))) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("inverse: singular matrix");
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(k, j));
                std::swap(inv(pivot, j), inv(k, j));
            }
        K p = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) = a(k, j) / p;
            inv(k, j) = inv(k, j) / p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            K f = a(i, k);
            if (f == K(0)) continue;
            for (int j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

// Border M with one new row/column whose only nonzero entries are
// (n,0) = (0,n) = 1: the A ∗ e_1 operation.
inline IntMatrix star_extend(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("star_extend: matrix not square");
    int n = m.rows();
    IntMatrix r(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m(i, j);
    if (n > 0) {
        r(n, 0) = 1;
        r(0, n) = 1;
    }
    return r;
}

// λI - M over Z[λ].
inline Matrix<ZPoly> lambda_minus(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("lambda_minus: matrix not square");
    int n = m.rows();
    Matrix<ZPoly> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<BigInt> c{-m(i, j), BigInt(i == j ? 1 : 0)};
            r(i, j) = ZPoly(std::move(c));
        }
    return r;
}

}  // namespace sgs
