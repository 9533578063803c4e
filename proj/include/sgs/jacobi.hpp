#pragma once

// Dependency-free dense symmetric eigensolver (cyclic-by-row Jacobi) and the
// multiset comparison of its output against an exact spectrum report. This
// is the independent verification path for every exact claim.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sgs/graph.hpp"
#include "sgs/spectrum.hpp"

namespace sgs {

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    int sweeps = 0;
    double off_diagonal_residual = 0.0;
};

inline constexpr int kJacobiMaxSweeps = 100;

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

}  // namespace detail

// Eigenvalues of a symmetric matrix given as a flat row-major array.
inline EigenResult symmetric_eigenvalues(std::vector<double> a, int n, double tol = 1e-12) {
    if (n < 1) throw std::invalid_argument("symmetric_eigenvalues: dimension must be >= 1");
    if (static_cast<int>(a.size()) != n * n)
        throw std::invalid_argument("symmetric_eigenvalues: array size does not match dimension");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(a[i * n + j] - a[j * n + i]) > 1e-12)
                throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric");

    EigenResult res;
    double off = detail::off_diagonal_norm(a, n);
    int sweep = 0;
    while (off >= tol && sweep < kJacobiMaxSweeps) {
        ++sweep;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double app = a[p * n + p], aqq = a[q * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        off = detail::off_diagonal_norm(a, n);
    }
    if (off >= tol)
        throw std::runtime_error("jacobi failed to converge after " +
                                 std::to_string(kJacobiMaxSweeps) +
                                 " sweeps; off-diagonal residual " + std::to_string(off));
    res.sweeps = sweep;
    res.off_diagonal_residual = off;
    res.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) res.eigenvalues[i] = a[i * n + i];
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end());
    return res;
}

inline EigenResult graph_eigenvalues(const Graph& g, double tol = 1e-12) {
    int n = g.vertex_count();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = g.edge(i, j) ? 1.0 : 0.0;
    return symmetric_eigenvalues(std::move(a), n, tol);
}

struct SpectrumComparison {
    bool match = false;
    double max_gap = 0.0;
    std::vector<std::pair<double, double>> pairing;  // (exact, numeric), ascending
};

// Greedy sorted pairing; optimal for matching two sorted real multisets.
inline SpectrumComparison compare_spectra(const SpectrumReport& exact, const EigenResult& numeric,
                                          double tol) {
    std::vector<double> ex = report_eigenvalues(exact);
    if (ex.size() != numeric.eigenvalues.size())
        throw std::invalid_argument("compare_spectra: dimension mismatch");
    SpectrumComparison out;
    out.pairing.reserve(ex.size());
    for (size_t i = 0; i < ex.size(); ++i) {
        out.pairing.emplace_back(ex[i], numeric.eigenvalues[i]);
        out.max_gap = std::max(out.max_gap, std::fabs(ex[i] - numeric.eigenvalues[i]));
    }
    out.match = out.max_gap <= tol;
    return out;
}

}  // namespace sgs
