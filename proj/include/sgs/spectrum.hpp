#pragma once

// Exact spectra of H-joins of complete graphs. The quotient matrix carries
// the non-(-1) part of the spectrum; reports hold exact rational eigenvalues
// plus residual factors with isolated real roots, in a canonical form that
// is identical no matter which pipeline produced it.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgs/graph.hpp"
#include "sgs/hjoin.hpp"
#include "sgs/matrix.hpp"
#include "sgs/poly.hpp"
#include "sgs/sturm.hpp"

namespace sgs {

enum class Provenance { ClosedForm, Quotient, Numeric };

inline std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::ClosedForm: return "closed_form";
        case Provenance::Quotient: return "quotient";
        case Provenance::Numeric: return "numeric";
    }
    throw std::logic_error("unreachable");
}

struct ExactEigenvalue {
    Rational value;
    int multiplicity;

    bool operator==(const ExactEigenvalue& o) const {
        return value == o.value && multiplicity == o.multiplicity;
    }
};

struct ResidualFactor {
    ZPoly poly;        // monic, squarefree, no rational roots
    int multiplicity;  // each of its roots occurs this often in the spectrum
    std::vector<RootInterval> roots;
};

struct SpectrumReport {
    int dimension = 0;
    std::vector<ExactEigenvalue> exact;    // ascending by value
    std::vector<ResidualFactor> factors;   // ascending by multiplicity
    Provenance provenance = Provenance::Quotient;
    std::vector<double> numeric_eigenvalues;  // populated for Numeric only

    int exact_multiplicity_sum() const {
        int s = 0;
        for (const auto& e : exact) s += e.multiplicity;
        return s;
    }
    int residual_dimension() const {
        int s = 0;
        for (const auto& f : factors) s += f.poly.degree() * f.multiplicity;
        return s;
    }
};

// Structural equality: same eigenvalue data, provenance ignored.
inline bool reports_equal(const SpectrumReport& a, const SpectrumReport& b) {
    if (a.dimension != b.dimension) return false;
    if (a.exact != b.exact) return false;
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i].poly != b.factors[i].poly ||
            a.factors[i].multiplicity != b.factors[i].multiplicity)
            return false;
    return true;
}

// Integer quotient matrix of an H-join of complete parts: B_ii = n_i - 1,
// B_ij = ρ_ij n_j. Diagonally similar (by diag(sqrt(n_i))) to the symmetric
// quotient with entries sqrt(n_i n_j) ρ_ij, so its characteristic polynomial
// is the same and all of its roots are real.
inline IntMatrix quotient_matrix(const HJoinDecomposition& d) {
    int k = d.part_count();
    IntMatrix b(k, k);
    for (int i = 0; i < k; ++i) {
        b(i, i) = d.part_sizes[i] - 1;
        for (int j = 0; j < k; ++j)
            if (i != j && d.skeleton.edge(i, j)) b(i, j) = d.part_sizes[j];
    }
    return b;
}

inline BigInt gershgorin_bound(const IntMatrix& m) {
    BigInt best(0);
    for (int i = 0; i < m.rows(); ++i) {
        BigInt row(0);
        for (int j = 0; j < m.cols(); ++j) row += big_abs(m(i, j));
        if (row > best) best = row;
    }
    return best + 1;
}

// Canonical report from exact seeds plus monic factor polynomials: rational
// (hence integer) roots of every factor migrate into the exact part, the
// remainder is merged and squarefree-split so equal spectra always yield
// byte-identical reports.
inline SpectrumReport make_report(int dimension,
                                  std::vector<std::pair<Rational, int>> exact_seeds,
                                  std::vector<std::pair<ZPoly, int>> factor_seeds, int precision,
                                  Provenance provenance,
                                  std::optional<BigInt> root_bound = std::nullopt,
                                  bool require_all_real = true) {
    std::map<Rational, int> exact;
    for (auto& [v, m] : exact_seeds) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        if (m > 0) exact[v] += m;
    }
    ZPoly residual = ZPoly::one();
    for (auto& [poly, mult] : factor_seeds) {
        if (poly.is_zero() || !poly.is_monic())
            throw std::invalid_argument("factor polynomials must be monic");
        if (mult <= 0) throw std::invalid_argument("factor multiplicity must be positive");
        ZPoly p = poly;
        for (const auto& [root, m] : integer_roots(p, root_bound)) {
            exact[Rational(root)] += m * mult;
            for (int i = 0; i < m; ++i) p = deflate_root(p, root);
        }
        if (p.degree() > 0) residual = residual * p.pow(static_cast<unsigned>(mult));
    }

    SpectrumReport r;
    r.dimension = dimension;
    r.provenance = provenance;
    for (const auto& [v, m] : exact) r.exact.push_back({v, m});
    for (const auto& [sf, mult] : squarefree_decomposition(residual)) {
        ResidualFactor f;
        f.poly = sf;
        f.multiplicity = mult;
        f.roots = isolate_squarefree_roots(sf, precision);
        if (require_all_real && static_cast<int>(f.roots.size()) != sf.degree())
            throw std::logic_error("residual factor has non-real roots");
        r.factors.push_back(std::move(f));
    }
    if (r.exact_multiplicity_sum() + r.residual_dimension() != dimension)
        throw std::logic_error("spectrum report does not account for the full dimension");
    return r;
}

inline constexpr int kDefaultPrecision = 12;

// Spec(Γ) = {-1 with multiplicity Σ(n_i - 1)} ∪ Spec(quotient matrix).
inline SpectrumReport spectrum_from_decomposition(const HJoinDecomposition& d,
                                                  int precision = kDefaultPrecision) {
    int dim = d.total_vertices();
    int minus_ones = 0;
    for (int s : d.part_sizes) minus_ones += s - 1;
    std::vector<std::pair<Rational, int>> seeds;
    if (minus_ones > 0) seeds.emplace_back(Rational(-1), minus_ones);
    IntMatrix b = quotient_matrix(d);
    ZPoly p = char_poly(b);
    return make_report(dim, std::move(seeds), {{p, 1}}, precision, Provenance::Quotient,
                       gershgorin_bound(b));
}

// Characteristic polynomial of the full 0/1 adjacency matrix. Same
// Faddeev-LeVerrier recurrence as char_poly but the product against the
// adjacency is a row-subset sum, no big-integer multiplications.
inline ZPoly adjacency_char_poly(const Graph& g) {
    int n = g.vertex_count();
    std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
    coeffs[n] = 1;
    IntMatrix nk = IntMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        IntMatrix mk(n, n);
        for (int i = 0; i < n; ++i)
            g.for_each_neighbor(i, [&](int u) {
                for (int j = 0; j < n; ++j) mk(i, j) += nk(u, j);
            });
        BigInt ck = -divexact(mk.trace(), BigInt(k));
        coeffs[n - k] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) mk(i, i) += ck;
            nk = std::move(mk);
        }
    }
    return ZPoly(std::move(coeffs));
}

struct IntegralityReport {
    bool integral = true;
    std::vector<RootInterval> witnesses;  // isolated non-integer eigenvalues
};

// A report's residual factors are free of rational roots by construction, so
// any isolated real root left in them witnesses a non-integer eigenvalue.
inline IntegralityReport integrality_report(const SpectrumReport& r) {
    IntegralityReport out;
    for (const auto& f : r.factors)
        for (const auto& iv : f.roots) {
            out.integral = false;
            out.witnesses.push_back(iv);
        }
    return out;
}

// Every eigenvalue as a double (exact values exactly, residual roots by
// bracket midpoint), ascending, multiplicities expanded.
inline std::vector<double> report_eigenvalues(const SpectrumReport& r) {
    std::vector<double> vals;
    vals.reserve(r.dimension);
    if (r.provenance == Provenance::Numeric) return r.numeric_eigenvalues;
    for (const auto& e : r.exact)
        for (int i = 0; i < e.multiplicity; ++i) vals.push_back(to_double(e.value));
    for (const auto& f : r.factors)
        for (const auto& iv : f.roots)
            for (int i = 0; i < f.multiplicity; ++i) vals.push_back(to_double(iv.midpoint()));
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace sgs
