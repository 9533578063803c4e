#pragma once

// The four built-in graph families: equality/conjugacy supercommuting graphs
// of dihedral and dicyclic groups. Provides the group/graph/decomposition
// pipeline per family, the reference H-join realizations, and the
// closed-form spectra with their parity case split.

#include <stdexcept>
#include <string>
#include <vector>

#include "sgs/graph.hpp"
#include "sgs/group.hpp"
#include "sgs/hjoin.hpp"
#include "sgs/spectrum.hpp"

namespace sgs {

enum class Family { EScomDihedral, CScomDihedral, EScomDicyclic, CScomDicyclic };

inline const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = {Family::EScomDihedral, Family::CScomDihedral,
                                             Family::EScomDicyclic, Family::CScomDicyclic};
    return fams;
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::EScomDihedral: return "escom-dihedral";
        case Family::CScomDihedral: return "cscom-dihedral";
        case Family::EScomDicyclic: return "escom-dicyclic";
        case Family::CScomDicyclic: return "cscom-dicyclic";
    }
    throw std::logic_error("unreachable");
}

inline Family parse_family(const std::string& s) {
    for (Family f : all_families())
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family '" + s + "'");
}

inline bool is_dihedral(Family f) {
    return f == Family::EScomDihedral || f == Family::CScomDihedral;
}
inline bool is_escom(Family f) {
    return f == Family::EScomDihedral || f == Family::EScomDicyclic;
}

inline void check_family_n(Family f, int n) {
    if (is_dihedral(f) && n < 3)
        throw std::invalid_argument(family_name(f) + " requires n >= 3");
    if (!is_dihedral(f) && n < 2)
        throw std::invalid_argument(family_name(f) + " requires n >= 2");
}

inline int family_dimension(Family f, int n) {
    check_family_n(f, n);
    return is_dihedral(f) ? 2 * n : 4 * n;
}

inline std::string family_case(Family f, int n) {
    check_family_n(f, n);
    switch (f) {
        case Family::EScomDihedral: return n % 2 ? "odd" : "even";
        case Family::EScomDicyclic: return "all";
        case Family::CScomDihedral:
            if (n % 2) return "odd";
            return (n / 2) % 2 == 0 ? "even-half-even" : "even-half-odd";
        case Family::CScomDicyclic: return n % 2 ? "odd" : "even";
    }
    throw std::logic_error("unreachable");
}

inline FiniteGroup family_group(Family f, int n) {
    check_family_n(f, n);
    return is_dihedral(f) ? dihedral(n) : dicyclic(n);
}

inline Relation family_relation(Family f) {
    return is_escom(f) ? Relation::Equality : Relation::Conjugacy;
}

inline Graph family_graph(Family f, int n) {
    FiniteGroup g = family_group(f, n);
    return super_graph(commuting_graph(g), equivalence_partition(g, family_relation(f)));
}

// Partition the decomposition runs over. Conjugacy classes are complete
// parts of a conjugacy super graph directly; for the equality relation the
// super graph is the commuting graph itself and the maximal complete parts
// are its true-twin blocks.
inline EquivalencePartition family_parts(Family f, const FiniteGroup& g, const Graph& graph) {
    if (is_escom(f)) return twin_partition(graph);
    return equivalence_partition(g, Relation::Conjugacy);
}

inline HJoinDecomposition family_decomposition(Family f, int n) {
    FiniteGroup g = family_group(f, n);
    Graph graph = super_graph(commuting_graph(g), equivalence_partition(g, family_relation(f)));
    return hjoin_decompose(graph, family_parts(f, g, graph));
}

// Reference realization: skeleton plus the part size attached to each
// skeleton vertex. Compared against computed decompositions up to colored
// isomorphism, never by list position.
struct Realization {
    Graph skeleton;
    std::vector<int> vertex_sizes;
};

inline Realization family_realization(Family f, int n) {
    check_family_n(f, n);
    Realization r;
    auto star = [](int leaves) {  // apex 0 joined to vertices 1..leaves
        Graph s(leaves + 1);
        for (int i = 1; i <= leaves; ++i) s.add_edge(0, i);
        return s;
    };
    switch (f) {
        case Family::EScomDihedral:
            if (n % 2) {  // K_1 ∨ (n·K_1 ⊔ K_{n-1})
                r.skeleton = star(n + 1);
                r.vertex_sizes.assign(n + 2, 1);
                r.vertex_sizes.back() = n - 1;
            } else {  // K_2 ∨ ((n/2)·K_2 ⊔ K_{n-2})
                r.skeleton = star(n / 2 + 1);
                r.vertex_sizes.assign(n / 2 + 2, 2);
                r.vertex_sizes.back() = n - 2;
            }
            return r;
        case Family::EScomDicyclic:  // K_2 ∨ (n·K_2 ⊔ K_{2n-2})
            r.skeleton = star(n + 1);
            r.vertex_sizes.assign(n + 2, 2);
            r.vertex_sizes.back() = 2 * n - 2;
            return r;
        case Family::CScomDihedral:
            if (n % 2) {  // K_1 ∨ (K_{(n-1)/2} ⊔ K_1) over parts [1, 2...2, n]
                int pairs = (n - 1) / 2;
                Graph s(pairs + 2);
                for (int i = 1; i <= pairs + 1; ++i) s.add_edge(0, i);
                for (int i = 1; i <= pairs; ++i)
                    for (int j = i + 1; j <= pairs; ++j) s.add_edge(i, j);
                r.skeleton = std::move(s);
                r.vertex_sizes.assign(pairs + 2, 2);
                r.vertex_sizes.front() = 1;
                r.vertex_sizes.back() = n;
                return r;
            } else {
                // K_2 ∨ (K_1 ⊔ K_1 ⊔ K_{n/2-1}) when n/2 even,
                // K_2 ∨ (K_2 ⊔ K_{n/2-1})      when n/2 odd,
                // over parts [1, 1, 2...2, n/2, n/2]
                int pairs = n / 2 - 1;
                int k = pairs + 4;
                Graph s(k);
                for (int apex = 0; apex < 2; ++apex)
                    for (int v = 0; v < k; ++v)
                        if (v != apex && !(apex == 1 && v == 0)) s.add_edge(apex, v);
                for (int i = 2; i < 2 + pairs; ++i)
                    for (int j = i + 1; j < 2 + pairs; ++j) s.add_edge(i, j);
                if ((n / 2) % 2 == 1) s.add_edge(k - 2, k - 1);
                r.skeleton = std::move(s);
                r.vertex_sizes.assign(k, 2);
                r.vertex_sizes[0] = r.vertex_sizes[1] = 1;
                r.vertex_sizes[k - 2] = r.vertex_sizes[k - 1] = n / 2;
                return r;
            }
        case Family::CScomDicyclic: {
            // K_2 ∨ (K_1 ⊔ K_1 ⊔ K_{n-1}) for even n, K_2 ∨ (K_2 ⊔ K_{n-1})
            // for odd n, over parts [1, 1, 2...2, n, n]
            int pairs = n - 1;
            int k = pairs + 4;
            Graph s(k);
            for (int apex = 0; apex < 2; ++apex)
                for (int v = 0; v < k; ++v)
                    if (v != apex && !(apex == 1 && v == 0)) s.add_edge(apex, v);
            for (int i = 2; i < 2 + pairs; ++i)
                for (int j = i + 1; j < 2 + pairs; ++j) s.add_edge(i, j);
            if (n % 2 == 1) s.add_edge(k - 2, k - 1);
            r.skeleton = std::move(s);
            r.vertex_sizes.assign(k, 2);
            r.vertex_sizes[0] = r.vertex_sizes[1] = 1;
            r.vertex_sizes[k - 2] = r.vertex_sizes[k - 1] = n;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

namespace detail {

inline ZPoly cubic(const BigInt& c0, const BigInt& c1, const BigInt& c2) {
    return ZPoly(std::vector<BigInt>{c0, c1, c2, BigInt(1)});
}
inline ZPoly quartic(const BigInt& c0, const BigInt& c1, const BigInt& c2, const BigInt& c3) {
    return ZPoly(std::vector<BigInt>{c0, c1, c2, c3, BigInt(1)});
}

}  // namespace detail

// The residual factor polynomial of the closed-form spectrum, built from the
// closed-form coefficient formulas with n substituted.
inline ZPoly family_factor_polynomial(Family f, int n) {
    check_family_n(f, n);
    BigInt N(n);
    switch (f) {
        case Family::EScomDihedral:
            if (n % 2)  // x^3 - (n-2)x^2 - (2n-1)x + n(n-2)
                return detail::cubic(N * (N - 2), -(2 * N - 1), -(N - 2));
            // x^3 - (n-1)x^2 - (2n+1)x + 2n^2 - 5n - 1
            return detail::cubic(2 * N * N - 5 * N - 1, -(2 * N + 1), -(N - 1));
        case Family::EScomDicyclic:  // x^3 - (2n-1)x^2 - (4n+1)x + 8n^2 - 10n - 1
            return detail::cubic(8 * N * N - 10 * N - 1, -(4 * N + 1), -(2 * N - 1));
        case Family::CScomDihedral:
            if (n % 2)  // x^3 + (3-2n)x^2 + (n^2-5n+3)x + 2n^2 - 4n + 1
                return detail::cubic(2 * N * N - 4 * N + 1, N * N - 5 * N + 3, 3 - 2 * N);
            if ((n / 2) % 2 == 0)
                // x^3 + (3 - 3n/2)x^2 + (n^2/2 - 5n + 3)x + 5n^2/2 - 15n/2 + 1
                return detail::cubic(divexact(5 * N * N - 15 * N, BigInt(2)) + 1,
                                     divexact(N * N, BigInt(2)) - 5 * N + 3,
                                     3 - divexact(3 * N, BigInt(2)));
            // x^4 + (4-2n)x^3 + (n^2-8n+6)x^2 + (4n^2-14n+4)x + 3n^2 - 8n + 1
            return detail::quartic(3 * N * N - 8 * N + 1, 4 * N * N - 14 * N + 4,
                                   N * N - 8 * N + 6, 4 - 2 * N);
        case Family::CScomDicyclic:
            if (n % 2 == 0)  // x^3 + (3-3n)x^2 + (2n^2-10n+3)x + 10n^2 - 15n + 1
                return detail::cubic(10 * N * N - 15 * N + 1, 2 * N * N - 10 * N + 3, 3 - 3 * N);
            // x^4 + (4-4n)x^3 + (4n^2-16n+6)x^2 + (16n^2-28n+4)x + 12n^2 - 16n + 1
            return detail::quartic(12 * N * N - 16 * N + 1, 16 * N * N - 28 * N + 4,
                                   4 * N * N - 16 * N + 6, 4 - 4 * N);
    }
    throw std::logic_error("unreachable");
}

// The exact eigenvalues that accompany the factor polynomial in the closed form.
inline std::vector<std::pair<Rational, int>> family_exact_part(Family f, int n) {
    check_family_n(f, n);
    switch (f) {
        case Family::EScomDihedral:
            if (n % 2) return {{Rational(0), n - 1}, {Rational(-1), n - 2}};
            return {{Rational(1), n / 2 - 1}, {Rational(-1), 3 * n / 2 - 2}};
        case Family::EScomDicyclic:
            return {{Rational(1), n - 1}, {Rational(-1), 3 * n - 2}};
        case Family::CScomDihedral:
            if (n % 2) return {{Rational(-1), 2 * n - 3}};
            if ((n / 2) % 2 == 0) return {{Rational(-1), 2 * n - 4}, {Rational(n / 2 - 1), 1}};
            return {{Rational(-1), 2 * n - 4}};
        case Family::CScomDicyclic:
            if (n % 2 == 0) return {{Rational(-1), 4 * n - 4}, {Rational(n - 1), 1}};
            return {{Rational(-1), 4 * n - 4}};
    }
    throw std::logic_error("unreachable");
}

inline SpectrumReport closed_form_spectrum(Family f, int n, int precision = kDefaultPrecision) {
    ZPoly factor = family_factor_polynomial(f, n);
    return make_report(family_dimension(f, n), family_exact_part(f, n), {{factor, 1}}, precision,
                       Provenance::ClosedForm);
}

inline SpectrumReport quotient_spectrum(Family f, int n, int precision = kDefaultPrecision) {
    SpectrumReport r = spectrum_from_decomposition(family_decomposition(f, n), precision);
    return r;
}

}  // namespace sgs
