#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "sgs/families.hpp"
#include "sgs/jacobi.hpp"

using namespace sgs;

TEST_CASE("complete graph eigenvalues") {
    EigenResult r = graph_eigenvalues(Graph::complete(4));
    REQUIRE(r.eigenvalues.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(r.eigenvalues[i] + 1.0) < 1e-10);
    CHECK(std::fabs(r.eigenvalues[3] - 3.0) < 1e-10);
    CHECK(r.off_diagonal_residual < 1e-12);
}

TEST_CASE("one-by-one matrix") {
    EigenResult r = symmetric_eigenvalues({2.5}, 1);
    REQUIRE(r.eigenvalues.size() == 1);
    CHECK(r.eigenvalues[0] == 2.5);
}

TEST_CASE("asymmetric input is rejected") {
    CHECK_THROWS_AS(symmetric_eigenvalues({0.0, 1.0, 0.5, 0.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_eigenvalues({0.0, 1.0, 1.0}, 2), std::invalid_argument);
}

TEST_CASE("numeric spectrum of the D_6 supercommuting graph matches the exact one") {
    Graph g = family_graph(Family::EScomDihedral, 3);
    EigenResult numeric = graph_eigenvalues(g);
    SpectrumReport exact = closed_form_spectrum(Family::EScomDihedral, 3);
    SpectrumComparison cmp = compare_spectra(exact, numeric, 1e-8);
    CHECK(cmp.match);
    CHECK(cmp.max_gap < 1e-8);
    CHECK(cmp.pairing.size() == 6);
}

TEST_CASE("trace and second moment") {
    for (Family f : {Family::EScomDihedral, Family::CScomDicyclic}) {
        int n = f == Family::EScomDihedral ? 7 : 4;
        Graph g = family_graph(f, n);
        EigenResult r = graph_eigenvalues(g);
        double trace = std::accumulate(r.eigenvalues.begin(), r.eigenvalues.end(), 0.0);
        CHECK(std::fabs(trace) < 1e-9 * g.vertex_count());
        double second = 0;
        for (double v : r.eigenvalues) second += v * v;
        CHECK(std::fabs(second - 2.0 * g.edge_count()) < 1e-6 * g.vertex_count());
    }
}

TEST_CASE("eigenvalues are invariant under vertex relabeling") {
    Graph g = family_graph(Family::CScomDihedral, 5);
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(17);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j)) h.add_edge(perm[i], perm[j]);
    EigenResult a = graph_eigenvalues(g), b = graph_eigenvalues(h);
    for (int i = 0; i < n; ++i) CHECK(std::fabs(a.eigenvalues[i] - b.eigenvalues[i]) < 1e-9);
}

TEST_CASE("a perturbed report fails the comparison") {
    Graph k3 = Graph::complete(3);
    EigenResult numeric = graph_eigenvalues(k3);
    SpectrumReport good = spectrum_from_decomposition(hjoin_decompose(k3, twin_partition(k3)));
    CHECK(compare_spectra(good, numeric, 1e-10).match);

    SpectrumReport bad = good;
    bad.exact.back().value += Rational(1, 10);
    SpectrumComparison cmp = compare_spectra(bad, numeric, 1e-8);
    CHECK(!cmp.match);
    CHECK(cmp.max_gap == doctest::Approx(0.1).epsilon(1e-6));
}

TEST_CASE("dimension mismatch is an error") {
    SpectrumReport r = closed_form_spectrum(Family::EScomDihedral, 3);
    EigenResult small = graph_eigenvalues(Graph::complete(3));
    CHECK_THROWS_AS(compare_spectra(r, small, 1e-8), std::invalid_argument);
}
