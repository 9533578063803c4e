#include <doctest.h>

#include <functional>
#include <random>

#include "sgs/group.hpp"
#include "sgs/families.hpp"
#include "sgs/matrix.hpp"
#include "sgs/rational_function.hpp"

using namespace sgs;

namespace {

IntMatrix complete_adjacency(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m(i, j) = 1;
    return m;
}

std::vector<BigInt> e1(int n) {
    std::vector<BigInt> v(n, BigInt(0));
    v[0] = 1;
    return v;
}

// adjugate-route main function: v^t adj(λI-M) u / det(λI-M) by cofactor
// minors, fully independent of the Cramer solves in the implementation
RationalFunction main_function_adjugate(const IntMatrix& m, const std::vector<BigInt>& u,
                                        const std::vector<BigInt>& v) {
    int n = m.rows();
    Matrix<ZPoly> lam = lambda_minus(m);
    std::function<ZPoly(const Matrix<ZPoly>&)> det = [&](const Matrix<ZPoly>& a) -> ZPoly {
        int k = a.rows();
        if (k == 0) return ZPoly::one();
        if (k == 1) return a(0, 0);
        ZPoly d;
        for (int j = 0; j < k; ++j) {
            Matrix<ZPoly> minor(k - 1, k - 1);
            for (int r = 1; r < k; ++r) {
                int cc = 0;
                for (int c = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor(r - 1, cc++) = a(r, c);
                }
            }
            ZPoly term = a(0, j) * det(minor);
            d = (j % 2 == 0) ? d + term : d - term;
        }
        return d;
    };
    ZPoly acc;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // adj(λI-M)_{i,j} = (-1)^{i+j} det of minor with row j, col i removed
            Matrix<ZPoly> minor(n - 1, n - 1);
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = lam(r, c);
                }
                ++rr;
            }
            ZPoly term = ZPoly::constant(v[i] * u[j]) * det(minor);
            acc = ((i + j) % 2 == 0) ? acc + term : acc - term;
        }
    return RationalFunction(acc, det(lam));
}

}  // namespace

TEST_CASE("canonical form of rational functions") {
    // (2x+2)/(2x^2-2) -> 1/(x-1)
    RationalFunction f(ZPoly(std::vector<BigInt>{BigInt(2), BigInt(2)}),
                       ZPoly(std::vector<BigInt>{BigInt(-2), BigInt(0), BigInt(2)}));
    CHECK(f.num() == QPoly::one());
    CHECK(f.den() == QPoly(std::vector<Rational>{Rational(-1), Rational(1)}));
    CHECK(f.den().is_monic());
    // zero numerator collapses
    CHECK(RationalFunction(ZPoly(), ZPoly::lambda()).is_zero());
    CHECK_THROWS_AS(RationalFunction(ZPoly::one(), ZPoly()), std::domain_error);
}

TEST_CASE("field identities") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto rnd = [&](int deg) {
        std::vector<BigInt> c(deg + 1);
        for (auto& x : c) x = coef(rng);
        return RationalFunction(ZPoly(std::move(c)), ZPoly::one());
    };
    for (int i = 0; i < 30; ++i) {
        RationalFunction a = rnd(3), b = rnd(2), c = rnd(2);
        CHECK((a + b) * c == a * c + b * c);
        if (!c.is_zero()) CHECK(a * c / c == a);
        CHECK(a - a == RationalFunction());
    }
}

TEST_CASE("main function: scalar resolvent") {
    IntMatrix m(1, 1);
    RationalFunction f = main_function(m, {BigInt(1)});
    CHECK(f.num() == QPoly::one());
    CHECK(f.den() == QPoly::lambda());
}

TEST_CASE("exact-arithmetic work is capped by dimension") {
    IntMatrix big(65, 65);
    std::vector<BigInt> u(65, BigInt(1));
    CHECK_THROWS_AS(main_function(big, u), std::invalid_argument);
    CHECK_THROWS_AS(schur_det(big, 1), std::invalid_argument);
    // the cap is a parameter, not a hard limit
    CHECK_NOTHROW(schur_det(big, 64, 80));
}

TEST_CASE("main function: eigenvector gives squared norm over linear factor") {
    // (1,1) is an eigenvector of [[1,2],[2,1]] with eigenvalue 3
    IntMatrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 1;
    RationalFunction f = main_function(m, {BigInt(1), BigInt(1)});
    CHECK(f == RationalFunction(ZPoly::constant(BigInt(2)),
                                ZPoly(std::vector<BigInt>{BigInt(-3), BigInt(1)})));
}

TEST_CASE("main function: corner entry of the complete-graph resolvent") {
    // Γ_{K_n}(e_1) = adj(λI-A)_{1,1} / P_{K_n} = P_{K_{n-1}} / P_{K_n}
    for (int n = 3; n <= 6; ++n) {
        RationalFunction got = main_function(complete_adjacency(n), e1(n));
        RationalFunction expect(char_poly(complete_adjacency(n - 1)),
                                char_poly(complete_adjacency(n)));
        CHECK(got == expect);
    }
}

TEST_CASE("main function: star-extended corner entry") {
    // T = λ^{n-1} P_{K_{n-1}} / P_{A_{n*(n-1)}}
    for (int n : {3, 4, 5}) {
        IntMatrix a = complete_adjacency(n);
        for (int i = 0; i < n - 1; ++i) a = star_extend(a);
        RationalFunction t = main_function(a, e1(a.rows()));
        RationalFunction expect(char_poly(complete_adjacency(n - 1)).shifted_up(n - 1),
                                char_poly(a));
        CHECK(t == expect);
    }
}

TEST_CASE("main function against the adjugate route") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 1 + iter % 4;
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = coef(rng);
        std::vector<BigInt> u(n), v(n);
        for (auto& x : u) x = coef(rng);
        for (auto& x : v) x = coef(rng);
        CHECK(main_function(m, u, v) == main_function_adjugate(m, u, v));
    }
}

TEST_CASE("recurrence step: extending by a pendant splits off (λ - T)") {
    // P_{A_{n*n}} = (λ - Γ_{A_{n*(n-1)}}(e_1)) P_{A_{n*(n-1)}}
    for (int n : {3, 5}) {
        IntMatrix prev = complete_adjacency(n);
        for (int i = 0; i < n - 1; ++i) prev = star_extend(prev);
        IntMatrix full = star_extend(prev);
        RationalFunction t = main_function(prev, e1(prev.rows()));
        RationalFunction lhs{char_poly(full)};
        RationalFunction rhs = (RationalFunction::lambda() - t) * RationalFunction(char_poly(prev));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("schur determinant identity on explicit matrices") {
    // 2x2 with 1x1 blocks
    IntMatrix m(2, 2);
    m(0, 0) = 3; m(0, 1) = -2; m(1, 0) = 5; m(1, 1) = 1;
    SchurCheck c = schur_det(m, 1);
    CHECK(c.equal);
    CHECK(c.direct == char_poly(m));

    // D_6 supercommuting adjacency, splitting off the last vertex
    IntMatrix a = complete_adjacency(3);
    for (int i = 0; i < 3; ++i) a = star_extend(a);
    SchurCheck c2 = schur_det(a, a.rows() - 1);
    CHECK(c2.equal);
    CHECK(c2.direct == char_poly(a));

    // CSCom(D_10) quotient, last 1x1 block is the K_5 part
    IntMatrix b = quotient_matrix(family_decomposition(Family::CScomDihedral, 5));
    SchurCheck c3 = schur_det(b, b.rows() - 1);
    CHECK(c3.equal);
    // (λ+1)(λ^3 - 7λ^2 + 3λ + 31)
    CHECK(c3.direct == ZPoly(std::vector<BigInt>{BigInt(31), BigInt(34), BigInt(-4), BigInt(-6),
                                                 BigInt(1)}));
}

TEST_CASE("schur determinant over random splits") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + iter % 5;
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = coef(rng);
        std::uniform_int_distribution<int> sp(1, n - 1);
        SchurCheck c = schur_det(m, sp(rng));
        CHECK(c.equal);
        CHECK(c.direct == char_poly(m));
    }
}

TEST_CASE("eigenpair main functions reduce to ||u||^2/(λ-μ)") {
    // M = μI + N with N u = 0 keeps u as an eigenvector for eigenvalue μ
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + iter % 4;
        std::vector<BigInt> u(n);
        BigInt norm2(0);
        do {
            norm2 = 0;
            for (auto& x : u) {
                x = coef(rng);
                norm2 += x * x;
            }
        } while (sign(norm2) == 0);
        BigInt mu(coef(rng));
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = mu;
        for (int r = 0; r < n; ++r) {
            std::vector<BigInt> w(n);
            for (auto& x : w) x = coef(rng);
            BigInt wu(0);
            for (int j = 0; j < n; ++j) wu += w[j] * u[j];
            // row r += w * ||u||^2 - (w·u) u  which is orthogonal to u
            for (int j = 0; j < n; ++j) m(r, j) += w[j] * norm2 - wu * u[j];
        }
        RationalFunction got = main_function(m, u);
        RationalFunction expect(ZPoly::constant(norm2),
                                ZPoly(std::vector<BigInt>{-mu, BigInt(1)}));
        CHECK(got == expect);
    }
}
