#include <doctest.h>

#include <cmath>
#include <random>

#include "sgs/sturm.hpp"

using namespace sgs;

namespace {

ZPoly linear(long r) { return ZPoly(std::vector<BigInt>{BigInt(-r), BigInt(1)}); }

double mid(const RootInterval& iv) { return to_double(iv.midpoint()); }

}  // namespace

TEST_CASE("sturm chain counts real roots") {
    // x^2 - 2: two real roots
    ZPoly p(std::vector<BigInt>{BigInt(-2), BigInt(0), BigInt(1)});
    CHECK(count_real_roots(p) == 2);
    // x^2 + 1: none
    CHECK(count_real_roots(ZPoly(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)})) == 0);
    // x^3 - x
    CHECK(count_real_roots(ZPoly(std::vector<BigInt>{BigInt(0), BigInt(-1), BigInt(0), BigInt(1)})) ==
          3);
}

TEST_CASE("isolation of sqrt(2) to eight digits") {
    ZPoly p(std::vector<BigInt>{BigInt(-2), BigInt(0), BigInt(1)});
    auto roots = isolate_squarefree_roots(p, 8);
    REQUIRE(roots.size() == 2);
    CHECK(std::fabs(mid(roots[0]) + 1.41421356) < 1e-7);
    CHECK(std::fabs(mid(roots[1]) - 1.41421356) < 1e-7);
    CHECK(roots[0].approx.substr(0, 11) == "-1.41421356");
}

TEST_CASE("isolation of a sample cubic") {
    // x^3 - 3x^2 - 11x + 15, roots ~ -2.81114, 1.14307, 4.66807
    ZPoly p(std::vector<BigInt>{BigInt(15), BigInt(-11), BigInt(-3), BigInt(1)});
    auto roots = isolate_squarefree_roots(p, 8);
    REQUIRE(roots.size() == 3);
    CHECK(std::fabs(mid(roots[0]) - (-2.81114)) < 1e-4);
    CHECK(std::fabs(mid(roots[1]) - 1.14307) < 1e-4);
    CHECK(std::fabs(mid(roots[2]) - 4.66807) < 1e-4);
}

TEST_CASE("repeated roots come back with multiplicity") {
    // (x+1)^2
    ZPoly p = linear(-1) * linear(-1);
    auto roots = isolate_real_roots(p, 6);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].second == 2);
    CHECK(roots[0].first.exact());
    CHECK(roots[0].first.lo == Rational(-1));
}

TEST_CASE("squarefree decomposition") {
    ZPoly q(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)});  // x^2 + 1
    ZPoly p = linear(1) * q * q * q;
    auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::make_pair(linear(1), 1));
    CHECK(parts[1] == std::make_pair(q, 3));
}

TEST_CASE("integer roots by divisor scan") {
    // (x-3)^2 (x+5) x^2
    ZPoly p = linear(3) * linear(3) * linear(-5) * ZPoly::monomial(2);
    auto roots = integer_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == std::make_pair(BigInt(-5), 1));
    CHECK(roots[1] == std::make_pair(BigInt(0), 2));
    CHECK(roots[2] == std::make_pair(BigInt(3), 2));
    // a tight caller-supplied bound is honored
    auto bounded = integer_roots(p, BigInt(6));
    CHECK(bounded == roots);
}

TEST_CASE("integer roots when the divisor scan is infeasible") {
    // (x-2)(x^2 + 10^40): Cauchy bound is astronomic, isolation takes over
    ZPoly q(std::vector<BigInt>{big_pow(BigInt(10), 40), BigInt(0), BigInt(1)});
    ZPoly p = linear(2) * q;
    auto roots = integer_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == std::make_pair(BigInt(2), 1));
}

TEST_CASE("rational midpoint hits are handled during isolation") {
    // roots -1, 0, 1 with 0 exactly at the first bisection midpoint
    ZPoly p = linear(-1) * linear(0) * linear(1);
    auto roots = isolate_squarefree_roots(p, 10);
    REQUIRE(roots.size() == 3);
    CHECK(std::fabs(mid(roots[0]) + 1.0) < 1e-9);
    CHECK(roots[1].exact());
    CHECK(roots[1].lo == Rational(0));
    CHECK(std::fabs(mid(roots[2]) - 1.0) < 1e-9);
}

TEST_CASE("randomized products of distinct linear factors") {
    std::mt19937 rng(808);
    for (int iter = 0; iter < 30; ++iter) {
        std::uniform_int_distribution<int> count(1, 5), root(-8, 8);
        std::vector<long> rs;
        int k = count(rng);
        while (static_cast<int>(rs.size()) < k) {
            long r = root(rng);
            if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
        }
        std::sort(rs.begin(), rs.end());
        ZPoly p = ZPoly::one();
        for (long r : rs) p = p * linear(r);
        auto isolated = isolate_squarefree_roots(p, 10);
        REQUIRE(isolated.size() == rs.size());
        for (size_t i = 0; i < rs.size(); ++i)
            CHECK(std::fabs(mid(isolated[i]) - static_cast<double>(rs[i])) < 1e-9);
        auto zroots = integer_roots(p);
        REQUIRE(zroots.size() == rs.size());
        for (size_t i = 0; i < rs.size(); ++i) CHECK(zroots[i].first == rs[i]);
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(sturm_chain(ZPoly()), std::invalid_argument);
    CHECK_THROWS_AS(isolate_real_roots(ZPoly(), 4), std::invalid_argument);
    // non-monic input rejected by the integer-root scan
    CHECK_THROWS_AS(integer_roots(BigInt(2) * ZPoly::lambda()), std::invalid_argument);
}
