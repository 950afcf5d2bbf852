#include <doctest.h>

#include "hk/higgs.hpp"

using namespace hk;

TEST_CASE("H_1 is the pure torus factor") {
    for (int g = 0; g <= 3; ++g) {
        BiPoly h = higgs_H(1, g, 2);
        // (z - w)^{2g}
        CHECK(h.monomial_count() == (size_t)(2 * g) + 1);
        for (int i = 0; i <= 2 * g; ++i) {
            ExactRat c = ExactRat(big_binomial(2 * g, i));
            if (i % 2) c = -c;
            CHECK(h.coeff(2 * g - i, i) == c);
        }
    }
}

TEST_CASE("exact route equals the interpolation route") {
    for (int n = 1; n <= 3; ++n)
        for (int g = 1; g <= 2; ++g) {
            long cap = 2 * (n * n * (2 * g - 2) + 2) + 8;
            CHECK(higgs_H_exact(n, g, cap) == higgs_H_fast(n, g, cap, 2));
        }
}

TEST_CASE("z = 0 column specializes to the Kac polynomial of the loop quiver") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 1; n <= 4; ++n) {
            BiPoly h = higgs_H(n, g, 2);
            UniLaurent a("q");
            for (auto& [e, c] : h.terms()) {
                if (e.first != 0) continue;
                REQUIRE(e.second % 2 == 0);
                a.add_term(e.second / 2, c);
            }
            std::vector<std::pair<int, int>> loops((size_t)g, {0, 0});
            CHECK(a == kac_polynomial_exact(Quiver(1, loops, {n}), {n}));
        }
}

TEST_CASE("symmetry in (z, w)") {
    for (int n = 1; n <= 5; ++n) {
        BiPoly h = higgs_H(n, 2, 2);
        CHECK(h.transposed() == h);
    }
}

TEST_CASE("reduced polynomial and Poincare series") {
    // n = 1: the reduced space is a point
    for (int g = 0; g <= 2; ++g) {
        auto p = poincare_higgs(1, g, 2);
        CHECK(p.coeffs == std::vector<ExactInt>{ExactInt(1)});
    }
    // full H restores the torus: t^d H(1,-1/t) = (1+t)^{2g}
    for (int g = 1; g <= 2; ++g) {
        BiPoly h = higgs_H(1, g, 2);
        auto p = poincare_higgs_from(h, 1, g);
        CHECK(p.coeffs == poincare_torus(g).coeffs);
    }
    // n=2, g=2 low-degree data
    auto p22 = poincare_higgs(2, 2, 2);
    CHECK(p22.b(0) == 1);
    CHECK(p22.b(1) == 0);
    CHECK(p22.b(2) == 1);
    // low degrees stable when the truncation cap is doubled by hand
    long cap = 2 * (4 * 2 + 2) + 8;
    BiPoly h1 = higgs_H_fast(2, 2, cap, 2);
    BiPoly h2 = higgs_H_fast(2, 2, 2 * cap, 2);
    CHECK(h1 == h2);
}

TEST_CASE("cap-too-small is detected") {
    CHECK_THROWS_AS(higgs_H_fast(3, 2, 12, 1), std::overflow_error);
}
