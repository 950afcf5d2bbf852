#include <doctest.h>

#include <random>

#include "hk/asym.hpp"

using namespace hk;

namespace {

UniLaurent qpoly(std::initializer_list<std::pair<long, long>> terms) {
    UniLaurent p("q");
    for (auto& [e, c] : terms) p.add_term(e, ExactRat(c));
    return p;
}

} // namespace

TEST_CASE("measures from polynomials") {
    auto mu = measure_from_poly(qpoly({{0, 1}, {1, 1}}));
    CHECK(mu.points.size() == 2);
    auto laurent = measure_from_poly(qpoly({{-1, 1}, {1, 1}}));
    CHECK(laurent.points.front().first == ExactRat(-1));
    CHECK(laurent.points.back().first == ExactRat(1));
    CHECK_THROWS_AS(measure_from_poly(qpoly({{0, -1}})), std::invalid_argument);
    auto g42 = measure_from_poly(gauss_binomial(4, 2));
    CHECK(g42.points.size() == 5); // masses 1,1,2,1,1 at 0..4
    CHECK(g42.total_mass() == 6);
}

TEST_CASE("moments and factorial moments") {
    auto mu = measure_from_poly(qpoly({{0, 1}, {1, 1}}));
    auto rep = moments(mu, 2, true);
    CHECK(rep.raw[0] == 2);
    CHECK(rep.raw[1] == 1);
    CHECK(rep.raw[2] == 1);
    CHECK(rep.factorial[0] == 2);
    CHECK(rep.factorial[1] == 1);
    CHECK(rep.factorial[2] == 0);
    REQUIRE(rep.standardized_valid);
    CHECK(std::abs(rep.standardized[1]) < 1e-12);
    CHECK(std::abs(rep.standardized[2] - 1.0) < 1e-12);

    // factorial moments of R_{K_4}: the connected counts C_{4,3..6}
    auto fm = factorial_moments(complete_R_upto(4)[4], 3);
    CHECK(fm[0] == 16);
    CHECK(fm[1] == 15);
    CHECK(fm[2] == 6);
    CHECK(fm[3] == 1);

    // two-route equality on random polynomials
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> coeff(0, 9);
    for (int t = 0; t < 30; ++t) {
        UniLaurent e("q");
        for (long i = 0; i < 8; ++i) e.add_term(i, ExactRat(coeff(rng)));
        if (e.is_zero()) continue;
        auto viaShift = factorial_moments(e, 4);
        auto viaMeasure = moments(measure_from_poly(e), 4, false).factorial;
        for (int k = 0; k <= 4; ++k) CHECK(viaShift[(size_t)k] == viaMeasure[(size_t)k]);
    }

    // translation: moments of d mu(x+a) match e^{-at} M(t) expansion, K <= 3
    {
        auto base = measure_from_poly(qpoly({{0, 1}, {1, 1}}));
        auto tr = base.translated(ExactRat(1));
        // M^{(a)}_k = sum_j C(k,j) (-a)^{k-j} M_j with a = 1
        for (int k = 0; k <= 3; ++k) {
            ExactRat want(0);
            for (int j = 0; j <= k; ++j) {
                ExactRat term = ExactRat(big_binomial(k, j)) * base.raw_moment(j);
                if ((k - j) % 2) term = -term;
                want += term;
            }
            CHECK(tr.raw_moment(k) == want);
        }
    }
}

TEST_CASE("convolution") {
    auto mu = measure_from_poly(qpoly({{0, 1}, {1, 1}}));
    auto delta = DiscreteMeasure::delta(ExactRat(0));
    auto same = convolve(delta, mu);
    CHECK(same.points == mu.points);
    auto twice = convolve(mu, mu);
    CHECK(twice.points.size() == 3);
    CHECK(twice.raw_moment(0) == 4);
    CHECK(twice.points[1].second == 2); // masses 1,2,1

    // moment multiplicativity M_{mu*nu}(t) = M_mu M_nu up to order 6
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> mass(0, 5), pt(-3, 4);
    for (int t = 0; t < 20; ++t) {
        DiscreteMeasure a, b;
        for (int i = 0; i < 4; ++i) {
            a.add_mass(ExactRat(pt(rng)), ExactRat(mass(rng)));
            b.add_mass(ExactRat(pt(rng)), ExactRat(mass(rng)));
        }
        auto c = convolve(a, b);
        for (int k = 0; k <= 6; ++k) {
            ExactRat want(0);
            for (int j = 0; j <= k; ++j)
                want += ExactRat(big_binomial(k, j)) * a.raw_moment(j) * b.raw_moment(k - j);
            CHECK(c.raw_moment(k) == want);
        }
    }

    // Grassmannian single-factor structure: [n+1 1]_q is uniform on 0..n
    auto uni5 = measure_from_poly(gauss_binomial(6, 1));
    CHECK(uni5.points.size() == 6);
    for (auto& [x, m] : uni5.points) CHECK(m == 1);
    auto prodmeasure = measure_from_poly(gauss_binomial(6, 1) * gauss_binomial(4, 1));
    auto convmeasure = convolve(uni5, measure_from_poly(gauss_binomial(4, 1)));
    CHECK(prodmeasure.points == convmeasure.points);
}

TEST_CASE("b-spline moments") {
    auto b1 = bspline_moments(1, 6);
    CHECK(b1[0] == 1);
    CHECK(b1[1] == 0);
    CHECK(b1[2] == ExactRat(1, 12));
    CHECK(b1[3] == 0);
    CHECK(b1[4] == ExactRat(1, 80));
    auto b2 = bspline_moments(2, 4);
    CHECK(b2[2] == ExactRat(1, 6)); // additivity of variance
    auto b3 = bspline_moments(3, 2);
    CHECK(b3[1] == 0);
    CHECK(b3[2] == ExactRat(1, 4));
}

TEST_CASE("grassmann limit check") {
    auto r1 = grassmann_limit_check(1, 100, 2);
    CHECK(r1.rel_errors[2] <= 0.03);
    CHECK(r1.rel_errors[2] > 0.015); // exactly 2/n
    auto r3 = grassmann_limit_check(3, 120, 4);
    for (int k = 2; k <= 4; ++k) CHECK(r3.standardized_errors[(size_t)k] <= 0.05);
    CHECK(std::abs(r3.mass_ratio - 1.0) <= 0.06);
}

TEST_CASE("partition length cdf") {
    CHECK(partition_length_cdf(4, 1) == 1);
    CHECK(partition_length_cdf(4, 4) == 5);
    CHECK(partition_length_cdf(8, 8) == 22);
    for (int n : {10, 30}) CHECK(partition_length_cdf(n, n) == partition_count(n));
    auto phi = partition_length_cdf_all(12);
    for (size_t i = 1; i < phi.size(); ++i) CHECK(phi[i] >= phi[i - 1]);
}

TEST_CASE("wright constants and the trivalent-graph sum") {
    auto c = wright_constants(5);
    CHECK(c[0] == ExactRat(5, 24));
    CHECK(c[1] == ExactRat(5, 16));
    CHECK(c[2] == ExactRat(1105, 1152));
    CHECK(c[3] == ExactRat(565, 128));
    CHECK(c[4] == ExactRat(82825, 3072));
    // k = 1: connected trivalent multigraphs on 2 vertices: theta (|Aut| = 12)
    // and dumbbell (|Aut| = 8)
    CHECK(c[0] == ExactRat(1, 12) + ExactRat(1, 8));
}

TEST_CASE("airy moments") {
    auto m = airy_moments(4);
    CHECK(m[0].rational == 1);
    CHECK_FALSE(m[0].with_sqrt_2pi);
    CHECK(m[1].with_sqrt_2pi);
    CHECK(m[1].rational == ExactRat(1, 4));
    CHECK(std::abs(m[1].value() - 0.626657068) < 1e-8);
    CHECK_FALSE(m[2].with_sqrt_2pi);
    CHECK(m[2].rational == ExactRat(5, 12));
}

TEST_CASE("saddle identities at order 25") {
    auto rep = tree_saddle_identities(25, 3);
    CHECK(rep.tree_eqn_ok);
    CHECK(rep.c0_ok);
    CHECK(rep.c1_ok);
    REQUIRE(rep.ek_at_1.size() == 2);
    CHECK(rep.ek_polynomial[0]);
    CHECK(rep.ek_at_1[0] == ExactRat(5, 24)); // E_1(1) = c_1
    CHECK(rep.ek_at_1[1] == rep.wright[1]);
    CHECK(rep.all_ok());
}

TEST_CASE("bipartite alpha/beta") {
    const long table[5][6] = {{1, 0, 0, 0, 0, 0},
                              {1, 1, 1, 1, 1, 1},
                              {3, 12, 39, 120, 363, 1092},
                              {16, 156, 1120, 7260, 45136, 275436},
                              {125, 2360, 30925, 353500, 3795225, 39474960}};
    for (int n = 1; n <= 5; ++n) {
        auto tab = bipartite_alpha_beta(n, 5);
        CHECK(tab.agree);
        for (int k = 0; k <= 5; ++k) CHECK(tab.beta_sum[(size_t)k] == table[n - 1][k]);
    }
    auto t3 = bipartite_alpha_beta(3, 5);
    for (int k = 0; k <= 5; ++k)
        CHECK(t3.alpha_ratio_n3[(size_t)k] ==
              ExactRat(pow_int(ExactInt(3), (unsigned long)(k + 1)) - 1) /
                  ExactRat((long)(k + 2) * (k + 1)));
}

TEST_CASE("unimodality and weak hard lefschetz") {
    auto g = poincare_grassmannian(10, 4);
    auto rep = unimodality_check(g);
    CHECK(rep.even_unimodal);
    CHECK(rep.odd_unimodal);
    auto whl = weak_hl_check(g, g.core_dim);
    CHECK(whl.all_hold());

    auto h = poincare_hilbert(50);
    CHECK(unimodality_check(h).even_unimodal);
    CHECK(weak_hl_check(h, h.core_dim).all_hold());
}
