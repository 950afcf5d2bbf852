#include <doctest.h>

#include "hk/fq.hpp"

using namespace hk;

TEST_CASE("brute force matches hand counts") {
    CHECK(count_fiber_bruteforce({Quiver(1, {}, {1}, {2}), 2, {1}}) == 6);
    CHECK(count_fiber_bruteforce({Quiver(1, {}, {1}, {1}), 3, {1}}) == 2); // ij = 1 over F_3
    CHECK(count_fiber_bruteforce({Quiver(1, {}, {1}, {1}), 2, {0}}) == 3); // ij = 0
}

TEST_CASE("fourier equals brute force on the corpus") {
    std::vector<FqConfig> corpus;
    for (long q : {2L, 3L, 5L}) {
        for (long w = 1; w <= 3; ++w) corpus.push_back({Quiver(1, {}, {1}, {w}), q, {1}});
        corpus.push_back({Quiver(1, {{0, 0}}, {1}, {1}), q, {1}});
    }
    for (long q : {2L, 3L}) corpus.push_back({Quiver(2, {{0, 1}}, {1, 1}, {1, 0}), q, {1, 1}});
    corpus.push_back({Quiver(1, {}, {1}, {1}), 2, {0}});
    CHECK(corpus.size() >= 12);
    for (auto& cfg : corpus)
        CHECK(count_fiber_bruteforce(cfg) == count_fiber_fourier(cfg));
}

TEST_CASE("kernel sizes are q powers") {
    for (long q : {2L, 3L}) {
        FqConfig cfg{Quiver(1, {}, {1}, {2}), q, {1}};
        for (auto& a : a_rho_values(cfg)) {
            ExactInt t = a;
            while (t % q == 0) t /= q;
            CHECK(t == 1);
        }
    }
}

TEST_CASE("fiber counts interpolate to a polynomial in q") {
    // A_1 v=1 w=2: fiber = q^3 - q (checked at three primes)
    for (long q : {2L, 3L, 5L}) {
        FqConfig cfg{Quiver(1, {}, {1}, {2}), q, {1}};
        CHECK(count_fiber_bruteforce(cfg) == ExactInt(q * q * q - q));
    }
}

TEST_CASE("katz contract") {
    auto rep = check_katz(Quiver(1, {}, {1}, {2}), {1}, {2, 3, 5}, poincare_grassmannian(2, 1));
    CHECK(rep.freeness_ok);
    CHECK(rep.match); // quotient counts fit q^2 + q = E(q)

    auto point = check_katz(Quiver(1, {}, {1}, {1}), {1}, {2, 3, 5}, poincare_grassmannian(1, 1));
    CHECK(point.freeness_ok);
    CHECK(point.match);
    CHECK(point.fitted == UniLaurent("q", ExactRat(1), 0));

    auto hilb = check_katz(Quiver(1, {{0, 0}}, {1}, {1}), {1}, {2, 3, 5}, poincare_hilbert(1));
    CHECK(hilb.freeness_ok);
    CHECK(hilb.match); // q^2
}

TEST_CASE("config validation") {
    FqConfig bad{Quiver(1, {}, {1}, {1}), 4, {1}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    FqConfig toobig{Quiver(1, {{0, 0}}, {3}, {3}), 5, {1}};
    CHECK_THROWS_AS(toobig.validate(), std::invalid_argument);
}
