#include <doctest.h>

#include "hk/betti.hpp"
#include "hk/graph.hpp"

using namespace hk;

namespace {

UniLaurent qpoly(std::initializer_list<std::pair<long, long>> terms) {
    UniLaurent p("q");
    for (auto& [e, c] : terms) p.add_term(e, ExactRat(c));
    return p;
}

std::vector<ExactInt> coeffs(std::initializer_list<long> v) {
    std::vector<ExactInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("toric quiver varieties") {
    CHECK(poincare_toric_quiver(Graph::path(4)).coeffs == coeffs({1})); // tree -> point-like core
    auto k3 = poincare_toric_quiver(Graph::complete(3));
    CHECK(k3.coeffs == coeffs({1, 0, 2})); // 1 + 2t^2
    // the complete-graph series route agrees with deletion-contraction
    for (int n = 3; n <= 6; ++n)
        CHECK(poincare_toric_complete(n).coeffs == poincare_toric_quiver(Graph::complete(n)).coeffs);
}

TEST_CASE("hilbert scheme") {
    CHECK(poincare_hilbert(1).coeffs == coeffs({1}));
    CHECK(poincare_hilbert(3).coeffs == coeffs({1, 0, 1, 0, 1}));
    // b_{2i} = #{lambda of n : n - l(lambda) = i}
    for (int n = 0; n <= 10; ++n) {
        auto p = poincare_hilbert(n);
        for (long i = 0; 2 * i <= p.degree(); ++i) {
            long want = 0;
            for (auto& lam : enum_partitions(n))
                if (n - lam.length() == i) ++want;
            CHECK(p.b(2 * i) == want);
        }
    }
}

TEST_CASE("adhm spaces") {
    CHECK(poincare_adhm(1, 1).coeffs == coeffs({1}));
    CHECK_THROWS_AS(poincare_adhm(2, 0), std::invalid_argument);
    for (int n = 0; n <= 20; ++n)
        CHECK(poincare_adhm(n, 1).coeffs == poincare_hilbert(n).coeffs);
}

TEST_CASE("grassmannians") {
    CHECK(poincare_grassmannian(2, 1).coeffs == coeffs({1, 0, 1}));
    CHECK(poincare_grassmannian(5, 0).coeffs == coeffs({1}));
    CHECK(gauss_binomial(4, 2) == qpoly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    auto p = poincare_grassmannian(10, 4);
    CHECK(p.palindromic());
    CHECK(p.even_only());
    CHECK_THROWS_AS(poincare_grassmannian(3, 4), std::invalid_argument);
}

TEST_CASE("torus") {
    CHECK(poincare_torus(0).coeffs == coeffs({1}));
    CHECK(poincare_torus(1).coeffs == coeffs({1, 2, 1}));
    auto p = poincare_torus(100);
    CHECK(p.b(100) == big_binomial(200, 100));
    CHECK(p.degree() == 200);
}

TEST_CASE("nakajima quiver varieties") {
    // A_1, v=1, w=2: T*P^1
    CHECK(poincare_nakajima(Quiver(1, {}, {1}, {2})).coeffs == coeffs({1, 0, 1}));
    // A_1 = cotangent Grassmannian for v <= 3, w <= 6
    for (int w = 1; w <= 6; ++w)
        for (int v = 1; v <= std::min(3, w); ++v)
            CHECK(poincare_nakajima(Quiver(1, {}, {v}, {w})).coeffs ==
                  poincare_grassmannian(w, v).coeffs);
    // Jordan quiver: Hilbert schemes and ADHM spaces
    for (int n = 1; n <= 8; ++n)
        CHECK(poincare_nakajima(Quiver(1, {{0, 0}}, {n}, {1})).coeffs == poincare_hilbert(n).coeffs);
    for (int n = 1; n <= 5; ++n)
        for (int m = 2; m <= 3; ++m)
            CHECK(poincare_nakajima(Quiver(1, {{0, 0}}, {n}, {m})).coeffs ==
                  poincare_adhm(n, m).coeffs);
}

TEST_CASE("kac polynomials") {
    Quiver point(1, {}, {1});
    CHECK(kac_polynomial_exact(point, {1}) == qpoly({{0, 1}}));
    CHECK(kac_polynomial_exact(point, {2}).is_zero());
    Quiver jordan(1, {{0, 0}}, {1});
    CHECK(kac_polynomial_exact(jordan, {1}) == qpoly({{1, 1}}));
    CHECK(kac_polynomial_exact(jordan, {4}) == qpoly({{1, 1}}));
    // Kronecker double edge at (1,1): P^1 worth of classes
    Quiver kron(2, {{0, 1}, {0, 1}}, {1, 1});
    CHECK(kac_polynomial_exact(kron, {1, 1}) == qpoly({{1, 1}, {0, 1}}));
    // A_2 at (1,1): exactly one class
    CHECK(kac_polynomial_exact(Quiver(2, {{0, 1}}, {1, 1}), {1, 1}) == qpoly({{0, 1}}));

    // fast route agrees with the symbolic route
    Quiver s2(1, {{0, 0}, {0, 0}}, {4});
    CHECK(kac_polynomial_fast(s2, {4}, 1) == kac_polynomial_exact(s2, {4}));
    CHECK(kac_polynomial_fast(s2, {4}, 2) == kac_polynomial_fast(s2, {4}, 1)); // thread invariance
    std::vector<std::pair<int, int>> e10;
    for (int i = 0; i < 10; ++i) e10.push_back({0, 0});
    e10.push_back({0, 1});
    Quiver big(2, e10, {3, 2});
    CHECK(kac_polynomial_fast(big, {3, 2}, 2) == kac_polynomial_exact(big, {3, 2}));

    // kac(Q, all-ones) equals the external activity polynomial
    for (auto& g : {Graph::complete(4), Graph::cycle(5), Graph::complete_bipartite(2, 3)}) {
        Quiver q(g.n, g.edges, std::vector<long>((size_t)g.n, 1));
        CHECK(kac_polynomial_exact(q, q.v) == external_activity_dc(g));
    }
}

TEST_CASE("quiver variety for indivisible v") {
    // Jordan, v=(1): a point after the shift
    CHECK(poincare_quiver_indivisible(Quiver(1, {{0, 0}}, {1})).coeffs == coeffs({1}));
    CHECK_THROWS_AS(poincare_quiver_indivisible(Quiver(1, {{0, 0}}, {2})), std::invalid_argument);
    // tennis racquet at (n,1) is the Hilbert scheme
    for (int n = 1; n <= 6; ++n) {
        Quiver tr(2, {{0, 0}, {0, 1}}, {n, 1});
        CHECK(poincare_quiver_indivisible(tr).coeffs == poincare_hilbert(n).coeffs);
    }
    // kac reversed = toric for all-ones dimension vectors
    for (auto& g : {Graph::complete(4), Graph::complete(5), Graph::cycle(6)}) {
        Quiver q(g.n, g.edges, std::vector<long>((size_t)g.n, 1));
        CHECK(poincare_quiver_indivisible(q).coeffs == poincare_toric_quiver(g).coeffs);
    }
}
