#include <doctest.h>

#include <random>

#include "hk/graph.hpp"

using namespace hk;

namespace {

UniLaurent qpoly(std::initializer_list<std::pair<long, long>> terms) {
    UniLaurent p("q");
    for (auto& [e, c] : terms) p.add_term(e, ExactRat(c));
    return p;
}

} // namespace

TEST_CASE("external activity oracle") {
    CHECK(external_activity_oracle(Graph::path(4)) == qpoly({{0, 1}})); // a tree
    CHECK(external_activity_oracle(Graph::complete(3)) == qpoly({{1, 1}, {0, 2}}));
    CHECK(external_activity_oracle(Graph(1, {{0, 0}})) == qpoly({{1, 1}})); // one loop
    CHECK_THROWS_AS(external_activity_oracle(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("deletion-contraction equals the oracle") {
    CHECK(external_activity_dc(Graph::complete(4)) == external_activity_oracle(Graph::complete(4)));
    CHECK(external_activity_dc(Graph::complete_bipartite(2, 3)) ==
          external_activity_oracle(Graph::complete_bipartite(2, 3)));
    // two vertices with a double edge: two spanning trees and one cycle
    Graph dbl(2, {{0, 1}, {0, 1}});
    UniLaurent r = external_activity_dc(dbl);
    CHECK(r == external_activity_oracle(dbl));
    CHECK(r == qpoly({{1, 1}, {0, 1}}));

    // random connected multigraphs with <= 8 edges
    std::mt19937 rng(2024);
    int done = 0;
    while (done < 120) {
        std::uniform_int_distribution<int> nv(1, 5), ne(0, 8);
        int n = nv(rng);
        std::uniform_int_distribution<int> vx(0, n - 1);
        std::vector<std::pair<int, int>> edges;
        int m = ne(rng);
        for (int i = 0; i < m; ++i) edges.emplace_back(vx(rng), vx(rng));
        Graph g(n, edges);
        if (!g.connected()) continue;
        ++done;
        CHECK(external_activity_dc(g) == external_activity_oracle(g));
    }
}

TEST_CASE("complete graph series") {
    auto rs = complete_R_upto(8);
    CHECK(rs[2] == qpoly({{0, 1}}));
    CHECK(rs[3] == external_activity_oracle(Graph::complete(3)));
    CHECK(rs[6] == external_activity_dc(Graph::complete(6)));
    // R(1) = #spanning trees = n^{n-2} (Cayley)
    for (int n = 2; n <= 8; ++n)
        CHECK(rs[(size_t)n].eval(ExactRat(1)) == ExactRat(pow_int(ExactInt(n), (unsigned long)(n - 2))));
    // Tutte positivity
    for (int n = 2; n <= 8; ++n)
        for (auto& [e, c] : rs[(size_t)n].terms()) CHECK(c > 0);
    // the series carries R_{K_n}/n!
    auto s = complete_graph_R_series(5);
    CHECK(s.coeff({3}) == rs[3].divided(ExactRat(6)));
}

TEST_CASE("connected counts") {
    CHECK(connected_count(4, 0) == 16); // trees: 4^{4-2}
    CHECK(connected_count(3, 1) == 1);  // the triangle
    CHECK(connected_count(4, 1) == 15);
    CHECK(connected_count(5, 1) == 222); // unicyclic on 5 vertices

    // brute-force oracle: all graphs on 4 labeled vertices with 4 edges
    {
        Graph k4 = Graph::complete(4);
        int count = 0;
        for (int mask = 0; mask < 64; ++mask) {
            if (__builtin_popcount(mask) != 4) continue;
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < 6; ++b)
                if (mask >> b & 1) edges.push_back(k4.edges[(size_t)b]);
            if (Graph(4, edges).connected()) ++count;
        }
        CHECK(ExactInt(count) == connected_count(4, 1));
    }

    // Cayley for n <= 12
    for (int n = 1; n <= 12; ++n)
        CHECK(connected_count(n, 0) == pow_int(ExactInt(n), (unsigned long)std::max(0, n - 2)));

    // sum over k equals the total number of connected labeled graphs (EGF)
    for (int n = 1; n <= 8; ++n) {
        long kmax = (long)n * (n - 1) / 2 - (n - 1);
        ExactInt total(0);
        for (long k = 0; k <= kmax; ++k) total += connected_count(n, k);
        CHECK(total == connected_total(n));
    }

    // two-route equality with the coefficients of R_{K_n}(1+eta)
    auto rs = complete_R_upto(8);
    for (int n = 2; n <= 8; ++n) {
        const UniLaurent& r = rs[(size_t)n];
        // expand r(1+eta) exactly
        std::map<long, ExactRat> eta;
        for (auto& [e, c] : r.terms())
            for (long k = 0; k <= e; ++k) eta[k] += c * ExactRat(big_binomial(e, k));
        for (auto& [k, c] : eta)
            CHECK(c == ExactRat(connected_count(n, k)));
    }
}

TEST_CASE("bipartite external activity") {
    CHECK(bipartite_R(1, 5) == qpoly({{0, 1}})); // K_{1,n} is a tree
    CHECK(bipartite_R(2, 2) == qpoly({{1, 1}, {0, 3}}));
    CHECK(bipartite_R(2, 3) == external_activity_oracle(Graph::complete_bipartite(2, 3)));
    CHECK(bipartite_R(3, 3) == external_activity_dc(Graph::complete_bipartite(3, 3)));
    CHECK_THROWS_AS(bipartite_R(7, 7), std::invalid_argument);
}
