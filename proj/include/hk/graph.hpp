#pragma once

#include <utility>
#include <vector>

#include "hk/laurent.hpp"
#include "hk/series.hpp"

namespace hk {

// Multigraph on vertices 0..n-1; loops (i,i) and repeated edges allowed.
// The edge list is kept sorted with i <= j per edge for determinism.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> e);

    size_t edge_count() const { return edges.size(); }
    bool connected() const;
    // First Betti number #E - #V + k(G).
    long betti1() const;

    static Graph complete(int n);
    static Graph complete_bipartite(int m, int n);
    static Graph path(int n);
    static Graph cycle(int n);
};

// R_G(q) = sum over spanning connected subgraphs of (q-1)^{b_1}, by direct
// enumeration of edge subsets. Requires G connected and |E| <= 20.
UniLaurent external_activity_oracle(const Graph& g);

// Same polynomial by deletion-contraction with memoization on a canonical
// form of the multigraph. Requires G connected.
UniLaurent external_activity_dc(const Graph& g);

// External activity polynomial of the complete bipartite graph K_{m,n}.
UniLaurent bipartite_R(int m, int n);

// R_{K_n}(q) for n >= 1 through the exponential generating function
//   sum R_{K_n}(q) T^n/n! = (q-1) log sum q^{C(n,2)} (T/(q-1))^n / n!.
// Intermediates carry explicit powers of (q-1); the final division is exact
// and asserted, which is the polynomiality check of the formula.
std::vector<UniLaurent> complete_R_upto(int N);

// The series itself: coefficient of T^n is R_{K_n}(q)/n!.
TruncSeries<UniLaurent> complete_graph_R_series(int N);

// Number of connected labeled graphs on n vertices with n+k-1 edges.
ExactInt connected_count(int n, long k);

// Band of connected counts: row n holds C_{n,n-1+i} for i = 0..band(n).
// Rows below n_max keep enough entries to feed the recurrence for n_max.
std::vector<std::vector<ExactInt>> connected_count_band(int n_max, int K);

// Total number of connected labeled graphs on n vertices (EGF route).
ExactInt connected_total(int n);

} // namespace hk
