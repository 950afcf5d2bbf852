#include "hk/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace hk {

Graph::Graph(int n_, std::vector<std::pair<int, int>> e) : n(n_), edges(std::move(e)) {
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("Graph: vertex index out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

bool Graph::connected() const {
    if (n <= 1) return true;
    UnionFind uf(n);
    for (auto& [a, b] : edges) uf.unite(a, b);
    int root = uf.find(0);
    for (int v = 1; v < n; ++v)
        if (uf.find(v) != root) return false;
    return true;
}

long Graph::betti1() const {
    UnionFind uf(n);
    for (auto& [a, b] : edges) uf.unite(a, b);
    int comps = 0;
    for (int v = 0; v < n; ++v)
        if (uf.find(v) == v) ++comps;
    return (long)edges.size() - n + comps;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int m, int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, std::move(e));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n > 1) e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

UniLaurent external_activity_oracle(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("external_activity_oracle: graph not connected");
    if (g.edge_count() > 20) throw std::invalid_argument("external_activity_oracle: more than 20 edges");
    size_t m = g.edge_count();
    // Tally subsets by b_1; expand (q-1)^b once per value.
    std::vector<ExactInt> count;
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        UnionFind uf(g.n);
        int used = 0;
        for (size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                uf.unite(g.edges[i].first, g.edges[i].second);
                ++used;
            }
        int root = uf.find(0);
        bool conn = true;
        for (int v = 1; v < g.n; ++v)
            if (uf.find(v) != root) { conn = false; break; }
        if (!conn) continue;
        size_t b1 = (size_t)(used - g.n + 1);
        if (count.size() <= b1) count.resize(b1 + 1);
        count[b1] += 1;
    }
    UniLaurent qm1("q");
    qm1.add_term(1, ExactRat(1));
    qm1.add_term(0, ExactRat(-1));
    UniLaurent acc("q"), pw("q", ExactRat(1), 0);
    for (size_t b = 0; b < count.size(); ++b) {
        if (count[b] != 0) acc += pw.scaled(ExactRat(count[b]));
        pw = pw * qm1;
    }
    return acc;
}

// --- deletion-contraction -------------------------------------------------

namespace {

// Multigraph as vertex count + multiplicity map on sorted vertex pairs.
struct MG {
    int n;
    std::map<std::pair<int, int>, int> em;
};

// Key for memoization: a relabeling-invariant-as-possible byte code. Keys are
// only ever compared for equality, so an imperfect canonical form costs cache
// hits, never correctness.
std::string code_of(const MG& g, const std::vector<int>& label) {
    std::vector<std::tuple<int, int, int>> rel;
    rel.reserve(g.em.size());
    for (auto& [e, m] : g.em) {
        int a = label[(size_t)e.first], b = label[(size_t)e.second];
        if (a > b) std::swap(a, b);
        rel.emplace_back(a, b, m);
    }
    std::sort(rel.begin(), rel.end());
    std::string s;
    s.reserve(rel.size() * 3 + 1);
    s.push_back((char)g.n);
    for (auto& [a, b, m] : rel) {
        s.push_back((char)a);
        s.push_back((char)b);
        s.push_back((char)std::min(m, 127));
        if (m > 127) s += std::to_string(m);
    }
    return s;
}

// Iterated degree refinement; returns a color per vertex.
std::vector<int> refine_colors(const MG& g) {
    std::vector<long> deg((size_t)g.n, 0), loops((size_t)g.n, 0);
    for (auto& [e, m] : g.em) {
        if (e.first == e.second) loops[(size_t)e.first] += m;
        else {
            deg[(size_t)e.first] += m;
            deg[(size_t)e.second] += m;
        }
    }
    // Color ids are ranks of the sorted signatures, so they are invariant
    // under relabeling; that keeps memo keys stable across isomorphic states.
    std::vector<int> color((size_t)g.n);
    {
        std::map<std::pair<long, long>, int> ids;
        for (int v = 0; v < g.n; ++v) ids.emplace(std::make_pair(deg[(size_t)v], loops[(size_t)v]), 0);
        int rank = 0;
        for (auto& [k, id] : ids) id = rank++;
        for (int v = 0; v < g.n; ++v)
            color[(size_t)v] = ids[std::make_pair(deg[(size_t)v], loops[(size_t)v])];
    }
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::vector<std::pair<int, int>>> sig((size_t)g.n);
        for (auto& [e, m] : g.em) {
            if (e.first == e.second) continue;
            sig[(size_t)e.first].emplace_back(color[(size_t)e.second], m);
            sig[(size_t)e.second].emplace_back(color[(size_t)e.first], m);
        }
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> ids;
        for (int v = 0; v < g.n; ++v) {
            auto& s = sig[(size_t)v];
            std::sort(s.begin(), s.end());
            ids.emplace(std::make_pair(color[(size_t)v], s), 0);
        }
        int rank = 0;
        for (auto& [k, id] : ids) id = rank++;
        std::vector<int> next((size_t)g.n);
        for (int v = 0; v < g.n; ++v)
            next[(size_t)v] = ids[std::make_pair(color[(size_t)v], sig[(size_t)v])];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::string canon_key(const MG& g) {
    std::vector<int> color = refine_colors(g);
    // Vertices grouped by color, colors ordered by their class signature via
    // sorting vertex ids by (color, id); permutations allowed within classes.
    std::vector<std::vector<int>> cells;
    {
        std::map<int, std::vector<int>> by;
        for (int v = 0; v < g.n; ++v) by[color[(size_t)v]].push_back(v);
        for (auto& [c, vs] : by) cells.push_back(vs);
    }
    double perms = 1;
    for (auto& c : cells) {
        for (size_t i = 2; i <= c.size(); ++i) perms *= (double)i;
        if (perms > 40320 * 2) break;
    }
    if (perms <= 40320 * 2) {
        // Exhaust labelings consistent with the cells, keep the minimal code.
        std::vector<int> label((size_t)g.n);
        std::string best;
        std::vector<std::vector<int>> perm = cells;
        int base = 0;
        std::vector<int> bases;
        for (auto& c : cells) {
            bases.push_back(base);
            base += (int)c.size();
        }
        auto rec = [&](auto&& self, size_t ci) -> void {
            if (ci == cells.size()) {
                std::string s = code_of(g, label);
                if (best.empty() || s < best) best = std::move(s);
                return;
            }
            auto& c = perm[ci];
            std::sort(c.begin(), c.end());
            do {
                for (size_t i = 0; i < c.size(); ++i) label[(size_t)c[i]] = bases[ci] + (int)i;
                self(self, ci + 1);
            } while (std::next_permutation(c.begin(), c.end()));
        };
        rec(rec, 0);
        return best;
    }
    // Too symmetric to exhaust: fall back to a deterministic labeling by
    // (color, vertex id). Sound for memoization, weaker at deduplication.
    std::vector<int> order((size_t)g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[(size_t)a] != color[(size_t)b]) return color[(size_t)a] < color[(size_t)b];
        return a < b;
    });
    std::vector<int> label((size_t)g.n);
    for (int i = 0; i < g.n; ++i) label[(size_t)order[(size_t)i]] = i;
    return code_of(g, label);
}

// Merge b into a; one copy of (a,b) is consumed, parallel copies become loops.
MG contract(const MG& g, int a, int b) {
    MG out;
    out.n = g.n - 1;
    auto relab = [&](int v) {
        if (v == b) v = a;
        if (v > b) --v;
        return v;
    };
    for (auto& [e, m] : g.em) {
        int x = relab(e.first), y = relab(e.second);
        if (x > y) std::swap(x, y);
        int mult = m;
        if ((e.first == a && e.second == b) || (e.first == b && e.second == a)) {
            mult = m - 1; // the contracted copy disappears
            if (mult == 0) continue;
        }
        out.em[{x, y}] += mult;
    }
    return out;
}

// Bridges of the simple support graph (loops ignored, multiplicity >= 2 never
// a bridge).
std::vector<std::pair<int, int>> find_bridges(const MG& g) {
    std::vector<std::vector<std::pair<int, int>>> adj((size_t)g.n); // (to, mult)
    for (auto& [e, m] : g.em)
        if (e.first != e.second) {
            adj[(size_t)e.first].emplace_back(e.second, m);
            adj[(size_t)e.second].emplace_back(e.first, m);
        }
    std::vector<int> disc((size_t)g.n, -1), low((size_t)g.n, 0);
    std::vector<std::pair<int, int>> bridges;
    int timer = 0;
    auto dfs = [&](auto&& self, int v, int parent, bool parent_multi) -> void {
        disc[(size_t)v] = low[(size_t)v] = timer++;
        bool skipped_parent = false;
        for (auto& [to, m] : adj[(size_t)v]) {
            if (to == parent && !parent_multi && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc[(size_t)to] >= 0) {
                low[(size_t)v] = std::min(low[(size_t)v], disc[(size_t)to]);
            } else {
                self(self, to, v, m > 1);
                low[(size_t)v] = std::min(low[(size_t)v], low[(size_t)to]);
                if (low[(size_t)to] > disc[(size_t)v] && m == 1)
                    bridges.emplace_back(std::min(v, to), std::max(v, to));
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[(size_t)v] < 0) dfs(dfs, v, -1, false);
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

struct DCContext {
    std::unordered_map<std::string, UniLaurent> memo;
};

UniLaurent dc_eval(DCContext& ctx, MG g) {
    // Strip loops: each contributes a factor q.
    long loops = 0;
    for (auto it = g.em.begin(); it != g.em.end();) {
        if (it->first.first == it->first.second) {
            loops += it->second;
            it = g.em.erase(it);
        } else ++it;
    }
    // Contract bridges (factor 1 each) until none remain.
    for (;;) {
        auto bridges = find_bridges(g);
        if (bridges.empty()) break;
        auto [a, b] = bridges.front();
        g = contract(g, a, b);
        for (auto it = g.em.begin(); it != g.em.end();) {
            if (it->first.first == it->first.second) {
                loops += it->second;
                it = g.em.erase(it);
            } else ++it;
        }
    }
    UniLaurent qpow = UniLaurent::monomial("q", ExactRat(1), loops);
    if (g.em.empty()) return qpow;

    std::string key = canon_key(g);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return qpow * it->second;

    // Lexicographically smallest non-loop edge; none is a bridge here.
    auto e = g.em.begin()->first;
    MG del = g;
    if (--del.em[e] == 0) del.em.erase(e);
    MG con = contract(g, e.first, e.second);
    UniLaurent r = dc_eval(ctx, std::move(del)) + dc_eval(ctx, std::move(con));
    ctx.memo.emplace(std::move(key), r);
    return qpow * r;
}

} // namespace

UniLaurent external_activity_dc(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("external_activity_dc: graph not connected");
    MG mg;
    mg.n = g.n;
    for (auto& e : g.edges) mg.em[e]++;
    DCContext ctx;
    return dc_eval(ctx, std::move(mg));
}

UniLaurent bipartite_R(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("bipartite_R: m,n >= 1 required");
    if ((long)m * n > 40) throw std::invalid_argument("bipartite_R: m*n exceeds the feasible cap 40");
    Graph g = Graph::complete_bipartite(m, n);
    if ((long)g.edge_count() <= 16) return external_activity_oracle(g);
    return external_activity_dc(g);
}

// --- complete graphs via the generating function ---------------------------

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

// Integer-coefficient work series: Ltilde_n = R_{K_n}(q) (q-1)^{n-1} obeys
//   Ltilde_n = q^{C(n,2)} - sum_{k<n} C(n-1,k-1) Ltilde_k q^{C(n-k,2)}.
std::vector<std::vector<ExactInt>> ltilde_upto(int N) {
    std::vector<std::vector<ExactInt>> L((size_t)N + 1);
    for (int n = 1; n <= N; ++n) {
        std::vector<ExactInt> acc((size_t)choose2(n) + 1);
        acc[(size_t)choose2(n)] = 1;
        for (int k = 1; k < n; ++k) {
            ExactInt c = big_binomial(n - 1, k - 1);
            long shift = choose2(n - k);
            for (size_t j = 0; j < L[(size_t)k].size(); ++j)
                if (L[(size_t)k][j] != 0) acc[(size_t)shift + j] -= c * L[(size_t)k][j];
        }
        L[(size_t)n] = std::move(acc);
    }
    return L;
}

// Exact division of an integer polynomial by (q-1)^e; remainder must vanish.
std::vector<ExactInt> divide_qm1(std::vector<ExactInt> a, int e) {
    for (int pass = 0; pass < e; ++pass) {
        // Synthetic division by (q-1): quotient via running sum, remainder is
        // the value at q=1.
        ExactInt carry(0);
        for (size_t i = a.size(); i-- > 0;) {
            carry += a[i];
            a[i] = carry;
        }
        check(carry == 0, "complete_R: division by (q-1) left a remainder");
        a.erase(a.begin());
    }
    return a;
}

} // namespace

std::vector<UniLaurent> complete_R_upto(int N) {
    if (N < 1) throw std::invalid_argument("complete_R_upto: N >= 1 required");
    auto L = ltilde_upto(N);
    std::vector<UniLaurent> out((size_t)N + 1);
    for (int n = 1; n <= N; ++n) {
        auto r = divide_qm1(std::move(L[(size_t)n]), n - 1);
        UniLaurent p("q");
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) p.add_term((long)j, ExactRat(r[j]));
        out[(size_t)n] = std::move(p);
    }
    return out;
}

TruncSeries<UniLaurent> complete_graph_R_series(int N) {
    auto rs = complete_R_upto(N);
    TruncSeries<UniLaurent> s({"T"}, {(long)N}, UniLaurent("q"));
    ExactInt fact(1);
    for (int n = 1; n <= N; ++n) {
        fact *= n;
        s.add_term({n}, rs[(size_t)n].divided(ExactRat(fact)));
    }
    return s;
}

std::vector<std::vector<ExactInt>> connected_count_band(int n_max, int K) {
    if (n_max < 1 || K < 0) throw std::invalid_argument("connected_count_band: bad arguments");
    // Row n of the table holds C_{n,n-1+i}; the EGF-log recurrence is run on
    // the eta-valuation-shifted coefficients so only a band is ever touched.
    std::vector<std::vector<ExactInt>> P((size_t)n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        long full = choose2(n) - (n - 1);
        long width = std::min(full, (long)(n_max - n) + K);
        std::vector<ExactInt> row((size_t)width + 1);
        for (long i = 0; i <= width; ++i) {
            ExactInt acc = big_binomial_z(ExactInt(choose2(n)), (unsigned long)(n - 1 + i));
            for (int k = 1; k < n; ++k) {
                ExactInt c = big_binomial(n - 1, k - 1);
                ExactInt inner(0);
                long jmax = std::min((long)P[(size_t)k].size() - 1, i + (n - k));
                ExactInt rest_edges(choose2(n - k));
                for (long j = 0; j <= jmax; ++j) {
                    if (P[(size_t)k][(size_t)j] == 0) continue;
                    long need = (n - k) + i - j;
                    if (need < 0) continue;
                    if (rest_edges < need) continue;
                    inner += P[(size_t)k][(size_t)j] * big_binomial_z(rest_edges, (unsigned long)need);
                }
                acc -= c * inner;
            }
            row[(size_t)i] = std::move(acc);
        }
        P[(size_t)n] = std::move(row);
    }
    return P;
}

ExactInt connected_count(int n, long k) {
    if (n < 1) throw std::invalid_argument("connected_count: n >= 1 required");
    if (k < 0) return ExactInt(0);
    long full = choose2(n) - (n - 1);
    if (k > full) return ExactInt(0);
    auto band = connected_count_band(n, (int)k);
    const auto& row = band[(size_t)n];
    return k < (long)row.size() ? row[(size_t)k] : ExactInt(0);
}

ExactInt connected_total(int n) {
    if (n < 1) throw std::invalid_argument("connected_total: n >= 1 required");
    // A_n = 2^{C(n,2)} - sum_{k<n} C(n-1,k-1) A_k 2^{C(n-k,2)}.
    std::vector<ExactInt> A((size_t)n + 1);
    for (int m = 1; m <= n; ++m) {
        ExactInt acc = pow_int(ExactInt(2), (unsigned long)choose2(m));
        for (int k = 1; k < m; ++k)
            acc -= big_binomial(m - 1, k - 1) * A[(size_t)k] * pow_int(ExactInt(2), (unsigned long)choose2(m - k));
        A[(size_t)m] = std::move(acc);
    }
    return A[(size_t)n];
}

} // namespace hk
