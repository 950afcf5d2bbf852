#include "hk/betti.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <tuple>

#include "hk/modular.hpp"
#include "hk/ratfun.hpp"

namespace hk {

Quiver::Quiver(int r_, std::vector<std::pair<int, int>> e, std::vector<long> v_, std::vector<long> w_)
    : r(r_), edges(std::move(e)), v(std::move(v_)), w(std::move(w_)) {
    for (auto& [a, b] : edges)
        if (a < 0 || b < 0 || a >= r || b >= r)
            throw std::invalid_argument("Quiver: vertex index out of range");
    for (long x : v)
        if (x < 0) throw std::invalid_argument("Quiver: v must be componentwise >= 0");
    for (long x : w)
        if (x < 0) throw std::invalid_argument("Quiver: w must be componentwise >= 0");
}

long Quiver::euler_self(const std::vector<long>& dim) const {
    check((int)dim.size() == r, "euler_self: dimension vector arity");
    long s = 0;
    for (long x : dim) s += x * x;
    for (auto& [a, b] : edges) s -= dim[(size_t)a] * dim[(size_t)b];
    return s;
}

long BettiPoly::degree() const {
    for (size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != 0) return (long)i;
    return -1;
}

const ExactInt& BettiPoly::b(long i) const {
    static const ExactInt zero(0);
    if (i < 0 || i >= (long)coeffs.size()) return zero;
    return coeffs[(size_t)i];
}

bool BettiPoly::even_only() const {
    for (size_t i = 1; i < coeffs.size(); i += 2)
        if (coeffs[i] != 0) return false;
    return true;
}

long BettiPoly::argmax() const {
    long best = 0;
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] > coeffs[(size_t)best]) best = (long)i;
    return best;
}

const ExactInt& BettiPoly::max_coeff() const { return coeffs[(size_t)argmax()]; }

bool BettiPoly::palindromic() const {
    long d = degree();
    for (long i = 0; i <= d; ++i)
        if (b(i) != b(d - i)) return false;
    return true;
}

void BettiPoly::validate() const {
    check(!coeffs.empty() && coeffs[0] == 1, "BettiPoly: b_0 must be 1");
    for (auto& c : coeffs) check(c >= 0, "BettiPoly: negative Betti number");
}

BettiPoly betti_from_reversed_qpoly(const UniLaurent& a, long s) {
    BettiPoly p;
    p.coeffs.assign((size_t)(2 * s) + 1, ExactInt(0));
    for (auto& [e, c] : a.terms()) {
        check(e >= 0 && e <= s, "betti_from_reversed_qpoly: exponent out of range");
        check(c.get_den() == 1, "betti_from_reversed_qpoly: non-integer coefficient");
        p.coeffs[(size_t)(2 * (s - e))] = c.get_num();
    }
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    p.dim_shift = 2 * s;
    return p;
}

// --- toric ------------------------------------------------------------------

namespace {

BettiPoly toric_from_R(const UniLaurent& r, long b1) {
    BettiPoly p = betti_from_reversed_qpoly(r, b1);
    p.family = "toric-quiver";
    p.complex_dim = 2 * b1;
    p.core_dim = b1;
    p.validate();
    return p;
}

} // namespace

BettiPoly poincare_toric_quiver(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("poincare_toric_quiver: graph not connected");
    UniLaurent r = g.edge_count() <= 14 ? external_activity_oracle(g) : external_activity_dc(g);
    BettiPoly p = toric_from_R(r, g.betti1());
    p.params["vertices"] = g.n;
    p.params["edges"] = (long)g.edge_count();
    return p;
}

BettiPoly poincare_toric_complete(int n) {
    if (n < 1) throw std::invalid_argument("poincare_toric_complete: n >= 1 required");
    UniLaurent r = complete_R_upto(n)[(size_t)n];
    long b1 = (long)n * (n - 1) / 2 - n + 1;
    BettiPoly p = toric_from_R(r, b1);
    p.family = "toric-complete";
    p.params["n"] = n;
    return p;
}

// --- Hilbert scheme and ADHM -------------------------------------------------

BettiPoly poincare_hilbert(int n) {
    if (n < 0) throw std::invalid_argument("poincare_hilbert: n >= 0 required");
    // Coefficient of T^n in prod_i (1 - u^{i-1} T^i)^{-1} with u = t^2:
    // knapsack over part sizes, each copy of part i carrying weight i-1.
    std::vector<std::vector<ExactInt>> f((size_t)n + 1);
    f[0] = {ExactInt(1)};
    for (size_t m = 1; m <= (size_t)n; ++m) f[m] = {};
    for (int i = 1; i <= n; ++i)
        for (int m = i; m <= n; ++m) {
            auto& dst = f[(size_t)m];
            const auto& src = f[(size_t)(m - i)];
            if (src.empty()) continue;
            size_t need = src.size() + (size_t)(i - 1);
            if (dst.size() < need) dst.resize(need);
            for (size_t j = 0; j < src.size(); ++j)
                if (src[j] != 0) dst[j + (size_t)(i - 1)] += src[j];
        }
    BettiPoly p;
    p.family = "hilbert";
    p.params["n"] = n;
    auto& top = f[(size_t)n];
    p.coeffs.assign(top.empty() ? 1 : 2 * top.size() - 1, ExactInt(0));
    if (top.empty()) p.coeffs[0] = 1; // n = 0: a point
    for (size_t j = 0; j < top.size(); ++j) p.coeffs[2 * j] = top[j];
    p.complex_dim = 2 * n;
    p.core_dim = n >= 1 ? n - 1 : 0;
    p.validate();
    return p;
}

BettiPoly poincare_adhm(int n, int m) {
    if (n < 0) throw std::invalid_argument("poincare_adhm: n >= 0 required");
    if (m < 1) throw std::invalid_argument("poincare_adhm: m >= 1 required (the space is empty for m = 0)");
    std::vector<std::vector<ExactInt>> f((size_t)n + 1);
    f[0] = {ExactInt(1)};
    for (int i = 1; i <= n; ++i)
        for (int b = 1; b <= m; ++b) {
            long w = (long)m * (i - 1) + b - 1;
            for (int s = i; s <= n; ++s) {
                auto& dst = f[(size_t)s];
                const auto& src = f[(size_t)(s - i)];
                if (src.empty()) continue;
                size_t need = src.size() + (size_t)w;
                if (dst.size() < need) dst.resize(need);
                for (size_t j = 0; j < src.size(); ++j)
                    if (src[j] != 0) dst[j + (size_t)w] += src[j];
            }
        }
    BettiPoly p;
    p.family = "adhm";
    p.params["n"] = n;
    p.params["m"] = m;
    auto& top = f[(size_t)n];
    p.coeffs.assign(top.empty() ? 1 : 2 * top.size() - 1, ExactInt(0));
    if (top.empty()) p.coeffs[0] = 1;
    for (size_t j = 0; j < top.size(); ++j) p.coeffs[2 * j] = top[j];
    p.complex_dim = 2L * n * m;
    p.core_dim = n >= 1 ? (long)n * m - 1 : 0;
    p.validate();
    return p;
}

// --- Grassmannian and torus ---------------------------------------------------

UniLaurent gauss_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("gauss_binomial: need 0 <= k <= n");
    // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k].
    std::vector<std::vector<ExactInt>> row((size_t)k + 1);
    row[0] = {ExactInt(1)};
    for (int nn = 1; nn <= n; ++nn)
        for (int j = std::min(k, nn); j >= 1; --j) {
            std::vector<ExactInt> next = row[(size_t)(j - 1)];
            const auto& same = row[(size_t)j];
            if (!same.empty()) {
                size_t need = same.size() + (size_t)j;
                if (next.size() < need) next.resize(need);
                for (size_t t = 0; t < same.size(); ++t)
                    if (same[t] != 0) next[t + (size_t)j] += same[t];
            }
            row[(size_t)j] = std::move(next);
        }
    UniLaurent out("q");
    for (size_t t = 0; t < row[(size_t)k].size(); ++t)
        if (row[(size_t)k][t] != 0) out.add_term((long)t, ExactRat(row[(size_t)k][t]));
    return out;
}

BettiPoly poincare_grassmannian(int n, int k) {
    UniLaurent gb = gauss_binomial(n, k);
    BettiPoly p;
    p.family = "grassmannian";
    p.params["n"] = n;
    p.params["k"] = k;
    long d = (long)k * (n - k);
    p.coeffs.assign((size_t)(2 * d) + 1, ExactInt(0));
    for (auto& [e, c] : gb.terms()) p.coeffs[(size_t)(2 * e)] = c.get_num();
    p.complex_dim = 2 * d;
    p.core_dim = d;
    p.validate();
    return p;
}

BettiPoly poincare_torus(int g) {
    if (g < 0) throw std::invalid_argument("poincare_torus: g >= 0 required");
    BettiPoly p;
    p.family = "torus";
    p.params["g"] = g;
    p.coeffs.resize((size_t)(2 * g) + 1);
    for (long i = 0; i <= 2 * g; ++i) p.coeffs[(size_t)i] = big_binomial(2 * g, i);
    p.complex_dim = 2 * g;
    p.core_dim = g;
    p.validate();
    return p;
}

// --- partition-tuple machinery -------------------------------------------------

namespace {

struct VertexParts {
    std::vector<Partition> parts; // all partitions of 0..cap, by size then revlex
    std::vector<int> size;
    std::vector<long> selfpair;
    std::vector<int> length;
    std::vector<std::vector<int>> denj; // the j's of prod_k prod_{j<=m_k}(...)
};

VertexParts vertex_parts(long cap) {
    VertexParts vp;
    for (long s = 0; s <= cap; ++s)
        for (auto& lam : enum_partitions((int)s)) vp.parts.push_back(lam);
    for (auto& lam : vp.parts) {
        vp.size.push_back(lam.size());
        vp.selfpair.push_back(pairing_n(lam, lam));
        vp.length.push_back(lam.length());
        std::vector<int> js;
        for (auto& [k, m] : lam.multiplicities())
            for (int j = 1; j <= m; ++j) js.push_back(j);
        vp.denj.push_back(std::move(js));
    }
    return vp;
}

// Directed edges collapsed to multiplicity maps: loops per vertex, and
// unordered cross multiplicities.
struct EdgeMults {
    std::vector<long> loops;
    std::map<std::pair<int, int>, long> cross; // i < j
};

EdgeMults edge_mults(const Quiver& q) {
    EdgeMults em;
    em.loops.assign((size_t)q.r, 0);
    for (auto& [a, b] : q.edges) {
        if (a == b) em.loops[(size_t)a]++;
        else em.cross[{std::min(a, b), std::max(a, b)}]++;
    }
    return em;
}

// Enumerate partition tuples lazily (Cartesian product of per-vertex lists).
template <class F>
void for_each_tuple(const std::vector<VertexParts>& vps, F&& body) {
    std::vector<size_t> idx(vps.size(), 0);
    auto rec = [&](auto&& self, size_t at) -> void {
        if (at == vps.size()) {
            body(idx);
            return;
        }
        for (size_t i = 0; i < vps[at].parts.size(); ++i) {
            idx[at] = i;
            self(self, at + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

// --- Nakajima quiver varieties -------------------------------------------------

BettiPoly poincare_nakajima(const Quiver& q) {
    if ((int)q.v.size() != q.r) throw std::invalid_argument("poincare_nakajima: missing dimension vector");
    std::vector<long> w = q.w.empty() ? std::vector<long>((size_t)q.r, 0) : q.w;
    if ((int)w.size() != q.r) throw std::invalid_argument("poincare_nakajima: framing arity mismatch");
    long total = std::accumulate(q.v.begin(), q.v.end(), 0L);
    if (total < 1) throw std::invalid_argument("poincare_nakajima: sum v_i >= 1 required");

    std::vector<VertexParts> vps;
    for (long cap : q.v) vps.push_back(vertex_parts(cap));
    EdgeMults em = edge_mults(q);

    std::vector<std::string> tvars;
    for (int i = 0; i < q.r; ++i) tvars.push_back("T" + std::to_string(i + 1));
    UniRatFun proto(UniLaurent("t"));
    TruncSeries<UniRatFun> num(tvars, q.v, proto), den(tvars, q.v, proto);

    for_each_tuple(vps, [&](const std::vector<size_t>& idx) {
        long cross = 0;
        for (auto& [pr, m] : em.cross)
            cross += m * pairing_n(vps[(size_t)pr.first].parts[idx[(size_t)pr.first]],
                                   vps[(size_t)pr.second].parts[idx[(size_t)pr.second]]);
        long exp_den = 0; // exponent of t in the shared part, times -2
        UniLaurent denom("t", ExactRat(1), 0);
        long wexp = 0;
        for (int i = 0; i < q.r; ++i) {
            const auto& vp = vps[(size_t)i];
            size_t a = idx[(size_t)i];
            cross += em.loops[(size_t)i] * vp.selfpair[a];
            exp_den += vp.selfpair[a];
            wexp += w[(size_t)i] * vp.length[a];
            for (int j : vp.denj[a]) {
                UniLaurent f("t", ExactRat(1), 0);
                f.add_term(2 * j, ExactRat(-1));
                denom *= f;
            }
        }
        // term = t^{-2 cross} * t^{+2 exp_den} / prod(1 - t^{2j}), numerator
        // side additionally carries t^{-2 sum w_i l(lambda^i)}.
        typename TruncSeries<UniRatFun>::Key key(vps.size());
        for (size_t i = 0; i < idx.size(); ++i) key[i] = vps[i].size[idx[i]];
        UniRatFun base(UniLaurent::monomial("t", ExactRat(1), -2 * cross + 2 * exp_den), denom);
        den.add_term(key, base);
        num.add_term(key, UniRatFun(UniLaurent::monomial("t", ExactRat(1), -2 * wexp)) * base);
    });

    TruncSeries<UniRatFun> ratio = s_mul(num, s_inv(den));
    typename TruncSeries<UniRatFun>::Key vkey(q.v.begin(), q.v.end());
    UniRatFun c = ratio.coeff(vkey);

    long d = 0;
    for (auto& [a, b] : q.edges) d += 2 * q.v[(size_t)a] * q.v[(size_t)b];
    for (int i = 0; i < q.r; ++i) d += 2 * q.v[(size_t)i] * (w[(size_t)i] - q.v[(size_t)i]);

    UniRatFun shifted = UniRatFun(UniLaurent::monomial("t", ExactRat(1), d)) * c;
    UniLaurent poly = shifted.as_laurent(); // throws if not a Laurent polynomial

    BettiPoly p;
    p.family = "nakajima";
    p.dim_shift = d;
    p.complex_dim = d;
    long deg = poly.is_zero() ? 0 : poly.max_exp();
    check(poly.is_zero() || poly.min_exp() >= 0, "poincare_nakajima: negative degree coefficient");
    check(deg <= d, "poincare_nakajima: degree exceeds d(v,w)");
    p.coeffs.assign((size_t)deg + 1, ExactInt(0));
    for (auto& [e, cc] : poly.terms()) {
        check(e % 2 == 0, "poincare_nakajima: odd-degree coefficient");
        check(cc.get_den() == 1 && cc > 0, "poincare_nakajima: non-polynomial or negative coefficient");
        p.coeffs[(size_t)e] = cc.get_num();
    }
    p.validate();
    return p;
}

// --- Kac polynomials (Hua's formula) --------------------------------------------

UniLaurent kac_polynomial_exact(const Quiver& q, const std::vector<long>& v) {
    if ((int)v.size() != q.r) throw std::invalid_argument("kac_polynomial_exact: arity mismatch");
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
        throw std::invalid_argument("kac_polynomial_exact: v must be nonzero");

    std::vector<VertexParts> vps;
    for (long cap : v) vps.push_back(vertex_parts(cap));
    EdgeMults em = edge_mults(q);

    std::vector<std::string> tvars;
    for (int i = 0; i < q.r; ++i) tvars.push_back("T" + std::to_string(i + 1));
    UniRatFun proto(UniLaurent("q"));
    TruncSeries<UniRatFun> s(tvars, v, proto);

    for_each_tuple(vps, [&](const std::vector<size_t>& idx) {
        long cross = 0;
        for (auto& [pr, m] : em.cross)
            cross += m * pairing_n(vps[(size_t)pr.first].parts[idx[(size_t)pr.first]],
                                   vps[(size_t)pr.second].parts[idx[(size_t)pr.second]]);
        long selfsum = 0;
        UniLaurent denom("q", ExactRat(1), 0);
        for (int i = 0; i < q.r; ++i) {
            const auto& vp = vps[(size_t)i];
            size_t a = idx[(size_t)i];
            cross += em.loops[(size_t)i] * vp.selfpair[a];
            selfsum += vp.selfpair[a];
            for (int j : vp.denj[a]) {
                UniLaurent f("q", ExactRat(1), 0);
                f.add_term(-j, ExactRat(-1));
                denom *= f;
            }
        }
        typename TruncSeries<UniRatFun>::Key key(vps.size());
        for (size_t i = 0; i < idx.size(); ++i) key[i] = vps[i].size[idx[i]];
        s.add_term(key, UniRatFun(UniLaurent::monomial("q", ExactRat(1), cross - selfsum), denom));
    });

    TruncSeries<UniRatFun> lg = pleth_log(s);
    typename TruncSeries<UniRatFun>::Key vkey(v.begin(), v.end());
    UniRatFun c = lg.coeff(vkey);
    UniLaurent qm1("q", ExactRat(1), 1);
    qm1.add_term(0, ExactRat(-1));
    UniLaurent a = (UniRatFun(qm1) * c).as_laurent();
    for (auto& [e, cc] : a.terms()) {
        check(e >= 0, "kac_polynomial: negative q-power");
        check(cc.get_den() == 1 && cc > 0, "kac_polynomial: coefficients must be nonnegative integers");
    }
    return a;
}

namespace {

using namespace modp;

// Reusable numeric evaluator for Hua's formula at one dimension vector.
struct HuaFastPlan {
    std::vector<long> v;
    std::vector<VertexParts> vps;
    EdgeMults em;
    // Weighted pairing tables m_ij * n(lambda^i, lambda^j) per cross pair.
    std::vector<std::tuple<int, int, std::vector<std::vector<long>>>> crosstab;
    std::vector<long> dims;   // lattice dims = v_i + 1
    long lattice = 1;
    long maxexp = 0;          // bound on q-exponents appearing in tuples
    int maxj = 0;

    explicit HuaFastPlan(const Quiver& q, const std::vector<long>& v_) : v(v_) {
        for (long cap : v) vps.push_back(vertex_parts(cap));
        em = edge_mults(q);
        for (auto& [pr, m] : em.cross) {
            auto& a = vps[(size_t)pr.first];
            auto& b = vps[(size_t)pr.second];
            std::vector<std::vector<long>> tab(a.parts.size(), std::vector<long>(b.parts.size()));
            for (size_t x = 0; x < a.parts.size(); ++x)
                for (size_t y = 0; y < b.parts.size(); ++y)
                    tab[x][y] = m * pairing_n(a.parts[x], b.parts[y]);
            crosstab.emplace_back(pr.first, pr.second, std::move(tab));
        }
        for (long x : v) {
            dims.push_back(x + 1);
            lattice *= x + 1;
        }
        long crossmax = 0;
        for (auto& [pr, m] : em.cross) crossmax += m * v[(size_t)pr.first] * v[(size_t)pr.second];
        long loopmax = 0;
        for (size_t i = 0; i < vps.size(); ++i) loopmax += em.loops[i] * v[i] * v[i];
        maxexp = crossmax + loopmax;
        for (auto& vp : vps)
            for (auto& js : vp.denj)
                for (int j : js) maxj = std::max(maxj, j);
    }

    long flat(const std::vector<int>& key) const {
        long f = 0;
        for (size_t i = 0; i < key.size(); ++i) f = f * dims[i] + key[i];
        return f;
    }

    // S-lattice at numeric q = x over F_p (caps u componentwise <= v);
    // returns false when a denominator vanishes mod p at this point.
    bool lattice_S(uint64_t x, uint64_t p, const std::vector<long>& u, std::vector<uint64_t>& S) const {
        uint64_t xinv = invmod(x, p);
        std::vector<uint64_t> invpow((size_t)maxj + 1);
        invpow[0] = 1;
        for (int j = 1; j <= maxj; ++j) invpow[(size_t)j] = mulmod(invpow[(size_t)j - 1], xinv, p);

        std::vector<uint64_t> powx((size_t)maxexp + 1);
        powx[0] = 1;
        for (long e = 1; e <= maxexp; ++e) powx[(size_t)e] = mulmod(powx[(size_t)e - 1], x, p);

        // Per-vertex per-partition factor q^{(loops-1) selfpair} / prod(1-q^{-j}).
        std::vector<std::vector<uint64_t>> fac(vps.size());
        for (size_t i = 0; i < vps.size(); ++i) {
            fac[i].assign(vps[i].parts.size(), 0);
            std::vector<uint64_t> dens;
            std::vector<size_t> keep;
            for (size_t a = 0; a < vps[i].parts.size(); ++a) {
                if (vps[i].size[a] > u[i]) continue;
                uint64_t d = 1;
                for (int j : vps[i].denj[a]) {
                    uint64_t f = submod(1, invpow[(size_t)j], p);
                    if (f == 0) return false;
                    d = mulmod(d, f, p);
                }
                long e = (em.loops[i] - 1) * vps[i].selfpair[a];
                fac[i][a] = e >= 0 ? powx[(size_t)e] : powmod(xinv, (uint64_t)(-e), p);
                dens.push_back(d);
                keep.push_back(a);
            }
            std::vector<uint64_t> dinv = batch_inverse(dens, p);
            for (size_t t = 0; t < keep.size(); ++t)
                fac[i][keep[t]] = mulmod(fac[i][keep[t]], dinv[t], p);
        }

        S.assign((size_t)lattice, 0);
        std::vector<size_t> idx(vps.size(), 0);
        std::vector<int> key((int)vps.size(), 0);
        auto rec = [&](auto&& self, size_t at, uint64_t acc, long crossbase) -> void {
            if (at == vps.size()) {
                long f = flat(key);
                S[(size_t)f] = addmod(S[(size_t)f], mulmod(acc, powx[(size_t)crossbase], p), p);
                return;
            }
            for (size_t a = 0; a < vps[at].parts.size(); ++a) {
                if (vps[at].size[a] > u[at]) continue;
                idx[at] = a;
                key[at] = vps[at].size[a];
                long cross = crossbase;
                for (auto& [i1, i2, tab] : crosstab)
                    if ((size_t)i2 == at) cross += tab[idx[(size_t)i1]][a];
                self(self, at + 1, mulmod(acc, fac[at][a], p), cross);
            }
        };
        rec(rec, 0, 1, 0);
        return true;
    }
};

// log of a lattice series with constant term 1 (in place on a copy).
std::vector<uint64_t> lattice_log(const HuaFastPlan& plan, std::vector<uint64_t> S, uint64_t p) {
    long total = std::accumulate(plan.v.begin(), plan.v.end(), 0L);
    std::vector<uint64_t> X = std::move(S);
    check(X[0] == 1, "lattice_log: constant term must be 1");
    X[0] = 0;
    std::vector<uint64_t> acc((size_t)plan.lattice, 0), pw((size_t)plan.lattice, 0);
    pw[0] = 1;
    // Walk the lattice with multi-index convolution.
    std::vector<std::vector<int>> keys;
    {
        std::vector<int> k(plan.v.size(), 0);
        auto rec = [&](auto&& self, size_t at) -> void {
            if (at == plan.v.size()) {
                keys.push_back(k);
                return;
            }
            for (int e = 0; e <= plan.v[at]; ++e) {
                k[at] = e;
                self(self, at + 1);
            }
        };
        rec(rec, 0);
    }
    auto conv = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
        std::vector<uint64_t> out((size_t)plan.lattice, 0);
        for (auto& ka : keys) {
            uint64_t va = a[(size_t)plan.flat(ka)];
            if (!va) continue;
            for (auto& kb : keys) {
                bool ok = true;
                long f = 0;
                for (size_t i = 0; i < ka.size(); ++i) {
                    long s = ka[i] + kb[i];
                    if (s > plan.v[i]) { ok = false; break; }
                    f = f * plan.dims[i] + s;
                }
                if (!ok) continue;
                uint64_t vb = b[(size_t)plan.flat(kb)];
                if (!vb) continue;
                out[(size_t)f] = addmod(out[(size_t)f], mulmod(va, vb, p), p);
            }
        }
        return out;
    };
    for (long k = 1; k <= total; ++k) {
        pw = conv(pw, X);
        bool zero = true;
        for (auto x : pw)
            if (x) { zero = false; break; }
        if (zero) break;
        uint64_t ik = invmod((uint64_t)k, p);
        for (size_t i = 0; i < pw.size(); ++i) {
            if (!pw[i]) continue;
            uint64_t t = mulmod(pw[i], ik, p);
            acc[i] = (k % 2) ? addmod(acc[i], t, p) : submod(acc[i], t, p);
        }
    }
    return acc;
}

} // namespace

UniLaurent kac_polynomial_fast(const Quiver& q, const std::vector<long>& v, int threads) {
    if ((int)v.size() != q.r) throw std::invalid_argument("kac_polynomial_fast: arity mismatch");
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
        throw std::invalid_argument("kac_polynomial_fast: v must be nonzero");
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();

    HuaFastPlan plan(q, v);
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    std::vector<long> divisors;
    for (long k = 1; k <= g; ++k)
        if (g % k == 0 && moebius(k) != 0) divisors.push_back(k);

    long degree_bound = std::max(0L, 1 - q.euler_self(v));
    const long margin = 6;
    long npoints = degree_bound + 1 + margin;

    std::vector<uint64_t> primes(PRIMES.begin(), PRIMES.begin() + 3);
    std::vector<std::vector<uint64_t>> coef_mod(primes.size());

    for (size_t pi = 0; pi < primes.size(); ++pi) {
        uint64_t p = primes[pi];
        // Choose evaluation nodes 2,3,... skipping any point where a
        // denominator degenerates mod p.
        std::vector<uint64_t> xs, ys;
        xs.reserve((size_t)npoints);
        std::vector<long> cand;
        for (long x = 2; (long)cand.size() < npoints + 16; ++x) cand.push_back(x);
        std::vector<uint64_t> yv(cand.size(), ~0ull);
        parallel_for((long)cand.size(), threads, [&](long ci) {
            uint64_t x = (uint64_t)cand[(size_t)ci];
            uint64_t total = 0;
            for (long k : divisors) {
                uint64_t xk = powmod(x, (uint64_t)k, p);
                std::vector<long> u(v.size());
                for (size_t i = 0; i < v.size(); ++i) u[i] = v[i] / k;
                std::vector<uint64_t> S;
                if (!plan.lattice_S(xk, p, u, S)) return; // leaves sentinel
                std::vector<uint64_t> L = lattice_log(plan, std::move(S), p);
                std::vector<int> key(u.begin(), u.end());
                uint64_t val = L[(size_t)plan.flat(key)];
                uint64_t c = mulmod(val, invmod((uint64_t)k, p), p);
                int mu = moebius(k);
                total = mu > 0 ? addmod(total, c, p) : submod(total, c, p);
            }
            yv[(size_t)ci] = mulmod(total, submod(x % p, 1, p), p);
        });
        for (size_t ci = 0; ci < cand.size() && (long)xs.size() < npoints; ++ci) {
            if (yv[ci] == ~0ull) continue;
            xs.push_back((uint64_t)cand[ci] % p);
            ys.push_back(yv[ci]);
        }
        check((long)xs.size() == npoints, "kac_polynomial_fast: not enough usable evaluation points");
        coef_mod[pi] = newton_interpolate(xs, ys, p);
    }

    UniLaurent out("q");
    for (long e = 0; e < npoints; ++e) {
        std::vector<uint64_t> res(primes.size());
        for (size_t pi = 0; pi < primes.size(); ++pi) res[pi] = coef_mod[pi][(size_t)e];
        ExactInt c = crt_symmetric(res, primes);
        if (e > degree_bound)
            check(c == 0, "kac_polynomial_fast: nonzero coefficient beyond the degree bound");
        check(c >= 0, "kac_polynomial_fast: negative coefficient (Kac positivity violated)");
        if (c != 0) out.add_term(e, ExactRat(c));
    }
    return out;
}

UniLaurent kac_polynomial(const Quiver& q, const std::vector<long>& v) {
    long total = std::accumulate(v.begin(), v.end(), 0L);
    double tuples = 1;
    for (long x : v) {
        double c = 0;
        for (long s = 0; s <= x; ++s) c += to_double(ExactRat(partition_count((int)s)));
        tuples *= c;
    }
    long degree_bound = std::max(0L, 1 - q.euler_self(v));
    if (total <= 8 && tuples <= 3000 && degree_bound <= 80) return kac_polynomial_exact(q, v);
    return kac_polynomial_fast(q, v);
}

BettiPoly poincare_quiver_indivisible(const Quiver& q, int threads) {
    if ((int)q.v.size() != q.r) throw std::invalid_argument("poincare_quiver_indivisible: missing v");
    long g = 0;
    for (long x : q.v) g = std::gcd(g, x);
    if (g != 1) throw std::invalid_argument("poincare_quiver_indivisible: v must be indivisible");
    long s = 1 - q.euler_self(q.v); // d_v = 2s
    long total = std::accumulate(q.v.begin(), q.v.end(), 0L);
    UniLaurent a = (total <= 6 && s <= 40) ? kac_polynomial_exact(q, q.v)
                                           : kac_polynomial_fast(q, q.v, threads);
    BettiPoly p = betti_from_reversed_qpoly(a, s);
    p.family = "quiver-indivisible";
    p.complex_dim = 2 * s;
    p.validate();
    return p;
}

} // namespace hk
