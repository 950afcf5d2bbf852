#include "hk/higgs.hpp"

#include <algorithm>
#include <thread>

#include "hk/modular.hpp"

namespace hk {

namespace {

long expected_degree(int n, int g) {
    // Degree heuristic for the cap policy only; correctness is guarded by the
    // tail check and the doubling-stability rule.
    return std::max(4L, (long)n * n * (2 * g - 2) + 2);
}

} // namespace

// --- exact route -------------------------------------------------------------

BiPoly higgs_H_exact(int n, int g, long wcap) {
    if (n < 1 || g < 0) throw std::invalid_argument("higgs_H: need n >= 1, g >= 0");
    RatFunSeries proto("w", "z", wcap);
    TruncSeries<RatFunSeries> S({"T"}, {(long)n}, proto);

    auto zmono = [&](long e) { return UniRatFun(UniLaurent::monomial("z", ExactRat(1), e)); };

    for (int m = 0; m <= n; ++m) {
        RatFunSeries acc(proto);
        for (auto& lam : enum_partitions(m)) {
            RatFunSeries prod = ring_ops<RatFunSeries>::one_like(proto);
            for (auto& [a, l] : cells_arm_leg(lam)) {
                RatFunSeries num("w", "z", wcap);
                for (int i = 0; i <= 2 * g; ++i) {
                    ExactRat c = ExactRat(big_binomial(2 * g, i));
                    if (i % 2) c = -c;
                    num.add_term((long)(2 * a + 1) * i, zmono((long)(2 * l + 1) * (2 * g - i)).scaled(c));
                }
                RatFunSeries d1("w", "z", wcap);
                d1.add_term(0, zmono(2 * l + 2));
                d1.add_term(2 * a, UniRatFun::constant(ExactRat(-1)));
                RatFunSeries d2("w", "z", wcap);
                d2.add_term(0, zmono(2 * l));
                d2.add_term(2 * a + 2, UniRatFun::constant(ExactRat(-1)));
                prod = prod * num * d1.inverse() * d2.inverse();
            }
            acc += prod;
        }
        S.add_term({m}, acc);
    }

    TruncSeries<RatFunSeries> pl = pleth_log(S);
    RatFunSeries c = pl.coeff({n});

    // (1 - w^2) on the series side, (z^2 - 1) on the coefficients.
    RatFunSeries h("w", "z", wcap);
    for (auto& [e, f] : c.terms()) {
        h.add_term(e, f);
        h.add_term(e + 2, -f);
    }
    UniLaurent z2m1("z", ExactRat(1), 2);
    z2m1.add_term(0, ExactRat(-1));
    UniRatFun zfac(z2m1);

    long tailwin = std::max(4L, wcap / 8);
    BiPoly out("z", "w");
    for (auto& [e, f] : h.terms()) {
        UniRatFun v = zfac * f;
        if (e > wcap - tailwin && !v.is_zero())
            throw std::overflow_error("higgs_H: truncation insufficient (nonzero coefficients at the w-cap)");
        UniLaurent zpoly = v.as_laurent(); // must reduce to a polynomial in z
        for (auto& [ez, cz] : zpoly.terms()) {
            check(ez >= 0, "higgs_H: negative z-exponent in assembled coefficient");
            check(cz.get_den() == 1, "higgs_H: non-integer coefficient");
            out.add_term(ez, e, cz);
        }
    }
    return out;
}

// --- fast route ---------------------------------------------------------------

namespace {

using namespace modp;

// w-series over F_p of the lambda-sum coefficient of T^m at z = x, for all
// m <= n. Returns false if a constant denominator vanishes mod p.
bool higgs_S_at(int n, int g, long cap, uint64_t x, uint64_t p,
                std::vector<std::vector<uint64_t>>& S) {
    S.assign((size_t)n + 1, {});
    std::vector<uint64_t> binom((size_t)(2 * g) + 1);
    for (int i = 0; i <= 2 * g; ++i) binom[(size_t)i] = reduce(big_binomial(2 * g, i), p);
    for (int m = 0; m <= n; ++m) {
        std::vector<uint64_t> acc((size_t)cap + 1, 0);
        for (auto& lam : enum_partitions(m)) {
            std::vector<uint64_t> prod((size_t)cap + 1, 0);
            prod[0] = 1;
            for (auto& [a, l] : cells_arm_leg(lam)) {
                // multiply by the numerator (z^{2l+1} - w^{2a+1})^{2g}
                std::vector<uint64_t> next((size_t)cap + 1, 0);
                for (int i = 0; i <= 2 * g; ++i) {
                    long sh = (long)(2 * a + 1) * i;
                    if (sh > cap) break;
                    uint64_t zc = powmod(x, (uint64_t)(2 * l + 1) * (uint64_t)(2 * g - i), p);
                    uint64_t cc = mulmod(binom[(size_t)i], zc, p);
                    if (i % 2) cc = p - cc;
                    if (cc == p) cc = 0;
                    for (long d = 0; d + sh <= cap; ++d)
                        if (prod[(size_t)d]) next[(size_t)(d + sh)] = addmod(next[(size_t)(d + sh)], mulmod(prod[(size_t)d], cc, p), p);
                }
                prod = std::move(next);
                // divide by (z^{2l+2} - w^{2a}) and (z^{2l} - w^{2a+2})
                // y = s / (c - w^e): y[d] = (s[d] + y[d-e]) * c^{-1}
                auto divide = [&](long e, uint64_t c) -> bool {
                    if (c % p == 0) return false;
                    uint64_t ci = invmod(c, p);
                    if (e == 0) { // constant divisor c - 1 ... handled by caller
                        for (auto& v : prod) v = mulmod(v, ci, p);
                        return true;
                    }
                    for (long d = 0; d <= cap; ++d) {
                        uint64_t s = prod[(size_t)d];
                        if (d >= e) s = addmod(s, prod[(size_t)(d - e)], p);
                        prod[(size_t)d] = mulmod(s, ci, p);
                    }
                    return true;
                };
                // (z^{2l+2} - w^{2a}); a = 0 gives the constant z^{2l+2} - 1.
                if (a == 0) {
                    uint64_t c = submod(powmod(x, (uint64_t)(2 * l + 2), p), 1, p);
                    if (!divide(0, c)) return false;
                } else {
                    if (!divide(2 * a, powmod(x, (uint64_t)(2 * l + 2), p))) return false;
                }
                // (z^{2l} - w^{2a+2}); l = 0 gives 1 - w^{2a+2}.
                if (!divide(2 * a + 2, powmod(x, (uint64_t)(2 * l), p))) return false;
            }
            for (long d = 0; d <= cap; ++d) acc[(size_t)d] = addmod(acc[(size_t)d], prod[(size_t)d], p);
        }
        S[(size_t)m] = std::move(acc);
    }
    return true;
}

// [T^m] log of the series with coefficients S[0..n] (S[0] = 1), for all m.
std::vector<std::vector<uint64_t>> higgs_log(const std::vector<std::vector<uint64_t>>& S,
                                             long cap, uint64_t p) {
    int n = (int)S.size() - 1;
    std::vector<std::vector<uint64_t>> L((size_t)n + 1);
    L[0].assign((size_t)cap + 1, 0);
    // L_m = S_m - (1/m) sum_{k=1}^{m-1} k L_k S_{m-k}
    for (int m = 1; m <= n; ++m) {
        std::vector<uint64_t> acc = S[(size_t)m];
        uint64_t minv = invmod((uint64_t)m % p, p);
        for (int k = 1; k < m; ++k) {
            const auto& a = L[(size_t)k];
            const auto& b = S[(size_t)(m - k)];
            uint64_t f = mulmod((uint64_t)k % p, minv, p);
            for (long i = 0; i <= cap; ++i) {
                if (!a[(size_t)i]) continue;
                uint64_t ai = mulmod(a[(size_t)i], f, p);
                for (long j = 0; i + j <= cap; ++j) {
                    if (!b[(size_t)j]) continue;
                    acc[(size_t)(i + j)] = submod(acc[(size_t)(i + j)], mulmod(ai, b[(size_t)j], p), p);
                }
            }
        }
        L[(size_t)m] = std::move(acc);
    }
    return L;
}

} // namespace

BiPoly higgs_H_fast(int n, int g, long wcap, int threads) {
    if (n < 1 || g < 0) throw std::invalid_argument("higgs_H: need n >= 1, g >= 0");
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();

    std::vector<long> divisors;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0 && moebius(k) != 0) divisors.push_back(k);

    const long margin = 6;
    long npts = wcap + 1 + margin;
    std::vector<uint64_t> primes(PRIMES.begin(), PRIMES.begin() + 2);
    // values[prime][point] = w-series of H_n(x, w) mod p
    std::vector<std::vector<std::vector<uint64_t>>> vals(primes.size());
    std::vector<std::vector<uint64_t>> nodes(primes.size());

    for (size_t pi = 0; pi < primes.size(); ++pi) {
        uint64_t p = primes[pi];
        std::vector<long> cand;
        for (long x = 2; (long)cand.size() < npts + 16; ++x) cand.push_back(x);
        std::vector<std::vector<uint64_t>> res(cand.size());
        std::vector<char> ok(cand.size(), 0);
        parallel_for((long)cand.size(), threads, [&](long ci) {
            uint64_t x = (uint64_t)cand[(size_t)ci] % p;
            std::vector<uint64_t> h((size_t)wcap + 1, 0);
            for (long k : divisors) {
                uint64_t xk = powmod(x, (uint64_t)k, p);
                long capk = wcap / k;
                std::vector<std::vector<uint64_t>> S;
                if (!higgs_S_at(n / (int)k, g, capk, xk, p, S)) return;
                auto L = higgs_log(S, capk, p);
                const auto& lnk = L[(size_t)(n / k)];
                uint64_t kinv = invmod((uint64_t)k % p, p);
                int mu = moebius(k);
                for (long j = 0; j <= capk; ++j) {
                    if (!lnk[(size_t)j]) continue;
                    uint64_t t = mulmod(lnk[(size_t)j], kinv, p);
                    h[(size_t)(j * k)] = mu > 0 ? addmod(h[(size_t)(j * k)], t, p)
                                                : submod(h[(size_t)(j * k)], t, p);
                }
            }
            // multiply by (x^2 - 1)(1 - w^2)
            uint64_t zf = submod(mulmod(x, x, p), 1, p);
            std::vector<uint64_t> out((size_t)wcap + 1, 0);
            for (long j = 0; j <= wcap; ++j) {
                uint64_t v = h[(size_t)j];
                if (j >= 2) v = submod(v, h[(size_t)(j - 2)], p);
                out[(size_t)j] = mulmod(v, zf, p);
            }
            res[(size_t)ci] = std::move(out);
            ok[(size_t)ci] = 1;
        });
        for (size_t ci = 0; ci < cand.size() && (long)nodes[pi].size() < npts; ++ci) {
            if (!ok[ci]) continue;
            nodes[pi].push_back((uint64_t)cand[ci] % p);
            vals[pi].push_back(std::move(res[ci]));
        }
        check((long)nodes[pi].size() == npts, "higgs_H_fast: not enough usable evaluation points");
    }

    // Tail check: the top window of w-degrees must vanish at every node.
    long tailwin = std::max(4L, wcap / 8);
    for (size_t pi = 0; pi < primes.size(); ++pi)
        for (auto& series : vals[pi])
            for (long j = wcap - tailwin + 1; j <= wcap; ++j)
                if (series[(size_t)j] != 0)
                    throw std::overflow_error("higgs_H: truncation insufficient (nonzero coefficients at the w-cap)");

    // Interpolate in z per w-degree, lift, assemble.
    BiPoly out("z", "w");
    for (long j = 0; j <= wcap; ++j) {
        std::vector<std::vector<uint64_t>> coef(primes.size());
        bool allzero = true;
        for (size_t pi = 0; pi < primes.size(); ++pi) {
            std::vector<uint64_t> ys(nodes[pi].size());
            for (size_t t = 0; t < ys.size(); ++t) ys[t] = vals[pi][t][(size_t)j];
            coef[pi] = newton_interpolate(nodes[pi], ys, primes[pi]);
            for (auto v : coef[pi])
                if (v) allzero = false;
        }
        if (allzero) continue;
        for (long e = 0; e < npts; ++e) {
            std::vector<uint64_t> r(primes.size());
            for (size_t pi = 0; pi < primes.size(); ++pi) r[pi] = coef[pi][(size_t)e];
            ExactInt c = crt_symmetric(r, primes);
            if (e > wcap)
                check(c == 0, "higgs_H_fast: z-degree beyond the cap");
            if (c != 0) out.add_term(e, j, ExactRat(c));
        }
    }
    check(out.transposed() == out, "higgs_H: assembled polynomial is not symmetric in (z,w)");
    return out;
}

BiPoly higgs_H(int n, int g, int threads) {
    long cap = 2 * expected_degree(n, g) + 4;
    // Double until stable between two consecutive caps.
    auto compute = [&](long c) {
        for (;;) {
            try {
                return higgs_H_fast(n, g, c, threads);
            } catch (const std::overflow_error&) {
                c *= 2;
            }
        }
    };
    BiPoly prev = compute(cap);
    for (;;) {
        cap *= 2;
        BiPoly next = compute(cap);
        if (prev == next) return prev;
        prev = std::move(next);
    }
}

BiPoly higgs_H_reduced(const BiPoly& h, int g) {
    BiPoly cur = h;
    for (int t = 0; t < 2 * g; ++t) {
        // Synthetic division by (z - w) on z-coefficients; remainder must
        // vanish (it equals the diagonal evaluation z = w).
        std::map<long, UniLaurent> cz;
        for (auto& [e, c] : cur.terms()) cz[e.first].add_term(e.second, c);
        long d = cz.empty() ? 0 : cz.rbegin()->first;
        std::map<long, UniLaurent> q;
        UniLaurent carry("w");
        for (long k = d; k >= 1; --k) {
            auto it = cz.find(k);
            UniLaurent qk = it == cz.end() ? carry : it->second + carry;
            carry = qk.shifted(1);
            q[k - 1] = std::move(qk);
        }
        UniLaurent rem = carry;
        if (auto it = cz.find(0); it != cz.end()) rem += it->second;
        check(rem.is_zero(), "higgs_H_reduced: H_n is not divisible by (z-w)^{2g}");
        BiPoly next("z", "w");
        for (auto& [k, pw] : q)
            for (auto& [e, c] : pw.terms()) next.add_term(k, e, c);
        cur = std::move(next);
    }
    return cur;
}

BettiPoly poincare_higgs_from(const BiPoly& h, int n, int g) {
    UniLaurent hw = h.eval_var1(ExactRat(1)); // z = 1, Laurent in w
    check(!hw.is_zero(), "poincare_higgs: H(1,w) vanished");
    long d = hw.max_exp();
    BettiPoly p;
    p.family = "higgs";
    p.params["n"] = n;
    p.params["g"] = g;
    p.coeffs.assign((size_t)d + 1, ExactInt(0));
    for (auto& [j, c] : hw.terms()) {
        ExactRat v = (j % 2) ? -c : c; // w = -1/t
        check(v.get_den() == 1 && v >= 0, "poincare_higgs: negative coefficient after substitution");
        check(d - j >= 0, "poincare_higgs: negative degree");
        p.coeffs[(size_t)(d - j)] = v.get_num();
    }
    p.dim_shift = d;
    p.complex_dim = d;
    p.core_dim = d / 2;
    p.validate();
    return p;
}

BettiPoly poincare_higgs(int n, int g, int threads) {
    return poincare_higgs_from(higgs_H_reduced(higgs_H(n, g, threads), g), n, g);
}

} // namespace hk
