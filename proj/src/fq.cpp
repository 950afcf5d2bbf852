#include "hk/fq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hk {

namespace {

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Small dense matrices over F_q as row-major vectors.
struct Shape {
    long rows, cols;
};

// The representation space V = sum_edges Hom(V_i, V_j) + sum_i Hom(V_i, W_i)
// flattened: per block a shape and an offset into the scalar vector.
struct Layout {
    std::vector<Shape> blocks;
    std::vector<long> offset;
    long total = 0;

    void add(long rows, long cols) {
        blocks.push_back({rows, cols});
        offset.push_back(total);
        total += rows * cols;
    }
};

Layout layout_of(const Quiver& qv) {
    Layout lay;
    const auto& v = qv.v;
    std::vector<long> w = qv.w.empty() ? std::vector<long>((size_t)qv.r, 0) : qv.w;
    for (auto& [i, j] : qv.edges) lay.add(v[(size_t)j], v[(size_t)i]); // phi_a : V_i -> V_j
    for (int i = 0; i < qv.r; ++i) lay.add(w[(size_t)i], v[(size_t)i]); // psi_i : V_i -> W_i
    return lay;
}

// mu_i(x, y) = sum_{a=(j->i)} phi_a phi*_a - sum_{a=(i->j)} phi*_a phi_a
//              + psi*_i psi_i, with the framing sign fixed so that the framed
// one-vertex case reads [A,B] + IJ.
void moment_map(const Quiver& qv, const Layout& lay, const std::vector<long>& x,
                const std::vector<long>& y, long q, std::vector<std::vector<long>>& mu) {
    const auto& v = qv.v;
    mu.assign((size_t)qv.r, {});
    for (int i = 0; i < qv.r; ++i) mu[(size_t)i].assign((size_t)(v[(size_t)i] * v[(size_t)i]), 0);
    size_t bi = 0;
    for (auto& [i, j] : qv.edges) {
        const Shape s = lay.blocks[bi]; // phi: v_j x v_i ; phi*: v_i x v_j
        long off = lay.offset[bi];
        // phi phi* into mu_j ; phi* phi into -mu_i
        for (long r = 0; r < s.rows; ++r)
            for (long c = 0; c < s.rows; ++c) {
                long acc = 0;
                for (long k = 0; k < s.cols; ++k)
                    acc += x[(size_t)(off + r * s.cols + k)] * y[(size_t)(off + c * s.cols + k)];
                auto& m = mu[(size_t)j];
                m[(size_t)(r * s.rows + c)] = (m[(size_t)(r * s.rows + c)] + acc) % q;
            }
        for (long r = 0; r < s.cols; ++r)
            for (long c = 0; c < s.cols; ++c) {
                long acc = 0;
                for (long k = 0; k < s.rows; ++k)
                    acc += y[(size_t)(off + k * s.cols + r)] * x[(size_t)(off + k * s.cols + c)];
                auto& m = mu[(size_t)i];
                m[(size_t)(r * v[(size_t)i] + c)] = ((m[(size_t)(r * v[(size_t)i] + c)] - acc) % q + q) % q;
            }
        ++bi;
    }
    for (int i = 0; i < qv.r; ++i) {
        const Shape s = lay.blocks[bi]; // psi: w_i x v_i ; psi*: v_i x w_i
        long off = lay.offset[bi];
        for (long r = 0; r < s.cols; ++r)
            for (long c = 0; c < s.cols; ++c) {
                long acc = 0;
                for (long k = 0; k < s.rows; ++k)
                    acc += y[(size_t)(off + k * s.cols + r)] * x[(size_t)(off + k * s.cols + c)];
                auto& m = mu[(size_t)i];
                m[(size_t)(r * s.cols + c)] = (m[(size_t)(r * s.cols + c)] + acc) % q;
            }
        ++bi;
    }
}

bool mu_equals_xi(const Quiver& qv, const std::vector<std::vector<long>>& mu,
                  const std::vector<long>& xi, long q) {
    for (int i = 0; i < qv.r; ++i) {
        long vi = qv.v[(size_t)i];
        long want = ((xi[(size_t)i] % q) + q) % q;
        for (long r = 0; r < vi; ++r)
            for (long c = 0; c < vi; ++c) {
                long e = mu[(size_t)i][(size_t)(r * vi + c)];
                if (e != (r == c ? want : 0)) return false;
            }
    }
    return true;
}

long rank_mod_q(std::vector<std::vector<long>> m, long q) {
    long rank = 0;
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t rr = 0;
    for (size_t c = 0; c < cols && rr < rows; ++c) {
        size_t piv = rr;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rr], m[piv]);
        long inv = 1;
        for (long t = 1; t < q; ++t)
            if (m[rr][c] * t % q == 1) { inv = t; break; }
        for (size_t cc = c; cc < cols; ++cc) m[rr][cc] = m[rr][cc] * inv % q;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rr || m[r][c] == 0) continue;
            long f = m[r][c];
            for (size_t cc = c; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - f * m[rr][cc]) % q + q) % q;
        }
        ++rr;
        ++rank;
    }
    return rank;
}

} // namespace

long FqConfig::dim_V() const {
    Layout lay = layout_of(quiver);
    return lay.total;
}

long FqConfig::dim_g() const {
    long s = 0;
    for (long x : quiver.v) s += x * x;
    return s;
}

void FqConfig::validate() const {
    if (!is_prime(q)) throw std::invalid_argument("FqConfig: q must be prime");
    if ((int)quiver.v.size() != quiver.r) throw std::invalid_argument("FqConfig: missing dimension vector");
    if ((int)xi.size() != quiver.r) throw std::invalid_argument("FqConfig: xi needs one scalar per vertex");
    double states = std::pow((double)q, 2.0 * (double)dim_V());
    if (states > 1e8) throw std::invalid_argument("FqConfig: state space exceeds the 1e8 enumeration cap");
    double gstates = std::pow((double)q, (double)dim_g());
    if (gstates > 1e8) throw std::invalid_argument("FqConfig: |g| exceeds the enumeration cap");
}

ExactInt count_fiber_bruteforce(const FqConfig& cfg) {
    cfg.validate();
    Layout lay = layout_of(cfg.quiver);
    long n = lay.total;
    std::vector<long> x((size_t)n, 0), y((size_t)n, 0);
    std::vector<std::vector<long>> mu;
    ExactInt count(0);
    // Odometer over (x, y) in F_q^{2n}.
    std::vector<long> digits((size_t)(2 * n), 0);
    for (;;) {
        for (long i = 0; i < n; ++i) {
            x[(size_t)i] = digits[(size_t)i];
            y[(size_t)i] = digits[(size_t)(n + i)];
        }
        moment_map(cfg.quiver, lay, x, y, cfg.q, mu);
        if (mu_equals_xi(cfg.quiver, mu, cfg.xi, cfg.q)) count += 1;
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == cfg.q) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return count;
}

namespace {

// rho(X) acting on V: phi_a -> X_j phi_a - phi_a X_i ; psi_i -> -psi_i X_i.
// Returns |ker| as q^{dim V - rank}.
ExactInt kernel_size(const Quiver& qv, const Layout& lay, const std::vector<std::vector<long>>& X,
                     long q) {
    long n = lay.total;
    // Build the matrix of rho(X) column by column (image of basis vectors).
    std::vector<std::vector<long>> m((size_t)n, std::vector<long>((size_t)n, 0));
    const auto& v = qv.v;
    size_t bi = 0;
    for (auto& [i, j] : qv.edges) {
        const Shape s = lay.blocks[bi];
        long off = lay.offset[bi];
        // basis e_{rc} of phi: (X_j phi)_{r'c} = X_j[r',r] delta, (phi X_i)_{rc'} = X_i[c, c']
        for (long r = 0; r < s.rows; ++r)
            for (long c = 0; c < s.cols; ++c) {
                long col = off + r * s.cols + c;
                for (long rp = 0; rp < s.rows; ++rp) {
                    long val = X[(size_t)j][(size_t)(rp * v[(size_t)j] + r)];
                    if (val) m[(size_t)(off + rp * s.cols + c)][(size_t)col] =
                        (m[(size_t)(off + rp * s.cols + c)][(size_t)col] + val) % q;
                }
                for (long cp = 0; cp < s.cols; ++cp) {
                    long val = X[(size_t)i][(size_t)(c * v[(size_t)i] + cp)];
                    if (val) m[(size_t)(off + r * s.cols + cp)][(size_t)col] =
                        ((m[(size_t)(off + r * s.cols + cp)][(size_t)col] - val) % q + q) % q;
                }
            }
        ++bi;
    }
    for (int i = 0; i < qv.r; ++i) {
        const Shape s = lay.blocks[bi];
        long off = lay.offset[bi];
        for (long r = 0; r < s.rows; ++r)
            for (long c = 0; c < s.cols; ++c) {
                long col = off + r * s.cols + c;
                for (long cp = 0; cp < s.cols; ++cp) {
                    long val = X[(size_t)i][(size_t)(c * v[(size_t)i] + cp)];
                    if (val) m[(size_t)(off + r * s.cols + cp)][(size_t)col] =
                        ((m[(size_t)(off + r * s.cols + cp)][(size_t)col] - val) % q + q) % q;
                }
            }
        ++bi;
    }
    long rank = rank_mod_q(std::move(m), q);
    return pow_int(ExactInt(q), (unsigned long)(n - rank));
}

template <class F>
void for_each_g(const Quiver& qv, long q, F&& body) {
    // X = (X_1, ..., X_r), X_i a v_i x v_i matrix over F_q.
    long total = 0;
    for (long x : qv.v) total += x * x;
    std::vector<long> digits((size_t)total, 0);
    std::vector<std::vector<long>> X((size_t)qv.r);
    for (;;) {
        size_t at = 0;
        for (int i = 0; i < qv.r; ++i) {
            long n2 = qv.v[(size_t)i] * qv.v[(size_t)i];
            X[(size_t)i].assign(digits.begin() + (long)at, digits.begin() + (long)at + n2);
            at += (size_t)n2;
        }
        body(X);
        size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
}

} // namespace

std::vector<ExactInt> a_rho_values(const FqConfig& cfg) {
    cfg.validate();
    Layout lay = layout_of(cfg.quiver);
    std::vector<ExactInt> out;
    for_each_g(cfg.quiver, cfg.q, [&](const std::vector<std::vector<long>>& X) {
        out.push_back(kernel_size(cfg.quiver, lay, X, cfg.q));
    });
    return out;
}

ExactInt count_fiber_fourier(const FqConfig& cfg) {
    cfg.validate();
    Layout lay = layout_of(cfg.quiver);
    // Group X by <X, xi> = sum_i xi_i tr(X_i) in F_q; with S_c the class sums
    // of a_rho, Galois symmetry forces S_c equal for c != 0 and the character
    // sum collapses to S_0 - S_1. Both facts are asserted.
    std::vector<ExactInt> S((size_t)cfg.q, ExactInt(0));
    for_each_g(cfg.quiver, cfg.q, [&](const std::vector<std::vector<long>>& X) {
        long c = 0;
        for (int i = 0; i < cfg.quiver.r; ++i) {
            long tr = 0;
            long vi = cfg.quiver.v[(size_t)i];
            for (long d = 0; d < vi; ++d) tr += X[(size_t)i][(size_t)(d * vi + d)];
            c += cfg.xi[(size_t)i] * tr;
        }
        c = ((c % cfg.q) + cfg.q) % cfg.q;
        S[(size_t)c] += kernel_size(cfg.quiver, lay, X, cfg.q);
    });
    ExactInt charsum;
    if (cfg.q == 1 || std::all_of(cfg.xi.begin(), cfg.xi.end(), [](long x) { return x == 0; })) {
        charsum = std::accumulate(S.begin(), S.end(), ExactInt(0));
    } else {
        for (long c = 2; c < cfg.q; ++c)
            check(S[(size_t)c] == S[1], "count_fiber_fourier: character sum has a non-rational part");
        charsum = S[0] - S[1];
    }
    ExactInt g = pow_int(ExactInt(cfg.q), (unsigned long)cfg.dim_g());
    ExactInt V = pow_int(ExactInt(cfg.q), (unsigned long)cfg.dim_V());
    return div_exact(V * charsum, g); // integrality is part of the contract
}

KatzReport check_katz(const Quiver& quiver, const std::vector<long>& xi,
                      const std::vector<long>& primes, const BettiPoly& betti) {
    KatzReport rep;
    rep.primes = primes;
    check(betti.complex_dim >= 0, "check_katz: BettiPoly lacks dimension metadata");
    if ((long)primes.size() < betti.complex_dim + 1)
        throw std::invalid_argument("check_katz: need at least dim+1 primes to pin the polynomial");
    for (long q : primes) {
        FqConfig cfg{quiver, q, xi};
        ExactInt fiber = count_fiber_bruteforce(cfg);
        // |G| = prod_i |GL_{v_i}(F_q)|
        ExactInt G(1);
        for (long vi : quiver.v) {
            for (long k = 0; k < vi; ++k)
                G *= pow_int(ExactInt(q), (unsigned long)vi) - pow_int(ExactInt(q), (unsigned long)k);
        }
        if (!divides(G, fiber)) {
            rep.freeness_ok = false;
            rep.quotients.push_back(ExactInt(-1));
            continue;
        }
        rep.quotients.push_back(div_exact(fiber, G));
    }
    if (!rep.freeness_ok) return rep;

    // Exact Lagrange interpolation through (q_i, quotient_i).
    UniLaurent fit("q");
    for (size_t i = 0; i < primes.size(); ++i) {
        UniLaurent li("q", ExactRat(1), 0);
        ExactRat denom(1);
        for (size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            UniLaurent f("q", ExactRat(1), 1);
            f.add_term(0, ExactRat(-primes[j]));
            li = li * f;
            denom *= ExactRat(primes[i] - primes[j]);
        }
        fit += li.scaled(ExactRat(rep.quotients[i]) / denom);
    }
    rep.fitted = fit;

    UniLaurent e("q");
    long dim = betti.complex_dim;
    check(dim >= 0, "check_katz: BettiPoly lacks dimension metadata");
    for (long i = 0; 2 * i <= betti.degree(); ++i)
        if (betti.b(2 * i) != 0) e.add_term(dim - i, ExactRat(betti.b(2 * i)));
    rep.expected = e;
    rep.match = (fit == e);
    return rep;
}

} // namespace hk
