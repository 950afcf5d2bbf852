#include "hk/asym.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace hk {

// --- measures and moments -----------------------------------------------------

DiscreteMeasure DiscreteMeasure::from_poly(const UniLaurent& e) {
    DiscreteMeasure mu;
    for (auto& [exp, c] : e.terms()) {
        if (c < 0) throw std::invalid_argument("measure_from_poly: negative coefficient");
        mu.points.emplace_back(ExactRat(exp), c);
    }
    return mu;
}

DiscreteMeasure DiscreteMeasure::delta(const ExactRat& at) {
    DiscreteMeasure mu;
    mu.points.emplace_back(at, ExactRat(1));
    return mu;
}

void DiscreteMeasure::add_mass(const ExactRat& at, const ExactRat& mass) {
    if (mass < 0) throw std::invalid_argument("DiscreteMeasure: negative mass");
    auto it = std::lower_bound(points.begin(), points.end(), at,
                               [](const auto& p, const ExactRat& x) { return p.first < x; });
    if (it != points.end() && it->first == at) it->second += mass;
    else points.insert(it, {at, mass});
}

ExactRat DiscreteMeasure::total_mass() const {
    ExactRat s(0);
    for (auto& [x, m] : points) s += m;
    return s;
}

ExactRat DiscreteMeasure::raw_moment(int k) const {
    ExactRat s(0);
    for (auto& [x, m] : points) s += pow_rat(x, k) * m;
    return s;
}

DiscreteMeasure DiscreteMeasure::translated(const ExactRat& a) const {
    DiscreteMeasure mu;
    for (auto& [x, m] : points) mu.points.emplace_back(x - a, m);
    return mu;
}

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    DiscreteMeasure out;
    std::map<ExactRat, ExactRat> acc;
    for (auto& [xa, ma] : a.points)
        for (auto& [xb, mb] : b.points) acc[xa + xb] += ma * mb;
    for (auto& [x, m] : acc)
        if (m != 0) out.points.emplace_back(x, m);
    return out;
}

MomentReport moments(const DiscreteMeasure& mu, int K, bool standardize) {
    MomentReport rep;
    for (int k = 0; k <= K; ++k) rep.raw.push_back(mu.raw_moment(k));
    // factorial moments sum C(x,k) mass; rational support uses the falling
    // factorial x(x-1)...(x-k+1)/k!.
    for (int k = 0; k <= K; ++k) {
        ExactRat s(0);
        for (auto& [x, m] : mu.points) {
            ExactRat f(1);
            for (int j = 0; j < k; ++j) f *= (x - ExactRat(j));
            s += f / ExactRat(factorial((unsigned long)k)) * m;
        }
        rep.factorial.push_back(s);
    }
    if (standardize && rep.raw[0] > 0 && K >= 2) {
        ExactRat mean = rep.raw[1] / rep.raw[0];
        ExactRat var = rep.raw[2] / rep.raw[0] - mean * mean;
        if (var > 0) {
            double sd = std::sqrt(to_double(var));
            for (int k = 0; k <= K; ++k) {
                // central moment, exact, then scaled
                ExactRat c(0);
                for (auto& [x, m] : mu.points) c += pow_rat(x - mean, k) * m;
                c /= rep.raw[0];
                rep.standardized.push_back(to_double(c) / std::pow(sd, k));
            }
            rep.standardized_valid = true;
        }
    }
    return rep;
}

std::vector<ExactRat> factorial_moments(const UniLaurent& e, int K) {
    // coefficients of E(1+eta) up to eta^K: m_k = sum_i C(i,k) e_i.
    std::vector<ExactRat> out((size_t)K + 1, ExactRat(0));
    for (auto& [i, c] : e.terms()) {
        if (i < 0) throw std::invalid_argument("factorial_moments: negative exponent");
        ExactRat binom(1); // C(i,k), updated incrementally
        for (int k = 0; k <= K; ++k) {
            if (k > 0) {
                if (i < k) break;
                binom = binom * ExactRat(i - k + 1) / ExactRat(k);
            }
            out[(size_t)k] += binom * c;
        }
    }
    return out;
}

// --- B-splines and the Grassmannian limit ---------------------------------------

std::vector<ExactRat> bspline_moments(int r, int K) {
    if (r < 1) throw std::invalid_argument("bspline_moments: r >= 1 required");
    // MGF ((e^{t/2}-e^{-t/2})/t)^r = (sum t^{2m}/(4^m (2m+1)!))^r.
    std::vector<ExactRat> base((size_t)K + 1, ExactRat(0));
    for (int m = 0; 2 * m <= K; ++m)
        base[(size_t)(2 * m)] = ExactRat(1) / ExactRat(pow_int(ExactInt(4), (unsigned long)m) *
                                                       factorial((unsigned long)(2 * m + 1)));
    std::vector<ExactRat> acc((size_t)K + 1, ExactRat(0));
    acc[0] = 1;
    for (int i = 0; i < r; ++i) {
        std::vector<ExactRat> next((size_t)K + 1, ExactRat(0));
        for (int a = 0; a <= K; ++a) {
            if (acc[(size_t)a] == 0) continue;
            for (int b = 0; a + b <= K; ++b)
                if (base[(size_t)b] != 0) next[(size_t)(a + b)] += acc[(size_t)a] * base[(size_t)b];
        }
        acc = std::move(next);
    }
    std::vector<ExactRat> out((size_t)K + 1);
    ExactInt f(1);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) f *= k;
        out[(size_t)k] = acc[(size_t)k] * ExactRat(f);
    }
    return out;
}

GrassmannLimitReport grassmann_limit_check(int r, int n, int K) {
    GrassmannLimitReport rep;
    rep.r = r;
    rep.n = n;
    rep.K = K;
    UniLaurent e = gauss_binomial(n + r, r);
    std::vector<ExactRat> spline = bspline_moments(r, K);

    // Normalized measure with the paper's centering rn/2 and scale 1/n.
    ExactRat mass(0);
    for (auto& [j, c] : e.terms()) mass += c;
    std::vector<ExactRat> cm((size_t)K + 1, ExactRat(0));
    ExactRat center = ExactRat(r) * ExactRat(n) / ExactRat(2);
    for (auto& [j, c] : e.terms()) {
        ExactRat x = (ExactRat(j) - center) / ExactRat(n);
        for (int k = 0; k <= K; ++k) cm[(size_t)k] += pow_rat(x, k) * c;
    }
    for (int k = 0; k <= K; ++k) cm[(size_t)k] /= mass;

    ExactRat fact(1);
    for (int i = 2; i <= r; ++i) fact *= i;
    rep.mass_ratio = to_double(fact * mass / pow_rat(ExactRat(n), r));

    for (int k = 0; k <= K; ++k) {
        double mk = to_double(cm[(size_t)k]);
        double sk = to_double(spline[(size_t)k]);
        rep.measure_moments.push_back(mk);
        rep.spline_moments.push_back(sk);
        rep.rel_errors.push_back(sk != 0 ? std::abs(mk - sk) / std::abs(sk) : std::abs(mk));
    }
    // Variance-normalized comparison.
    if (K >= 2) {
        double v_m = rep.measure_moments[2], v_s = rep.spline_moments[2];
        for (int k = 0; k <= K; ++k) {
            double a = rep.measure_moments[(size_t)k] / std::pow(v_m, k / 2.0);
            double b = rep.spline_moments[(size_t)k] / std::pow(v_s, k / 2.0);
            rep.standardized_errors.push_back(b != 0 ? std::abs(a - b) / std::abs(b) : std::abs(a));
        }
    }
    return rep;
}

// --- partition length CDF and Gumbel -------------------------------------------

std::vector<ExactInt> partition_length_cdf_all(int n) {
    if (n < 0 || n > 4000) throw std::invalid_argument("partition_length_cdf: n in [0, 4000] required");
    // f[m] = #partitions of m into parts <= k, updated in place over k.
    std::vector<ExactInt> f((size_t)n + 1);
    f[0] = 1;
    std::vector<ExactInt> phi((size_t)n + 1);
    phi[0] = n == 0 ? ExactInt(1) : ExactInt(0);
    for (int k = 1; k <= n; ++k) {
        for (int m = k; m <= n; ++m) f[(size_t)m] += f[(size_t)(m - k)];
        phi[(size_t)k] = f[(size_t)n];
    }
    if (n == 0) phi[0] = 1;
    return phi;
}

ExactInt partition_length_cdf(int n, long x) {
    if (x < 0) return ExactInt(0);
    auto phi = partition_length_cdf_all(n);
    return phi[(size_t)std::min<long>(x, n)];
}

GumbelReport gumbel_check(const std::vector<int>& ns) {
    GumbelReport rep;
    const double c = M_PI / std::sqrt(6.0);
    auto gumbel_cdf = [&](double x) { return std::exp(-std::exp(-c * x) / c); };
    auto gumbel_inv = [&](double u) { return -std::log(-c * std::log(u)) / c; };

    for (int n : ns) {
        auto phi = partition_length_cdf_all(n);
        ExactInt total = phi[(size_t)n];
        std::vector<double> g((size_t)n + 1);
        for (int k = 0; k <= n; ++k)
            g[(size_t)k] = to_double(ExactRat(phi[(size_t)k]) / ExactRat(total));
        // Two-quantile affine fit.
        auto inv_emp = [&](double u) {
            int lo = 0;
            while (lo <= n && g[(size_t)lo] < u) ++lo;
            if (lo == 0) return 0.0;
            double g0 = g[(size_t)(lo - 1)], g1 = g[(size_t)lo];
            return (lo - 1) + (u - g0) / (g1 - g0);
        };
        double u1 = 0.25, u2 = 0.75;
        double alpha = (inv_emp(u2) - inv_emp(u1)) / (gumbel_inv(u2) - gumbel_inv(u1));
        double beta = inv_emp(u1) - alpha * gumbel_inv(u1);
        double sup = 0;
        for (int k = 0; k <= n; ++k) {
            double fx = gumbel_cdf((k - beta) / alpha);
            sup = std::max(sup, std::abs(g[(size_t)k] - fx));
            if (k > 0) sup = std::max(sup, std::abs(g[(size_t)(k - 1)] - fx));
        }
        rep.ns.push_back(n);
        rep.sup_dist.push_back(sup);
        rep.alpha_fit.push_back(alpha);
        rep.beta_fit.push_back(beta);
    }
    rep.strictly_decreasing = true;
    for (size_t i = 1; i < rep.sup_dist.size(); ++i)
        if (rep.sup_dist[i] >= rep.sup_dist[i - 1]) rep.strictly_decreasing = false;
    return rep;
}

double GumbelReport::alpha_paper(double n) const { return std::sqrt(n); }
double GumbelReport::beta_paper(double n) const {
    const double c = M_PI / std::sqrt(6.0);
    return 2.0 / c * std::sqrt(n) * std::log(n);
}

// --- Wright constants and Airy moments ------------------------------------------

std::vector<ExactRat> wright_constants(int K) {
    if (K < 1) throw std::invalid_argument("wright_constants: K >= 1 required");
    // F = sum (1/6)_n (5/6)_n / n! (3T/2)^n ; c = log F.
    std::vector<ExactRat> f((size_t)K + 1);
    f[0] = 1;
    ExactRat poch(1);
    for (int n = 1; n <= K; ++n) {
        // (1/6)_n (5/6)_n / n! * (3/2)^n, built incrementally
        ExactRat a = ExactRat(1, 6) + ExactRat(n - 1);
        ExactRat b = ExactRat(5, 6) + ExactRat(n - 1);
        poch = poch * a * b / ExactRat(n) * ExactRat(3, 2);
        f[(size_t)n] = poch;
    }
    // log via l_n = f_n - (1/n) sum_{k<n} k l_k f_{n-k}
    std::vector<ExactRat> l((size_t)K + 1);
    for (int n = 1; n <= K; ++n) {
        ExactRat acc = f[(size_t)n];
        for (int k = 1; k < n; ++k) acc -= er(k, n) * l[(size_t)k] * f[(size_t)(n - k)];
        l[(size_t)n] = acc;
    }
    return std::vector<ExactRat>(l.begin() + 1, l.end());
}

double AiryMoment::value() const {
    double v = to_double(rational);
    return with_sqrt_2pi ? v * std::sqrt(2.0 * M_PI) : v;
}

namespace {

// rho_k as rational (k odd) or rational * sqrt(2 pi) (k even, incl. rho_0).
AiryMoment rho_constant(int k, const std::vector<ExactRat>& c) {
    AiryMoment out;
    if (k == -1) {
        out.rational = ExactRat(1);
        return out;
    }
    if (k == 0) {
        out.rational = ExactRat(1, 4);
        out.with_sqrt_2pi = true;
        return out;
    }
    const ExactRat& ck = c[(size_t)(k - 1)];
    if (k % 2) {
        // Gamma(3k/2) = (2m)! sqrt(pi) / (4^m m!), m = (3k-1)/2
        long m = (3L * k - 1) / 2;
        ExactRat val = ck * ExactRat(pow_int(ExactInt(2), (unsigned long)m)) *
                       ExactRat(factorial((unsigned long)m)) /
                       ExactRat(factorial((unsigned long)(2 * m)));
        out.rational = val;
    } else {
        // rho_k = sqrt(2 pi) c_k / (2^{3k/2} (3k/2 - 1)!)
        long h = 3L * k / 2;
        out.rational = ck / ExactRat(pow_int(ExactInt(2), (unsigned long)h) *
                                     factorial((unsigned long)(h - 1)));
        out.with_sqrt_2pi = true;
    }
    return out;
}

} // namespace

std::vector<AiryMoment> airy_moments(int K) {
    std::vector<ExactRat> c = K >= 2 ? wright_constants(K) : std::vector<ExactRat>{};
    std::vector<AiryMoment> out;
    ExactInt f(1);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) f *= k;
        AiryMoment rho = rho_constant(k - 1, c);
        rho.rational *= ExactRat(f);
        out.push_back(rho);
    }
    return out;
}

WrightRatioReport wright_ratio_check(const std::vector<long>& ns, int K) {
    WrightRatioReport rep;
    rep.ns = ns;
    rep.K = K;
    long nmax = *std::max_element(ns.begin(), ns.end());
    auto band = connected_count_band((int)nmax, K);
    std::vector<ExactRat> c = wright_constants(std::max(1, K));
    for (long n : ns) {
        const auto& row = band[(size_t)n];
        std::vector<double> ratios;
        ExactInt m0 = row[0];
        check(m0 == pow_int(ExactInt(n), (unsigned long)(n - 2)), "wright_ratio: m_{n,0} != n^{n-2}");
        for (int k = 0; k <= K; ++k) {
            if ((size_t)k >= row.size()) break;
            // ratio = m_{n,k} / (m_{n,0} rho_{k-1} n^{3k/2})
            AiryMoment rho = rho_constant(k - 1, c);
            ExactRat base = ExactRat(row[(size_t)k]) / ExactRat(m0);
            // divide by n^{3k/2} = n^{k} * n^{k/2}
            base /= pow_rat(ExactRat(n), k);
            double val = to_double(base) / std::pow((double)n, k / 2.0) / rho.value();
            ratios.push_back(val);
        }
        rep.ratios.push_back(std::move(ratios));
    }
    return rep;
}

// --- tree function and saddle identities ----------------------------------------

namespace {

using Series = std::vector<ExactRat>; // coefficients of T^0..T^N (or w-powers)

Series series_mul(const Series& a, const Series& b) {
    Series out(a.size(), ExactRat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < a.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_exp(const Series& a) {
    check(a[0] == 0, "series_exp: constant term must vanish");
    Series e(a.size(), ExactRat(0));
    e[0] = 1;
    // n e_n = sum_{k=1}^{n} k a_k e_{n-k}
    for (size_t n = 1; n < a.size(); ++n) {
        ExactRat acc(0);
        for (size_t k = 1; k <= n; ++k)
            if (a[k] != 0) acc += ExactRat((long)k) * a[k] * e[n - k];
        e[n] = acc / ExactRat((long)n);
    }
    return e;
}

Series series_log1m(const Series& w) {
    // log(1 - w) for w with zero constant term: -(sum w^m / m).
    Series acc(w.size(), ExactRat(0));
    Series pw(w.size(), ExactRat(0));
    pw[0] = 1;
    for (size_t m = 1; m < w.size(); ++m) {
        pw = series_mul(pw, w);
        bool zero = true;
        for (auto& x : pw)
            if (x != 0) { zero = false; break; }
        if (zero) break;
        for (size_t i = 0; i < w.size(); ++i)
            if (pw[i] != 0) acc[i] -= pw[i] / ExactRat((long)m);
    }
    return acc;
}

// Composition a(T(w)) for T with zero constant term, by Horner.
Series series_compose(const Series& a, const Series& t) {
    Series acc(a.size(), ExactRat(0));
    for (size_t i = a.size(); i-- > 0;) {
        acc = series_mul(acc, t);
        acc[0] += a[i];
    }
    return acc;
}

} // namespace

bool SaddleReport::all_ok() const {
    if (!tree_eqn_ok || !c0_ok || !c1_ok) return false;
    for (bool b : ek_polynomial)
        if (!b) return false;
    for (size_t i = 0; i < ek_at_1.size(); ++i)
        if (ek_at_1[i] != wright[i]) return false;
    return true;
}

SaddleReport tree_saddle_identities(int order, int kmax) {
    if (order < 4 || order > 200) throw std::invalid_argument("tree_saddle_identities: order in [4,200]");
    SaddleReport rep;
    rep.order = order;
    size_t N = (size_t)order + 1;

    // w(T) = sum n^{n-1} T^n / n!
    Series w(N, ExactRat(0));
    for (size_t n = 1; n < N; ++n)
        w[n] = ExactRat(pow_int(ExactInt((long)n), (unsigned long)(n - 1))) /
               ExactRat(factorial((unsigned long)n));

    // (i) T e^{w(T)} = w(T)
    {
        Series ew = series_exp(w);
        Series tew(N, ExactRat(0));
        for (size_t i = 0; i + 1 < N; ++i) tew[i + 1] = ew[i];
        rep.tree_eqn_ok = (tew == w);
    }

    // connected-count EGFs C_k(T)
    auto band = connected_count_band(order, kmax);
    std::vector<Series> C((size_t)kmax + 1, Series(N, ExactRat(0)));
    for (int n = 1; n <= order; ++n) {
        const auto& row = band[(size_t)n];
        for (int k = 0; k <= kmax; ++k)
            if ((size_t)k < row.size())
                C[(size_t)k][(size_t)n] = ExactRat(row[(size_t)k]) / ExactRat(factorial((unsigned long)n));
    }

    // (ii) C_0 = w - w^2/2
    {
        Series rhs = w;
        Series w2 = series_mul(w, w);
        for (size_t i = 0; i < N; ++i) rhs[i] -= w2[i] / ExactRat(2);
        rep.c0_ok = (C[0] == rhs);
    }
    // (iii) C_1 = -log(1-w)/2 - w/2 - w^2/4 (Renyi's unicyclic-graph formula)
    {
        Series rhs = series_log1m(w);
        Series w2 = series_mul(w, w);
        for (size_t i = 0; i < N; ++i)
            rhs[i] = -rhs[i] / ExactRat(2) - w[i] / ExactRat(2) - w2[i] / ExactRat(4);
        rep.c1_ok = (C[1] == rhs);
    }
    // (iv) k >= 2: in the w variable, (1-w)^{3(k-1)} C_k is the polynomial E_{k-1}
    std::vector<ExactRat> cks = wright_constants(std::max(1, kmax));
    // T as a series in the w variable: T(w) = w e^{-w}.
    Series t_of_w(N, ExactRat(0));
    {
        ExactRat sign(1);
        ExactInt f(1);
        for (size_t i = 0; i + 1 < N; ++i) {
            if (i > 0) {
                f *= (long)i;
                sign = -sign;
            }
            t_of_w[i + 1] = sign / ExactRat(f);
        }
    }
    for (int k = 2; k <= kmax; ++k) {
        Series d = series_compose(C[(size_t)k], t_of_w); // C_k as a series in w
        // multiply by (1-w)^{3(k-1)}
        for (int rep_i = 0; rep_i < 3 * (k - 1); ++rep_i) {
            Series next(N, ExactRat(0));
            for (size_t i = 0; i < N; ++i) {
                next[i] = d[i];
                if (i > 0) next[i] -= d[i - 1];
            }
            d = std::move(next);
        }
        // polynomial check: find degree, require a zero tail to the order cap
        long deg = -1;
        for (size_t i = 0; i < N; ++i)
            if (d[i] != 0) deg = (long)i;
        bool poly = deg <= (long)(3 * k + 2) && deg < (long)N - 4;
        rep.ek_polynomial.push_back(poly);
        ExactRat at1(0);
        for (size_t i = 0; i < N; ++i) at1 += d[i];
        rep.ek_at_1.push_back(at1);
        rep.wright.push_back(cks[(size_t)(k - 2)]);
    }
    return rep;
}

// --- bipartite alpha/beta --------------------------------------------------------

BipartiteTable bipartite_alpha_beta(int n, int K) {
    if (n < 1 || n > 8) throw std::invalid_argument("bipartite_alpha_beta: n in [1,8]");
    BipartiteTable tab;
    tab.n = n;
    tab.K = K;

    // Route 1: the explicit partition sum.
    for (int k = 0; k <= K; ++k) {
        ExactRat acc(0);
        for (auto& lam : enum_partitions(n)) {
            long nlp = 0; // n(lambda') = sum C(i,2) m_i
            ExactRat denom(1);
            for (auto& [i, m] : lam.multiplicities()) {
                nlp += (long)i * (i - 1) / 2 * m;
                denom *= ExactRat(factorial((unsigned long)m)) *
                         pow_rat(ExactRat(factorial((unsigned long)i)), m);
            }
            long l = lam.length();
            ExactRat term = ExactRat(factorial((unsigned long)(l - 1))) / denom *
                            pow_rat(ExactRat(nlp), n + k - 1);
            if ((l - 1) % 2) term = -term;
            acc += term;
        }
        acc *= ExactRat(n);
        check(acc.get_den() == 1, "bipartite beta: non-integer value");
        tab.beta_sum.push_back(acc.get_num());
    }

    // Route 2: alpha through ((e^t - 1)/t)^{n-1} R_{K_n}(e^t).
    UniLaurent r = complete_R_upto(n)[(size_t)n];
    size_t N = (size_t)K + 1;
    std::vector<ExactRat> factor(N, ExactRat(0));
    for (size_t m = 0; m < N; ++m) factor[m] = ExactRat(1) / ExactRat(factorial((unsigned long)(m + 1)));
    std::vector<ExactRat> acc(N, ExactRat(0));
    acc[0] = 1;
    for (int i = 0; i < n - 1; ++i) {
        std::vector<ExactRat> next(N, ExactRat(0));
        for (size_t a = 0; a < N; ++a) {
            if (acc[a] == 0) continue;
            for (size_t b = 0; a + b < N; ++b) next[a + b] += acc[a] * factor[b];
        }
        acc = std::move(next);
    }
    // times R_{K_n}(e^t) = sum_j r_j e^{jt}
    std::vector<ExactRat> rexp(N, ExactRat(0));
    for (auto& [j, c] : r.terms())
        for (size_t m = 0; m < N; ++m)
            rexp[m] += c * ExactRat(pow_int(ExactInt(j), (unsigned long)m)) / ExactRat(factorial((unsigned long)m));
    std::vector<ExactRat> rhs(N, ExactRat(0));
    for (size_t a = 0; a < N; ++a) {
        if (acc[a] == 0) continue;
        for (size_t b = 0; a + b < N; ++b) rhs[a + b] += acc[a] * rexp[b];
    }
    for (int k = 0; k <= K; ++k) {
        ExactRat alpha = rhs[(size_t)k] * ExactRat(factorial((unsigned long)k));
        ExactRat beta = alpha * ExactRat(big_binomial(n + k - 1, k));
        check(beta.get_den() == 1, "bipartite beta (gf route): non-integer value");
        tab.beta_gf.push_back(beta.get_num());
        if (n == 3 && rhs[0] != 0) tab.alpha_ratio_n3.push_back(rhs[(size_t)k] * ExactRat(factorial((unsigned long)k)) / rhs[0]);
    }
    tab.agree = (tab.beta_sum == tab.beta_gf);
    return tab;
}

// --- unimodality and weak Hard Lefschetz ----------------------------------------

namespace {

bool is_unimodal(const std::vector<ExactInt>& v, size_t start, size_t step) {
    bool descending = false;
    for (size_t i = start + step; i < v.size(); i += step) {
        if (v[i] < v[i - step]) descending = true;
        else if (v[i] > v[i - step] && descending) return false;
    }
    return true;
}

} // namespace

UnimodalReport unimodality_check(const BettiPoly& p) {
    UnimodalReport rep;
    rep.even_unimodal = is_unimodal(p.coeffs, 0, 2);
    rep.odd_unimodal = p.coeffs.size() < 2 || is_unimodal(p.coeffs, 1, 2);
    rep.full_unimodal = is_unimodal(p.coeffs, 0, 1);
    return rep;
}

WhlReport weak_hl_check(const BettiPoly& p, long k) {
    WhlReport rep;
    rep.k = k;
    for (long i = 0; i <= k; ++i)
        for (long j = 0; j <= k - i; ++j) {
            ++rep.checked;
            if (p.b(i) > p.b(i + 2 * j)) ++rep.violations;
        }
    return rep;
}

} // namespace hk
