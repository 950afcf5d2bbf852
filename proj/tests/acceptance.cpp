// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "hk/asym.hpp"
#include "hk/betti.hpp"
#include "hk/fq.hpp"
#include "hk/graph.hpp"
#include "hk/higgs.hpp"
#include "hk/series.hpp"

using namespace hk;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t_start;

void begin() { t_start = std::chrono::steady_clock::now(); }

double elapsed() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
}

void report(int idx, const std::string& name, bool pass, const std::string& detail = "") {
    printf("%s criterion-%02d %s%s%s [%.1fs]\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
           detail.empty() ? "" : " -- ", detail.c_str(), elapsed());
    fflush(stdout);
    if (!pass) ++failures;
}

ExactInt mag(const char* digits, int zeros) { return ei(std::string(digits) + std::string((size_t)zeros, '0')); }

bool in_range(const ExactInt& v, const ExactInt& lo, const ExactInt& hi) { return lo <= v && v <= hi; }

std::string s(const ExactInt& v) { return v.get_str(); }

} // namespace

int main() {
    const int threads = 2;

    // 1. Toric quiver variety of K_40
    begin();
    {
        auto p = poincare_toric_complete(40);
        bool ok = p.degree() == 1482;
        ok = ok && in_range(p.b(1482), mag("18", 45), mag("22", 45));
        ok = ok && p.argmax() == 1288;
        ok = ok && in_range(p.b(1288), mag("72", 57), mag("88", 57));
        ok = ok && unimodality_check(p).even_unimodal;
        ok = ok && elapsed() < 300;
        report(1, "toric K_40", ok,
               "deg=" + std::to_string(p.degree()) + " b_top=" + s(p.b(1482)) +
                   " argmax=" + std::to_string(p.argmax()) + " b_max=" + s(p.max_coeff()));
    }

    // 2. Hilbert scheme of 500 points
    begin();
    {
        auto p = poincare_hilbert(500);
        bool ok = p.degree() == 998 && p.b(998) == 1;
        ok = ok && p.argmax() == 896;
        ok = ok && in_range(p.b(896), mag("50", 18), mag("60", 18));
        ok = ok && unimodality_check(p).even_unimodal;
        ok = ok && elapsed() < 60;
        report(2, "hilbert n=500", ok,
               "deg=" + std::to_string(p.degree()) + " argmax=" + std::to_string(p.argmax()) +
                   " b_max=" + s(p.max_coeff()));
    }

    // 3. ADHM (40, 20)
    begin();
    {
        auto p = poincare_adhm(40, 20);
        bool ok = p.degree() == 1598 && p.b(1598) == 1;
        ok = ok && p.argmax() == 1086;
        ok = ok && in_range(p.b(1086), mag("86", 16), mag("106", 16));
        ok = ok && elapsed() < 300;
        report(3, "adhm (40,20)", ok,
               "deg=" + std::to_string(p.degree()) + " argmax=" + std::to_string(p.argmax()) +
                   " b_max=" + s(p.max_coeff()));
    }

    // 4. T*Gr(100, 30)
    begin();
    {
        auto p = poincare_grassmannian(100, 30);
        bool ok = p.degree() == 4200 && p.b(4200) == 1;
        ok = ok && in_range(p.b(2100), mag("78", 21), mag("96", 21));
        ok = ok && p.palindromic();
        auto uni = unimodality_check(p);
        ok = ok && uni.even_unimodal;
        auto nak = poincare_nakajima(Quiver(1, {}, {4}, {10}));
        ok = ok && (nak.coeffs == poincare_grassmannian(10, 4).coeffs);
        ok = ok && elapsed() < 60;
        report(4, "T*Gr(100,30) + nakajima reduced-size equality", ok,
               "deg=" + std::to_string(p.degree()) + " b_2100=" + s(p.b(2100)));
    }

    // 5. Quiver variety (15,7) on ten loops plus an edge
    begin();
    {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 10; ++i) e.push_back({0, 0});
        e.push_back({0, 1});
        Quiver q(2, e, {15, 7});
        auto p = poincare_quiver_indivisible(q, threads);
        bool dim_ok = 2 * p.complex_dim == 8328;
        bool top_ok = p.degree() == 3862 && p.b(3862) == 1; // paper value; see ledger
        bool max_ok = p.argmax() == 3036 && in_range(p.b(3036), mag("19", 21), mag("23", 21));
        bool ok = dim_ok && top_ok && max_ok && elapsed() < 600;
        report(5, "quiver (15,7), 10 loops + edge", ok,
               "dim_R=" + std::to_string(2 * p.complex_dim) + " top_deg=" + std::to_string(p.degree()) +
                   " b_3862=" + s(p.b(3862)) + " argmax=" + std::to_string(p.argmax()) +
                   " b_max=" + s(p.max_coeff()));
    }

    // 6. Torus g = 100
    begin();
    {
        auto p = poincare_torus(100);
        bool ok = p.degree() == 200;
        for (long i = 0; i <= 200 && ok; ++i) ok = (p.b(i) == big_binomial(200, i));
        ok = ok && p.b(100) == big_binomial(200, 100);
        report(6, "torus g=100: (1+t)^200 exactly", ok, "b_100=" + s(p.b(100)));
    }

    // 7. Higgs n=8, g=2
    begin();
    {
        BiPoly h = higgs_H(8, 2, threads);
        BiPoly hr = higgs_H_reduced(h, 2);
        bool count_ok = hr.monomial_count() == 11786; // paper value; see ledger
        auto p = poincare_higgs_from(hr, 8, 2);
        bool top_ok = p.degree() == 126 && p.b(126) == 12300;
        bool max_ok = p.argmax() == 106 && in_range(p.max_coeff(), mag("153", 8), mag("187", 8));
        auto uni = unimodality_check(p);
        bool uni_ok = uni.even_unimodal && uni.odd_unimodal && !uni.full_unimodal;
        bool ok = count_ok && top_ok && max_ok && uni_ok && elapsed() < 1800;
        report(7, "higgs n=8 g=2", ok,
               "monomials=" + std::to_string(hr.monomial_count()) + " (full H_8: " +
                   std::to_string(h.monomial_count()) + ") top=" + s(p.b(126)) + "@126 max=" +
                   s(p.max_coeff()) + "@" + std::to_string(p.argmax()));
    }

    // 8. Paper tables
    begin();
    {
        auto c = wright_constants(5);
        bool ok = c[0] == ExactRat(5, 24) && c[1] == ExactRat(5, 16) &&
                  c[2] == ExactRat(1105, 1152) && c[3] == ExactRat(565, 128) &&
                  c[4] == ExactRat(82825, 3072);
        auto am = airy_moments(2);
        ok = ok && std::abs(am[1].value() - 0.626657068) < 1e-9;
        ok = ok && !am[2].with_sqrt_2pi && am[2].rational == ExactRat(5, 12);
        const long table[5][6] = {{1, 0, 0, 0, 0, 0},
                                  {1, 1, 1, 1, 1, 1},
                                  {3, 12, 39, 120, 363, 1092},
                                  {16, 156, 1120, 7260, 45136, 275436},
                                  {125, 2360, 30925, 353500, 3795225, 39474960}};
        for (int n = 1; n <= 5; ++n) {
            auto tab = bipartite_alpha_beta(n, 5);
            ok = ok && tab.agree;
            for (int k = 0; k <= 5; ++k) ok = ok && (tab.beta_sum[(size_t)k] == table[n - 1][k]);
        }
        report(8, "paper tables: wright, airy, beta", ok);
    }

    // 9. Cross-formula suite
    begin();
    {
        bool ok = true;
        for (int w = 1; w <= 8 && ok; ++w)
            for (int v = 1; v <= std::min(4, w) && ok; ++v)
                ok = (poincare_nakajima(Quiver(1, {}, {v}, {w})).coeffs ==
                      poincare_grassmannian(w, v).coeffs);
        bool nak_gr = ok;
        for (int n = 1; n <= 8 && ok; ++n)
            for (int m = 1; m <= 3 && ok; ++m)
                ok = (poincare_nakajima(Quiver(1, {{0, 0}}, {n}, {m})).coeffs ==
                      poincare_adhm(n, m).coeffs);
        bool nak_adhm = ok;
        std::vector<Graph> graphs = {Graph::complete(4), Graph::complete(5), Graph::cycle(6),
                                     Graph::complete_bipartite(2, 3), Graph::path(4),
                                     Graph(2, {{0, 1}, {0, 0}})};
        for (auto& g : graphs) {
            if (!ok) break;
            Quiver q(g.n, g.edges, std::vector<long>((size_t)g.n, 1));
            ok = (poincare_quiver_indivisible(q).coeffs == poincare_toric_quiver(g).coeffs);
        }
        bool kac_toric = ok;
        for (int g = 1; g <= 2 && ok; ++g)
            for (int n = 1; n <= 4 && ok; ++n) {
                BiPoly h = higgs_H(n, g, threads);
                UniLaurent a("q");
                for (auto& [e, c] : h.terms())
                    if (e.first == 0) a.add_term(e.second / 2, c);
                std::vector<std::pair<int, int>> loops((size_t)g, {0, 0});
                ok = (a == kac_polynomial_exact(Quiver(1, loops, {n}), {n}));
            }
        bool higgs_kac = ok;
        {
            TruncSeries<ExactRat> f({"T", "U"}, {4, 3}, ExactRat(0));
            f.add_term({1, 0}, ExactRat(1));
            f.add_term({0, 1}, ExactRat(-2, 5));
            f.add_term({2, 1}, ExactRat(7, 3));
            ok = ok && (pleth_log(pleth_exp(f)) == f);
        }
        report(9, "cross-formula suite", ok,
               std::string("nak/gr=") + (nak_gr ? "ok" : "FAIL") + " nak/adhm=" +
                   (nak_adhm ? "ok" : "FAIL") + " kac/toric=" + (kac_toric ? "ok" : "FAIL") +
                   " higgs/kac=" + (higgs_kac ? "ok" : "FAIL"));
    }

    // 10. Finite-field oracle
    begin();
    {
        int configs = 0;
        bool ok = true;
        auto run = [&](const Quiver& q, std::vector<long> xi, long p) {
            FqConfig cfg{q, p, std::move(xi)};
            ok = ok && (count_fiber_bruteforce(cfg) == count_fiber_fourier(cfg));
            ++configs;
        };
        for (long p : {2L, 3L, 5L}) {
            for (long w = 1; w <= 3; ++w) run(Quiver(1, {}, {1}, {w}), {1}, p);
            run(Quiver(1, {{0, 0}}, {1}, {1}), {1}, p);
        }
        for (long p : {2L, 3L}) run(Quiver(2, {{0, 1}}, {1, 1}, {1, 0}), {1, 1}, p);
        ok = ok && configs >= 12;
        auto rep = check_katz(Quiver(1, {}, {1}, {2}), {1}, {2, 3, 5}, poincare_grassmannian(2, 1));
        ok = ok && rep.freeness_ok && rep.match;
        auto point = check_katz(Quiver(1, {}, {1}, {1}), {1}, {2, 3, 5}, poincare_grassmannian(1, 1));
        ok = ok && point.freeness_ok && point.match;
        auto hilb = check_katz(Quiver(1, {{0, 0}}, {1}, {1}), {1}, {2, 3, 5}, poincare_hilbert(1));
        ok = ok && hilb.freeness_ok && hilb.match;
        report(10, "finite-field oracle (fourier = brute force, katz)", ok,
               std::to_string(configs) + " configs");
    }

    // 11. Saddle identities
    begin();
    {
        auto rep = tree_saddle_identities(40, 4);
        bool ok = rep.tree_eqn_ok && rep.c0_ok && rep.c1_ok;
        for (size_t i = 0; i < rep.ek_at_1.size(); ++i)
            ok = ok && rep.ek_polynomial[i] && rep.ek_at_1[i] == rep.wright[i];
        report(11, "saddle identities to order 40 (E_k(1) = c_k, k <= 3)", ok);
    }

    // 12. Limit-law trends
    begin();
    {
        auto g = grassmann_limit_check(3, 120, 4);
        bool grass_ok = true;
        for (int k = 2; k <= 4; ++k) grass_ok = grass_ok && g.standardized_errors[(size_t)k] <= 0.05;
        auto gm = gumbel_check({250, 500, 1000, 2000});
        bool gumbel_ok = gm.strictly_decreasing;
        auto w = wright_ratio_check({50, 100, 200}, 3);
        double r200 = w.ratios[2][1];
        bool wright_within = std::abs(r200 - 1.0) <= 0.10; // paper-rate assumption; see ledger
        bool monotone = true;
        for (int k = 1; k <= 3; ++k)
            for (size_t i = 1; i < w.ns.size(); ++i)
                monotone = monotone && (w.ratios[i][(size_t)k] > w.ratios[i - 1][(size_t)k]);
        bool ok = grass_ok && gumbel_ok && wright_within && monotone;
        char buf[160];
        snprintf(buf, sizeof buf, "grassmann=%s gumbel=%s wright@200=%.4f (%s) monotone=%s",
                 grass_ok ? "ok" : "FAIL", gumbel_ok ? "ok" : "FAIL", r200,
                 wright_within ? "ok" : "FAIL", monotone ? "ok" : "FAIL");
        report(12, "limit-law trends", ok, buf);
    }

    // 13. Weak Hard Lefschetz inequalities
    begin();
    {
        bool ok = true;
        auto run = [&](const BettiPoly& p, long k, const char* name) {
            auto rep = weak_hl_check(p, k);
            if (!rep.all_hold()) {
                ok = false;
                printf("  WHL violations for %s: %ld of %ld\n", name, rep.violations, rep.checked);
            }
        };
        run(poincare_grassmannian(10, 4), 24, "grassmannian(10,4)");
        run(poincare_hilbert(50), 49, "hilbert(50)");
        run(poincare_adhm(10, 2), 19, "adhm(10,2)");
        run(poincare_toric_complete(8), 21, "toric(K_8)");
        auto ph = poincare_higgs(4, 2, threads);
        run(ph, ph.complex_dim / 2, "higgs(4,2)");
        report(13, "weak Hard Lefschetz inequalities", ok);
    }

    printf("%s: %d of 13 criteria failed\n", failures == 0 ? "ALL PASS" : "RESULT", failures);
    return failures;
}
