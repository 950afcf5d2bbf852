// Command-line front end: compute Poincare polynomials of the implemented
// families, emit plot data, run moment/limit analyses and verification
// suites.

#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hk/asym.hpp"
#include "hk/betti.hpp"
#include "hk/fq.hpp"
#include "hk/graph.hpp"
#include "hk/higgs.hpp"
#include "hk/io.hpp"

using namespace hk;
using nlohmann::json;

namespace {

struct OutputOpts {
    std::string out;
    std::string format = "csv";
    int threads = 0;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o, bool with_format = true) {
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    if (with_format) cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", o.threads, "worker threads (default: machine parallelism)");
}

void emit(const OutputOpts& o, const std::string& content) {
    if (o.out.empty()) std::fwrite(content.data(), 1, content.size(), stdout);
    else write_file(o.out, content);
}

void emit_betti(const OutputOpts& o, const BettiPoly& p) {
    emit(o, o.format == "json" ? betti_to_json(p) : betti_to_csv(p));
}

void emit_laurent(const OutputOpts& o, const UniLaurent& a, const std::string& family,
                  const std::map<std::string, long>& params) {
    emit(o, o.format == "json" ? laurent_to_json(a, family, params) : laurent_to_csv(a));
}

json report_entry(const std::string& name, json params, json values, bool pass, double tol) {
    json j;
    j["check"] = name;
    j["params"] = std::move(params);
    j["values"] = std::move(values);
    j["pass"] = pass;
    j["tolerance"] = tol;
    return j;
}

// --- verification suites -----------------------------------------------------

json suite_cross_formulas(int threads) {
    json out = json::array();
    {
        bool ok = true;
        for (int w = 1; w <= 6 && ok; ++w)
            for (int v = 1; v <= std::min(w, 3); ++v) {
                Quiver a1(1, {}, {v}, {w});
                ok = ok && (poincare_nakajima(a1).coeffs == poincare_grassmannian(w, v).coeffs);
            }
        out.push_back(report_entry("nakajima(A1) = grassmannian", {{"v<=", 3}, {"w<=", 6}},
                                   json::array(), ok, 0));
    }
    {
        bool ok = true;
        for (int n = 1; n <= 6 && ok; ++n)
            for (int m = 1; m <= 2 && ok; ++m) {
                Quiver j(1, {{0, 0}}, {n}, {m});
                ok = (poincare_nakajima(j).coeffs == poincare_adhm(n, m).coeffs);
            }
        out.push_back(report_entry("nakajima(Jordan,n,m) = adhm(n,m)", {{"n<=", 6}, {"m<=", 2}},
                                   json::array(), ok, 0));
    }
    {
        bool ok = true;
        std::vector<Graph> graphs = {Graph::path(3), Graph::cycle(4), Graph::complete(4),
                                     Graph::complete_bipartite(2, 3)};
        for (auto& g : graphs) {
            Quiver q(g.n, g.edges, std::vector<long>((size_t)g.n, 1));
            UniLaurent a = kac_polynomial_exact(q, q.v);
            ok = ok && (poincare_quiver_indivisible(q).coeffs == poincare_toric_quiver(g).coeffs);
            ok = ok && (a == external_activity_dc(g));
        }
        out.push_back(report_entry("kac(Q,1...1) reversed = toric(Q)", {{"graphs", 4}},
                                   json::array(), ok, 0));
    }
    {
        bool ok = true;
        for (int g = 1; g <= 2; ++g)
            for (int n = 1; n <= 3; ++n) {
                BiPoly h = higgs_H(n, g, threads);
                UniLaurent a("q");
                for (auto& [e, c] : h.terms())
                    if (e.first == 0) a.add_term(e.second / 2, c);
                std::vector<std::pair<int, int>> loops((size_t)g, {0, 0});
                ok = ok && (a == kac_polynomial_exact(Quiver(1, loops, {n}), {n}));
            }
        out.push_back(report_entry("higgs_H(n,g)(0,sqrt q) = kac(S_g,(n))", {{"n<=", 3}, {"g<=", 2}},
                                   json::array(), ok, 0));
    }
    {
        // pleth_log . pleth_exp = id on a rational-coefficient sample
        TruncSeries<ExactRat> f({"T", "U"}, {4, 4}, ExactRat(0));
        f.add_term({1, 0}, ExactRat(2));
        f.add_term({0, 1}, ExactRat(-1, 3));
        f.add_term({1, 1}, ExactRat(5));
        f.add_term({2, 1}, ExactRat(-7, 2));
        bool ok = (pleth_log(pleth_exp(f)) == f);
        out.push_back(report_entry("pleth_log . pleth_exp = id", json::object(), json::array(), ok, 0));
    }
    return out;
}

json suite_paper_tables() {
    json out = json::array();
    {
        auto c = wright_constants(5);
        std::vector<std::string> want = {"5/24", "5/16", "1105/1152", "565/128", "82825/3072"};
        bool ok = true;
        json vals = json::array();
        for (int i = 0; i < 5; ++i) {
            vals.push_back(c[(size_t)i].get_str());
            ok = ok && (c[(size_t)i].get_str() == want[(size_t)i]);
        }
        out.push_back(report_entry("wright constants c_1..c_5", json::object(), vals, ok, 0));
    }
    {
        auto m = airy_moments(2);
        bool ok1 = std::abs(m[1].value() - 0.626657068) < 5e-10;
        bool ok2 = !m[2].with_sqrt_2pi && m[2].rational == ExactRat(5, 12);
        out.push_back(report_entry("airy M_1, M_2", json::object(),
                                   {m[1].value(), m[2].rational.get_str()}, ok1 && ok2, 5e-10));
    }
    {
        const long table[5][6] = {{1, 0, 0, 0, 0, 0},
                                  {1, 1, 1, 1, 1, 1},
                                  {3, 12, 39, 120, 363, 1092},
                                  {16, 156, 1120, 7260, 45136, 275436},
                                  {125, 2360, 30925, 353500, 3795225, 39474960}};
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            auto tab = bipartite_alpha_beta(n, 5);
            ok = ok && tab.agree;
            for (int k = 0; k <= 5; ++k)
                ok = ok && (tab.beta_sum[(size_t)k] == table[n - 1][k]);
        }
        out.push_back(report_entry("beta_{n,k} table (n<=5, k<=5)", json::object(), json::array(), ok, 0));
    }
    return out;
}

json suite_fq() {
    json out = json::array();
    bool all = true;
    json configs = json::array();
    auto run = [&](const Quiver& q, std::vector<long> xi, long p) {
        FqConfig cfg{q, p, std::move(xi)};
        ExactInt b = count_fiber_bruteforce(cfg);
        ExactInt f = count_fiber_fourier(cfg);
        bool ok = (b == f);
        all = all && ok;
        configs.push_back({{"q", p}, {"brute", b.get_str()}, {"fourier", f.get_str()}, {"pass", ok}});
    };
    for (long p : {2L, 3L, 5L}) {
        for (long w = 1; w <= 3; ++w) run(Quiver(1, {}, {1}, {w}), {1}, p);
        run(Quiver(1, {{0, 0}}, {1}, {1}), {1}, p);
    }
    for (long p : {2L, 3L}) run(Quiver(2, {{0, 1}}, {1, 1}, {1, 0}), {1, 1}, p);
    out.push_back(report_entry("fourier = brute force", {{"configs", configs.size()}}, configs, all, 0));
    {
        auto rep = check_katz(Quiver(1, {}, {1}, {2}), {1}, {2, 3, 5}, poincare_grassmannian(2, 1));
        out.push_back(report_entry("katz T*P1", json::object(),
                                   {rep.fitted.str(), rep.expected.str()},
                                   rep.freeness_ok && rep.match, 0));
        auto repp = check_katz(Quiver(1, {}, {1}, {1}), {1}, {2, 3, 5}, poincare_grassmannian(1, 1));
        out.push_back(report_entry("katz point", json::object(),
                                   {repp.fitted.str(), repp.expected.str()},
                                   repp.freeness_ok && repp.match, 0));
    }
    return out;
}

json suite_saddle(int order) {
    auto rep = tree_saddle_identities(order, 4);
    json vals = json::array();
    for (size_t i = 0; i < rep.ek_at_1.size(); ++i)
        vals.push_back({{"k", i + 1},
                        {"polynomial", (bool)rep.ek_polynomial[i]},
                        {"E_k(1)", rep.ek_at_1[i].get_str()},
                        {"c_k", rep.wright[i].get_str()}});
    json out = json::array();
    out.push_back(report_entry("tree equation T e^w = w", {{"order", order}}, json::array(),
                               rep.tree_eqn_ok, 0));
    out.push_back(report_entry("C_0, C_1 closed forms", {{"order", order}}, json::array(),
                               rep.c0_ok && rep.c1_ok, 0));
    out.push_back(report_entry("E_k(1) = c_k", {{"order", order}}, vals, rep.all_ok(), 0));
    return out;
}

json suite_distributions() {
    json out = json::array();
    {
        auto g = grassmann_limit_check(3, 120, 4);
        bool ok = true;
        for (int k = 2; k <= 4; ++k) ok = ok && g.standardized_errors[(size_t)k] <= 0.05;
        out.push_back(report_entry("grassmann standardized moments vs chi^(3)",
                                   {{"r", 3}, {"n", 120}, {"K", 4}},
                                   json(g.standardized_errors), ok, 0.05));
    }
    {
        auto g = gumbel_check({250, 500, 1000, 2000});
        out.push_back(report_entry("gumbel sup-distance decreasing",
                                   {{"ns", g.ns}}, json(g.sup_dist), g.strictly_decreasing, 0));
    }
    {
        auto w = wright_ratio_check({50, 100, 200}, 3);
        bool monotone = true;
        for (int k = 1; k <= 3; ++k)
            for (size_t i = 1; i < w.ns.size(); ++i)
                monotone = monotone && (w.ratios[i][(size_t)k] > w.ratios[i - 1][(size_t)k]);
        json vals = json::array();
        for (size_t i = 0; i < w.ns.size(); ++i) vals.push_back({{"n", w.ns[i]}, {"ratios", w.ratios[i]}});
        out.push_back(report_entry("wright ratios monotone toward 1", {{"K", 3}}, vals, monotone, 0.10));
    }
    return out;
}

// Generic distribution fit on a measure read from CSV.
json fit_measure(const std::string& dist, const UniLaurent& e) {
    DiscreteMeasure mu = measure_from_poly(e);
    if (dist == "gumbel") {
        // CDF sup-distance after a two-quantile affine fit.
        ExactRat total = mu.total_mass();
        std::vector<std::pair<double, double>> cdf; // (x, G(x))
        ExactRat acc(0);
        for (auto& [x, m] : mu.points) {
            acc += m;
            cdf.emplace_back(to_double(x), to_double(acc / total));
        }
        const double c = 3.14159265358979323846 / std::sqrt(6.0);
        auto F = [&](double x) { return std::exp(-std::exp(-c * x) / c); };
        auto Finv = [&](double u) { return -std::log(-c * std::log(u)) / c; };
        auto inv_emp = [&](double u) {
            for (size_t i = 0; i < cdf.size(); ++i)
                if (cdf[i].second >= u) return cdf[i].first;
            return cdf.back().first;
        };
        double a = (inv_emp(0.75) - inv_emp(0.25)) / (Finv(0.75) - Finv(0.25));
        double b = inv_emp(0.25) - a * Finv(0.25);
        double sup = 0, prev = 0;
        for (auto& [x, gx] : cdf) {
            double fx = F((x - b) / a);
            sup = std::max({sup, std::abs(gx - fx), std::abs(prev - fx)});
            prev = gx;
        }
        return report_entry("fit gumbel", {{"alpha", a}, {"beta", b}}, {{"sup_distance", sup}},
                            sup <= 0.05, 0.05);
    }
    MomentReport rep = moments(mu, 6, true);
    if (!rep.standardized_valid)
        throw std::invalid_argument("fit: measure has no variance to standardize");
    if (dist.rfind("bspline:", 0) == 0) {
        int r = std::stoi(dist.substr(8));
        auto sp = bspline_moments(r, 6);
        double v = to_double(sp[2]);
        json vals = json::array();
        bool ok = true;
        for (int k = 3; k <= 6; ++k) {
            double want = to_double(sp[(size_t)k]) / std::pow(v, k / 2.0);
            double got = rep.standardized[(size_t)k];
            double err = std::abs(got - want) / (std::abs(want) > 1e-12 ? std::abs(want) : 1.0);
            vals.push_back({{"k", k}, {"measure", got}, {"spline", want}, {"rel_error", err}});
            ok = ok && err <= 0.05;
        }
        return report_entry("fit bspline", {{"r", r}}, vals, ok, 0.05);
    }
    if (dist == "airy") {
        auto am = airy_moments(4);
        double m1 = am[1].value(), m2 = am[2].value(), m3 = am[3].value(), m4 = am[4].value();
        double var = m2 - m1 * m1;
        double sd = std::sqrt(var);
        double z3 = (m3 - 3 * m1 * m2 + 2 * m1 * m1 * m1) / (sd * sd * sd);
        double z4 = (m4 - 4 * m1 * m3 + 6 * m1 * m1 * m2 - 3 * m1 * m1 * m1 * m1) / (var * var);
        json vals = json::array();
        bool ok = true;
        double want[2] = {z3, z4};
        for (int k = 3; k <= 4; ++k) {
            double got = rep.standardized[(size_t)k];
            double err = std::abs(got - want[k - 3]) / std::abs(want[k - 3]);
            vals.push_back({{"k", k}, {"measure", got}, {"airy", want[k - 3]}, {"rel_error", err}});
            ok = ok && err <= 0.10;
        }
        return report_entry("fit airy", json::object(), vals, ok, 0.10);
    }
    throw std::invalid_argument("unknown distribution: " + dist);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare polynomials of semiprojective hyperkahler varieties"};
    app.require_subcommand(1);

    OutputOpts common;

    // family parameters
    int n = 0, m = 0, k = 0, g = 0;
    std::string file, dist, suite, xi_str = "1";
    long q_prime = 2;
    int order = 40, kmax = 3;
    bool standardize = false;

    auto* c_toric_complete = app.add_subcommand("toric-complete", "toric quiver variety of K_n");
    c_toric_complete->add_option("--n", n)->required();
    add_output_opts(c_toric_complete, common);

    auto* c_toric = app.add_subcommand("toric", "toric quiver variety of a graph");
    c_toric->add_option("--graph", file, "graph JSON file")->required();
    add_output_opts(c_toric, common);

    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert scheme of n points on C^2");
    c_hilbert->add_option("--n", n)->required();
    add_output_opts(c_hilbert, common);

    auto* c_adhm = app.add_subcommand("adhm", "twisted ADHM space M_{n,m}");
    c_adhm->add_option("--n", n)->required();
    c_adhm->add_option("--m", m)->required();
    add_output_opts(c_adhm, common);

    auto* c_grass = app.add_subcommand("grassmann", "T*Gr(n,k)");
    c_grass->add_option("--n", n)->required();
    c_grass->add_option("--k", k)->required();
    add_output_opts(c_grass, common);

    auto* c_nakajima = app.add_subcommand("nakajima", "framed Nakajima quiver variety");
    c_nakajima->add_option("--quiver", file, "quiver JSON file")->required();
    add_output_opts(c_nakajima, common);

    auto* c_kac = app.add_subcommand("kac", "Kac polynomial A_Q(v;q)");
    c_kac->add_option("--quiver", file, "quiver JSON file")->required();
    add_output_opts(c_kac, common);

    auto* c_qi = app.add_subcommand("quiver-indivisible", "quiver variety for indivisible v");
    c_qi->add_option("--quiver", file, "quiver JSON file")->required();
    add_output_opts(c_qi, common);

    auto* c_higgs = app.add_subcommand("higgs", "moduli of rank-n Higgs bundles, genus g");
    c_higgs->add_option("--n", n)->required();
    c_higgs->add_option("--g", g)->required();
    add_output_opts(c_higgs, common);

    auto* c_torus = app.add_subcommand("torus", "T*Jac of a genus-g curve");
    c_torus->add_option("--g", g)->required();
    add_output_opts(c_torus, common);

    auto* c_moments = app.add_subcommand("moments", "moment report of a degree,coefficient CSV");
    c_moments->add_option("--in", file)->required();
    c_moments->add_option("--k", kmax, "highest moment (default 3)");
    c_moments->add_flag("--standardize", standardize);
    add_output_opts(c_moments, common, false);

    auto* c_fit = app.add_subcommand("fit", "compare a CSV measure with a reference law");
    c_fit->add_option("--dist", dist, "airy | gumbel | bspline:R")->required();
    c_fit->add_option("--in", file)->required();
    add_output_opts(c_fit, common, false);

    auto* c_airy = app.add_subcommand("airy-constants", "Wright constants and Airy moments");
    c_airy->add_option("--k", kmax)->required();
    add_output_opts(c_airy, common, false);

    auto* c_fq = app.add_subcommand("fqcount", "finite-field fiber counts");
    c_fq->add_option("--quiver", file)->required();
    c_fq->add_option("--q", q_prime, "prime field order")->required();
    c_fq->add_option("--xi", xi_str, "central scalar (same at every vertex)");
    add_output_opts(c_fq, common, false);

    auto* c_saddle = app.add_subcommand("saddle-check", "tree-function saddle identities");
    c_saddle->add_option("--order", order);
    add_output_opts(c_saddle, common, false);

    auto* c_check = app.add_subcommand("check", "verification suites");
    c_check->add_option("--suite", suite,
                        "cross-formulas | paper-tables | fq-oracle | saddle | distributions")
        ->required();
    add_output_opts(c_check, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int threads = common.threads > 0 ? common.threads : (int)std::thread::hardware_concurrency();

    try {
        if (*c_toric_complete) emit_betti(common, poincare_toric_complete(n));
        else if (*c_toric) emit_betti(common, poincare_toric_quiver(graph_from_json(read_file(file))));
        else if (*c_hilbert) emit_betti(common, poincare_hilbert(n));
        else if (*c_adhm) emit_betti(common, poincare_adhm(n, m));
        else if (*c_grass) emit_betti(common, poincare_grassmannian(n, k));
        else if (*c_nakajima) emit_betti(common, poincare_nakajima(quiver_from_json(read_file(file))));
        else if (*c_kac) {
            Quiver qv = quiver_from_json(read_file(file));
            if ((int)qv.v.size() != qv.r)
                throw std::invalid_argument("kac: quiver JSON must carry \"v\"");
            emit_laurent(common, kac_polynomial(qv, qv.v), "kac", {{"vertices", qv.r}});
        } else if (*c_qi) {
            emit_betti(common, poincare_quiver_indivisible(quiver_from_json(read_file(file)), threads));
        } else if (*c_higgs) {
            emit_betti(common, poincare_higgs(n, g, threads));
        } else if (*c_torus) {
            emit_betti(common, poincare_torus(g));
        } else if (*c_moments) {
            UniLaurent e = laurent_from_csv(read_file(file));
            MomentReport rep = moments(measure_from_poly(e), kmax, standardize);
            json j;
            json raw = json::array(), fact = json::array();
            for (auto& v : rep.raw) raw.push_back(v.get_str());
            for (auto& v : rep.factorial) fact.push_back(v.get_str());
            j["raw"] = raw;
            j["factorial"] = fact;
            if (standardize && rep.standardized_valid) j["standardized"] = rep.standardized;
            emit(common, j.dump(2) + "\n");
        } else if (*c_fit) {
            json j = fit_measure(dist, laurent_from_csv(read_file(file)));
            emit(common, j.dump(2) + "\n");
        } else if (*c_airy) {
            json j;
            json cs = json::array(), ms = json::array();
            for (auto& c : wright_constants(std::max(1, kmax))) cs.push_back(c.get_str());
            for (auto& mm : airy_moments(kmax)) {
                ms.push_back({{"rational", mm.rational.get_str()},
                              {"sqrt_2pi_factor", mm.with_sqrt_2pi},
                              {"value", mm.value()}});
            }
            j["wright_constants"] = cs;
            j["airy_moments"] = ms;
            emit(common, j.dump(2) + "\n");
        } else if (*c_fq) {
            Quiver qv = quiver_from_json(read_file(file));
            if ((int)qv.v.size() != qv.r)
                throw std::invalid_argument("fqcount: quiver JSON must carry \"v\"");
            FqConfig cfg{qv, q_prime, std::vector<long>((size_t)qv.r, std::stol(xi_str))};
            ExactInt b = count_fiber_bruteforce(cfg);
            ExactInt f = count_fiber_fourier(cfg);
            json j;
            j["brute_force"] = b.get_str();
            j["fourier"] = f.get_str();
            j["match"] = (b == f);
            emit(common, j.dump(2) + "\n");
        } else if (*c_saddle) {
            emit(common, suite_saddle(order).dump(2) + "\n");
        } else if (*c_check) {
            json j;
            if (suite == "cross-formulas") j = suite_cross_formulas(threads);
            else if (suite == "paper-tables") j = suite_paper_tables();
            else if (suite == "fq-oracle") j = suite_fq();
            else if (suite == "saddle") j = suite_saddle(40);
            else if (suite == "distributions") j = suite_distributions();
            else throw std::invalid_argument("unknown suite: " + suite);
            emit(common, j.dump(2) + "\n");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal assertion failed: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
