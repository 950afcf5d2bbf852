#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hk/betti.hpp"
#include "hk/graph.hpp"
#include "hk/laurent.hpp"

namespace hk {

// Finitely supported measure with rational support points and masses.
struct DiscreteMeasure {
    std::vector<std::pair<ExactRat, ExactRat>> points; // sorted, distinct support

    static DiscreteMeasure from_poly(const UniLaurent& e); // mass e_i at i
    static DiscreteMeasure delta(const ExactRat& at);

    void add_mass(const ExactRat& at, const ExactRat& mass);
    ExactRat total_mass() const;
    ExactRat raw_moment(int k) const;
    DiscreteMeasure translated(const ExactRat& a) const;
};

inline DiscreteMeasure measure_from_poly(const UniLaurent& e) { return DiscreteMeasure::from_poly(e); }

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b);

struct MomentReport {
    std::vector<ExactRat> raw;        // M_0..M_K
    std::vector<ExactRat> factorial;  // m_0..m_K
    std::vector<double> standardized; // after affine rescale to mean 0, var 1
    bool standardized_valid = false;
};

MomentReport moments(const DiscreteMeasure& mu, int K, bool standardize = true);

// m_k = k-th coefficient of E(1+eta), exactly (equivalently sum C(i,k) e_i).
std::vector<ExactRat> factorial_moments(const UniLaurent& e, int K);

// Moments of the central B-spline chi^{(r)} from its moment generating
// function ((e^{t/2}-e^{-t/2})/t)^r; odd moments vanish.
std::vector<ExactRat> bspline_moments(int r, int K);

struct GrassmannLimitReport {
    int r, n, K;
    std::vector<double> measure_moments; // centered at rn/2, scaled 1/n, normalized mass
    std::vector<double> spline_moments;
    std::vector<double> rel_errors;        // per k, on the normalized central moments
    std::vector<double> standardized_errors; // per k, after variance normalization
    double mass_ratio;                     // r!/n^r total mass vs its limit 1
};

GrassmannLimitReport grassmann_limit_check(int r, int n, int K);

// #partitions of n with at most x parts (by conjugation, largest part <= x).
ExactInt partition_length_cdf(int n, long x);
std::vector<ExactInt> partition_length_cdf_all(int n); // index k = Phi_n(k), k = 0..n

struct GumbelReport {
    std::vector<int> ns;
    std::vector<double> sup_dist;
    std::vector<double> alpha_fit, beta_fit;
    double alpha_paper(double n) const;  // sqrt(n)
    double beta_paper(double n) const;   // 2 c^{-1} sqrt(n) log n, c = pi/sqrt 6
    bool strictly_decreasing = false;
};

GumbelReport gumbel_check(const std::vector<int>& ns);

// Wright constants c_1..c_K from log sum (1/6)_n (5/6)_n / n! (3T/2)^n.
std::vector<ExactRat> wright_constants(int K);

// Airy moments M_k = k! rho_{k-1}: alternately rational and rational*sqrt(2 pi).
struct AiryMoment {
    ExactRat rational;
    bool with_sqrt_2pi = false;
    double value() const;
};
std::vector<AiryMoment> airy_moments(int K);

struct WrightRatioReport {
    std::vector<long> ns;
    int K;
    std::vector<std::vector<double>> ratios; // [n index][k] = m_{n,k}/(m_{n,0} rho_{k-1} n^{3k/2})
};

WrightRatioReport wright_ratio_check(const std::vector<long>& ns, int K);

struct SaddleReport {
    int order;
    bool tree_eqn_ok = false;       // T e^w = w
    bool c0_ok = false;             // C_0 = w - w^2/2
    bool c1_ok = false;             // C_1 = -log(1-w)/2 + w/2 + w^2/4
    std::vector<bool> ek_polynomial;     // k = 2.. : (1-w)^{3(k-1)} C_k is a polynomial
    std::vector<ExactRat> ek_at_1;       // E_{k-1}(1)
    std::vector<ExactRat> wright;        // c_{k-1} to compare
    bool all_ok() const;
};

SaddleReport tree_saddle_identities(int order, int kmax = 4);

struct BipartiteTable {
    int n, K;
    std::vector<ExactInt> beta_sum; // k = 0..K via the partition sum
    std::vector<ExactInt> beta_gf;  // via the generating identity
    bool agree = false;
    std::vector<ExactRat> alpha_ratio_n3; // alpha_{3,k}/alpha_{3,0} when n = 3
};

BipartiteTable bipartite_alpha_beta(int n, int K);

struct UnimodalReport {
    bool even_unimodal = false;
    bool odd_unimodal = false;
    bool full_unimodal = false;
};

UnimodalReport unimodality_check(const BettiPoly& p);

struct WhlReport {
    long k = 0;
    long checked = 0;
    long violations = 0;
    bool all_hold() const { return violations == 0; }
};

// Weak Hard Lefschetz inequalities b_i <= b_{i+2j}, 0 <= j <= k - i.
WhlReport weak_hl_check(const BettiPoly& p, long k);

} // namespace hk
