#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hk/graph.hpp"
#include "hk/laurent.hpp"
#include "hk/partitions.hpp"
#include "hk/series.hpp"

namespace hk {

// Quiver: directed multigraph with loops, a dimension vector v and an
// optional framing vector w.
struct Quiver {
    int r = 0;
    std::vector<std::pair<int, int>> edges; // directed; loops (i,i) allowed
    std::vector<long> v;
    std::vector<long> w; // empty = unframed

    Quiver() = default;
    Quiver(int r_, std::vector<std::pair<int, int>> e, std::vector<long> v_ = {},
           std::vector<long> w_ = {});

    // Euler-form style pairing <v,v> = sum v_i^2 - sum_{(i,j) in E} v_i v_j.
    long euler_self(const std::vector<long>& dim) const;
};

// A finished Poincare polynomial with family metadata.
struct BettiPoly {
    std::string family;
    std::map<std::string, long> params;
    std::vector<ExactInt> coeffs; // b_0 .. b_d
    long complex_dim = -1;        // -1 = unknown
    long core_dim = -1;           // -1 = unknown
    long dim_shift = 0;           // the t-power shift applied by the formula

    long degree() const;
    const ExactInt& b(long i) const;
    bool even_only() const;
    long argmax() const; // smallest degree attaining the maximal coefficient
    const ExactInt& max_coeff() const;
    bool palindromic() const;

    void validate() const; // b_i >= 0 and b_0 = 1
};

// Helper shared by the families: interpret a polynomial a_0 + a_1 q + ... as
// Betti numbers via P(t) = t^{2s} A(1/t^2), i.e. b_{2(s-i)} = a_i.
BettiPoly betti_from_reversed_qpoly(const UniLaurent& a, long s);

// --- families of section "Betti numbers of semiprojective hyperkahler" -----

// Toric quiver variety of a connected graph: P = t^{2 b_1} R_G(1/t^2).
BettiPoly poincare_toric_quiver(const Graph& g);

// Same, for complete graphs through the generating function (large n).
BettiPoly poincare_toric_complete(int n);

// Hilbert scheme of n points on C^2 (Goettsche).
BettiPoly poincare_hilbert(int n);

// Twisted ADHM spaces M_{n,m}.
BettiPoly poincare_adhm(int n, int m);

// T*Gr(n,k) via the q-binomial [n k] at q = t^2.
BettiPoly poincare_grassmannian(int n, int k);

// T*Jac of a genus-g curve: (1+t)^{2g}.
BettiPoly poincare_torus(int g);

// Framed Nakajima quiver variety via the partition generating function.
BettiPoly poincare_nakajima(const Quiver& q);

// Kac polynomial A_Q(v;q) via Hua's plethystic formula. The exact symbolic
// route is used at desk scale; large instances go through prime-field
// evaluation + interpolation (cross-validated against the symbolic route).
UniLaurent kac_polynomial(const Quiver& q, const std::vector<long>& v);
UniLaurent kac_polynomial_exact(const Quiver& q, const std::vector<long>& v);
UniLaurent kac_polynomial_fast(const Quiver& q, const std::vector<long>& v, int threads = 0);

// Quiver variety for an unframed indivisible dimension vector:
// P = t^{d_v} A_Q(v; t^{-2}), d_v = 2(1 - <v,v>).
BettiPoly poincare_quiver_indivisible(const Quiver& q, int threads = 0);

// Gaussian binomial [n k]_q as a polynomial in q.
UniLaurent gauss_binomial(int n, int k);

} // namespace hk
