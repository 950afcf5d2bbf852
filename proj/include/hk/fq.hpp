#pragma once

#include "hk/betti.hpp"

namespace hk {

// Moment-map fiber counting setup over F_q: the quiver carries v (and
// optionally w); xi is a central scalar per vertex, so mu(v,w) = xi means
// mu_i = xi_i * Id at every vertex.
struct FqConfig {
    Quiver quiver;
    long q = 2;                 // field order; prime only
    std::vector<long> xi;       // one scalar per vertex

    long dim_V() const;         // dim of the representation space V
    long dim_g() const;         // sum v_i^2
    void validate() const;      // q prime, state space within the cap
};

// Exact number of points (x, y) in V x V* with mu(x,y) = xi, by enumeration.
ExactInt count_fiber_bruteforce(const FqConfig& cfg);

// Same count through the Fourier identity |g|^{-1}|V| sum_X a(X) Psi(<X,xi>),
// evaluated with exact character-sum bookkeeping (no transcendentals).
ExactInt count_fiber_fourier(const FqConfig& cfg);

// All kernel sizes a_rho(X) = |ker rho(X)|, X running over g (tiny corpora
// only); each must be a power of q.
std::vector<ExactInt> a_rho_values(const FqConfig& cfg);

// Katz-style contract check: interpolate the quotient counts #fiber/|G|
// through several primes and compare with E(q) = sum b_{2i} q^{dim - i}.
struct KatzReport {
    bool freeness_ok = true;      // |G| divided every fiber count
    bool match = false;           // interpolated polynomial equals E
    UniLaurent fitted;            // interpolated count polynomial in q
    UniLaurent expected;          // E(q) from the Betti polynomial
    std::vector<long> primes;
    std::vector<ExactInt> quotients;
};

KatzReport check_katz(const Quiver& quiver, const std::vector<long>& xi,
                      const std::vector<long>& primes, const BettiPoly& betti);

} // namespace hk
