#pragma once

#include "hk/betti.hpp"
#include "hk/bipoly.hpp"
#include "hk/ratfun_series.hpp"

namespace hk {

// H_n(z,w) = (z^2-1)(1-w^2) [T^n] Log( sum_lambda prod_cells
//   (z^{2l+1}-w^{2a+1})^{2g} / ((z^{2l+2}-w^{2a})(z^{2l}-w^{2a+2})) T^{|lambda|} ).
// Asserted to assemble into a polynomial in z and w.

// Exact route: coefficients are w-adic series with rational-function-in-z
// entries; the w-cap must be large enough, detected by the tail check.
// Throws std::overflow_error when the cap is insufficient.
BiPoly higgs_H_exact(int n, int g, long wcap);

// Fast route: z specialized at interpolation nodes over prime fields, CRT
// lift, symmetry and tail assertions on the assembled polynomial.
BiPoly higgs_H_fast(int n, int g, long wcap, int threads = 0);

// Dispatcher with the doubling cap policy: starts at 2*(expected degree)+4
// and doubles until the assembled polynomial is stable across two caps.
BiPoly higgs_H(int n, int g, int threads = 0);

// H_n carries the torus factor (z-w)^{2g} of the n=1 moduli; the reduced
// moduli numbers of the figures live on H_n / (z-w)^{2g}. The division is
// exact (asserted).
BiPoly higgs_H_reduced(const BiPoly& h, int g);

// P(t) = t^d H(1, -1/t) with d normalizing the lowest term to t^0; takes the
// reduced polynomial.
BettiPoly poincare_higgs(int n, int g, int threads = 0);
BettiPoly poincare_higgs_from(const BiPoly& h_reduced, int n, int g);

} // namespace hk
