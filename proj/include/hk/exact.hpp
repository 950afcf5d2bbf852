#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hk {

// Exact scalars. ExactInt is an arbitrary-precision signed integer with a
// canonical zero; ExactRat is always stored reduced with positive denominator.
// Both are backed by GMP, which maintains exactly these invariants.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

inline ExactInt ei(long v) { return ExactInt(v); }
inline ExactInt ei(const std::string& decimal) { return ExactInt(decimal, 10); }

inline ExactRat er(long num, long den = 1) {
    ExactRat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_decimal(const ExactInt& v) { return v.get_str(10); }

inline ExactInt pow_int(const ExactInt& base, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ExactRat pow_rat(const ExactRat& base, long e) {
    if (e == 0) return ExactRat(1);
    ExactRat r;
    unsigned long a = e < 0 ? -(unsigned long)e : (unsigned long)e;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rat: negative power of zero");
        r = ExactRat(1) / r;
    }
    r.canonicalize();
    return r;
}

inline ExactInt factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Exact binomial coefficient; arguments must satisfy 0 <= k <= n.
inline ExactInt big_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("big_binomial: need 0 <= k <= n");
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

// Binomial with ExactInt top argument (used for edge counts like C(n,2)).
inline ExactInt big_binomial_z(const ExactInt& n, unsigned long k) {
    if (n < 0) throw std::invalid_argument("big_binomial_z: negative n");
    ExactInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

// Exact division, asserting divisibility. Used where a formula guarantees an
// integer result so a remainder means a bug upstream.
inline ExactInt div_exact(const ExactInt& a, const ExactInt& b) {
    if (b == 0) throw std::domain_error("div_exact: zero divisor");
    ExactInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("div_exact: not divisible");
    return q;
}

inline bool divides(const ExactInt& d, const ExactInt& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline double to_double(const ExactRat& r) { return r.get_d(); }
inline double to_double(const ExactInt& r) { return r.get_d(); }

// Internal error reporting: a failed invariant in a formula pipeline is a bug
// trap, not a user error.
inline void check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
}

} // namespace hk
