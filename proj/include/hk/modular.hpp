#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "hk/exact.hpp"

namespace hk::modp {

// Word-size prime fields used to accelerate large evaluation/interpolation
// runs; results are CRT-lifted back to exact integers and then re-checked.
inline constexpr std::array<uint64_t, 4> PRIMES = {
    4611686018427387847ull, 4611686018427387817ull,
    4611686018427387787ull, 4611686018427387761ull};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((unsigned __int128)a * b % p);
}
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p || s < a ? s - p : s;
}
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) {
    if (a % p == 0) throw std::domain_error("invmod: zero");
    return powmod(a, p - 2, p);
}

inline uint64_t reduce(const ExactInt& v, uint64_t p) {
    ExactInt m = v % ExactInt((unsigned long)p);
    if (m < 0) m += ExactInt((unsigned long)p);
    return m.get_ui();
}

// Montgomery batch inversion.
std::vector<uint64_t> batch_inverse(const std::vector<uint64_t>& a, uint64_t p);

// Coefficients (ascending) of the unique polynomial of degree < xs.size()
// through the points (xs[i], ys[i]) over F_p.
std::vector<uint64_t> newton_interpolate(const std::vector<uint64_t>& xs,
                                         const std::vector<uint64_t>& ys, uint64_t p);

// Symmetric CRT lift: the unique integer of absolute value < prod(primes)/2
// matching every residue.
ExactInt crt_symmetric(const std::vector<uint64_t>& residues,
                       const std::vector<uint64_t>& primes);

// Deterministic static-partition parallel map over [0, n): results are
// written by index, so the output is independent of the thread count.
void parallel_for(long n, int threads, const std::function<void(long)>& body);

} // namespace hk::modp
