#include "hk/series.hpp"

namespace hk {

int moebius(long k) {
    if (k < 1) throw std::invalid_argument("moebius: k >= 1 required");
    int primes = 0;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        k /= p;
        if (k % p == 0) return 0;
        ++primes;
    }
    if (k > 1) ++primes;
    return primes % 2 ? -1 : 1;
}

} // namespace hk
