#include "hk/modular.hpp"

#include <functional>
#include <thread>

namespace hk::modp {

std::vector<uint64_t> batch_inverse(const std::vector<uint64_t>& a, uint64_t p) {
    size_t n = a.size();
    std::vector<uint64_t> out(n);
    if (n == 0) return out;
    std::vector<uint64_t> prefix(n);
    uint64_t acc = 1;
    for (size_t i = 0; i < n; ++i) {
        prefix[i] = acc;
        acc = mulmod(acc, a[i], p);
    }
    uint64_t inv = invmod(acc, p);
    for (size_t i = n; i-- > 0;) {
        out[i] = mulmod(inv, prefix[i], p);
        inv = mulmod(inv, a[i], p);
    }
    return out;
}

std::vector<uint64_t> newton_interpolate(const std::vector<uint64_t>& xs,
                                         const std::vector<uint64_t>& ys, uint64_t p) {
    size_t n = xs.size();
    check(ys.size() == n && n > 0, "newton_interpolate: bad input");
    // Divided differences in place.
    std::vector<uint64_t> d = ys;
    std::vector<uint64_t> dens;
    dens.reserve(n * (n - 1) / 2);
    for (size_t lvl = 1; lvl < n; ++lvl)
        for (size_t i = n - 1; i >= lvl; --i)
            dens.push_back(submod(xs[i], xs[i - lvl], p));
    std::vector<uint64_t> inv = batch_inverse(dens, p);
    size_t t = 0;
    for (size_t lvl = 1; lvl < n; ++lvl)
        for (size_t i = n - 1; i >= lvl; --i) {
            d[i] = mulmod(submod(d[i], d[i - 1], p), inv[t++], p);
        }
    // Horner expansion of the Newton form into monomial coefficients.
    std::vector<uint64_t> c(n, 0);
    size_t deg = 0;
    c[0] = d[n - 1];
    for (size_t i = n - 1; i-- > 0;) {
        // c <- c*(x - xs[i]) + d[i]
        ++deg;
        for (size_t j = deg; j-- > 1;)
            c[j] = addmod(c[j - 1], mulmod(c[j], submod(0, xs[i], p), p), p);
        c[0] = addmod(mulmod(c[0], submod(0, xs[i], p), p), d[i], p);
    }
    return c;
}

ExactInt crt_symmetric(const std::vector<uint64_t>& residues,
                       const std::vector<uint64_t>& primes) {
    check(residues.size() == primes.size() && !primes.empty(), "crt_symmetric: bad input");
    ExactInt m(1), x(0);
    for (size_t i = 0; i < primes.size(); ++i) {
        ExactInt p((unsigned long)primes[i]);
        // x' = x + m * ((r_i - x) / m mod p)
        uint64_t xm = reduce(x, primes[i]);
        uint64_t delta = submod(residues[i] % primes[i], xm, primes[i]);
        uint64_t minv = invmod(reduce(m, primes[i]), primes[i]);
        x += m * ExactInt((unsigned long)mulmod(delta, minv, primes[i]));
        m *= p;
    }
    if (2 * x >= m) x -= m;
    check(2 * abs(x) < m, "crt_symmetric: lift out of range");
    return x;
}

void parallel_for(long n, int threads, const std::function<void(long)>& body) {
    if (threads <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    int tc = std::min<long>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve((size_t)tc);
    for (int t = 0; t < tc; ++t)
        pool.emplace_back([&, t] {
            for (long i = t; i < n; i += tc) body(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace hk::modp
