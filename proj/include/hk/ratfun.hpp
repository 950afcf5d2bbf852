#pragma once

#include "hk/laurent.hpp"

namespace hk {

// Reduced rational function in one variable: num/den with polynomial
// (nonnegative-exponent) parts, gcd(num,den)=1 and den monic. Laurent inputs
// are normalized by shifting the monomial content into whichever side needs it.
class UniRatFun {
public:
    UniRatFun() : num_(), den_(UniLaurent("", ExactRat(1), 0)) {}
    explicit UniRatFun(const UniLaurent& num) : num_(num), den_(UniLaurent(num.var(), ExactRat(1), 0)) { normalize(); }
    UniRatFun(UniLaurent num, UniLaurent den);

    static UniRatFun constant(const ExactRat& c) { return UniRatFun(UniLaurent::constant(c)); }
    static UniRatFun monomial(const std::string& var, const ExactRat& c, long e) {
        return UniRatFun(UniLaurent::monomial(var, c, e));
    }

    const UniLaurent& num() const { return num_; }
    const UniLaurent& den() const { return den_; }
    const std::string& var() const { return num_.is_constant() && !den_.is_constant() ? den_.var() : num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True when the denominator is 1: the value is a (Laurent) polynomial.
    bool is_polynomial() const { return den_.is_one(); }

    UniRatFun operator-() const;
    friend UniRatFun operator+(const UniRatFun& a, const UniRatFun& b);
    friend UniRatFun operator-(const UniRatFun& a, const UniRatFun& b);
    friend UniRatFun operator*(const UniRatFun& a, const UniRatFun& b);
    friend UniRatFun operator/(const UniRatFun& a, const UniRatFun& b);
    UniRatFun& operator+=(const UniRatFun& o) { *this = *this + o; return *this; }
    UniRatFun& operator-=(const UniRatFun& o) { *this = *this - o; return *this; }
    UniRatFun& operator*=(const UniRatFun& o) { *this = *this * o; return *this; }
    bool operator==(const UniRatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    UniRatFun inverse() const;
    UniRatFun scaled(const ExactRat& c) const { UniRatFun r = *this; r.num_ = r.num_.scaled(c); r.normalize(); return r; }
    UniRatFun divided(const ExactRat& c) const;
    UniRatFun substituted_power(long k) const; // x -> x^k on num and den

    ExactRat eval(const ExactRat& x) const;

    // The Laurent polynomial this reduces to; throws when the denominator is
    // not a monomial (bug trap at extraction points that promise polynomials).
    UniLaurent as_laurent() const;

    std::string str() const;

private:
    UniLaurent num_, den_; // den monic, nonneg exponents, gcd(num,den)=1
    void normalize();
};

inline UniRatFun ratfun_reduce(const UniRatFun& f) {
    return UniRatFun(f.num(), f.den()); // construction re-normalizes
}

} // namespace hk
