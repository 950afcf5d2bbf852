#pragma once

#include "hk/ratfun.hpp"
#include "hk/series.hpp"

namespace hk {

// Truncated power series in one inner variable (w) whose coefficients are
// rational functions in another variable (z). This is the coefficient domain
// for the Higgs generating function: every denominator factor there has an
// invertible w-adic leading term, so inversion proceeds order by order.
class RatFunSeries {
public:
    RatFunSeries() = default;
    RatFunSeries(std::string var_w, std::string var_z, long cap)
        : var_w_(std::move(var_w)), var_z_(std::move(var_z)), cap_(cap) {}

    const std::string& var_w() const { return var_w_; }
    const std::string& var_z() const { return var_z_; }
    long cap() const { return cap_; }
    const std::map<long, UniRatFun>& terms() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one();
    }

    void add_term(long e, const UniRatFun& c) {
        if (e < 0) throw std::invalid_argument("RatFunSeries: negative w-exponent");
        if (e > cap_ || c.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    UniRatFun coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? UniRatFun() : it->second;
    }

    RatFunSeries operator-() const {
        RatFunSeries r(var_w_, var_z_, cap_);
        for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend RatFunSeries operator+(const RatFunSeries& a, const RatFunSeries& b) {
        RatFunSeries r(a.var_w_, a.var_z_, std::min(a.cap_, b.cap_));
        for (auto& [e, c] : a.coeffs_) r.add_term(e, c);
        for (auto& [e, c] : b.coeffs_) r.add_term(e, c);
        return r;
    }
    friend RatFunSeries operator*(const RatFunSeries& a, const RatFunSeries& b) {
        RatFunSeries r(a.var_w_, a.var_z_, std::min(a.cap_, b.cap_));
        for (auto& [ea, ca] : a.coeffs_) {
            if (ea > r.cap_) break;
            for (auto& [eb, cb] : b.coeffs_) {
                if (ea + eb > r.cap_) break;
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }
    RatFunSeries& operator+=(const RatFunSeries& o) { *this = *this + o; return *this; }
    RatFunSeries& operator*=(const RatFunSeries& o) { *this = *this * o; return *this; }
    bool operator==(const RatFunSeries& o) const { return coeffs_ == o.coeffs_; }

    // w-adic inverse; requires nonzero w^0 coefficient.
    RatFunSeries inverse() const {
        UniRatFun a0 = coeff(0);
        if (a0.is_zero()) throw std::domain_error("RatFunSeries::inverse: w^0 coefficient is zero");
        RatFunSeries out(var_w_, var_z_, cap_);
        UniRatFun a0inv = a0.inverse();
        std::vector<UniRatFun> b((size_t)cap_ + 1);
        b[0] = a0inv;
        out.add_term(0, b[0]);
        for (long n = 1; n <= cap_; ++n) {
            UniRatFun s;
            for (auto& [j, aj] : coeffs_) {
                if (j < 1) continue;
                if (j > n) break;
                s += aj * b[(size_t)(n - j)];
            }
            if (s.is_zero()) continue;
            b[(size_t)n] = -(a0inv * s);
            out.add_term(n, b[(size_t)n]);
        }
        return out;
    }

    RatFunSeries divided(const ExactRat& c) const {
        RatFunSeries r(var_w_, var_z_, cap_);
        for (auto& [e, k] : coeffs_) r.coeffs_.emplace(e, k.divided(c));
        return r;
    }

    // z -> z^k on coefficients, w -> w^k on exponents; terms past cap drop.
    RatFunSeries substituted_power(long k) const {
        RatFunSeries r(var_w_, var_z_, cap_);
        for (auto& [e, c] : coeffs_) {
            if (e * k > cap_) break;
            r.coeffs_.emplace(e * k, c.substituted_power(k));
        }
        return r;
    }

    std::string str() const {
        std::string s;
        for (auto& [e, c] : coeffs_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + var_w_ + "^" + std::to_string(e);
        }
        return s.empty() ? "0" : s;
    }

private:
    std::string var_w_, var_z_;
    long cap_ = 0;
    std::map<long, UniRatFun> coeffs_;
};

template <> struct ring_ops<RatFunSeries> {
    static RatFunSeries zero_like(const RatFunSeries& a) { return RatFunSeries(a.var_w(), a.var_z(), a.cap()); }
    static RatFunSeries one_like(const RatFunSeries& a) {
        RatFunSeries r(a.var_w(), a.var_z(), a.cap());
        r.add_term(0, UniRatFun(UniLaurent(a.var_z(), ExactRat(1), 0)));
        return r;
    }
    static bool is_zero(const RatFunSeries& a) { return a.is_zero(); }
    static bool is_one(const RatFunSeries& a) { return a.is_one(); }
    static RatFunSeries add(const RatFunSeries& a, const RatFunSeries& b) { return a + b; }
    static RatFunSeries neg(const RatFunSeries& a) { return -a; }
    static RatFunSeries mul(const RatFunSeries& a, const RatFunSeries& b) { return a * b; }
    static RatFunSeries div_int(const RatFunSeries& a, long n) { return a.divided(ExactRat(n)); }
    static RatFunSeries adams(const RatFunSeries& a, long k) { return a.substituted_power(k); }
    static bool try_inverse(const RatFunSeries& a, RatFunSeries& out) {
        if (a.coeff(0).is_zero()) return false;
        out = a.inverse();
        return true;
    }
};

} // namespace hk
