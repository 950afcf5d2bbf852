#include "hk/ratfun.hpp"

namespace hk {

UniRatFun::UniRatFun(UniLaurent num, UniLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("UniRatFun: zero denominator");
    normalize();
}

void UniRatFun::normalize() {
    if (num_.is_zero()) {
        den_ = UniLaurent(den_.var(), ExactRat(1), 0);
        return;
    }
    // Clear the monomial content so both sides are polynomials sharing no
    // power of the variable.
    long shift = std::min(num_.min_exp(), den_.min_exp());
    if (shift != 0) {
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
    }
    if (!den_.is_one()) {
        UniLaurent g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
    }
    ExactRat lead = den_.leading_coeff();
    if (lead != 1) {
        den_ = den_.divided(lead);
        num_ = num_.divided(lead);
    }
}

UniRatFun UniRatFun::operator-() const {
    UniRatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

UniRatFun operator+(const UniRatFun& a, const UniRatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return UniRatFun(a.num_ + b.num_, a.den_);
    return UniRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UniRatFun operator-(const UniRatFun& a, const UniRatFun& b) { return a + (-b); }

UniRatFun operator*(const UniRatFun& a, const UniRatFun& b) {
    if (a.is_zero() || b.is_zero()) return UniRatFun();
    // Cross-reduce first: keeps intermediate degrees near the reduced result.
    UniRatFun x(a.num_, b.den_);
    UniRatFun y(b.num_, a.den_);
    UniRatFun r;
    r.num_ = x.num_ * y.num_;
    r.den_ = x.den_ * y.den_;
    ExactRat lead = r.den_.leading_coeff();
    if (lead != 1) {
        r.den_ = r.den_.divided(lead);
        r.num_ = r.num_.divided(lead);
    }
    return r;
}

UniRatFun operator/(const UniRatFun& a, const UniRatFun& b) { return a * b.inverse(); }

UniRatFun UniRatFun::inverse() const {
    if (is_zero()) throw std::domain_error("UniRatFun::inverse of zero");
    return UniRatFun(den_, num_);
}

UniRatFun UniRatFun::divided(const ExactRat& c) const {
    if (c == 0) throw std::domain_error("UniRatFun: division by zero scalar");
    UniRatFun r = *this;
    r.num_ = r.num_.divided(c);
    return r;
}

UniRatFun UniRatFun::substituted_power(long k) const {
    UniRatFun r;
    r.num_ = num_.substituted_power(k);
    r.den_ = den_.substituted_power(k);
    return r;
}

ExactRat UniRatFun::eval(const ExactRat& x) const {
    ExactRat d = den_.eval(x);
    if (d == 0) throw std::domain_error("UniRatFun::eval: pole");
    return num_.eval(x) / d;
}

UniLaurent UniRatFun::as_laurent() const {
    if (num_.is_zero()) return UniLaurent(den_.var());
    if (den_.support_size() != 1)
        throw std::logic_error("UniRatFun::as_laurent: value is not a Laurent polynomial: " + str());
    return num_.shifted(-den_.min_exp());
}

std::string UniRatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace hk
