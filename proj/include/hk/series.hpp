#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hk/exact.hpp"
#include "hk/laurent.hpp"
#include "hk/ratfun.hpp"

namespace hk {

// Coefficient-domain operations used by TruncSeries. Constants are minted from
// an exemplar so domains carrying context (variable names, inner truncation)
// stay consistent.
template <class C> struct ring_ops;

template <> struct ring_ops<ExactRat> {
    static ExactRat zero_like(const ExactRat&) { return ExactRat(0); }
    static ExactRat one_like(const ExactRat&) { return ExactRat(1); }
    static bool is_zero(const ExactRat& a) { return a == 0; }
    static bool is_one(const ExactRat& a) { return a == 1; }
    static ExactRat add(const ExactRat& a, const ExactRat& b) { return a + b; }
    static ExactRat neg(const ExactRat& a) { return -a; }
    static ExactRat mul(const ExactRat& a, const ExactRat& b) { return a * b; }
    static ExactRat div_int(const ExactRat& a, long n) { return a / ExactRat(n); }
    static ExactRat adams(const ExactRat& a, long) { return a; }
    static bool try_inverse(const ExactRat& a, ExactRat& out) {
        if (a == 0) return false;
        out = ExactRat(1) / a;
        return true;
    }
};

template <> struct ring_ops<UniLaurent> {
    static UniLaurent zero_like(const UniLaurent& a) { return UniLaurent(a.var()); }
    static UniLaurent one_like(const UniLaurent& a) { return UniLaurent(a.var(), ExactRat(1), 0); }
    static bool is_zero(const UniLaurent& a) { return a.is_zero(); }
    static bool is_one(const UniLaurent& a) { return a.is_one(); }
    static UniLaurent add(const UniLaurent& a, const UniLaurent& b) { return a + b; }
    static UniLaurent neg(const UniLaurent& a) { return -a; }
    static UniLaurent mul(const UniLaurent& a, const UniLaurent& b) { return a * b; }
    static UniLaurent div_int(const UniLaurent& a, long n) { return a.divided(ExactRat(n)); }
    static UniLaurent adams(const UniLaurent& a, long k) { return a.substituted_power(k); }
    static bool try_inverse(const UniLaurent& a, UniLaurent& out) {
        if (a.support_size() != 1) return false; // units are monomials
        out = UniLaurent(a.var(), ExactRat(1) / a.leading_coeff(), -a.min_exp());
        return true;
    }
};

template <> struct ring_ops<UniRatFun> {
    static UniRatFun zero_like(const UniRatFun&) { return UniRatFun(); }
    static UniRatFun one_like(const UniRatFun& a) { return UniRatFun(UniLaurent(a.var(), ExactRat(1), 0)); }
    static bool is_zero(const UniRatFun& a) { return a.is_zero(); }
    static bool is_one(const UniRatFun& a) { return a.is_one(); }
    static UniRatFun add(const UniRatFun& a, const UniRatFun& b) { return a + b; }
    static UniRatFun neg(const UniRatFun& a) { return -a; }
    static UniRatFun mul(const UniRatFun& a, const UniRatFun& b) { return a * b; }
    static UniRatFun div_int(const UniRatFun& a, long n) { return a.divided(ExactRat(n)); }
    static UniRatFun adams(const UniRatFun& a, long k) { return a.substituted_power(k); }
    static bool try_inverse(const UniRatFun& a, UniRatFun& out) {
        if (a.is_zero()) return false;
        out = a.inverse();
        return true;
    }
};

// Classical Moebius function.
int moebius(long k);

// Truncated power series in auxiliary variables T_1..T_r over a coefficient
// domain C. Exponents are nonnegative; a term is kept when it respects every
// per-variable cap and the total-degree cap (if one is set).
template <class C>
class TruncSeries {
public:
    using Key = std::vector<int>;
    using R = ring_ops<C>;

    TruncSeries() = default;
    TruncSeries(std::vector<std::string> vars, std::vector<long> caps, C proto, long total_cap = -1)
        : vars_(std::move(vars)), caps_(std::move(caps)), total_cap_(total_cap), proto_(R::zero_like(proto)) {
        if (vars_.size() != caps_.size())
            throw std::invalid_argument("TruncSeries: vars/caps size mismatch");
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<long>& caps() const { return caps_; }
    long total_cap() const { return total_cap_; }
    const std::map<Key, C>& terms() const { return terms_; }
    const C& proto() const { return proto_; }

    bool in_bounds(const Key& e) const {
        long tot = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) return false;
            if (e[i] > caps_[i]) return false;
            tot += e[i];
        }
        return total_cap_ < 0 || tot <= total_cap_;
    }

    void add_term(const Key& e, const C& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("TruncSeries::add_term: bad exponent arity");
        if (!in_bounds(e) || R::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = R::add(it->second, c);
            if (R::is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Key& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? R::zero_like(proto_) : it->second;
    }
    C constant_term() const { return coeff(Key(vars_.size(), 0)); }

    bool is_zero() const { return terms_.empty(); }

    // Degree cap used to bound exp/log/adams loops: beyond it no monomial fits.
    long max_total_degree() const {
        if (total_cap_ >= 0) return total_cap_;
        return std::accumulate(caps_.begin(), caps_.end(), 0L);
    }

    static TruncSeries one_like(const TruncSeries& s) {
        TruncSeries r(s.vars_, s.caps_, s.proto_, s.total_cap_);
        r.add_term(Key(s.vars_.size(), 0), R::one_like(s.proto_));
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(vars_, caps_, proto_, total_cap_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, R::neg(c));
        return r;
    }

    TruncSeries scaled(const C& k) const {
        TruncSeries r(vars_, caps_, proto_, total_cap_);
        for (auto& [e, c] : terms_) r.add_term(e, R::mul(c, k));
        return r;
    }

    TruncSeries divided_int(long n) const {
        TruncSeries r(vars_, caps_, proto_, total_cap_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, R::div_int(c, n));
        return r;
    }

    bool operator==(const TruncSeries& o) const { return terms_ == o.terms_; }

    std::string str() const {
        std::string s;
        for (auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "[";
            for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
            s += "] ";
            if constexpr (std::is_same_v<C, ExactRat>) s += c.get_str();
            else s += c.str();
        }
        return s.empty() ? "0" : s;
    }

private:
    std::vector<std::string> vars_;
    std::vector<long> caps_;
    long total_cap_ = -1;
    std::map<Key, C> terms_;
    C proto_;

    template <class D> friend TruncSeries<D> s_add(const TruncSeries<D>&, const TruncSeries<D>&);
    template <class D> friend TruncSeries<D> s_mul(const TruncSeries<D>&, const TruncSeries<D>&);
    template <class D> friend TruncSeries<D> adams(const TruncSeries<D>&, long);
};

namespace detail {

template <class C>
void require_compatible(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("TruncSeries: auxiliary-variable mismatch");
}

template <class C>
TruncSeries<C> merged_shape(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    std::vector<long> caps(a.caps().size());
    for (size_t i = 0; i < caps.size(); ++i) caps[i] = std::min(a.caps()[i], b.caps()[i]);
    long tc = a.total_cap();
    if (b.total_cap() >= 0) tc = tc < 0 ? b.total_cap() : std::min(tc, b.total_cap());
    return TruncSeries<C>(a.vars(), caps, a.proto(), tc);
}

} // namespace detail

template <class C>
TruncSeries<C> s_add(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    detail::require_compatible(a, b);
    TruncSeries<C> r = detail::merged_shape(a, b);
    for (auto& [e, c] : a.terms()) r.add_term(e, c);
    for (auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

template <class C>
TruncSeries<C> s_sub(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    return s_add(a, -b);
}

template <class C>
TruncSeries<C> s_mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    detail::require_compatible(a, b);
    TruncSeries<C> r = detail::merged_shape(a, b);
    typename TruncSeries<C>::Key e(a.vars().size());
    for (auto& [ea, ca] : a.terms())
        for (auto& [eb, cb] : b.terms()) {
            bool ok = true;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > r.caps()[i]) { ok = false; break; }
            }
            if (ok) r.add_term(e, ring_ops<C>::mul(ca, cb));
        }
    return r;
}

// Multiplicative inverse; the constant term must be a unit of the domain.
template <class C>
TruncSeries<C> s_inv(const TruncSeries<C>& a) {
    C c0 = a.constant_term();
    C c0inv;
    if (!ring_ops<C>::try_inverse(c0, c0inv))
        throw std::domain_error("s_inv: constant term is not a unit");
    // 1/a = c0^{-1} * sum (-X)^k with X = a/c0 - 1.
    TruncSeries<C> x = s_mul(a, TruncSeries<C>::one_like(a).scaled(c0inv));
    x = s_sub(x, TruncSeries<C>::one_like(a));
    TruncSeries<C> acc = TruncSeries<C>::one_like(a);
    TruncSeries<C> pow = TruncSeries<C>::one_like(a);
    long n = a.max_total_degree();
    for (long k = 1; k <= n; ++k) {
        pow = s_mul(pow, x);
        if (pow.is_zero()) break;
        acc = (k % 2) ? s_sub(acc, pow) : s_add(acc, pow);
    }
    return acc.scaled(c0inv);
}

// Formal exponential; requires zero constant term.
template <class C>
TruncSeries<C> s_exp(const TruncSeries<C>& a) {
    if (!ring_ops<C>::is_zero(a.constant_term()))
        throw std::domain_error("s_exp: constant term must be 0");
    TruncSeries<C> acc = TruncSeries<C>::one_like(a);
    TruncSeries<C> term = TruncSeries<C>::one_like(a);
    long n = a.max_total_degree();
    for (long k = 1; k <= n; ++k) {
        term = s_mul(term, a).divided_int(k);
        if (term.is_zero()) break;
        acc = s_add(acc, term);
    }
    return acc;
}

// Formal logarithm; requires constant term 1.
template <class C>
TruncSeries<C> s_log(const TruncSeries<C>& a) {
    if (!ring_ops<C>::is_one(a.constant_term()))
        throw std::domain_error("s_log: constant term must be 1");
    TruncSeries<C> x = s_sub(a, TruncSeries<C>::one_like(a));
    TruncSeries<C> acc(a.vars(), a.caps(), a.proto(), a.total_cap());
    TruncSeries<C> pow = TruncSeries<C>::one_like(a);
    long n = a.max_total_degree();
    for (long k = 1; k <= n; ++k) {
        pow = s_mul(pow, x);
        if (pow.is_zero()) break;
        TruncSeries<C> term = pow.divided_int(k);
        acc = (k % 2) ? s_add(acc, term) : s_sub(acc, term);
    }
    return acc;
}

// Adams operation psi_k: every variable, auxiliary and coefficient-domain
// alike, is raised to the k-th power; monomials pushed past a cap drop out.
template <class C>
TruncSeries<C> adams(const TruncSeries<C>& a, long k) {
    if (k < 1) throw std::invalid_argument("adams: k >= 1 required");
    if (k == 1) return a;
    TruncSeries<C> r(a.vars(), a.caps(), a.proto(), a.total_cap());
    typename TruncSeries<C>::Key e(a.vars().size());
    for (auto& [ea, ca] : a.terms()) {
        bool ok = true;
        for (size_t i = 0; i < e.size(); ++i) {
            long v = (long)ea[i] * k;
            if (v > a.caps()[i]) { ok = false; break; }
            e[i] = (int)v;
        }
        if (ok) r.add_term(e, ring_ops<C>::adams(ca, k));
    }
    return r;
}

// Plethystic exponential: Exp(f) = exp(sum_{k>=1} psi_k(f)/k); f must have
// zero constant term.
template <class C>
TruncSeries<C> pleth_exp(const TruncSeries<C>& f) {
    if (!ring_ops<C>::is_zero(f.constant_term()))
        throw std::domain_error("pleth_exp: constant term must be 0");
    TruncSeries<C> acc(f.vars(), f.caps(), f.proto(), f.total_cap());
    long n = f.max_total_degree();
    for (long k = 1; k <= n; ++k) {
        TruncSeries<C> t = adams(f, k);
        if (t.is_zero()) continue;
        acc = s_add(acc, t.divided_int(k));
    }
    return s_exp(acc);
}

// Plethystic logarithm: Log(g) = sum_{k>=1} mu(k)/k psi_k(log g); g must have
// constant term 1.
template <class C>
TruncSeries<C> pleth_log(const TruncSeries<C>& g) {
    TruncSeries<C> l = s_log(g);
    TruncSeries<C> acc(g.vars(), g.caps(), g.proto(), g.total_cap());
    long n = g.max_total_degree();
    for (long k = 1; k <= n; ++k) {
        int mu = moebius(k);
        if (mu == 0) continue;
        TruncSeries<C> t = adams(l, k);
        if (t.is_zero()) continue;
        t = t.divided_int(mu > 0 ? k : -k);
        acc = s_add(acc, t);
    }
    return acc;
}

} // namespace hk
