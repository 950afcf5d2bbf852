#include "hk/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hk {

namespace {

// Constants carry an empty/irrelevant variable name; genuine name clashes are
// contract violations.
const std::string& merge_var(const UniLaurent& a, const UniLaurent& b) {
    if (a.is_constant() || a.var().empty()) return b.var();
    if (b.is_constant() || b.var().empty()) return a.var();
    if (a.var() != b.var())
        throw std::invalid_argument("UniLaurent: variable-name mismatch: '" + a.var() + "' vs '" + b.var() + "'");
    return a.var();
}

} // namespace

bool UniLaurent::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long UniLaurent::min_exp() const {
    check(!coeffs_.empty(), "UniLaurent::min_exp on zero");
    return coeffs_.begin()->first;
}

long UniLaurent::max_exp() const {
    check(!coeffs_.empty(), "UniLaurent::max_exp on zero");
    return coeffs_.rbegin()->first;
}

ExactRat UniLaurent::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? ExactRat(0) : it->second;
}

ExactRat UniLaurent::leading_coeff() const {
    check(!coeffs_.empty(), "UniLaurent::leading_coeff on zero");
    return coeffs_.rbegin()->second;
}

void UniLaurent::add_term(long exp, const ExactRat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

UniLaurent UniLaurent::operator-() const {
    UniLaurent r(var_);
    for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

UniLaurent& UniLaurent::operator+=(const UniLaurent& o) {
    std::string v = merge_var(*this, o);
    var_ = v;
    for (auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

UniLaurent& UniLaurent::operator-=(const UniLaurent& o) {
    std::string v = merge_var(*this, o);
    var_ = v;
    for (auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

bool UniLaurent::operator==(const UniLaurent& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    if (!is_constant() && !o.is_constant() && var_ != o.var_) return false;
    return coeffs_ == o.coeffs_;
}

UniLaurent operator*(const UniLaurent& a, const UniLaurent& b) {
    std::string v = merge_var(a, b);
    UniLaurent r(v);
    if (a.is_zero() || b.is_zero()) return r;

    // Sparse by default; densify when both supports are large and dense-ish,
    // which is the complete-graph / q-series regime.
    size_t sa = a.support_size(), sb = b.support_size();
    long amin = a.min_exp(), amax = a.max_exp();
    long bmin = b.min_exp(), bmax = b.max_exp();
    long span = (amax - amin) + (bmax - bmin) + 1;
    if (sa > 16 && sb > 16 && (long)(sa * sb) > 4 * span) {
        std::vector<ExactRat> acc((size_t)span);
        for (auto& [ea, ca] : a.terms())
            for (auto& [eb, cb] : b.terms())
                acc[(size_t)(ea + eb - amin - bmin)] += ca * cb;
        return UniLaurent::from_dense(v, acc, amin + bmin);
    }
    for (auto& [ea, ca] : a.terms())
        for (auto& [eb, cb] : b.terms())
            r.add_term(ea + eb, ca * cb);
    return r;
}

UniLaurent UniLaurent::scaled(const ExactRat& c) const {
    UniLaurent r(var_);
    if (c == 0) return r;
    for (auto& [e, k] : coeffs_) r.coeffs_.emplace(e, k * c);
    return r;
}

UniLaurent UniLaurent::shifted(long k) const {
    UniLaurent r(var_);
    for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
}

UniLaurent UniLaurent::substituted_power(long k) const {
    check(k >= 1, "substituted_power: k >= 1 required");
    UniLaurent r(var_);
    for (auto& [e, c] : coeffs_) r.coeffs_.emplace(e * k, c);
    return r;
}

UniLaurent UniLaurent::divided(const ExactRat& c) const {
    if (c == 0) throw std::domain_error("UniLaurent: division by zero scalar");
    UniLaurent r(var_);
    for (auto& [e, k] : coeffs_) r.coeffs_.emplace(e, k / c);
    return r;
}

ExactRat UniLaurent::eval(const ExactRat& x) const {
    if (coeffs_.empty()) return ExactRat(0);
    long lo = min_exp();
    if (lo < 0 && x == 0) throw std::domain_error("UniLaurent::eval: negative exponent at x=0");
    // Horner over the dense span from the top down.
    ExactRat acc(0);
    long prev = max_exp();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * pow_rat(x, prev - it->first) + it->second;
        prev = it->first;
    }
    return acc * pow_rat(x, prev);
}

std::vector<ExactRat> UniLaurent::dense() const {
    if (coeffs_.empty()) return {};
    check(min_exp() >= 0, "UniLaurent::dense: negative exponents");
    std::vector<ExactRat> out((size_t)max_exp() + 1);
    for (auto& [e, c] : coeffs_) out[(size_t)e] = c;
    return out;
}

UniLaurent UniLaurent::from_dense(const std::string& var, const std::vector<ExactRat>& c, long offset) {
    UniLaurent r(var);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) r.coeffs_.emplace(offset + (long)i, c[i]);
    return r;
}

std::string UniLaurent::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        ExactRat a = abs(c);
        if (e == 0 || a != 1) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << (var_.empty() ? "x" : var_);
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

void poly_divmod(const UniLaurent& a, const UniLaurent& b, UniLaurent& q, UniLaurent& r) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: zero divisor");
    check(a.is_zero() || a.min_exp() >= 0, "poly_divmod: Laurent dividend");
    check(b.min_exp() >= 0, "poly_divmod: Laurent divisor");
    std::string v = b.is_constant() ? a.var() : b.var();

    std::vector<ExactRat> rd = a.dense();
    std::vector<ExactRat> bd = b.dense();
    size_t db = bd.size() - 1;
    const ExactRat& lead = bd[db];
    std::vector<ExactRat> qd;
    if (rd.size() > db) qd.assign(rd.size() - db, ExactRat(0));
    for (size_t i = rd.size(); i-- > db;) {
        if (rd[i] == 0) continue;
        ExactRat f = rd[i] / lead;
        qd[i - db] = f;
        for (size_t j = 0; j <= db; ++j) rd[i - db + j] -= f * bd[j];
    }
    q = UniLaurent::from_dense(v, qd);
    r = UniLaurent::from_dense(v, rd);
}

UniLaurent poly_div_exact(const UniLaurent& a, const UniLaurent& b) {
    UniLaurent q, r;
    poly_divmod(a, b, q, r);
    check(r.is_zero(), "poly_div_exact: nonzero remainder");
    return q;
}

namespace {

// Degree of gcd over F_p bounds the rational gcd degree from above, so a
// constant modular gcd proves coprimality.
uint64_t mod_of(const ExactRat& c, uint64_t p, bool& ok) {
    ExactInt den = c.get_den();
    ExactInt dm = den % ExactInt((unsigned long)p);
    if (dm == 0) { ok = false; return 0; }
    uint64_t d = dm.get_ui();
    ExactInt num = c.get_num() % ExactInt((unsigned long)p);
    uint64_t n = (num < 0 ? num + ExactInt((unsigned long)p) : num).get_ui();
    // d^{p-2} mod p via exponentiation
    uint64_t inv = 1, base = d, e = p - 2;
    while (e) {
        if (e & 1) inv = (uint64_t)((unsigned __int128)inv * base % p);
        base = (uint64_t)((unsigned __int128)base * base % p);
        e >>= 1;
    }
    return (uint64_t)((unsigned __int128)n * inv % p);
}

bool coprime_mod_p(const std::vector<ExactRat>& a, const std::vector<ExactRat>& b) {
    const uint64_t p = 4611686018427387847ull; // prime below 2^62
    bool ok = true;
    auto reduce = [&](const std::vector<ExactRat>& v) {
        std::vector<uint64_t> out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[i] = mod_of(v[i], p, ok);
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    std::vector<uint64_t> fa = reduce(a), fb = reduce(b);
    if (!ok) return false;
    if (fa.size() != a.size() || fb.size() != b.size()) return false; // leading coeff vanished mod p
    while (!fb.empty()) {
        // fa mod fb over F_p
        uint64_t lead = fb.back();
        uint64_t inv = 1, base = lead, e = p - 2;
        while (e) {
            if (e & 1) inv = (uint64_t)((unsigned __int128)inv * base % p);
            base = (uint64_t)((unsigned __int128)base * base % p);
            e >>= 1;
        }
        while (fa.size() >= fb.size()) {
            uint64_t f = (uint64_t)((unsigned __int128)fa.back() * inv % p);
            if (f != 0) {
                size_t off = fa.size() - fb.size();
                for (size_t j = 0; j < fb.size(); ++j) {
                    uint64_t s = (uint64_t)((unsigned __int128)f * fb[j] % p);
                    fa[off + j] = fa[off + j] >= s ? fa[off + j] - s : fa[off + j] + p - s;
                }
            }
            fa.pop_back();
            while (!fa.empty() && fa.back() == 0) fa.pop_back();
            if (fa.empty()) break;
        }
        std::swap(fa, fb);
    }
    return fa.size() == 1; // gcd is a nonzero constant
}

} // namespace

UniLaurent poly_gcd(const UniLaurent& a, const UniLaurent& b) {
    if (a.is_zero() && b.is_zero()) return UniLaurent();
    std::string v = a.is_constant() ? b.var() : a.var();
    if (a.is_zero() || b.is_zero()) {
        const UniLaurent& n = a.is_zero() ? b : a;
        return n.divided(n.leading_coeff());
    }
    check(a.min_exp() >= 0 && b.min_exp() >= 0, "poly_gcd: Laurent input");
    if (a.is_constant() || b.is_constant()) return UniLaurent(v, ExactRat(1), 0);
    if (coprime_mod_p(a.dense(), b.dense())) return UniLaurent(v, ExactRat(1), 0);

    UniLaurent x = a, y = b;
    while (!y.is_zero()) {
        UniLaurent q, r;
        poly_divmod(x, y, q, r);
        // Normalize after each step to keep the rational coefficients tame.
        if (!r.is_zero()) r = r.divided(r.leading_coeff());
        x = std::move(y);
        y = std::move(r);
    }
    return x.divided(x.leading_coeff());
}

} // namespace hk
