#pragma once

#include <map>
#include <string>
#include <utility>

#include "hk/laurent.hpp"

namespace hk {

// Two-variable polynomial with finite support; no zero coefficients stored.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(std::string v1, std::string v2) : var1_(std::move(v1)), var2_(std::move(v2)) {}

    const std::string& var1() const { return var1_; }
    const std::string& var2() const { return var2_; }
    const std::map<std::pair<long, long>, ExactRat>& terms() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    size_t monomial_count() const { return coeffs_.size(); }

    void add_term(long e1, long e2, const ExactRat& c) {
        if (c == 0) return;
        auto key = std::make_pair(e1, e2);
        auto [it, inserted] = coeffs_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    ExactRat coeff(long e1, long e2) const {
        auto it = coeffs_.find({e1, e2});
        return it == coeffs_.end() ? ExactRat(0) : it->second;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (auto& [e, c] : o.coeffs_) add_term(e.first, e.second, c);
        return *this;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.var1_, a.var2_);
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    bool operator==(const BiPoly& o) const { return coeffs_ == o.coeffs_; }

    BiPoly transposed() const {
        BiPoly r(var2_, var1_);
        for (auto& [e, c] : coeffs_) r.add_term(e.second, e.first, c);
        return r;
    }

    // Substitute var1 = x, leaving a Laurent polynomial in var2.
    UniLaurent eval_var1(const ExactRat& x) const {
        UniLaurent out(var2_);
        for (auto& [e, c] : coeffs_) {
            if (e.first < 0 && x == 0) throw std::domain_error("BiPoly::eval_var1: negative exponent at 0");
            out.add_term(e.second, c * pow_rat(x, e.first));
        }
        return out;
    }

    long max_deg1() const {
        long m = 0;
        for (auto& [e, c] : coeffs_) m = std::max(m, e.first);
        return m;
    }
    long max_deg2() const {
        long m = 0;
        for (auto& [e, c] : coeffs_) m = std::max(m, e.second);
        return m;
    }

private:
    std::string var1_, var2_;
    std::map<std::pair<long, long>, ExactRat> coeffs_;
};

} // namespace hk
