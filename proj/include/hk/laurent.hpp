#pragma once

#include <map>
#include <string>
#include <vector>

#include "hk/exact.hpp"

namespace hk {

// One-variable Laurent polynomial with exact rational coefficients, stored
// sparsely as exponent -> coefficient. Zero coefficients are never stored.
class UniLaurent {
public:
    UniLaurent() = default;
    explicit UniLaurent(std::string var) : var_(std::move(var)) {}
    UniLaurent(std::string var, const ExactRat& c, long exp = 0) : var_(std::move(var)) {
        add_term(exp, c);
    }

    static UniLaurent constant(const ExactRat& c) { return UniLaurent("", c, 0); }
    static UniLaurent monomial(std::string var, const ExactRat& c, long exp) {
        return UniLaurent(std::move(var), c, exp);
    }

    const std::string& var() const { return var_; }
    const std::map<long, ExactRat>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
    bool is_one() const;
    size_t support_size() const { return coeffs_.size(); }

    long min_exp() const;  // throws on zero
    long max_exp() const;  // throws on zero
    ExactRat coeff(long exp) const;
    ExactRat leading_coeff() const;
    ExactRat constant_term() const { return coeff(0); }

    void add_term(long exp, const ExactRat& c);

    UniLaurent operator-() const;
    UniLaurent& operator+=(const UniLaurent& o);
    UniLaurent& operator-=(const UniLaurent& o);
    friend UniLaurent operator+(UniLaurent a, const UniLaurent& b) { a += b; return a; }
    friend UniLaurent operator-(UniLaurent a, const UniLaurent& b) { a -= b; return a; }
    friend UniLaurent operator*(const UniLaurent& a, const UniLaurent& b);
    bool operator==(const UniLaurent& o) const;

    UniLaurent& operator*=(const UniLaurent& o) { *this = *this * o; return *this; }
    UniLaurent scaled(const ExactRat& c) const;
    UniLaurent shifted(long k) const;             // multiply by var^k
    UniLaurent substituted_power(long k) const;   // x -> x^k (Adams); k >= 1
    UniLaurent divided(const ExactRat& c) const;

    ExactRat eval(const ExactRat& x) const;

    // Treat as polynomial (min_exp >= 0 required): dense coefficient vector.
    std::vector<ExactRat> dense() const;
    static UniLaurent from_dense(const std::string& var, const std::vector<ExactRat>& c, long offset = 0);

    std::string str() const;

private:
    std::string var_;
    std::map<long, ExactRat> coeffs_;

    friend void align_vars(UniLaurent& a, UniLaurent& b);
};

// Ring operations named per the artifact contract.
inline UniLaurent poly_add(const UniLaurent& a, const UniLaurent& b) { return a + b; }
inline UniLaurent poly_mul(const UniLaurent& a, const UniLaurent& b) { return a * b; }

// Polynomial division on nonnegative-exponent inputs: a = q*b + r, deg r < deg b.
void poly_divmod(const UniLaurent& a, const UniLaurent& b, UniLaurent& q, UniLaurent& r);

// Exact division; throws if a remainder is left.
UniLaurent poly_div_exact(const UniLaurent& a, const UniLaurent& b);

// Monic gcd of two polynomials (nonnegative exponents), Euclidean over ExactRat
// with a mod-p coprimality early exit; gcd(0,0) = 0.
UniLaurent poly_gcd(const UniLaurent& a, const UniLaurent& b);

} // namespace hk
