#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ncp/poly_core.hpp"
#include "ncp/rational.hpp"

namespace ncp {

/// Univariate polynomial over Q, dense, lowest degree first.
/// The zero polynomial is the empty coefficient vector.
class UniPoly {
   public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly from_ints(const std::vector<long>& coeffs) {
        std::vector<Rational> c;
        c.reserve(coeffs.size());
        for (long v : coeffs) c.push_back(rat(v));
        return UniPoly(std::move(c));
    }

    /// x^k
    static UniPoly monomial(std::size_t k, const Rational& coeff = rat(1)) {
        std::vector<Rational> c(k + 1, rat(0));
        c[k] = coeff;
        return UniPoly(std::move(c));
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return detail::poly_deg(c_); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : rat(0); }
    Rational leading() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        return UniPoly(detail::poly_add(a.c_, b.c_, rat(0)));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        return UniPoly(detail::poly_sub(a.c_, b.c_, rat(0)));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        return UniPoly(detail::poly_mul(a.c_, b.c_, rat(0)));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        return UniPoly(detail::poly_scale(a.c_, s, rat(0)));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Rational operator()(const Rational& x) const { return detail::poly_eval(c_, x, rat(0)); }

    UniPoly derivative() const { return UniPoly(detail::poly_derivative(c_, rat(0), rat(1))); }

    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const {
        auto [q, r] = detail::poly_divrem(c_, divisor.c_, rat(0));
        return {UniPoly(std::move(q)), UniPoly(std::move(r))};
    }

    /// Exact division; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& divisor) const {
        auto [q, r] = divrem(divisor);
        if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
        return q;
    }

    std::string str(const std::string& var = "x") const;

   private:
    void trim() { detail::poly_trim(c_, rat(0)); }
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, f) is the monic multiple of f.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

Rational poly_resultant(const UniPoly& f, const UniPoly& g);

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f). Requires deg f >= 1.
Rational poly_discriminant(const UniPoly& f);

/// Polynomial over F_p, dense, coefficients reduced into [0, p).
class ModPoly {
   public:
    ModPoly(long p, std::vector<long> coeffs);

    static ModPoly reduce(const UniPoly& f, long p);

    long p() const { return p_; }
    const std::vector<long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return detail::poly_deg(c_); }
    long coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    std::pair<ModPoly, ModPoly> divrem(const ModPoly& divisor) const;
    long operator()(long x) const;

   private:
    void check_same(const ModPoly& other) const {
        if (p_ != other.p_) throw std::invalid_argument("mixed moduli");
    }
    long p_ = 2;
    std::vector<long> c_;
};

bool is_prime(long p);

/// Degrees (with multiplicity) of the irreducible factors of f mod p.
/// Requires p prime, p-integral coefficients and lc(f) nonzero mod p.
std::vector<int> factor_degrees_mod_p(const UniPoly& f, long p);

}  // namespace ncp
