#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncp/polynomial.hpp"

namespace ncp {

class FiniteField;
using FFPtr = std::shared_ptr<const FiniteField>;

/// Element of F_{p^deg}, coefficients on the power basis of the modulus root.
class FFElem {
   public:
    FFElem(FFPtr field, std::vector<long> coeffs);

    const FFPtr& field() const { return field_; }
    const std::vector<long>& coeffs() const { return c_; }
    bool is_zero() const;

    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    friend FFElem operator/(const FFElem& a, const FFElem& b);
    friend bool operator==(const FFElem& a, const FFElem& b);

    FFElem inverse() const;
    FFElem pow(long e) const;
    std::string str() const;

   private:
    FFPtr field_;
    std::vector<long> c_;
};

/// F_{p^deg} = F_p[y]/(modulus); the modulus is verified irreducible.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
   public:
    static FFPtr create(ModPoly modulus);
    static FFPtr prime_field(long p);

    long p() const { return modulus_.p(); }
    int deg() const { return modulus_.degree(); }
    long size() const;
    const ModPoly& modulus() const { return modulus_; }

    FFElem elem(std::vector<long> coeffs) const;
    FFElem gen() const;
    FFElem zero() const;
    FFElem one() const;
    FFElem from_int(long v) const;

   private:
    explicit FiniteField(ModPoly modulus);
    FFPtr self() const { return shared_from_this(); }
    ModPoly modulus_;
};

/// Euler criterion; requires x != 0 and odd characteristic.
bool is_square(const FFElem& x);

/// Legendre symbol of x in F_q as +1/-1; requires x != 0 and odd q.
int legendre(const FFElem& x);

/// Tame local symbol at an odd place from valuations and unit-part residues;
/// computes the Legendre symbol of (-1)^{va vb} u_a^{vb} u_b^{-va}.
int tame_symbol(long va, const FFElem& a_res, long vb, const FFElem& b_res);

}  // namespace ncp
