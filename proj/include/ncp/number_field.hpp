#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncp/polynomial.hpp"

namespace ncp {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q[x]/(f), stored as coefficients on the power basis of the
/// generator. Carries a handle to its field; mixing fields throws.
class NFElem {
   public:
    NFElem(FieldPtr field, std::vector<Rational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    /// The constant coefficient; throws unless is_rational().
    Rational rational_value() const;

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    friend bool operator==(const NFElem& a, const NFElem& b);

    NFElem inverse() const;
    NFElem pow(long e) const;
    std::string str() const;

   private:
    FieldPtr field_;
    std::vector<Rational> c_;
};

/// Field automorphism given by the image of the generator; the image is
/// verified to be a root of the minimal polynomial at construction.
class NFAutomorphism {
   public:
    NFAutomorphism(FieldPtr field, NFElem gen_image);

    const FieldPtr& field() const { return field_; }
    const NFElem& gen_image() const { return gen_image_; }
    bool is_identity() const;

    NFElem operator()(const NFElem& x) const;
    friend bool operator==(const NFAutomorphism& a, const NFAutomorphism& b);

   private:
    FieldPtr field_;
    NFElem gen_image_;
};

NFAutomorphism compose_aut(const NFAutomorphism& outer, const NFAutomorphism& inner);
int aut_order(const NFAutomorphism& sigma, int bound = 64);

/// Tagged radical inside a field: coeffs^power must equal target.
struct TagSpec {
    std::string name;
    std::vector<Rational> coeffs;
    Rational target;
    unsigned power = 2;
};

/// K = Q[x]/(f) for monic f. Construction checks monicity and, for
/// degree > 1, the absence of rational roots; irreducibility of the bundled
/// minimal polynomials is certified separately (see certify_irreducible_mod).
class NumberField : public std::enable_shared_from_this<NumberField> {
   public:
    static FieldPtr create(UniPoly min_poly, std::string label,
                           const std::vector<TagSpec>& tags = {});

    const UniPoly& min_poly() const { return min_poly_; }
    const std::string& label() const { return label_; }
    int degree() const { return min_poly_.degree(); }

    NFElem elem(std::vector<Rational> coeffs) const;
    NFElem elem_from_ints(const std::vector<long>& coeffs) const;
    NFElem gen() const;
    NFElem zero() const;
    NFElem one() const;
    NFElem from_rational(const Rational& q) const;

    /// True iff the minimal polynomial is irreducible mod p with a single
    /// factor, which certifies irreducibility over Q.
    bool certify_irreducible_mod(long p) const;

    /// Tagged subfield radicals (e.g. "sqrt3"), verified at creation.
    NFElem tag(const std::string& name) const;
    bool has_tag(const std::string& name) const;
    const std::map<std::string, std::vector<Rational>>& tags() const { return tags_; }

   private:
    NumberField(UniPoly min_poly, std::string label);
    FieldPtr self() const { return shared_from_this(); }

    UniPoly min_poly_;
    std::string label_;
    std::map<std::string, std::vector<Rational>> tags_;
};

NFElem nf_add(const NFElem& a, const NFElem& b);
NFElem nf_mul(const NFElem& a, const NFElem& b);
NFElem nf_inv(const NFElem& a);
NFElem apply_aut(const NFAutomorphism& sigma, const NFElem& x);

/// Determinant of the regular representation of multiplication by x.
Rational nf_norm(const NFElem& x);
Rational nf_trace(const NFElem& x);

/// Product of sigma(x) over the supplied automorphisms; the result is
/// verified to be fixed by every member of the list.
NFElem relative_norm(const NFElem& x, const std::vector<NFAutomorphism>& gal);

struct BiquadraticField {
    FieldPtr field;
    NFAutomorphism sigma1;  // sqrt3 -> -sqrt3, sqrtm7 fixed
    NFAutomorphism sigma2;  // sqrt3 fixed, sqrtm7 -> -sqrtm7
    NFElem sqrt3;
    NFElem sqrtm7;
};

/// Q(sqrt3, sqrt-7) on the primitive element t = sqrt3 + sqrt-7 with
/// minimal polynomial x^4 + 8x^2 + 100; tags and all four automorphisms
/// are constructed and verified.
BiquadraticField build_biquadratic();

/// Q(sqrt d) for squarefree d, tag "sqrt".
FieldPtr build_quadratic(long d, const std::string& label);

}  // namespace ncp
