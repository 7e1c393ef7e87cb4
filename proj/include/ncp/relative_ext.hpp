#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncp/number_field.hpp"

namespace ncp {

class RelativeExtension;
using RelExtPtr = std::shared_ptr<const RelativeExtension>;

/// Element of L = K[y]/(g), a free rank-m module over the base number field.
class RelElem {
   public:
    RelElem(RelExtPtr ext, std::vector<NFElem> coeffs);

    const RelExtPtr& ext() const { return ext_; }
    const std::vector<NFElem>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_base() const;
    /// The degree-0 coefficient; throws unless the element lies in K.
    NFElem base_value() const;

    friend RelElem operator+(const RelElem& a, const RelElem& b);
    friend RelElem operator-(const RelElem& a, const RelElem& b);
    friend RelElem operator-(const RelElem& a);
    friend RelElem operator*(const RelElem& a, const RelElem& b);
    friend bool operator==(const RelElem& a, const RelElem& b);

    RelElem inverse() const;
    RelElem pow(long e) const;

   private:
    RelExtPtr ext_;
    std::vector<NFElem> c_;
};

/// K-linear automorphism of L/K, fixed by the image of the ring generator.
class RelAutomorphism {
   public:
    RelAutomorphism(RelExtPtr ext, RelElem gen_image);

    const RelExtPtr& ext() const { return ext_; }
    const RelElem& gen_image() const { return gen_image_; }
    bool is_identity() const;

    RelElem operator()(const RelElem& x) const;
    friend bool operator==(const RelAutomorphism& a, const RelAutomorphism& b);

   private:
    RelExtPtr ext_;
    RelElem gen_image_;
};

RelAutomorphism compose_aut(const RelAutomorphism& outer, const RelAutomorphism& inner);
int aut_order(const RelAutomorphism& tau, int bound = 64);

/// L = K(beta) presented as K[y]/(g) for monic g over K. The paper's towers
/// are only ever used K-linearly, so no absolute field is constructed.
class RelativeExtension : public std::enable_shared_from_this<RelativeExtension> {
   public:
    static RelExtPtr create(FieldPtr base, std::vector<NFElem> min_poly, std::string label);

    const FieldPtr& base() const { return base_; }
    /// Monic minimal polynomial of the generator, lowest degree first.
    const std::vector<NFElem>& min_poly() const { return g_; }
    int degree() const { return static_cast<int>(g_.size()) - 1; }
    const std::string& label() const { return label_; }

    RelElem elem(std::vector<NFElem> coeffs) const;
    RelElem gen() const;
    RelElem zero() const;
    RelElem one() const;
    RelElem from_base(const NFElem& x) const;

    /// g evaluated at an arbitrary element of L.
    RelElem eval_min_poly(const RelElem& x) const;

   private:
    RelativeExtension(FieldPtr base, std::vector<NFElem> g, std::string label);
    RelExtPtr self() const { return shared_from_this(); }

    FieldPtr base_;
    std::vector<NFElem> g_;
    std::string label_;
};

/// Discriminant of a monic polynomial with coefficients in K, with the same
/// sign convention as the rational case.
NFElem nf_poly_discriminant(const FieldPtr& field, const std::vector<NFElem>& poly);

/// Product of tau^i(x) over the full K-automorphism list; verified to lie
/// in K and to be fixed by the supplied group.
NFElem rel_norm(const RelElem& x, const std::vector<RelAutomorphism>& gal);

}  // namespace ncp
