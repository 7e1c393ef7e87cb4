#pragma once

#include "ncp/finite_field.hpp"
#include "ncp/number_field.hpp"
#include "ncp/relative_ext.hpp"

namespace ncp {

/// Reduction K -> F_q at a prime not dividing any denominator, determined by
/// a verified root of the minimal polynomial in the codomain.
class ResidueMap {
   public:
    ResidueMap(FieldPtr field, long p, FFPtr codomain, FFElem gen_image);

    const FieldPtr& field() const { return field_; }
    long p() const { return p_; }
    const FFPtr& codomain() const { return codomain_; }
    const FFElem& gen_image() const { return gen_image_; }

    /// Applies the map; throws if a denominator is divisible by p.
    FFElem operator()(const NFElem& x) const;

   private:
    FieldPtr field_;
    long p_;
    FFPtr codomain_;
    FFElem gen_image_;
};

ResidueMap make_residue_map(FieldPtr field, long p, FFPtr codomain, FFElem root);

class RelResidueField;
using RelResPtr = std::shared_ptr<const RelResidueField>;

/// Element of a relative residue field E = Kbar[z]/(gbar).
class RelResElem {
   public:
    RelResElem(RelResPtr field, std::vector<FFElem> coeffs);

    const RelResPtr& field() const { return field_; }
    const std::vector<FFElem>& coeffs() const { return c_; }
    bool is_zero() const;

    friend RelResElem operator+(const RelResElem& a, const RelResElem& b);
    friend RelResElem operator-(const RelResElem& a, const RelResElem& b);
    friend RelResElem operator*(const RelResElem& a, const RelResElem& b);
    friend bool operator==(const RelResElem& a, const RelResElem& b);

    RelResElem pow(long e) const;

   private:
    RelResPtr field_;
    std::vector<FFElem> c_;
};

/// Residue field of the top of a relative extension: the base residue map is
/// applied to the coefficients of g; the reduction must stay squarefree
/// irreducible (certified by the no-root test, so degree at most 3).
class RelResidueField : public std::enable_shared_from_this<RelResidueField> {
   public:
    static RelResPtr create(RelExtPtr ext, ResidueMap base_map);

    const RelExtPtr& ext() const { return ext_; }
    const ResidueMap& base_map() const { return base_map_; }
    const std::vector<FFElem>& modulus() const { return gbar_; }
    int degree() const { return static_cast<int>(gbar_.size()) - 1; }

    RelResElem elem(std::vector<FFElem> coeffs) const;
    RelResElem gen() const;
    RelResElem zero() const;
    RelResElem one() const;
    RelResElem reduce(const RelElem& x) const;

   private:
    RelResidueField(RelExtPtr ext, ResidueMap base_map, std::vector<FFElem> gbar);
    RelResPtr self() const { return shared_from_this(); }

    RelExtPtr ext_;
    ResidueMap base_map_;
    std::vector<FFElem> gbar_;
};

/// True iff the candidate automorphism acts as x -> x^q on the top residue
/// field, q the size of the bottom residue field: the Frobenius test of the
/// paper's worked example.
bool frobenius_match(const RelResidueField& res, const RelAutomorphism& candidate);

}  // namespace ncp
