#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ncp/number_field.hpp"

namespace ncp {

class SymbolAlgebra;
using SymbolAlgPtr = std::shared_ptr<const SymbolAlgebra>;

/// Element of a symbol algebra, coefficients on the basis i^s j^t, stored
/// row-major with index s*n + t.
class AlgElem {
   public:
    AlgElem(SymbolAlgPtr algebra, std::vector<NFElem> coeffs);

    const SymbolAlgPtr& algebra() const { return alg_; }
    const std::vector<NFElem>& coeffs() const { return c_; }
    const NFElem& coeff(int s, int t) const;
    bool is_zero() const;
    bool is_scalar() const;
    /// The coefficient of 1; throws unless the element lies in K.
    NFElem scalar_value() const;
    /// True iff only the j-powers (resp. i-powers) carry coefficients.
    bool in_Kj() const;
    bool in_Ki() const;

    friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a);
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const NFElem& s, const AlgElem& a);
    friend bool operator==(const AlgElem& a, const AlgElem& b);

    /// Inverse via the regular representation; throws on zero divisors.
    AlgElem inverse() const;
    AlgElem pow(long e) const;
    std::string str() const;

   private:
    SymbolAlgPtr alg_;
    std::vector<NFElem> c_;
};

/// (a,b / K, zeta): generated by i, j with i^n = a, j^n = b, ji = zeta ij.
/// Quaternion algebras are the n = 2, zeta = -1 case with k = ij.
class SymbolAlgebra : public std::enable_shared_from_this<SymbolAlgebra> {
   public:
    static SymbolAlgPtr create(FieldPtr field, int n, NFElem zeta, NFElem a, NFElem b);
    static SymbolAlgPtr quaternion(FieldPtr field, NFElem a, NFElem b);

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    const NFElem& zeta() const { return zeta_; }
    const NFElem& a() const { return a_; }
    const NFElem& b() const { return b_; }
    int dim() const { return n_ * n_; }

    AlgElem elem(std::vector<NFElem> coeffs) const;
    AlgElem zero() const;
    AlgElem one() const;
    AlgElem gen_i() const;
    AlgElem gen_j() const;
    AlgElem from_field(const NFElem& x) const;
    AlgElem basis_elem(int s, int t, const NFElem& coeff) const;

   private:
    SymbolAlgebra(FieldPtr field, int n, NFElem zeta, NFElem a, NFElem b);
    SymbolAlgPtr self() const { return shared_from_this(); }

    FieldPtr field_;
    int n_;
    NFElem zeta_;
    NFElem a_;
    NFElem b_;
};

AlgElem alg_add(const AlgElem& x, const AlgElem& y);
AlgElem alg_mul(const AlgElem& x, const AlgElem& y);
AlgElem alg_inv(const AlgElem& x);

/// Semilinear automorphism: base automorphism on K plus images of i and j,
/// verified to satisfy i'^n = sigma(a), j'^n = sigma(b), j'i' = zeta i'j'.
class AlgAutomorphism {
   public:
    AlgAutomorphism(NFAutomorphism base, AlgElem image_i, AlgElem image_j);

    /// Skips the relation check; used by mutation suites to build broken maps.
    static AlgAutomorphism unchecked(NFAutomorphism base, AlgElem image_i, AlgElem image_j);
    static AlgAutomorphism identity(const SymbolAlgPtr& algebra);

    const SymbolAlgPtr& algebra() const { return image_i_.algebra(); }
    const NFAutomorphism& base() const { return base_; }
    const AlgElem& image_i() const { return image_i_; }
    const AlgElem& image_j() const { return image_j_; }

    /// True iff the three defining relations hold.
    bool is_valid() const;

    AlgElem operator()(const AlgElem& x) const;

   private:
    AlgAutomorphism(NFAutomorphism base, AlgElem image_i, AlgElem image_j, bool verify);
    NFAutomorphism base_;
    AlgElem image_i_;
    AlgElem image_j_;
};

AlgAutomorphism compose(const AlgAutomorphism& outer, const AlgAutomorphism& inner);

/// Automorphism equality decided on the generators of K, i and j; semilinear
/// maps agreeing there agree everywhere (module theorem, tested).
bool equal_on_generators(const AlgAutomorphism& a, const AlgAutomorphism& b);

AlgAutomorphism inner_aut(const AlgElem& c);

/// Product of the Galois conjugates of lambda in K(j) under j -> zeta^k j;
/// the result is verified to lie in K. Requires lambda in K(j).
NFElem norm_in_Kj(const AlgElem& lambda);
NFElem norm_in_Ki(const AlgElem& lambda);

/// Extension of sigma with sigma(zeta) = zeta and sigma(b) = b to the
/// algebra, via lambda in K(j) with N_{K(j)/K}(lambda) = sigma(a)/a:
/// i -> lambda i, j -> j.
AlgAutomorphism extend_fixing_j(const NFAutomorphism& sigma, const AlgElem& lambda);
/// Mirror case: sigma(a) = a, lambda in K(i), i -> i, j -> lambda j.
AlgAutomorphism extend_fixing_i(const NFAutomorphism& sigma, const AlgElem& lambda);

struct NormSearchOptions {
    long height_bound = 1;            // numerator box [-B, B] per coordinate
    long denominator = 1;             // coordinates are divided by divisors of this
    std::vector<NFElem> basis = {};   // search basis of K; power basis if empty
};

/// Bounded exhaustive search for lambda = c + d j with
/// N_{K(j)/K}(lambda) = sigma(a)/a, in lexicographic box order.
std::optional<AlgElem> norm_equation_search(const SymbolAlgPtr& algebra,
                                            const NFAutomorphism& sigma,
                                            const NormSearchOptions& options);

}  // namespace ncp
