#include "ncp/residue_map.hpp"

#include "ncp/poly_core.hpp"

namespace ncp {

ResidueMap::ResidueMap(FieldPtr field, long p, FFPtr codomain, FFElem gen_image)
    : field_(std::move(field)), p_(p), codomain_(std::move(codomain)),
      gen_image_(std::move(gen_image)) {
    if (codomain_->p() != p_) throw std::invalid_argument("codomain characteristic mismatch");
    if (gen_image_.field() != codomain_) throw std::invalid_argument("root from wrong field");
    // f(root) must vanish in the codomain
    FFElem value = codomain_->zero();
    const auto& mp = field_->min_poly().coeffs();
    for (std::size_t i = mp.size(); i-- > 0;) {
        if (mpz_fdiv_ui(rat_den(mp[i]).get_mpz_t(), static_cast<unsigned long>(p_)) == 0)
            throw std::invalid_argument("minimal polynomial not p-integral");
        long num = static_cast<long>(
            mpz_fdiv_ui(rat_num(mp[i]).get_mpz_t(), static_cast<unsigned long>(p_)));
        long den = static_cast<long>(
            mpz_fdiv_ui(rat_den(mp[i]).get_mpz_t(), static_cast<unsigned long>(p_)));
        FFElem coeff = codomain_->from_int(num) * codomain_->from_int(den).inverse();
        value = value * gen_image_ + coeff;
    }
    if (!value.is_zero())
        throw std::invalid_argument("root is not a zero of the minimal polynomial mod p");
}

FFElem ResidueMap::operator()(const NFElem& x) const {
    if (x.field() != field_) throw std::invalid_argument("element from wrong field");
    FFElem value = codomain_->zero();
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (mpz_fdiv_ui(rat_den(c[i]).get_mpz_t(), static_cast<unsigned long>(p_)) == 0)
            throw std::invalid_argument("element has p in a denominator");
        long num = static_cast<long>(
            mpz_fdiv_ui(rat_num(c[i]).get_mpz_t(), static_cast<unsigned long>(p_)));
        long den = static_cast<long>(
            mpz_fdiv_ui(rat_den(c[i]).get_mpz_t(), static_cast<unsigned long>(p_)));
        FFElem coeff = codomain_->from_int(num) * codomain_->from_int(den).inverse();
        value = value * gen_image_ + coeff;
    }
    return value;
}

ResidueMap make_residue_map(FieldPtr field, long p, FFPtr codomain, FFElem root) {
    return ResidueMap(std::move(field), p, std::move(codomain), std::move(root));
}

RelResElem::RelResElem(RelResPtr field, std::vector<FFElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != field_->degree())
        throw std::invalid_argument("coefficient count does not match degree");
}

bool RelResElem::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

RelResElem operator+(const RelResElem& a, const RelResElem& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mixed residue fields");
    std::vector<FFElem> c;
    c.reserve(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] + b.c_[i]);
    return RelResElem(a.field_, std::move(c));
}

RelResElem operator-(const RelResElem& a, const RelResElem& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mixed residue fields");
    std::vector<FFElem> c;
    c.reserve(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] - b.c_[i]);
    return RelResElem(a.field_, std::move(c));
}

RelResElem operator*(const RelResElem& a, const RelResElem& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mixed residue fields");
    const FFElem zero = a.field_->base_map().codomain()->zero();
    auto prod = detail::poly_mul(a.c_, b.c_, zero);
    auto rem = detail::poly_divrem(prod, a.field_->modulus(), zero).second;
    rem.resize(a.c_.size(), zero);
    return RelResElem(a.field_, std::move(rem));
}

bool operator==(const RelResElem& a, const RelResElem& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mixed residue fields");
    return (a - b).is_zero();
}

RelResElem RelResElem::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    RelResElem r = field_->one();
    RelResElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RelResidueField::RelResidueField(RelExtPtr ext, ResidueMap base_map, std::vector<FFElem> gbar)
    : ext_(std::move(ext)), base_map_(std::move(base_map)), gbar_(std::move(gbar)) {}

RelResPtr RelResidueField::create(RelExtPtr ext, ResidueMap base_map) {
    if (base_map.field() != ext->base())
        throw std::invalid_argument("residue map is for a different base field");
    std::vector<FFElem> gbar;
    gbar.reserve(ext->min_poly().size());
    for (const auto& c : ext->min_poly()) gbar.push_back(base_map(c));
    const FFPtr codomain = base_map.codomain();
    int deg = static_cast<int>(gbar.size()) - 1;
    if (!(gbar.back() == codomain->one()))
        throw std::invalid_argument("reduced polynomial is not monic");
    if (deg > 3)
        throw std::invalid_argument("no-root irreducibility certificate needs degree <= 3");
    if (deg > 1) {
        // no roots in the bottom residue field: irreducible for degree 2, 3
        long q = codomain->size();
        std::vector<long> idx(static_cast<std::size_t>(codomain->deg()), 0);
        for (long count = 0; count < q; ++count) {
            FFElem x = codomain->elem(idx);
            FFElem value = codomain->zero();
            for (std::size_t i = gbar.size(); i-- > 0;) value = value * x + gbar[i];
            if (value.is_zero())
                throw std::invalid_argument("reduced polynomial has a root: not inertial data");
            for (std::size_t d = 0; d < idx.size(); ++d) {
                if (++idx[d] < codomain->p()) break;
                idx[d] = 0;
            }
        }
    }
    return std::shared_ptr<RelResidueField>(
        new RelResidueField(std::move(ext), std::move(base_map), std::move(gbar)));
}

RelResElem RelResidueField::elem(std::vector<FFElem> coeffs) const {
    coeffs.resize(static_cast<std::size_t>(degree()), base_map_.codomain()->zero());
    return RelResElem(self(), std::move(coeffs));
}

RelResElem RelResidueField::gen() const {
    const FFPtr& codomain = base_map_.codomain();
    if (degree() == 1) return elem({codomain->zero() - gbar_[0]});  // root of the linear modulus
    std::vector<FFElem> c(static_cast<std::size_t>(degree()), codomain->zero());
    c[1] = codomain->one();
    return RelResElem(self(), std::move(c));
}

RelResElem RelResidueField::zero() const { return elem({}); }

RelResElem RelResidueField::one() const {
    std::vector<FFElem> c(static_cast<std::size_t>(degree()), base_map_.codomain()->zero());
    c[0] = base_map_.codomain()->one();
    return RelResElem(self(), std::move(c));
}

RelResElem RelResidueField::reduce(const RelElem& x) const {
    if (x.ext() != ext_) throw std::invalid_argument("element from wrong extension");
    std::vector<FFElem> c;
    c.reserve(x.coeffs().size());
    for (const auto& coeff : x.coeffs()) c.push_back(base_map_(coeff));
    return RelResElem(self(), std::move(c));
}

bool frobenius_match(const RelResidueField& res, const RelAutomorphism& candidate) {
    if (candidate.ext() != res.ext()) throw std::invalid_argument("mixed extensions");
    long q = res.base_map().codomain()->size();
    RelResElem frobenius_image = res.gen().pow(q);
    RelResElem candidate_image = res.reduce(candidate.gen_image());
    return frobenius_image == candidate_image;
}

}  // namespace ncp
