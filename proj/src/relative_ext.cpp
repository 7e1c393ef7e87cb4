#include "ncp/relative_ext.hpp"

#include "ncp/poly_core.hpp"

namespace ncp {

namespace {

void check_same_ext(const RelElem& a, const RelElem& b) {
    if (a.ext() != b.ext()) throw std::invalid_argument("mixed relative extensions");
}

}  // namespace

RelElem::RelElem(RelExtPtr ext, std::vector<NFElem> coeffs)
    : ext_(std::move(ext)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != ext_->degree())
        throw std::invalid_argument("coefficient count does not match extension degree");
    for (const auto& x : c_)
        if (x.field() != ext_->base()) throw std::invalid_argument("coefficient from wrong field");
}

bool RelElem::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool RelElem::is_base() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

NFElem RelElem::base_value() const {
    if (!is_base()) throw std::invalid_argument("element does not lie in the base field");
    return c_[0];
}

RelElem operator+(const RelElem& a, const RelElem& b) {
    check_same_ext(a, b);
    std::vector<NFElem> c;
    c.reserve(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] + b.c_[i]);
    return RelElem(a.ext_, std::move(c));
}

RelElem operator-(const RelElem& a, const RelElem& b) {
    check_same_ext(a, b);
    std::vector<NFElem> c;
    c.reserve(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c.push_back(a.c_[i] - b.c_[i]);
    return RelElem(a.ext_, std::move(c));
}

RelElem operator-(const RelElem& a) { return a.ext_->zero() - a; }

RelElem operator*(const RelElem& a, const RelElem& b) {
    check_same_ext(a, b);
    const NFElem zero = a.ext_->base()->zero();
    auto prod = detail::poly_mul(a.c_, b.c_, zero);
    auto rem = detail::poly_divrem(prod, a.ext_->min_poly(), zero).second;
    rem.resize(a.c_.size(), zero);
    return RelElem(a.ext_, std::move(rem));
}

bool operator==(const RelElem& a, const RelElem& b) {
    check_same_ext(a, b);
    return (a - b).is_zero();
}

RelElem RelElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    const NFElem zero = ext_->base()->zero();
    const NFElem one = ext_->base()->one();
    auto [g, s, t] = detail::poly_xgcd(c_, ext_->min_poly(), zero, one);
    if (detail::poly_deg(g) != 0)
        throw std::invalid_argument("non-invertible element (reducible modulus)");
    auto inv = detail::poly_scale(s, NFElem(one / g[0]), zero);
    inv.resize(c_.size(), zero);
    return RelElem(ext_, std::move(inv));
}

RelElem RelElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RelElem r = ext_->one();
    RelElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RelAutomorphism::RelAutomorphism(RelExtPtr ext, RelElem gen_image)
    : ext_(std::move(ext)), gen_image_(std::move(gen_image)) {
    if (gen_image_.ext() != ext_) throw std::invalid_argument("image from wrong extension");
    if (!ext_->eval_min_poly(gen_image_).is_zero())
        throw std::invalid_argument("gen_image is not a root of the minimal polynomial");
}

bool RelAutomorphism::is_identity() const { return gen_image_ == ext_->gen(); }

RelElem RelAutomorphism::operator()(const RelElem& x) const {
    if (x.ext() != ext_) throw std::invalid_argument("mixed relative extensions");
    RelElem r = ext_->zero();
    for (std::size_t i = x.coeffs().size(); i-- > 0;)
        r = r * gen_image_ + ext_->from_base(x.coeffs()[i]);
    return r;
}

bool operator==(const RelAutomorphism& a, const RelAutomorphism& b) {
    if (a.ext() != b.ext()) throw std::invalid_argument("mixed relative extensions");
    return a.gen_image() == b.gen_image();
}

RelAutomorphism compose_aut(const RelAutomorphism& outer, const RelAutomorphism& inner) {
    return RelAutomorphism(outer.ext(), outer(inner.gen_image()));
}

int aut_order(const RelAutomorphism& tau, int bound) {
    RelAutomorphism power = tau;
    for (int k = 1; k <= bound; ++k) {
        if (power.is_identity()) return k;
        power = compose_aut(tau, power);
    }
    throw std::invalid_argument("automorphism order exceeds bound");
}

RelativeExtension::RelativeExtension(FieldPtr base, std::vector<NFElem> g, std::string label)
    : base_(std::move(base)), g_(std::move(g)), label_(std::move(label)) {}

RelExtPtr RelativeExtension::create(FieldPtr base, std::vector<NFElem> min_poly,
                                    std::string label) {
    if (min_poly.size() < 2) throw std::invalid_argument("minimal polynomial must be nonconstant");
    for (const auto& c : min_poly)
        if (c.field() != base) throw std::invalid_argument("coefficient from wrong field");
    if (!(min_poly.back() == base->one()))
        throw std::invalid_argument("minimal polynomial must be monic");
    return std::shared_ptr<RelativeExtension>(
        new RelativeExtension(std::move(base), std::move(min_poly), std::move(label)));
}

RelElem RelativeExtension::elem(std::vector<NFElem> coeffs) const {
    coeffs.resize(static_cast<std::size_t>(degree()), base_->zero());
    return RelElem(self(), std::move(coeffs));
}

RelElem RelativeExtension::gen() const {
    if (degree() == 1) return from_base(-g_[0]);  // root of the linear modulus
    std::vector<NFElem> c(static_cast<std::size_t>(degree()), base_->zero());
    c[1] = base_->one();
    return RelElem(self(), std::move(c));
}

RelElem RelativeExtension::zero() const { return elem({}); }
RelElem RelativeExtension::one() const { return from_base(base_->one()); }

RelElem RelativeExtension::from_base(const NFElem& x) const {
    std::vector<NFElem> c(static_cast<std::size_t>(degree()), base_->zero());
    c[0] = x;
    return RelElem(self(), std::move(c));
}

RelElem RelativeExtension::eval_min_poly(const RelElem& x) const {
    RelElem r = zero();
    for (std::size_t i = g_.size(); i-- > 0;) r = r * x + from_base(g_[i]);
    return r;
}

NFElem nf_poly_discriminant(const FieldPtr& field, const std::vector<NFElem>& poly) {
    return detail::poly_discriminant(poly, field->zero(), field->one());
}

NFElem rel_norm(const RelElem& x, const std::vector<RelAutomorphism>& gal) {
    if (gal.empty()) throw std::invalid_argument("empty Galois list");
    RelElem product = x.ext()->one();
    for (const auto& tau : gal) product = product * tau(x);
    for (const auto& tau : gal)
        if (!(tau(product) == product))
            throw std::invalid_argument("relative norm not fixed by the supplied group");
    return product.base_value();
}

}  // namespace ncp
