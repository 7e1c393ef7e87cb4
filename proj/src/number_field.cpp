#include "ncp/number_field.hpp"

#include <sstream>

#include "ncp/linalg.hpp"
#include "ncp/poly_core.hpp"

namespace ncp {

namespace {

void check_same_field(const NFElem& a, const NFElem& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mixed number fields");
}

// Rational root test for a monic rational polynomial: clear denominators to a
// primitive integer polynomial and try p/q with p | c0, q | lc.
bool has_rational_root(const UniPoly& f) {
    Int den_lcm = 1;
    for (const auto& c : f.coeffs()) den_lcm = int_lcm(den_lcm, rat_den(c));
    std::vector<Int> z;
    for (const auto& c : f.coeffs()) z.push_back(Int(rat_num(c) * (den_lcm / rat_den(c))));
    if (z.front() == 0) return true;
    auto divisors = [](Int v) {
        std::vector<Int> ds;
        v = abs(v);
        for (Int d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const Int& p : divisors(z.front()))
        for (const Int& q : divisors(z.back()))
            for (int sign : {1, -1}) {
                Rational candidate = rat(sign * p, q);
                if (f(candidate) == 0) return true;
            }
    return false;
}

}  // namespace

NFElem::NFElem(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != field_->degree())
        throw std::invalid_argument("coefficient count does not match field degree");
}

bool NFElem::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational NFElem::rational_value() const {
    if (!is_rational()) throw std::invalid_argument("element is not rational");
    return c_.empty() ? rat(0) : c_[0];
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return NFElem(a.field_, std::move(c));
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    check_same_field(a, b);
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return NFElem(a.field_, std::move(c));
}

NFElem operator-(const NFElem& a) { return a.field_->zero() - a; }

NFElem operator*(const NFElem& a, const NFElem& b) {
    check_same_field(a, b);
    auto prod = detail::poly_mul(a.c_, b.c_, rat(0));
    auto rem = detail::poly_divrem(prod, a.field_->min_poly().coeffs(), rat(0)).second;
    rem.resize(a.c_.size(), rat(0));
    return NFElem(a.field_, std::move(rem));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

bool operator==(const NFElem& a, const NFElem& b) {
    check_same_field(a, b);
    return a.c_ == b.c_;
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    auto [g, s, t] = detail::poly_xgcd(c_, field_->min_poly().coeffs(), rat(0), rat(1));
    if (detail::poly_deg(g) != 0)
        throw std::invalid_argument("non-invertible element (reducible modulus)");
    auto inv = detail::poly_scale(s, Rational(rat(1) / g[0]), rat(0));
    inv.resize(c_.size(), rat(0));
    return NFElem(field_, std::move(inv));
}

NFElem NFElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElem r = field_->one();
    NFElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string NFElem::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(c_[i]);
    }
    os << "]";
    return os.str();
}

NFAutomorphism::NFAutomorphism(FieldPtr field, NFElem gen_image)
    : field_(std::move(field)), gen_image_(std::move(gen_image)) {
    if (gen_image_.field() != field_) throw std::invalid_argument("image from wrong field");
    // the generator image must be a root of the minimal polynomial
    NFElem value = field_->zero();
    const auto& mp = field_->min_poly().coeffs();
    for (std::size_t i = mp.size(); i-- > 0;)
        value = value * gen_image_ + field_->from_rational(mp[i]);
    if (!value.is_zero())
        throw std::invalid_argument("gen_image is not a root of the minimal polynomial");
}

bool NFAutomorphism::is_identity() const { return gen_image_ == field_->gen(); }

NFElem NFAutomorphism::operator()(const NFElem& x) const {
    if (x.field() != field_) throw std::invalid_argument("mixed number fields");
    NFElem r = field_->zero();
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) r = r * gen_image_ + field_->from_rational(c[i]);
    return r;
}

bool operator==(const NFAutomorphism& a, const NFAutomorphism& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mixed number fields");
    return a.gen_image() == b.gen_image();
}

NFAutomorphism compose_aut(const NFAutomorphism& outer, const NFAutomorphism& inner) {
    return NFAutomorphism(outer.field(), outer(inner.gen_image()));
}

int aut_order(const NFAutomorphism& sigma, int bound) {
    NFAutomorphism power = sigma;
    for (int k = 1; k <= bound; ++k) {
        if (power.is_identity()) return k;
        power = compose_aut(sigma, power);
    }
    throw std::invalid_argument("automorphism order exceeds bound");
}

NumberField::NumberField(UniPoly min_poly, std::string label)
    : min_poly_(std::move(min_poly)), label_(std::move(label)) {}

FieldPtr NumberField::create(UniPoly min_poly, std::string label,
                             const std::vector<TagSpec>& tags) {
    if (min_poly.degree() < 1)
        throw std::invalid_argument("minimal polynomial must be nonconstant");
    if (!min_poly.is_monic()) throw std::invalid_argument("minimal polynomial must be monic");
    if (min_poly.degree() > 1 && has_rational_root(min_poly))
        throw std::invalid_argument("minimal polynomial has a rational root");
    auto field =
        std::shared_ptr<NumberField>(new NumberField(std::move(min_poly), std::move(label)));
    for (const auto& tag : tags) {
        NFElem value = field->elem(tag.coeffs);
        if (!(value.pow(tag.power) == field->from_rational(tag.target)))
            throw std::invalid_argument("tag verification failed: " + tag.name);
        field->tags_[tag.name] = tag.coeffs;
    }
    return field;
}

NFElem NumberField::elem(std::vector<Rational> coeffs) const {
    coeffs.resize(static_cast<std::size_t>(degree()), rat(0));
    return NFElem(self(), std::move(coeffs));
}

NFElem NumberField::elem_from_ints(const std::vector<long>& coeffs) const {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(rat(v));
    return elem(std::move(c));
}

NFElem NumberField::gen() const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()), rat(0));
    if (degree() == 1) {
        // Q as a degree-1 field: the generator is the root of the linear modulus
        c[0] = -min_poly_.coeff(0);
    } else {
        c[1] = rat(1);
    }
    return NFElem(self(), std::move(c));
}

NFElem NumberField::zero() const { return elem({}); }
NFElem NumberField::one() const { return from_rational(rat(1)); }

NFElem NumberField::from_rational(const Rational& q) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()), rat(0));
    c[0] = q;
    return NFElem(self(), std::move(c));
}

bool NumberField::certify_irreducible_mod(long p) const {
    auto degs = factor_degrees_mod_p(min_poly_, p);
    return degs.size() == 1 && degs[0] == degree();
}

NFElem NumberField::tag(const std::string& name) const {
    auto it = tags_.find(name);
    if (it == tags_.end()) throw std::invalid_argument("unknown tag: " + name);
    return elem(it->second);
}

bool NumberField::has_tag(const std::string& name) const { return tags_.count(name) > 0; }

NFElem nf_add(const NFElem& a, const NFElem& b) { return a + b; }
NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }
NFElem nf_inv(const NFElem& a) { return a.inverse(); }
NFElem apply_aut(const NFAutomorphism& sigma, const NFElem& x) { return sigma(x); }

namespace {

Matrix<Rational> regular_representation(const NFElem& x) {
    const auto n = static_cast<std::size_t>(x.field()->degree());
    Matrix<Rational> m(n, std::vector<Rational>(n, rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> basis(n, rat(0));
        basis[j] = rat(1);
        NFElem col = x * x.field()->elem(std::move(basis));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeffs()[i];
    }
    return m;
}

}  // namespace

Rational nf_norm(const NFElem& x) { return det(regular_representation(x), rat(0), rat(1)); }

Rational nf_trace(const NFElem& x) {
    auto m = regular_representation(x);
    Rational t = rat(0);
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

NFElem relative_norm(const NFElem& x, const std::vector<NFAutomorphism>& gal) {
    if (gal.empty()) throw std::invalid_argument("empty Galois list");
    NFElem product = x.field()->one();
    for (const auto& sigma : gal) product = product * sigma(x);
    for (const auto& sigma : gal)
        if (!(sigma(product) == product))
            throw std::invalid_argument("relative norm not fixed by the supplied group");
    return product;
}

BiquadraticField build_biquadratic() {
    // t = sqrt3 + sqrt-7, t^4 + 8 t^2 + 100 = 0,
    // sqrt3 = (2t - t^3)/20, sqrt-7 = (18t + t^3)/20
    UniPoly min_poly = UniPoly::from_ints({100, 0, 8, 0, 1});
    // compositum degree bookkeeping: 3, -7 and 3*(-7) are rational nonsquares,
    // so [Q(sqrt3, sqrt-7):Q] = 4 and the verified tags certify irreducibility
    for (long d : {3L, -7L, -21L})
        if (is_rational_square(rat(d))) throw std::invalid_argument("degenerate biquadratic data");
    std::vector<TagSpec> tags = {
        {"sqrt3", {rat(0), rat(1, 10), rat(0), rat(-1, 20)}, rat(3), 2},
        {"sqrtm7", {rat(0), rat(9, 10), rat(0), rat(1, 20)}, rat(-7), 2},
    };
    FieldPtr field = NumberField::create(min_poly, "Q(sqrt3,sqrt-7)", tags);
    NFElem sqrt3 = field->tag("sqrt3");
    NFElem sqrtm7 = field->tag("sqrtm7");
    if (!(sqrt3 + sqrtm7 == field->gen()))
        throw std::invalid_argument("tags do not sum to the primitive element");
    NFAutomorphism sigma1(field, sqrtm7 - sqrt3);
    NFAutomorphism sigma2(field, sqrt3 - sqrtm7);
    if (!(sigma1(sqrt3) == -sqrt3 && sigma1(sqrtm7) == sqrtm7))
        throw std::invalid_argument("sigma1 action is wrong");
    if (!(sigma2(sqrt3) == sqrt3 && sigma2(sqrtm7) == -sqrtm7))
        throw std::invalid_argument("sigma2 action is wrong");
    return BiquadraticField{field, sigma1, sigma2, sqrt3, sqrtm7};
}

FieldPtr build_quadratic(long d, const std::string& label) {
    if (is_rational_square(rat(d))) throw std::invalid_argument("d must be a nonsquare");
    UniPoly min_poly = UniPoly::from_ints({-d, 0, 1});
    return NumberField::create(min_poly, label, {{"sqrt", {rat(0), rat(1)}, rat(d), 2}});
}

}  // namespace ncp
