#include "ncp/finite_field.hpp"

#include <sstream>

namespace ncp {

namespace {

void check_same_field(const FFElem& a, const FFElem& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mixed finite fields");
}

}  // namespace

FFElem::FFElem(FFPtr field, std::vector<long> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != field_->deg())
        throw std::invalid_argument("coefficient count does not match field degree");
    for (auto& v : c_) {
        v %= field_->p();
        if (v < 0) v += field_->p();
    }
}

bool FFElem::is_zero() const {
    for (long v : c_)
        if (v != 0) return false;
    return true;
}

FFElem operator+(const FFElem& a, const FFElem& b) {
    check_same_field(a, b);
    std::vector<long> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return FFElem(a.field_, std::move(c));
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    check_same_field(a, b);
    std::vector<long> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return FFElem(a.field_, std::move(c));
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    check_same_field(a, b);
    ModPoly prod = ModPoly(a.field_->p(), a.c_) * ModPoly(a.field_->p(), b.c_);
    auto rem = prod.divrem(a.field_->modulus()).second;
    std::vector<long> c = rem.coeffs();
    c.resize(a.c_.size(), 0);
    return FFElem(a.field_, std::move(c));
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }

bool operator==(const FFElem& a, const FFElem& b) {
    check_same_field(a, b);
    return a.c_ == b.c_;
}

FFElem FFElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    // x^(q-2) = x^-1 in F_q; q is tiny in every bundled example
    return pow(field_->size() - 2);
}

FFElem FFElem::pow(long e) const {
    long q = field_->size();
    if (e < 0) {
        e %= q - 1;
        if (e < 0) e += q - 1;
    }
    FFElem r = field_->one();
    FFElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string FFElem::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

FiniteField::FiniteField(ModPoly modulus) : modulus_(std::move(modulus)) {}

FFPtr FiniteField::create(ModPoly modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("modulus must be nonconstant");
    UniPoly lifted = UniPoly::from_ints(
        std::vector<long>(modulus.coeffs().begin(), modulus.coeffs().end()));
    auto degs = factor_degrees_mod_p(lifted, modulus.p());
    if (degs.size() != 1 || degs[0] != modulus.degree())
        throw std::invalid_argument("modulus is reducible");
    return std::shared_ptr<FiniteField>(new FiniteField(std::move(modulus)));
}

FFPtr FiniteField::prime_field(long p) { return create(ModPoly(p, {0, 1})); }

long FiniteField::size() const {
    long q = 1;
    for (int i = 0; i < deg(); ++i) q *= p();
    return q;
}

FFElem FiniteField::elem(std::vector<long> coeffs) const {
    coeffs.resize(static_cast<std::size_t>(deg()), 0);
    return FFElem(self(), std::move(coeffs));
}

FFElem FiniteField::gen() const {
    std::vector<long> c(static_cast<std::size_t>(deg()), 0);
    if (deg() == 1) {
        c[0] = (modulus_.p() - modulus_.coeff(0)) % modulus_.p();
    } else {
        c[1] = 1;
    }
    return FFElem(self(), std::move(c));
}

FFElem FiniteField::zero() const { return elem({}); }
FFElem FiniteField::one() const { return from_int(1); }

FFElem FiniteField::from_int(long v) const {
    std::vector<long> c(static_cast<std::size_t>(deg()), 0);
    c[0] = v;
    return FFElem(self(), std::move(c));
}

bool is_square(const FFElem& x) {
    if (x.field()->p() == 2) throw std::invalid_argument("even characteristic");
    if (x.is_zero()) throw std::invalid_argument("square test of zero");
    return x.pow((x.field()->size() - 1) / 2) == x.field()->one();
}

int legendre(const FFElem& x) { return is_square(x) ? 1 : -1; }

int tame_symbol(long va, const FFElem& a_res, long vb, const FFElem& b_res) {
    if (a_res.field() != b_res.field()) throw std::invalid_argument("mixed finite fields");
    const FFPtr& field = a_res.field();
    if (field->p() == 2) throw std::invalid_argument("tame symbol needs odd residue characteristic");
    if (a_res.is_zero() || b_res.is_zero())
        throw std::invalid_argument("unit residues must be nonzero");
    FFElem sign = field->from_int((va * vb) % 2 == 0 ? 1 : -1);
    FFElem value = sign * a_res.pow(vb) * b_res.pow(-va);
    return legendre(value);
}

}  // namespace ncp
