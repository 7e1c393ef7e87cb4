#include "ncp/symbol_algebra.hpp"

#include <sstream>

#include "ncp/linalg.hpp"

namespace ncp {

namespace {

void check_same_algebra(const AlgElem& x, const AlgElem& y) {
    if (x.algebra() != y.algebra()) throw std::invalid_argument("mixed algebras");
}

}  // namespace

AlgElem::AlgElem(SymbolAlgPtr algebra, std::vector<NFElem> coeffs)
    : alg_(std::move(algebra)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != alg_->dim())
        throw std::invalid_argument("coefficient array does not match algebra dimension");
    for (const auto& x : c_)
        if (x.field() != alg_->field()) throw std::invalid_argument("coefficient from wrong field");
}

const NFElem& AlgElem::coeff(int s, int t) const {
    return c_[static_cast<std::size_t>(s * alg_->n() + t)];
}

bool AlgElem::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool AlgElem::is_scalar() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

NFElem AlgElem::scalar_value() const {
    if (!is_scalar()) throw std::invalid_argument("element is not scalar");
    return c_[0];
}

bool AlgElem::in_Kj() const {
    const int n = alg_->n();
    for (int s = 1; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (!coeff(s, t).is_zero()) return false;
    return true;
}

bool AlgElem::in_Ki() const {
    const int n = alg_->n();
    for (int s = 0; s < n; ++s)
        for (int t = 1; t < n; ++t)
            if (!coeff(s, t).is_zero()) return false;
    return true;
}

AlgElem operator+(const AlgElem& x, const AlgElem& y) {
    check_same_algebra(x, y);
    std::vector<NFElem> c;
    c.reserve(x.c_.size());
    for (std::size_t k = 0; k < x.c_.size(); ++k) c.push_back(x.c_[k] + y.c_[k]);
    return AlgElem(x.alg_, std::move(c));
}

AlgElem operator-(const AlgElem& x, const AlgElem& y) {
    check_same_algebra(x, y);
    std::vector<NFElem> c;
    c.reserve(x.c_.size());
    for (std::size_t k = 0; k < x.c_.size(); ++k) c.push_back(x.c_[k] - y.c_[k]);
    return AlgElem(x.alg_, std::move(c));
}

AlgElem operator-(const AlgElem& x) { return x.alg_->zero() - x; }

// (c i^s j^t)(d i^u j^v) = c sigma-free: coefficients lie in the centre K,
// and j^t i^u = zeta^{tu} i^u j^t, i^n = a, j^n = b.
AlgElem operator*(const AlgElem& x, const AlgElem& y) {
    check_same_algebra(x, y);
    const auto& alg = x.alg_;
    const int n = alg->n();
    std::vector<NFElem> c(static_cast<std::size_t>(alg->dim()), alg->field()->zero());
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const NFElem& xc = x.coeff(s, t);
            if (xc.is_zero()) continue;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    const NFElem& yc = y.coeff(u, v);
                    if (yc.is_zero()) continue;
                    NFElem coeff = xc * yc * alg->zeta().pow(static_cast<long>(t) * u);
                    int si = s + u, tj = t + v;
                    if (si >= n) {
                        si -= n;
                        coeff = coeff * alg->a();
                    }
                    if (tj >= n) {
                        tj -= n;
                        coeff = coeff * alg->b();
                    }
                    auto idx = static_cast<std::size_t>(si * n + tj);
                    c[idx] = c[idx] + coeff;
                }
        }
    return AlgElem(alg, std::move(c));
}

AlgElem operator*(const NFElem& s, const AlgElem& x) {
    std::vector<NFElem> c;
    c.reserve(x.c_.size());
    for (const auto& v : x.c_) c.push_back(s * v);
    return AlgElem(x.alg_, std::move(c));
}

bool operator==(const AlgElem& x, const AlgElem& y) {
    check_same_algebra(x, y);
    return (x - y).is_zero();
}

AlgElem AlgElem::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    const int dim = alg_->dim();
    const NFElem zero = alg_->field()->zero();
    const NFElem one = alg_->field()->one();
    // columns of the left-multiplication matrix on the basis i^s j^t
    Matrix<NFElem> m(static_cast<std::size_t>(dim), std::vector<NFElem>(static_cast<std::size_t>(dim), zero));
    for (int col = 0; col < dim; ++col) {
        std::vector<NFElem> basis(static_cast<std::size_t>(dim), zero);
        basis[static_cast<std::size_t>(col)] = one;
        AlgElem image = *this * AlgElem(alg_, std::move(basis));
        for (int row = 0; row < dim; ++row)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                image.coeffs()[static_cast<std::size_t>(row)];
    }
    std::vector<NFElem> rhs(static_cast<std::size_t>(dim), zero);
    rhs[0] = one;
    auto sol = solve(std::move(m), std::move(rhs), zero, one);
    if (!sol) throw std::invalid_argument("element is a zero divisor");
    AlgElem inv(alg_, std::move(*sol));
    if (!((*this * inv == alg_->one()) && (inv * *this == alg_->one())))
        throw std::invalid_argument("inverse verification failed");
    return inv;
}

AlgElem AlgElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgElem r = alg_->one();
    AlgElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string AlgElem::str() const {
    std::ostringstream os;
    const int n = alg_->n();
    bool first = true;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const NFElem& c = coeff(s, t);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            os << c.str();
            if (s > 0) os << "*i" << (s > 1 ? "^" + std::to_string(s) : "");
            if (t > 0) os << "*j" << (t > 1 ? "^" + std::to_string(t) : "");
            first = false;
        }
    if (first) os << "0";
    return os.str();
}

SymbolAlgebra::SymbolAlgebra(FieldPtr field, int n, NFElem zeta, NFElem a, NFElem b)
    : field_(std::move(field)), n_(n), zeta_(std::move(zeta)), a_(std::move(a)),
      b_(std::move(b)) {}

SymbolAlgPtr SymbolAlgebra::create(FieldPtr field, int n, NFElem zeta, NFElem a, NFElem b) {
    if (n < 2) throw std::invalid_argument("degree must be at least 2");
    if (zeta.field() != field || a.field() != field || b.field() != field)
        throw std::invalid_argument("data from wrong field");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("a and b must be nonzero");
    if (!(zeta.pow(n) == field->one()))
        throw std::invalid_argument("zeta is not an n-th root of unity");
    for (int k = 1; k < n; ++k)
        if (zeta.pow(k) == field->one())
            throw std::invalid_argument("zeta is not primitive");
    return std::shared_ptr<SymbolAlgebra>(
        new SymbolAlgebra(std::move(field), n, std::move(zeta), std::move(a), std::move(b)));
}

SymbolAlgPtr SymbolAlgebra::quaternion(FieldPtr field, NFElem a, NFElem b) {
    NFElem minus_one = field->from_rational(rat(-1));
    return create(std::move(field), 2, std::move(minus_one), std::move(a), std::move(b));
}

AlgElem SymbolAlgebra::elem(std::vector<NFElem> coeffs) const {
    coeffs.resize(static_cast<std::size_t>(dim()), field_->zero());
    return AlgElem(self(), std::move(coeffs));
}

AlgElem SymbolAlgebra::zero() const { return elem({}); }
AlgElem SymbolAlgebra::one() const { return from_field(field_->one()); }
AlgElem SymbolAlgebra::gen_i() const { return basis_elem(1, 0, field_->one()); }
AlgElem SymbolAlgebra::gen_j() const { return basis_elem(0, 1, field_->one()); }

AlgElem SymbolAlgebra::from_field(const NFElem& x) const { return basis_elem(0, 0, x); }

AlgElem SymbolAlgebra::basis_elem(int s, int t, const NFElem& coeff) const {
    if (s < 0 || s >= n_ || t < 0 || t >= n_) throw std::invalid_argument("basis index range");
    std::vector<NFElem> c(static_cast<std::size_t>(dim()), field_->zero());
    c[static_cast<std::size_t>(s * n_ + t)] = coeff;
    return AlgElem(self(), std::move(c));
}

AlgElem alg_add(const AlgElem& x, const AlgElem& y) { return x + y; }
AlgElem alg_mul(const AlgElem& x, const AlgElem& y) { return x * y; }
AlgElem alg_inv(const AlgElem& x) { return x.inverse(); }

AlgAutomorphism::AlgAutomorphism(NFAutomorphism base, AlgElem image_i, AlgElem image_j,
                                 bool verify)
    : base_(std::move(base)), image_i_(std::move(image_i)), image_j_(std::move(image_j)) {
    if (image_i_.algebra() != image_j_.algebra())
        throw std::invalid_argument("images from different algebras");
    if (base_.field() != image_i_.algebra()->field())
        throw std::invalid_argument("base automorphism on wrong field");
    if (verify && !is_valid())
        throw std::invalid_argument("generator images do not satisfy the symbol relations");
}

AlgAutomorphism::AlgAutomorphism(NFAutomorphism base, AlgElem image_i, AlgElem image_j)
    : AlgAutomorphism(std::move(base), std::move(image_i), std::move(image_j), true) {}

AlgAutomorphism AlgAutomorphism::unchecked(NFAutomorphism base, AlgElem image_i,
                                           AlgElem image_j) {
    return AlgAutomorphism(std::move(base), std::move(image_i), std::move(image_j), false);
}

AlgAutomorphism AlgAutomorphism::identity(const SymbolAlgPtr& algebra) {
    return AlgAutomorphism(NFAutomorphism(algebra->field(), algebra->field()->gen()),
                           algebra->gen_i(), algebra->gen_j());
}

bool AlgAutomorphism::is_valid() const {
    const auto& alg = image_i_.algebra();
    const long n = alg->n();
    if (!(image_i_.pow(n) == alg->from_field(base_(alg->a())))) return false;
    if (!(image_j_.pow(n) == alg->from_field(base_(alg->b())))) return false;
    return image_j_ * image_i_ == alg->zeta() * (image_i_ * image_j_);
}

AlgElem AlgAutomorphism::operator()(const AlgElem& x) const {
    const auto& alg = image_i_.algebra();
    if (x.algebra() != alg) throw std::invalid_argument("element from wrong algebra");
    const int n = alg->n();
    AlgElem result = alg->zero();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            const NFElem& c = x.coeff(s, t);
            if (c.is_zero()) continue;
            result = result + base_(c) * (image_i_.pow(s) * image_j_.pow(t));
        }
    return result;
}

AlgAutomorphism compose(const AlgAutomorphism& outer, const AlgAutomorphism& inner) {
    return AlgAutomorphism::unchecked(compose_aut(outer.base(), inner.base()),
                                      outer(inner.image_i()), outer(inner.image_j()));
}

bool equal_on_generators(const AlgAutomorphism& a, const AlgAutomorphism& b) {
    if (a.algebra() != b.algebra()) throw std::invalid_argument("mixed algebras");
    return a.base() == b.base() && a.image_i() == b.image_i() && a.image_j() == b.image_j();
}

AlgAutomorphism inner_aut(const AlgElem& c) {
    const auto& alg = c.algebra();
    AlgElem inv = c.inverse();
    NFAutomorphism id(alg->field(), alg->field()->gen());
    return AlgAutomorphism(id, c * alg->gen_i() * inv, c * alg->gen_j() * inv);
}

namespace {

NFElem cyclic_norm(const AlgElem& lambda, bool along_j) {
    const auto& alg = lambda.algebra();
    const int n = alg->n();
    if (along_j ? !lambda.in_Kj() : !lambda.in_Ki())
        throw std::invalid_argument(along_j ? "element not in K(j)" : "element not in K(i)");
    AlgElem product = alg->one();
    for (int k = 0; k < n; ++k) {
        // conjugate: generator g -> zeta^k g
        std::vector<NFElem> c(static_cast<std::size_t>(alg->dim()), alg->field()->zero());
        for (int t = 0; t < n; ++t) {
            const NFElem& coeff = along_j ? lambda.coeff(0, t) : lambda.coeff(t, 0);
            std::size_t idx = along_j ? static_cast<std::size_t>(t)
                                      : static_cast<std::size_t>(t * n);
            c[idx] = coeff * alg->zeta().pow(static_cast<long>(k) * t);
        }
        product = product * AlgElem(alg, std::move(c));
    }
    return product.scalar_value();
}

}  // namespace

NFElem norm_in_Kj(const AlgElem& lambda) { return cyclic_norm(lambda, true); }
NFElem norm_in_Ki(const AlgElem& lambda) { return cyclic_norm(lambda, false); }

AlgAutomorphism extend_fixing_j(const NFAutomorphism& sigma, const AlgElem& lambda) {
    const auto& alg = lambda.algebra();
    if (!(sigma(alg->zeta()) == alg->zeta())) throw std::invalid_argument("sigma moves zeta");
    if (!(sigma(alg->b()) == alg->b())) throw std::invalid_argument("sigma moves b");
    if (!(norm_in_Kj(lambda) == sigma(alg->a()) / alg->a()))
        throw std::invalid_argument("norm condition N(lambda) = sigma(a)/a fails");
    return AlgAutomorphism(sigma, lambda * alg->gen_i(), alg->gen_j());
}

AlgAutomorphism extend_fixing_i(const NFAutomorphism& sigma, const AlgElem& lambda) {
    const auto& alg = lambda.algebra();
    if (!(sigma(alg->zeta()) == alg->zeta())) throw std::invalid_argument("sigma moves zeta");
    if (!(sigma(alg->a()) == alg->a())) throw std::invalid_argument("sigma moves a");
    if (!(norm_in_Ki(lambda) == sigma(alg->b()) / alg->b()))
        throw std::invalid_argument("norm condition N(lambda) = sigma(b)/b fails");
    return AlgAutomorphism(sigma, alg->gen_i(), lambda * alg->gen_j());
}

std::optional<AlgElem> norm_equation_search(const SymbolAlgPtr& algebra,
                                            const NFAutomorphism& sigma,
                                            const NormSearchOptions& options) {
    const auto& field = algebra->field();
    if (!(sigma(algebra->zeta()) == algebra->zeta()) || !(sigma(algebra->b()) == algebra->b()))
        throw std::invalid_argument("search requires sigma fixing zeta and b");
    NFElem target = sigma(algebra->a()) / algebra->a();

    std::vector<NFElem> basis = options.basis;
    if (basis.empty()) {
        for (int k = 0; k < field->degree(); ++k) {
            std::vector<Rational> c(static_cast<std::size_t>(field->degree()), rat(0));
            c[static_cast<std::size_t>(k)] = rat(1);
            basis.push_back(field->elem(std::move(c)));
        }
    }
    std::vector<long> denominators;
    for (long m = 1; m <= options.denominator; ++m)
        if (options.denominator % m == 0) denominators.push_back(m);

    const long B = options.height_bound;
    // deterministic enumeration: per coordinate the values 0, 1, -1, 2, -2, ...
    // with the first coordinate cycling fastest, so small solutions come early
    auto spiral = [](long idx) { return idx % 2 == 1 ? (idx + 1) / 2 : -idx / 2; };
    const long radix = 2 * B + 1;
    const std::size_t coords = 2 * basis.size();  // c and d in lambda = c + d j
    std::vector<long> box(coords, 0);
    while (true) {
        for (long m : denominators) {
            NFElem c = field->zero(), d = field->zero();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                c = c + field->from_rational(rat(spiral(box[k]), m)) * basis[k];
                d = d + field->from_rational(rat(spiral(box[basis.size() + k]), m)) * basis[k];
            }
            if (c.is_zero() && d.is_zero()) continue;
            // N(c + d j) = prod over conjugates; for n = 2 this is c^2 - d^2 b
            NFElem norm = algebra->n() == 2
                              ? c * c - d * d * algebra->b()
                              : norm_in_Kj(algebra->from_field(c) + d * algebra->gen_j());
            if (norm == target) return algebra->from_field(c) + d * algebra->gen_j();
        }
        std::size_t pos = 0;
        while (pos < coords && ++box[pos] >= radix) box[pos++] = 0;
        if (pos == coords) break;
    }
    return std::nullopt;
}

}  // namespace ncp
