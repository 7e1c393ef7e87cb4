#include "ncp/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ncp {

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Rational mag = abs(a);
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    return UniPoly(detail::poly_gcd(f.coeffs(), g.coeffs(), rat(0), rat(1)));
}

Rational poly_resultant(const UniPoly& f, const UniPoly& g) {
    return detail::poly_resultant(f.coeffs(), g.coeffs(), rat(0), rat(1));
}

Rational poly_discriminant(const UniPoly& f) {
    return detail::poly_discriminant(f.coeffs(), rat(0), rat(1));
}

namespace {

long mod_reduce(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long mod_inv(long a, long p) {
    // extended Euclid; p prime, a != 0 mod p
    long t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
    if (new_r == 0) throw std::invalid_argument("inverse of zero mod p");
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod_reduce(t, p);
}

}  // namespace

ModPoly::ModPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    for (auto& v : c_) v = mod_reduce(v, p_);
    detail::poly_trim(c_, 0L);
}

ModPoly ModPoly::reduce(const UniPoly& f, long p) {
    std::vector<long> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) {
        Int den = rat_den(q);
        if (mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)) == 0)
            throw std::invalid_argument("coefficient not p-integral");
        long num = static_cast<long>(mpz_fdiv_ui(rat_num(q).get_mpz_t(), static_cast<unsigned long>(p)));
        long d = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)));
        c.push_back(mod_reduce(num * mod_inv(d, p), p));
    }
    return ModPoly(p, std::move(c));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    std::vector<long> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = mod_reduce(r[i] + b.c_[i], a.p_);
    return ModPoly(a.p_, std::move(r));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    std::vector<long> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = mod_reduce(r[i] - b.c_[i], a.p_);
    return ModPoly(a.p_, std::move(r));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_, {});
    std::vector<long> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] = mod_reduce(r[i + j] + a.c_[i] * b.c_[j], a.p_);
    return ModPoly(a.p_, std::move(r));
}

std::pair<ModPoly, ModPoly> ModPoly::divrem(const ModPoly& divisor) const {
    check_same(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<long> rem = c_;
    if (rem.size() < divisor.c_.size()) return {ModPoly(p_, {}), *this};
    std::vector<long> quot(rem.size() - divisor.c_.size() + 1, 0);
    long inv_lead = mod_inv(divisor.c_.back(), p_);
    for (std::size_t i = rem.size(); i-- >= divisor.c_.size();) {
        if (rem[i] != 0) {
            long factor = mod_reduce(rem[i] * inv_lead, p_);
            std::size_t shift = i - (divisor.c_.size() - 1);
            quot[shift] = factor;
            for (std::size_t j = 0; j < divisor.c_.size(); ++j)
                rem[shift + j] = mod_reduce(rem[shift + j] - factor * divisor.c_[j], p_);
        }
        if (i + 1 == divisor.c_.size()) break;
    }
    return {ModPoly(p_, std::move(quot)), ModPoly(p_, std::move(rem))};
}

long ModPoly::operator()(long x) const {
    long r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = mod_reduce(r * x + c_[i], p_);
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Smallest-degree monic divisor found by trial division is irreducible,
// so repeated extraction yields the factor degrees with multiplicity.
// Desk scale only: p and deg f are small in every bundled example.
bool next_monic(std::vector<long>& c, long p) {
    // advance through the non-leading coefficients like a base-p counter
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<int> factor_degrees_mod_p(const UniPoly& f, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    ModPoly g = ModPoly::reduce(f, p);
    if (g.degree() != f.degree())
        throw std::invalid_argument("leading coefficient vanishes mod p");
    std::vector<int> degrees;
    while (g.degree() > 0) {
        bool found = false;
        for (int d = 1; !found && 2 * d <= g.degree(); ++d) {
            std::vector<long> c(static_cast<std::size_t>(d) + 1, 0);
            c.back() = 1;
            do {
                ModPoly candidate(p, c);
                auto [q, r] = g.divrem(candidate);
                if (r.is_zero()) {
                    degrees.push_back(d);
                    g = q;
                    found = true;
                    break;
                }
            } while (next_monic(c, p));
        }
        if (!found) {  // no divisor of degree <= deg/2: irreducible
            degrees.push_back(g.degree());
            break;
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace ncp
