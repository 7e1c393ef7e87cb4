#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ncp {

using Int = mpz_class;
using Rational = mpq_class;

/// Reduced fraction with positive denominator (GMP canonical form).
inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline const Int& rat_num(const Rational& q) { return q.get_num(); }
inline const Int& rat_den(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_perfect_square(const Int& z) {
    return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

/// True iff q is the square of a rational number.
inline bool is_rational_square(const Rational& q) {
    return is_perfect_square(rat_num(q)) && is_perfect_square(rat_den(q));
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
    return std::lcm(a, b);
}

}  // namespace ncp
