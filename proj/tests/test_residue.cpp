#include <doctest.h>

#include "ncp/residue_map.hpp"

using namespace ncp;

namespace {

FieldPtr cubic_field() {
    return NumberField::create(UniPoly::from_ints({-1, -2, 1, 1}), "K9");
}

// Conic solvability oracle over Q_p for p odd: a x^2 + b y^2 = z^2 with
// a = ua p^va, b = ub p^vb has a Q_p-point iff it has a primitive solution
// mod p^3 (any primitive zero mod p^3 satisfies the quadratic Hensel bound,
// because the coefficient valuations are at most 1).
bool conic_solvable(long p, long va, long ua, long vb, long ub) {
    long a = ua, b = ub;
    for (int i = 0; i < va; ++i) a *= p;
    for (int i = 0; i < vb; ++i) b *= p;
    const long mod = p * p * p;
    std::vector<char> is_sq_any(static_cast<std::size_t>(mod), 0);   // some z
    std::vector<char> is_sq_unit(static_cast<std::size_t>(mod), 0);  // some z with p !| z
    for (long z = 0; z < mod; ++z) {
        long zz = (z * z) % mod;
        is_sq_any[static_cast<std::size_t>(zz)] = 1;
        if (z % p != 0) is_sq_unit[static_cast<std::size_t>(zz)] = 1;
    }
    for (long x = 0; x < mod; ++x)
        for (long y = 0; y < mod; ++y) {
            long t = (a % mod * x % mod * x % mod + b % mod * y % mod * y % mod) % mod;
            bool primitive_xy = (x % p != 0) || (y % p != 0);
            if (primitive_xy ? is_sq_any[static_cast<std::size_t>(t)]
                             : is_sq_unit[static_cast<std::size_t>(t)])
                return true;
        }
    return false;
}

}  // namespace

TEST_CASE("residue maps of the cyclic cubic example") {
    auto K = cubic_field();
    auto F7 = FiniteField::prime_field(7);
    ResidueMap rm7 = make_residue_map(K, 7, F7, F7->from_int(2));  // alpha bar = 2
    CHECK(rm7(K->gen()) == F7->from_int(2));

    auto F8 = FiniteField::create(ModPoly(2, {1, 0, 1, 1}));  // f mod 2, irreducible
    ResidueMap rm2 = make_residue_map(K, 2, F8, F8->gen());
    CHECK(rm2(K->gen()) == F8->gen());

    // f(3) = 29 != 0 mod 7
    CHECK_THROWS_AS(make_residue_map(K, 7, F7, F7->from_int(3)), std::invalid_argument);

    // denominators divisible by p are rejected at application time
    CHECK_THROWS_AS(rm7(K->elem({rat(1, 7), rat(0), rat(0)})), std::invalid_argument);

    // residue maps are ring homomorphisms
    NFElem x = K->elem_from_ints({2, -3, 1}), y = K->elem_from_ints({-1, 4, 2});
    CHECK(rm7(x * y) == rm7(x) * rm7(y));
    CHECK(rm7(x + y) == rm7(x) + rm7(y));
    CHECK(rm2(x * y) == rm2(x) * rm2(y));
    CHECK(rm2(x + y) == rm2(x) + rm2(y));
}

TEST_CASE("is_square basics") {
    auto F3 = FiniteField::prime_field(3);
    CHECK_FALSE(is_square(F3->from_int(-1)));
    CHECK(is_square(F3->one()));
    auto F7 = FiniteField::prime_field(7);
    CHECK(is_square(F7->from_int(2)));  // 3^2 = 2 mod 7
    CHECK_THROWS_AS(is_square(F7->zero()), std::invalid_argument);
    auto F2 = FiniteField::prime_field(2);
    CHECK_THROWS_AS(is_square(F2->one()), std::invalid_argument);
}

TEST_CASE("finite field modulus must be irreducible") {
    CHECK_THROWS_AS(FiniteField::create(ModPoly(3, {2, 0, 1})), std::invalid_argument);
    // y^2 + 1 factors mod 5
    CHECK_THROWS_AS(FiniteField::create(ModPoly(5, {1, 0, 1})), std::invalid_argument);
}

TEST_CASE("frobenius identification in the cyclic example") {
    auto K = cubic_field();
    NFElem alpha = K->gen();
    std::vector<NFElem> g = {K->one(), -(alpha + K->one()), alpha - K->from_rational(rat(2)),
                             K->one()};
    auto L = RelativeExtension::create(K, g, "L9");
    RelElem beta = L->gen();
    RelAutomorphism id(L, beta);
    RelAutomorphism tau(L, beta * beta + L->from_base(alpha - K->from_rational(rat(2))) * beta -
                               L->from_base(alpha));
    RelAutomorphism tau2 = compose_aut(tau, tau);

    // at w1 (7-adic, totally ramified): bottom residue field F7, alpha bar = 2
    auto F7 = FiniteField::prime_field(7);
    auto res1 = RelResidueField::create(L, make_residue_map(K, 7, F7, F7->from_int(2)));
    CHECK(frobenius_match(*res1, tau));
    CHECK_FALSE(frobenius_match(*res1, id));
    CHECK_FALSE(frobenius_match(*res1, tau2));

    // beta bar^7 = beta bar^2 - 2
    RelResElem expected1 = res1->gen() * res1->gen() - res1->one() - res1->one();
    CHECK(res1->gen().pow(7) == expected1);

    // at w2 (2-adic, inertial): bottom residue field F8
    auto F8 = FiniteField::create(ModPoly(2, {1, 0, 1, 1}));
    auto res2 = RelResidueField::create(L, make_residue_map(K, 2, F8, F8->gen()));
    CHECK(frobenius_match(*res2, tau2));
    CHECK_FALSE(frobenius_match(*res2, tau));
    CHECK_FALSE(frobenius_match(*res2, id));

    // beta bar^8 = beta bar^2 + (alpha bar + 1) beta bar
    RelResElem abar_plus_1 = res2->elem({F8->gen() + F8->one()});
    CHECK(res2->gen().pow(8) == res2->gen() * res2->gen() + abar_plus_1 * res2->gen());

    // trivial extension over the prime field: identity is the Frobenius
    auto Ktriv = NumberField::create(UniPoly::from_ints({-2, 0, 1}), "Q(sqrt2)");
    std::vector<NFElem> lin = {-Ktriv->gen(), Ktriv->one()};
    auto Ltriv = RelativeExtension::create(Ktriv, lin, "trivial");
    auto F7b = FiniteField::prime_field(7);
    auto res3 = RelResidueField::create(Ltriv, make_residue_map(Ktriv, 7, F7b, F7b->from_int(3)));
    CHECK(frobenius_match(*res3, RelAutomorphism(Ltriv, Ltriv->gen())));
}

TEST_CASE("tame symbol against the exhaustive conic oracle") {
    for (long p : {3L, 5L, 7L}) {
        auto Fp = FiniteField::prime_field(p);
        for (long va : {0L, 1L})
            for (long vb : {0L, 1L})
                for (long ua = 1; ua < p; ++ua)
                    for (long ub = 1; ub < p; ++ub) {
                        int sym = tame_symbol(va, Fp->from_int(ua), vb, Fp->from_int(ub));
                        bool split = conic_solvable(p, va, ua, vb, ub);
                        CAPTURE(p);
                        CAPTURE(va);
                        CAPTURE(ua);
                        CAPTURE(vb);
                        CAPTURE(ub);
                        CHECK(sym == (split ? 1 : -1));
                    }
    }
}

TEST_CASE("tame symbol properties") {
    auto F7 = FiniteField::prime_field(7);
    // unramified case splits
    CHECK(tame_symbol(0, F7->from_int(3), 0, F7->from_int(5)) == 1);
    // prime element against a nonsquare unit does not
    CHECK(tame_symbol(1, F7->from_int(1), 0, F7->from_int(3)) == -1);
    CHECK_THROWS_AS(
        tame_symbol(0, FiniteField::prime_field(2)->one(), 0, FiniteField::prime_field(2)->one()),
        std::invalid_argument);

    // symmetry (the (-1)^{va vb} twist appears on both sides) and
    // bimultiplicativity in (va, a_res)
    for (long va : {0L, 1L, 2L})
        for (long vb : {0L, 1L, 2L})
            for (long ua = 1; ua < 7; ++ua)
                for (long ub = 1; ub < 7; ++ub) {
                    FFElem a = F7->from_int(ua), b = F7->from_int(ub);
                    CHECK(tame_symbol(va, a, vb, b) == tame_symbol(vb, b, va, a));
                    for (long vc = 0; vc < 2; ++vc)
                        for (long uc = 1; uc < 7; ++uc) {
                            FFElem c = F7->from_int(uc);
                            CHECK(tame_symbol(va + vc, a * c, vb, b) ==
                                  tame_symbol(va, a, vb, b) * tame_symbol(vc, c, vb, b));
                        }
                }
}

TEST_CASE("local nonsplit data of the quaternion example") {
    // w1 over 3: residue field F9 = F3(eta), eta^2 = -7 = 2
    auto F9 = FiniteField::create(ModPoly(3, {-2, 0, 1}));
    FFElem eta = F9->gen();
    // b = sqrt-7 pi2 is a unit there with residue 1 - eta
    FFElem b_res = F9->one() - eta;
    // its norm down to F3 is -1, a nonsquare there, so b bar is a nonsquare
    // in F9 and the quadratic extension is inertial
    CHECK(b_res * b_res.pow(3) == F9->from_int(-1));
    CHECK_FALSE(is_square(FiniteField::prime_field(3)->from_int(-1)));
    CHECK_FALSE(is_square(b_res));
    // a = sqrt3 pi1 is a prime element; D_{w1} is division
    CHECK(tame_symbol(1, F9->one(), 0, b_res) == -1);

    // w2 over 7: residue field F49 = F7(theta), theta^2 = 3
    auto F49 = FiniteField::create(ModPoly(7, {-3, 0, 1}));
    FFElem theta = F49->gen();
    FFElem a_res = F49->from_int(3) + theta;
    CHECK(a_res * a_res.pow(7) == F49->from_int(-1));
    CHECK_FALSE(is_square(FiniteField::prime_field(7)->from_int(-1)));
    CHECK_FALSE(is_square(a_res));
    CHECK(tame_symbol(0, a_res, 1, F49->from_int(1)) == -1);
}
