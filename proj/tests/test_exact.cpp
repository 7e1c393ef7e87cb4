#include <doctest.h>

#include <random>

#include "ncp/polynomial.hpp"

using namespace ncp;

namespace {

// Independent resultant oracle: Euclidean remainder chain with the classical
// transformation rule, used to cross-check the Sylvester-determinant route.
Rational resultant_euclid(UniPoly f, UniPoly g) {
    if (f.is_zero() || g.is_zero()) return rat(0);
    Rational acc = rat(1);
    while (true) {
        if (g.degree() == 0) {
            Rational lc = g.leading();
            Rational p = rat(1);
            for (int i = 0; i < f.degree(); ++i) p = p * lc;
            return acc * p;
        }
        auto [q, r] = f.divrem(g);
        if (r.is_zero()) return rat(0);
        Rational lc = g.leading();
        Rational p = rat(1);
        for (int i = 0; i < f.degree() - r.degree(); ++i) p = p * lc;
        if ((f.degree() * g.degree()) % 2 != 0) p = -p;
        acc = acc * p;
        f = g;
        g = r;
    }
}

UniPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& q : c) q = rat(num(rng), den(rng));
    return UniPoly(std::move(c));
}

const UniPoly kCubic = UniPoly::from_ints({-1, -2, 1, 1});  // x^3 + x^2 - 2x - 1

}  // namespace

TEST_CASE("rational arithmetic keeps canonical form") {
    Rational q = rat(6, -4);
    CHECK(rat_num(q) == -3);
    CHECK(rat_den(q) == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rational field laws on randomized triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 17);
    for (int it = 0; it < 300; ++it) {
        Rational a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng)),
                 c = rat(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(rat_den(a * b + c) >= 1);
        CHECK(int_gcd(rat_num(a * b + c), rat_den(a * b + c)) == 1);
    }
}

TEST_CASE("poly_gcd shared root and identity cases") {
    UniPoly f = UniPoly::from_ints({-1, 0, 1});  // x^2 - 1
    UniPoly g = UniPoly::from_ints({-1, 1});     // x - 1
    CHECK(poly_gcd(f, g) == g);

    // gcd(0, f) is the monic scalar multiple of f
    UniPoly h = UniPoly::from_ints({2, 4});
    CHECK(poly_gcd(UniPoly{}, h) == UniPoly({rat(1, 2), rat(1)}));

    // the cyclotomic cubic is squarefree
    CHECK(poly_gcd(kCubic, kCubic.derivative()) == UniPoly::from_ints({1}));
}

TEST_CASE("poly_gcd divides both inputs exactly") {
    std::mt19937 rng(11);
    for (int it = 0; it < 120; ++it) {
        UniPoly f = random_poly(rng, 5), g = random_poly(rng, 5);
        UniPoly d = poly_gcd(f, g);
        if (d.is_zero()) {
            CHECK(f.is_zero());
            CHECK(g.is_zero());
            continue;
        }
        CHECK(d.is_monic());
        CHECK(f.divrem(d).second.is_zero());
        CHECK(g.divrem(d).second.is_zero());
        // any common divisor divides the gcd
        UniPoly m = random_poly(rng, 2);
        if (m.is_zero()) continue;
        UniPoly fm = f * m, gm = g * m;
        UniPoly dm = poly_gcd(fm, gm);
        CHECK(dm.divrem(m).second.is_zero());
    }
}

TEST_CASE("resultant matches the Euclidean oracle") {
    std::mt19937 rng(23);
    for (int it = 0; it < 120; ++it) {
        UniPoly f = random_poly(rng, 4), g = random_poly(rng, 4);
        if (f.is_zero() || g.is_zero() || f.degree() == 0 || g.degree() == 0) continue;
        CHECK(poly_resultant(f, g) == resultant_euclid(f, g));
    }
}

TEST_CASE("discriminant values") {
    CHECK(poly_discriminant(UniPoly::from_ints({-2, 0, 1})) == rat(8));
    CHECK(poly_discriminant(kCubic) == rat(49));
    CHECK(poly_discriminant(UniPoly::from_ints({-1, 1})) == rat(1));
    CHECK_THROWS_AS(poly_discriminant(UniPoly::from_ints({5})), std::invalid_argument);
    // oracle route for the cubic
    CHECK(resultant_euclid(kCubic, kCubic.derivative()) == rat(-49));
}

TEST_CASE("factor degrees mod p") {
    CHECK(factor_degrees_mod_p(kCubic, 2) == std::vector<int>{3});
    CHECK(factor_degrees_mod_p(kCubic, 7) == std::vector<int>{1, 1, 1});
    CHECK(factor_degrees_mod_p(UniPoly::from_ints({2, 0, -4, 0, 1}), 3) ==
          std::vector<int>{4});

    // f = (x-2)^3 mod 7 exactly
    ModPoly lin(7, {-2, 1});
    CHECK(ModPoly::reduce(kCubic, 7) == lin * lin * lin);

    CHECK_THROWS_AS(factor_degrees_mod_p(UniPoly({rat(1), rat(1, 2)}), 2),
                    std::invalid_argument);
}

TEST_CASE("factor degree multiset sums to deg f") {
    std::mt19937 rng(31);
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
        for (int it = 0; it < 40; ++it) {
            UniPoly f = random_poly(rng, 6);
            if (f.is_zero()) continue;
            ModPoly reduced = [&] {
                try {
                    return ModPoly::reduce(f, p);
                } catch (const std::invalid_argument&) {
                    return ModPoly(p, {});
                }
            }();
            if (reduced.degree() != f.degree() || f.degree() < 1) continue;
            auto degs = factor_degrees_mod_p(f, p);
            int sum = 0;
            for (int d : degs) sum += d;
            CHECK(sum == f.degree());
        }
    }
}

TEST_CASE("modpoly division invariant") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> coef(0, 6);
    for (int it = 0; it < 100; ++it) {
        std::vector<long> ac(5), bc(3);
        for (auto& v : ac) v = coef(rng);
        for (auto& v : bc) v = coef(rng);
        ModPoly a(7, ac), b(7, bc);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}
