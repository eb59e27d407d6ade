#include <doctest.h>

#include <random>
#include <stdexcept>

#include "overqt/mpoly.hpp"
#include "overqt/qfunctions.hpp"
#include "overqt/useries.hpp"
#include "seed.hpp"

using namespace overqt;

namespace {

MPoly random_poly(std::mt19937_64& rng, bool with_u = true) {
    std::uniform_int_distribution<int> terms(0, 5);
    std::uniform_int_distribution<int> exp(0, 5);
    std::uniform_int_distribution<long> coef(-9, 9);
    MPoly p;
    int count = terms(rng);
    for (int i = 0; i < count; ++i)
        p += MPoly::monomial(coef(rng), exp(rng), exp(rng),
                             with_u ? exp(rng) : 0);
    return p;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("monomial preconditions") {
    CHECK_THROWS_AS(MPoly::monomial(1, 0, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::monomial(1, 0, 0, -2), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::monomial(1, -1, 0, 0), std::invalid_argument);
    CHECK(MPoly::monomial(1, -1, 0, 0, MPoly::Laurent::yes).laurent());
    CHECK(MPoly::monomial(0, 3, 1, 0).is_zero());
}

TEST_CASE("no zero coefficient is ever stored") {
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 200; ++i) {
        MPoly p = random_poly(rng);
        MPoly z = p - p;
        CHECK(z.is_zero());
        CHECK(z.term_count() == 0);
        CHECK((p + z) == p);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 300; ++i) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * MPoly::one() == a);
        CHECK((a * MPoly::zero()).is_zero());
    }
}

TEST_CASE("specialize substitutes exactly") {
    MPoly p = MPoly::one() + MPoly::q() + MPoly::t() * MPoly::q();
    Assignment t0;
    t0.t = 0;
    CHECK(specialize(p, t0) == MPoly::one() + MPoly::q());
    CHECK(specialize_full(p, 1, 1) == 3);
    CHECK(specialize_full(p, 2, 5) == 13);

    std::mt19937_64 rng(test_seed() + 1);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_poly(rng);
        /* evaluating variable by variable agrees with all-at-once */
        Assignment q2, rest;
        q2.q = 2;
        rest.t = -1;
        rest.u = 3;
        MPoly staged = specialize(specialize(a, q2), rest);
        CHECK(staged == MPoly::constant(specialize_full(a, 2, -1, 3)));
    }
}

TEST_CASE("laurent substitution guards") {
    MPoly inv_q = MPoly::monomial(1, -1, 0, 0, MPoly::Laurent::yes);
    Assignment q0, q2, q1;
    q0.q = 0;
    q2.q = 2;
    q1.q = 1;
    CHECK_THROWS_AS(specialize(inv_q, q0), std::runtime_error);
    CHECK_THROWS_AS(specialize(inv_q, q2), std::domain_error);
    CHECK(specialize(inv_q, q1) == MPoly::one());
    CHECK(specialize(inv_q, q1) == specialize(inv_q * MPoly::q(), q1));
}

TEST_CASE("rename_t_to_q") {
    MPoly p = MPoly::constant(2) + MPoly::t(3);
    CHECK(rename_t_to_q(p) == MPoly::constant(2) + MPoly::q(3));
    CHECK_THROWS_AS(rename_t_to_q(MPoly::q()), std::invalid_argument);
}

TEST_CASE("gaussian polynomials") {
    CHECK(gaussian(0, 0).is_one());
    CHECK(gaussian(2, 1) == MPoly::one() + MPoly::q());
    CHECK(gaussian(4, 2) ==
          MPoly::one() + MPoly::q() + MPoly::constant(2) * MPoly::q(2) +
              MPoly::q(3) + MPoly::q(4));
    CHECK(gaussian(3, 5).is_zero());
    CHECK(gaussian(3, -1).is_zero());

    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(gaussian(n, k) == gaussian(n, n - k));
            CHECK(gaussian(n, k) == gaussian_by_division(n, k));
            /* q-Pascal */
            if (n >= 1 && k >= 1)
                CHECK(gaussian(n, k) ==
                      gaussian(n - 1, k - 1) +
                          MPoly::q(k) * gaussian(n - 1, k));
            CHECK(specialize_full(gaussian(n, k), 1, 0) == binomial(n, k));
        }
}

TEST_CASE("q-factorial and q-multinomial") {
    CHECK(qfactorial(0).is_one());
    CHECK(qfactorial(1) == MPoly::one() - MPoly::q());
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c) {
                CHECK(qmultinomial(a, b, c) ==
                      qmultinomial_by_division(a, b, c));
                CHECK(qmultinomial(a, b, c) ==
                      gaussian(a + b + c, a) * gaussian(b + c, b));
            }
}

TEST_CASE("pochhammer products") {
    MPoly z = MPoly::u();
    CHECK(poch_plus(z, 0).is_one());
    CHECK(poch_plus(z, 1) == MPoly::one() + MPoly::u());
    CHECK(poch_minus(z, 2) ==
          (MPoly::one() - MPoly::u()) * (MPoly::one() - MPoly::u() * MPoly::q()));
    /* (q;q)_k as a pochhammer of base q */
    for (int k = 0; k <= 6; ++k)
        CHECK(qfactorial(k) == poch_minus(MPoly::q(), k));
}

TEST_CASE("truncated theta") {
    CHECK(truncated_theta(0).is_one());
    CHECK(truncated_theta(1) == MPoly::one() - MPoly::constant(2) * MPoly::q());
    CHECK(truncated_theta(2) ==
          MPoly::one() - MPoly::constant(2) * MPoly::q() +
              MPoly::constant(2) * MPoly::q(4));
}

TEST_CASE("exact_div_q checks divisibility") {
    MPoly num = (MPoly::one() + MPoly::q()) * (MPoly::one() - MPoly::q(3));
    CHECK(exact_div_q(num, MPoly::one() + MPoly::q()) ==
          MPoly::one() - MPoly::q(3));
    CHECK_THROWS_AS(exact_div_q(MPoly::one() + MPoly::q(2), MPoly::one() + MPoly::q()),
                    std::runtime_error);
}

TEST_CASE("useries inverse round-trip") {
    std::mt19937_64 rng(test_seed() + 2);
    const int order = 8;
    for (int i = 0; i < 60; ++i) {
        MPoly tail = random_poly(rng);
        /* force a unit constant coefficient */
        USeries s = USeries::from_poly(
            MPoly::one() + MPoly::u() * tail, order);
        USeries inv = s.inverse();
        USeries one = USeries::from_poly(MPoly::one(), order);
        CHECK(s * inv == one);
        CHECK(inv * s == one);
    }
    USeries bad = USeries::from_poly(MPoly::constant(2), 4);
    CHECK_THROWS_AS(bad.inverse(), std::runtime_error);
}

TEST_CASE("useries_ratio agrees with multiplication by the inverse") {
    MPoly num = MPoly::one() + MPoly::t() * MPoly::u();
    MPoly den = MPoly::one() - MPoly::u() * MPoly::q();
    USeries r = useries_ratio(num, den, 6);
    CHECK(r * USeries::from_poly(den, 6) == USeries::from_poly(num, 6));
}

TEST_CASE("rat_eq is an equivalence relation") {
    std::mt19937_64 rng(test_seed() + 3);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_poly(rng), s = random_poly(rng) + MPoly::one();
        MPoly b = random_poly(rng), u = random_poly(rng) + MPoly::one();
        RationalMPoly x(a, s);
        /* the same value written with blown-up numerator and denominator */
        RationalMPoly y(a * u, s * u);
        RationalMPoly z(a * u * b + a, s * (u * b + MPoly::one()));
        CHECK(rat_eq(x, x));
        CHECK(rat_eq(x, y));
        CHECK(rat_eq(y, x));
        CHECK(rat_eq(y, z));
        CHECK(rat_eq(x, z));
    }
    CHECK_FALSE(rat_eq(RationalMPoly(MPoly::one(), MPoly::one()),
                       RationalMPoly(MPoly::q(), MPoly::one())));
    CHECK_THROWS_AS(RationalMPoly(MPoly::one(), MPoly::zero()),
                    std::invalid_argument);
}

TEST_CASE("rational arithmetic cross-multiplies correctly") {
    RationalMPoly half(MPoly::one(), MPoly::constant(2));
    RationalMPoly third(MPoly::one(), MPoly::constant(3));
    RationalMPoly sum = half + third;
    CHECK(rat_eq(sum, RationalMPoly(MPoly::constant(5), MPoly::constant(6))));
    RationalMPoly prod = half * third;
    CHECK(rat_eq(prod, RationalMPoly(MPoly::one(), MPoly::constant(6))));
    RationalMPoly diff = half - third;
    CHECK(rat_eq(diff, RationalMPoly(MPoly::one(), MPoly::constant(6))));
}
