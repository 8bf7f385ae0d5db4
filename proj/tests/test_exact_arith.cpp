#include <doctest.h>

#include "cyclewalk/laurent.hpp"
#include "cyclewalk/polynomial.hpp"
#include "oracles.hpp"

using namespace cyclewalk;

TEST_CASE("rational canonical form") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(-6, 3)) == "-2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(make_rational(0, 7).get_den() == 1);
    CHECK(is_integer(make_rational(6, 3)));
    CHECK_FALSE(is_integer(make_rational(1, 3)));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);

    // negative denominators normalize onto the numerator
    Rational q = make_rational(3, -6);
    CHECK(q.get_den() == 2);
    CHECK(q.get_num() == -1);
}

TEST_CASE("rational string round trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational q = oracles::random_rational(rng);
        CHECK(rational_from_string(to_string(q)) == q);
    }
    CHECK_THROWS(rational_from_string("abc"));
}

TEST_CASE("polynomial ring basics") {
    const Polynomial xp1 = Polynomial::x() + Polynomial::one();
    const Polynomial xm1 = Polynomial::x() - Polynomial::one();
    CHECK(xp1 * xm1 == Polynomial{Rational(-1), Rational(0), Rational(1)});

    const Polynomial p{Rational(1), Rational(2, 3), Rational(0), Rational(5)};
    CHECK(p + Polynomial::zero() == p);

    // (x^2+1) * x^3 = x^5 + x^3, coefficient list by hand convolution
    const Polynomial lhs = Polynomial{Rational(1), Rational(0), Rational(1)} *
                           Polynomial::monomial(3, Rational(1));
    CHECK(lhs == Polynomial{Rational(0), Rational(0), Rational(0), Rational(1), Rational(0),
                            Rational(1)});

    CHECK(Polynomial::zero().degree() == -1);
    CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
}

TEST_CASE("polynomial division") {
    const Polynomial x3m1 = Polynomial::power_minus_one(3);
    auto [q1, r1] = x3m1.divrem(Polynomial::x() - Polynomial::one());
    CHECK(q1 == Polynomial{Rational(1), Rational(1), Rational(1)});
    CHECK(r1.is_zero());

    auto [q2, r2] = Polynomial::x().divrem(Polynomial::monomial(2, Rational(1)));
    CHECK(q2.is_zero());
    CHECK(r2 == Polynomial::x());

    auto [q3, r3] = Polynomial::power_minus_one(4).divrem(
        Polynomial{Rational(1), Rational(0), Rational(1)});
    CHECK(q3 == Polynomial{Rational(-1), Rational(0), Rational(1)});
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(Polynomial::one().divrem(Polynomial::zero()), std::domain_error);
}

TEST_CASE("divrem reconstruction on random inputs") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Polynomial p = oracles::random_polynomial(rng, 12);
        const Polynomial d = oracles::random_polynomial(rng, 6, /*nonzero=*/true);
        auto [q, r] = p.divrem(d);
        CHECK(q * d + r == p);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(13);
    for (int i = 0; i < 150; ++i) {
        const Polynomial a = oracles::random_polynomial(rng, 8);
        const Polynomial b = oracles::random_polynomial(rng, 8);
        const Polynomial c = oracles::random_polynomial(rng, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("integer coefficient detection") {
    CHECK(Polynomial{Rational(-1), Rational(0), Rational(1)}.is_integer_poly());
    CHECK_FALSE(Polynomial{Rational(1), make_rational(1, 3)}.is_integer_poly());
    // 6/3 canonicalizes to 2 on construction
    const Polynomial p{Rational(0), make_rational(6, 3), Rational(0), Rational(1)};
    CHECK(p.is_integer_poly());
    CHECK(p.lowest_non_integer_degree() == std::nullopt);
    const Polynomial q{Rational(1), make_rational(2, 3), make_rational(1, 2)};
    CHECK(q.lowest_non_integer_degree() == 1);
}

TEST_CASE("evaluation") {
    const Polynomial x2m1{Rational(-1), Rational(0), Rational(1)};
    CHECK(x2m1.eval(Rational(1)) == 0);
    CHECK(Polynomial::x().eval(make_rational(7, 2)) == make_rational(7, 2));
    const Polynomial p{Rational(1), Rational(1), Rational(0), Rational(1)};
    CHECK(p.eval(Rational(-2)) == -9);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(17);
    for (int i = 0; i < 150; ++i) {
        const Polynomial p = oracles::random_polynomial(rng, 7);
        const Polynomial q = oracles::random_polynomial(rng, 7);
        const Rational v = oracles::random_rational(rng);
        CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
        CHECK((p + q).eval(v) == p.eval(v) + q.eval(v));
    }
}

TEST_CASE("reversal and power substitution") {
    const Polynomial p{Rational(3), Rational(0), Rational(1)};  // x^2 + 3
    CHECK(p.reversed() == Polynomial{Rational(1), Rational(0), Rational(3)});
    CHECK(p.substitute_power(3) ==
          Polynomial{Rational(3), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                     Rational(1)});
    CHECK(p.shifted_up(2) == Polynomial{Rational(0), Rational(0), Rational(3), Rational(0),
                                        Rational(1)});
    CHECK(Polynomial::power_minus_one(5).monomial_valuation() == 0u);
    CHECK(Polynomial::monomial(4, Rational(2)).monomial_valuation() == 4u);
}

TEST_CASE("extended gcd over Q[x]") {
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = oracles::random_polynomial(rng, 6);
        const Polynomial b = oracles::random_polynomial(rng, 6);
        const ExtendedGcd e = poly_extended_gcd(a, b);
        CHECK(e.u * a + e.v * b == e.g);
        if (!e.g.is_zero()) {
            CHECK(e.g.is_monic());
            CHECK(a.divrem(e.g).second.is_zero());
            CHECK(b.divrem(e.g).second.is_zero());
        }
    }
}

TEST_CASE("pretty printing") {
    CHECK(Polynomial{Rational(-1), make_rational(2, 3), Rational(1)}.to_string() ==
          "x^2 + 2/3*x - 1");
    CHECK(Polynomial::zero().to_string() == "0");
}

TEST_CASE("laurent polynomials") {
    const LaurentPoly a = LaurentPoly::term(Rational(2), -3);
    const LaurentPoly b = LaurentPoly::term(Rational(1), 2);
    const LaurentPoly prod = a * b;
    CHECK(prod.coeff(-1) == 2);
    CHECK(prod.min_exponent() == -1);
    CHECK(prod.max_exponent() == -1);

    const LaurentPoly sum = a + b + LaurentPoly::one();
    CHECK(sum.coeff(-3) == 2);
    CHECK(sum.coeff(0) == 1);
    CHECK(sum.coeff(2) == 1);
    CHECK(sum.coeff(1) == 0);
    CHECK((sum - sum).is_zero());

    // cancellation renormalizes the support
    const LaurentPoly cancel = a + a.scaled(Rational(-1)) + b;
    CHECK(cancel.min_exponent() == 2);
    CHECK(cancel == b);
    CHECK(LaurentPoly::term(Rational(3), -2).to_string() == "3*t^-2");
}
