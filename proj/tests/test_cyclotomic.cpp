#include <doctest.h>

#include <random>

#include "cyclewalk/cyclotomic.hpp"
#include "oracles.hpp"

using namespace cyclewalk;

TEST_CASE("first cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == Polynomial{Rational(-1), Rational(1)});
    CHECK(cyclotomic_polynomial(2) == Polynomial{Rational(1), Rational(1)});
    // Phi_6 from the divisor quotient
    const Polynomial expected6 = Polynomial::power_minus_one(6).divide_exact(
        cyclotomic_polynomial(1) * cyclotomic_polynomial(2) * cyclotomic_polynomial(3));
    CHECK(cyclotomic_polynomial(6) == expected6);
    CHECK(cyclotomic_polynomial(6) == Polynomial{Rational(1), Rational(-1), Rational(1)});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::domain_error);
}

TEST_CASE("cyclotomic product identity up to 60") {
    for (unsigned n = 1; n <= 60; ++n) {
        Polynomial prod = Polynomial::one();
        for (unsigned d : divisors(n)) prod *= cyclotomic_polynomial(d);
        CHECK(prod == Polynomial::power_minus_one(n));
        CHECK(cyclotomic_polynomial(n).is_integer_poly());
        CHECK(cyclotomic_polynomial(n).degree() == static_cast<int>(euler_phi(n)));
    }
}

TEST_CASE("euler phi and divisors") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
    CHECK(radical(72) == 6);
}

TEST_CASE("root powers") {
    CHECK(CyclotomicElement::root_power(5, 0) == CyclotomicElement::one(5));
    CHECK(CyclotomicElement::root_power(3, -1) == CyclotomicElement::root_power(3, 2));
    CHECK(CyclotomicElement::root_power(4, 1).rep() == Polynomial::x());

    const auto i = CyclotomicElement::root_power(4, 1);
    CHECK((i * i).rational_value() == -1);

    CyclotomicElement sum = CyclotomicElement::zero(5);
    for (long j = 0; j < 5; ++j) sum += CyclotomicElement::root_power(5, j);
    CHECK(sum.is_zero());
}

TEST_CASE("inverses are reciprocal roots") {
    for (long k = 1; k < 7; ++k) {
        const auto z = CyclotomicElement::root_power(7, k);
        CHECK(z.inverse() == CyclotomicElement::root_power(7, 7 - k));
    }
    CHECK_THROWS_AS(CyclotomicElement::zero(5).inverse(), std::domain_error);
}

TEST_CASE("order mismatch is an error") {
    const auto a = CyclotomicElement::one(3);
    const auto b = CyclotomicElement::one(4);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(a * b, std::domain_error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(23);
    for (unsigned order : {3u, 5u, 8u, 12u}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<int> coeff(-4, 4);
            auto random_element = [&] {
                std::vector<Rational> cs;
                for (unsigned i = 0; i < euler_phi(order); ++i) cs.push_back(Rational(coeff(rng)));
                return CyclotomicElement(order, Polynomial(std::move(cs)));
            };
            const auto a = random_element();
            const auto b = random_element();
            const auto c = random_element();
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) {
                const auto unit = a * a.inverse();
                CHECK(unit.is_rational());
                CHECK(unit.rational_value() == 1);
            }
            // lifting commutes with arithmetic
            const unsigned target = order * 2;
            CHECK((a + b).lift_to(target) == a.lift_to(target) + b.lift_to(target));
            CHECK((a * b).lift_to(target) == a.lift_to(target) * b.lift_to(target));
        }
    }
}

TEST_CASE("float shadow commutes with arithmetic") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (unsigned order = 2; order <= 20; ++order) {
        auto random_element = [&] {
            std::vector<Rational> cs;
            for (unsigned i = 0; i < euler_phi(order); ++i) cs.push_back(Rational(coeff(rng)));
            return CyclotomicElement(order, Polynomial(std::move(cs)));
        };
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_element();
            const auto b = random_element();
            CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
            CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9);
        }
    }
}

TEST_CASE("galois conjugation") {
    const auto z = CyclotomicElement::root_power(7, 2);
    CHECK(z.galois(6) == CyclotomicElement::root_power(7, -2));
    CHECK(z.galois(6).galois(6) == z);
    CHECK_THROWS_AS(CyclotomicElement::root_power(6, 1).galois(2), std::domain_error);
}

TEST_CASE("lifting to a larger order") {
    const auto minus_one = CyclotomicElement::root_power(2, 1);
    CHECK(minus_one.lift_to(6) == CyclotomicElement::root_power(6, 3));
    CHECK(CyclotomicElement::one(3).lift_to(12) == CyclotomicElement::one(12));
    const auto z3 = CyclotomicElement::root_power(3, 1);
    CHECK(z3.lift_to(9) == CyclotomicElement::root_power(9, 3));
    CHECK(std::abs(z3.lift_to(9).to_complex() - z3.to_complex()) < 1e-12);
    CHECK_THROWS_AS(z3.lift_to(10), std::domain_error);
}

TEST_CASE("cyclotomic factor stripping") {
    auto cert = strip_cyclotomic_factors(Polynomial::power_minus_one(3));
    CHECK(cert.factors == std::vector<CycloFactorCertificate::Factor>{{1, 1}, {3, 1}});
    CHECK(cert.fully_cyclotomic());
    CHECK(cert.lcm_of_orders() == 3);

    // (x-1)(x+1)^2
    const Polynomial p = cyclotomic_polynomial(1) * cyclotomic_polynomial(2).pow(2);
    cert = strip_cyclotomic_factors(p);
    CHECK(cert.factors == std::vector<CycloFactorCertificate::Factor>{{1, 1}, {2, 2}});
    CHECK(cert.fully_cyclotomic());

    const Polynomial x2m2{Rational(-2), Rational(0), Rational(1)};
    cert = strip_cyclotomic_factors(x2m2);
    CHECK(cert.factors.empty());
    CHECK(cert.remainder == x2m2);

    CHECK_THROWS_AS(strip_cyclotomic_factors(Polynomial::zero()), std::domain_error);
    CHECK_THROWS_AS(strip_cyclotomic_factors(Polynomial{Rational(1), Rational(2)}),
                    std::domain_error);
}

TEST_CASE("stripping reconstructs the input exactly") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<unsigned> order(1, 12);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> with_alien(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = Polynomial::one();
        for (int f = 0; f < 3; ++f) p *= cyclotomic_polynomial(order(rng)).pow(mult(rng));
        if (with_alien(rng)) p *= Polynomial{Rational(-2), Rational(0), Rational(1)};
        const auto cert = strip_cyclotomic_factors(p);
        CHECK(cert.reconstruct() == p);
        // remainder carries no further cyclotomic factor
        for (unsigned d = 1; d <= 2u * static_cast<unsigned>(p.degree()) *
                                      static_cast<unsigned>(p.degree());
             ++d) {
            if (euler_phi(d) <= static_cast<unsigned>(cert.remainder.degree())) {
                CHECK_FALSE(cert.remainder.divisible_by(cyclotomic_polynomial(d)));
            }
        }
    }
}

TEST_CASE("certificate text form") {
    const auto cert =
        strip_cyclotomic_factors(cyclotomic_polynomial(1) * cyclotomic_polynomial(2).pow(2) *
                                 cyclotomic_polynomial(3).pow(2));
    CHECK(cert.factors_to_string() == "{1:1;2:2;3:2}");
}
