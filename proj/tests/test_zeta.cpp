#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cyclewalk/zeta.hpp"
#include "oracles.hpp"

using namespace cyclewalk;

namespace {

Polynomial closed_form_denominator(unsigned L) {
    // (1-u)(1+u)^{L-1}(1-u^L)^{L-1}
    return (Polynomial::one() - Polynomial::x()) *
           (Polynomial::one() + Polynomial::x()).pow(L - 1) *
           (Polynomial::one() - Polynomial::monomial(L, Rational(1))).pow(L - 1);
}

}  // namespace

TEST_CASE("walk zeta of the L-state walk on L vertices") {
    for (unsigned L : {3u, 5u}) {
        const WalkZeta z = walk_zeta({Family::M, L, L});
        CHECK(z.denominator == closed_form_denominator(L));
        CHECK(z.denominator.coeff(0) == 1);
        CHECK(z.direct_checked);

        // zeta(u) = -(u-1)^{L-2} / ((u^2-1)^{L-1} (u^L-1)^{L-1}), checked by
        // cross-multiplication
        const Polynomial num = Polynomial{Rational(-1), Rational(1)}.pow(L - 2).scaled(Rational(-1));
        const Polynomial den =
            Polynomial::power_minus_one(2).pow(L - 1) * Polynomial::power_minus_one(L).pow(L - 1);
        CHECK(den == num * z.denominator);
    }
}

TEST_CASE("zeta denominator is the reversal of the characteristic polynomial") {
    for (Family fam : {Family::M, Family::F}) {
        for (const auto& [L, N] :
             std::vector<std::pair<unsigned, unsigned>>{{3, 4}, {3, 6}, {5, 3}, {7, 2}}) {
            const WalkSpec spec{fam, L, N};
            const Polynomial f = full_charpoly(spec).product;
            const WalkZeta z = walk_zeta(spec);
            CHECK(z.direct_checked);
            REQUIRE(f.degree() == static_cast<int>(L * N));
            // denominator(u) = u^{LN} f(1/u), coefficientwise reversal
            for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); ++i) {
                CHECK(z.denominator.coeff(i) == f.coeff(f.degree() - i));
            }
        }
    }
}

TEST_CASE("kurokawa recognition of the walk zeta") {
    const WalkZeta z = walk_zeta({Family::M, 3, 3});
    const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
    REQUIRE(form.has_value());
    CHECK(form->sign == -1);
    CHECK(form->l == 0);
    CHECK(form->m_list == std::vector<unsigned>{1});
    CHECK(form->n_list == std::vector<unsigned>{2, 2, 3, 3});
    CHECK(form->deg() == Rational(-9));
    CHECK(form->weight() == -9);
    CHECK(form->reflection_sign() == -1);
    CHECK(form->theorem_conformant());
}

TEST_CASE("kurokawa recognition edge cases") {
    // x - 1 alone: valid quotient shape, but empty denominator product
    const auto bare = recognize_kurokawa(Polynomial::power_minus_one(1), Polynomial::one());
    REQUIRE(bare.has_value());
    CHECK(bare->sign == 1);
    CHECK(bare->m_list == std::vector<unsigned>{1});
    CHECK(bare->n_list.empty());
    CHECK_FALSE(bare->theorem_conformant());
    CHECK_THROWS_AS(absolute_zeta_descriptor(*bare), std::domain_error);

    // (x^6-1)/(x^2-1), both sides expanded
    const auto ratio =
        recognize_kurokawa(Polynomial::power_minus_one(6), Polynomial::power_minus_one(2));
    REQUIRE(ratio.has_value());
    CHECK(ratio->m_list == std::vector<unsigned>{6});
    CHECK(ratio->n_list == std::vector<unsigned>{2});
    auto [num, den] = ratio->expand();
    CHECK(num.divide_exact(den) == Polynomial{Rational(1), Rational(0), Rational(1), Rational(0),
                                              Rational(1)});

    // monomial content feeds l
    const auto shifted = recognize_kurokawa(
        Polynomial::power_minus_one(2).shifted_up(3), Polynomial::power_minus_one(1));
    REQUIRE(shifted.has_value());
    CHECK(shifted->l == 6);

    // not a product of (x^m - 1): absent
    CHECK_FALSE(recognize_kurokawa(Polynomial{Rational(-2), Rational(0), Rational(1)},
                                   Polynomial::one())
                    .has_value());
    // non-unit scalar ratio: absent
    CHECK_FALSE(recognize_kurokawa(Polynomial::power_minus_one(2).scaled(Rational(2)),
                                   Polynomial::power_minus_one(1))
                    .has_value());
    // non-integer polynomials: absent
    CHECK_FALSE(recognize_kurokawa(Polynomial{make_rational(1, 2), Rational(1)},
                                   Polynomial::one())
                    .has_value());
}

TEST_CASE("recognition round trip on walk zetas") {
    for (Family fam : {Family::M, Family::F}) {
        for (unsigned L : {3u, 5u}) {
            const WalkZeta z = walk_zeta({fam, L, L});
            const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
            REQUIRE(form.has_value());
            auto [num, den] = form->expand();
            // 1/denominator == num/den  <=>  den == num * denominator
            CHECK(den == num * z.denominator);
        }
    }
}

TEST_CASE("absolute zeta descriptor of the 3-state walk") {
    const WalkZeta z = walk_zeta({Family::M, 3, 3});
    const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
    REQUIRE(form.has_value());
    const AbsZetaDescriptor d = absolute_zeta_descriptor(*form);

    CHECK(d.omega == std::vector<unsigned>{2, 2, 3, 3});
    CHECK(d.deg_f == Rational(-9));
    CHECK(d.weight_D == -9);
    CHECK(d.sign_C == -1);
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0] == AbsZetaTerm{0, 1, 0, -1});
    CHECK(d.terms[1] == AbsZetaTerm{1, 1, 1, 1});
    CHECK(d.shift_offset(0) == Rational(9));
    CHECK(d.shift_offset(1) == Rational(10));
    CHECK(d.render_text().find("zeta_4(w, s+9, (2,2,3,3))") != std::string::npos);
    CHECK(d.render_text().find("zeta_4(w, s+10, (2,2,3,3))") != std::string::npos);
}

TEST_CASE("absolute zeta descriptor of the 5-state walk") {
    const WalkZeta z = walk_zeta({Family::M, 5, 5});
    const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
    REQUIRE(form.has_value());
    const AbsZetaDescriptor d = absolute_zeta_descriptor(*form);

    CHECK(d.omega == std::vector<unsigned>{2, 2, 2, 2, 5, 5, 5, 5});
    CHECK(d.deg_f == Rational(-25));
    CHECK(d.weight_D == -25);
    CHECK(d.sign_C == -1);
    REQUIRE(d.terms.size() == 4);
    const std::uint64_t expected_mult[] = {1, 3, 3, 1};
    for (unsigned j = 0; j < 4; ++j) {
        CHECK(d.terms[j].subset_size == j);
        CHECK(d.terms[j].multiplicity == expected_mult[j]);
        CHECK(d.terms[j].weight == j);
        CHECK(d.terms[j].sign == (j % 2 == 0 ? -1 : 1));
        CHECK(d.shift_offset(j) == Rational(25 + j));
    }
}

TEST_CASE("signed multiplicities cancel and factor lists agree") {
    for (Family fam : {Family::M, Family::F}) {
        const WalkZeta z = walk_zeta({fam, 5, 5});
        const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
        REQUIRE(form.has_value());
        if (form->a() < 1) continue;
        const AbsZetaDescriptor d = absolute_zeta_descriptor(*form);
        long long signed_sum = 0;
        for (const auto& t : d.terms) {
            signed_sum += t.sign * static_cast<long long>(t.multiplicity);
        }
        CHECK(signed_sum == 0);
        CHECK(d.sine_factors == d.gamma_factors);
    }
}

TEST_CASE("descriptor guards") {
    KurokawaForm too_many;
    too_many.n_list = {1};
    too_many.m_list.assign(21, 1);
    CHECK_THROWS_AS(absolute_zeta_descriptor(too_many), std::domain_error);
}

TEST_CASE("multiple hurwitz zeta against classical values") {
    // zeta_1(2, 1, (1)) has the classical value pi^2/6; the evaluator needs
    // w > r = 1 and 2 qualifies
    const double basel = eval_multiple_hurwitz(2.0, 1.0, {1}, 1e-6);
    CHECK(std::abs(basel - std::numbers::pi * std::numbers::pi / 6.0) < 1e-6);

    // shift by one: zeta_1(4, 2, (1)) = zeta(4) - 1
    const double zeta4 = std::pow(std::numbers::pi, 4) / 90.0;
    CHECK(std::abs(eval_multiple_hurwitz(4.0, 2.0, {1}, 1e-10) - (zeta4 - 1.0)) < 1e-9);

    // lattice collapse: zeta_2(5, 1, (1,1)) = sum_k k * k^{-5} = zeta(4)
    CHECK(std::abs(eval_multiple_hurwitz(5.0, 1.0, {1, 1}, 1e-10) - zeta4) < 1e-9);
}

TEST_CASE("multiple hurwitz zeta against the brute lattice sum") {
    for (const auto& omega :
         std::vector<std::vector<unsigned>>{{1}, {2}, {1, 2}, {2, 3}, {1, 2, 3}}) {
        const double w = omega.size() + 2.5;
        for (double x : {0.5, 1.0, 3.25}) {
            // the brute cutoff leaves a tail below 1e-6 at these exponents
            const double fast = eval_multiple_hurwitz(w, x, omega, 1e-9);
            const double brute = oracles::hurwitz_brute(w, x, omega, 400.0);
            CHECK(std::abs(fast - brute) < 1e-5);
        }
    }
}

TEST_CASE("multiple hurwitz zeta preconditions") {
    CHECK_THROWS_AS(eval_multiple_hurwitz(1.0, 1.0, {1}, 1e-6), std::domain_error);
    CHECK_THROWS_AS(eval_multiple_hurwitz(3.0, -1.0, {1}, 1e-6), std::domain_error);
    CHECK_THROWS_AS(eval_multiple_hurwitz(3.0, 1.0, {}, 1e-6), std::domain_error);
    CHECK_THROWS_AS(eval_multiple_hurwitz(3.0, 1.0, {1, 0}, 1e-6), std::domain_error);
    CHECK_THROWS_AS(eval_multiple_hurwitz(3.0, 1.0, {1}, -1.0), std::domain_error);
}

TEST_CASE("mellin transform of the classical hurwitz kernel") {
    // f(x) = 1/(x-1): a = 0, b = 1, deg = -1, so Z_f(3, 2) = zeta_1(3, 3, (1))
    KurokawaForm h;
    h.n_list = {1};
    const double mellin = eval_Zf_mellin(h, 3.0, 2.0, 1e-9);
    const double series = eval_multiple_hurwitz(3.0, 3.0, {1}, 1e-10);
    CHECK(std::abs(mellin - series) < 1e-8);
}

TEST_CASE("mellin and subset series agree on the walk form") {
    const WalkZeta z = walk_zeta({Family::M, 3, 3});
    const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
    REQUIRE(form.has_value());
    const AbsZetaDescriptor d = absolute_zeta_descriptor(*form);

    const double mellin = eval_Zf_mellin(*form, 6.0, 1.0, 5e-5);
    const double series = eval_subset_series(d, 6.0, 1.0, 5e-5);
    CHECK(std::abs(mellin - series) < 1e-4);
}

TEST_CASE("halving the tolerance never worsens the discrepancy") {
    const WalkZeta z = walk_zeta({Family::M, 3, 3});
    const auto form = recognize_kurokawa(Polynomial::one(), z.denominator);
    REQUIRE(form.has_value());
    const AbsZetaDescriptor d = absolute_zeta_descriptor(*form);

    double previous = std::numeric_limits<double>::infinity();
    for (double tol : {1e-3, 5e-4, 2.5e-4, 1.25e-4}) {
        const double diff =
            std::abs(eval_Zf_mellin(*form, 6.0, 1.0, tol) - eval_subset_series(d, 6.0, 1.0, tol));
        CHECK(diff <= previous + 1e-15);
        previous = diff;
    }
}

TEST_CASE("mellin preconditions") {
    KurokawaForm h;
    h.n_list = {1};
    CHECK_THROWS_AS(eval_Zf_mellin(h, 0.5, 2.0, 1e-6), std::domain_error);   // w <= b - a
    CHECK_THROWS_AS(eval_Zf_mellin(h, 3.0, -2.0, 1e-6), std::domain_error);  // s <= deg f
    CHECK_THROWS_AS(eval_Zf_mellin(h, 3.0, 2.0, 0.0), std::domain_error);
}
