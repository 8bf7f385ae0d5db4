#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclewalk/rational.hpp"

namespace cyclewalk {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// Canonical form: the highest-index coefficient is nonzero; the zero
// polynomial is the empty list. All operations are exact.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(Rational(1)); }
    static Polynomial x() { return monomial(1, Rational(1)); }
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& c);
    // x^n - 1
    static Polynomial power_minus_one(unsigned n);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficient of x^i; zero beyond the stored range.
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool is_integer_poly() const;
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
    Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    // Multiplication by x^k.
    Polynomial shifted_up(unsigned k) const;

    // Exact division with remainder: *this = q*d + r, deg r < deg d.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const;
    // Quotient of an exact division; throws if the remainder is nonzero.
    Polynomial divide_exact(const Polynomial& d) const;
    bool divisible_by(const Polynomial& d) const;

    Rational eval(const Rational& v) const;

    // Coefficient list reversed in place of degree n: returns
    // x^n * p(1/x) for n = deg(p). Maps det(xI-U) to det(I-uU).
    Polynomial reversed() const;

    // p(x^k): spreads coefficients k positions apart.
    Polynomial substitute_power(unsigned k) const;

    // Largest e with x^e dividing p (0 for p with nonzero constant term);
    // nullopt for the zero polynomial.
    std::optional<unsigned> monomial_valuation() const;

    // Lowest degree whose coefficient is not an integer, if any.
    std::optional<std::size_t> lowest_non_integer_degree() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g and g
// monic (or zero when both inputs are zero).
struct ExtendedGcd {
    Polynomial g, u, v;
};
ExtendedGcd poly_extended_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace cyclewalk
