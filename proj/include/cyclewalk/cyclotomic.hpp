#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclewalk/polynomial.hpp"
#include "cyclewalk/rational.hpp"

namespace cyclewalk {

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);
// Product of the distinct prime factors.
unsigned radical(unsigned n);

// The n-th cyclotomic polynomial: integer coefficients, degree phi(n).
// Generated by dividing x^rad - 1 by the proper-divisor cyclotomics and
// spreading exponents by n/rad; results are memoized in a process-wide
// catalog (write-once under a lock, generation itself is pure).
const Polynomial& cyclotomic_polynomial(unsigned n);

// An element of Q(zeta_N) in canonical reduced form: a polynomial in
// zeta_N of degree < phi(N), reduced modulo the N-th cyclotomic
// polynomial. Equality of same-order elements is representation equality;
// arithmetic between different orders is a caller error (lift first).
class CyclotomicElement {
  public:
    CyclotomicElement(unsigned order, Polynomial rep);

    static CyclotomicElement zero(unsigned order);
    static CyclotomicElement one(unsigned order);
    static CyclotomicElement from_rational(unsigned order, const Rational& q);
    // Canonical representative of zeta_order^(e mod order); e of any sign.
    static CyclotomicElement root_power(unsigned order, long e);

    unsigned order() const { return order_; }
    const Polynomial& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational rational_value() const;

    CyclotomicElement operator-() const { return CyclotomicElement(order_, -rep_, already_reduced{}); }
    CyclotomicElement operator+(const CyclotomicElement& rhs) const;
    CyclotomicElement operator-(const CyclotomicElement& rhs) const;
    CyclotomicElement operator*(const CyclotomicElement& rhs) const;
    CyclotomicElement& operator+=(const CyclotomicElement& rhs) { return *this = *this + rhs; }
    CyclotomicElement& operator-=(const CyclotomicElement& rhs) { return *this = *this - rhs; }
    CyclotomicElement& operator*=(const CyclotomicElement& rhs) { return *this = *this * rhs; }
    bool operator==(const CyclotomicElement& rhs) const {
        return order_ == rhs.order_ && rep_ == rhs.rep_;
    }
    bool operator!=(const CyclotomicElement& rhs) const { return !(*this == rhs); }

    CyclotomicElement scaled(const Rational& c) const {
        return CyclotomicElement(order_, rep_.scaled(c), already_reduced{});
    }

    // Multiplicative inverse via the extended Euclidean algorithm of the
    // representative against the cyclotomic modulus.
    CyclotomicElement inverse() const;

    // The automorphism zeta -> zeta^e for gcd(e, order) = 1; e = order-1
    // is complex conjugation.
    CyclotomicElement galois(long e) const;

    // Same abstract number viewed in Q(zeta_M) for order | M.
    CyclotomicElement lift_to(unsigned target_order) const;

    // Float shadow under zeta_N -> exp(2*pi*i/N).
    std::complex<double> to_complex() const;

    std::string to_string() const;

  private:
    struct already_reduced {};
    CyclotomicElement(unsigned order, Polynomial rep, already_reduced)
        : order_(order), rep_(std::move(rep)) {}
    void require_same_order(const CyclotomicElement& rhs) const;

    unsigned order_;
    Polynomial rep_;
};

inline CyclotomicElement cyclo_mul(const CyclotomicElement& a, const CyclotomicElement& b) { return a * b; }
inline CyclotomicElement cyclo_add(const CyclotomicElement& a, const CyclotomicElement& b) { return a + b; }
inline CyclotomicElement cyclo_inverse(const CyclotomicElement& a) { return a.inverse(); }
inline CyclotomicElement root_power(unsigned order, long e) {
    return CyclotomicElement::root_power(order, e);
}
inline CyclotomicElement to_common_order(const CyclotomicElement& a, unsigned target_order) {
    return a.lift_to(target_order);
}

// Result of stripping cyclotomic factors from a monic polynomial:
// prod_d Phi_d^multiplicity * remainder reconstructs the input exactly,
// and the remainder has no cyclotomic factor Phi_d with phi(d) <= deg.
struct CycloFactorCertificate {
    struct Factor {
        unsigned order;
        unsigned multiplicity;
        bool operator==(const Factor&) const = default;
    };
    std::vector<Factor> factors;  // sorted by order
    Polynomial remainder;

    bool fully_cyclotomic() const { return remainder.is_one(); }
    Polynomial reconstruct() const;
    // lcm of the factor orders; 1 when there are none.
    std::uint64_t lcm_of_orders() const;
    std::string factors_to_string() const;  // "{1:1;2:2;3:2}"
};

// Trial-divides by Phi_d for every candidate order d with
// phi(d) <= deg(remainder). Candidates are complete because
// phi(d) >= sqrt(d/2), so any cyclotomic factor of a degree-n polynomial
// has order d <= 2*n^2.
CycloFactorCertificate strip_cyclotomic_factors(const Polynomial& p);

}  // namespace cyclewalk
