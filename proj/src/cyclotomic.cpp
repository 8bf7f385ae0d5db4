#include "cyclewalk/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace cyclewalk {

unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::domain_error("euler_phi(0)");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

unsigned radical(unsigned n) {
    unsigned result = 1;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result *= p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result *= m;
    return result;
}

namespace {

std::mutex g_catalog_mutex;
std::map<unsigned, Polynomial>& catalog() {
    static std::map<unsigned, Polynomial> c;
    return c;
}

// Assumes the catalog lock is held.
const Polynomial& cyclotomic_locked(unsigned n) {
    auto it = catalog().find(n);
    if (it != catalog().end()) return it->second;

    Polynomial phi_n;
    const unsigned rad = radical(n);
    if (rad < n) {
        phi_n = cyclotomic_locked(rad).substitute_power(n / rad);
    } else {
        // squarefree order: divide x^n - 1 by the proper-divisor cyclotomics
        Polynomial quotient = Polynomial::power_minus_one(n);
        for (unsigned d : divisors(n)) {
            if (d == n) continue;
            quotient = quotient.divide_exact(cyclotomic_locked(d));
        }
        phi_n = quotient;
    }
    return catalog().emplace(n, std::move(phi_n)).first->second;
}

}  // namespace

const Polynomial& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic polynomial of order 0");
    std::lock_guard<std::mutex> lock(g_catalog_mutex);
    return cyclotomic_locked(n);
}

CyclotomicElement::CyclotomicElement(unsigned order, Polynomial rep) : order_(order) {
    if (order == 0) throw std::domain_error("cyclotomic element of order 0");
    const Polynomial& modulus = cyclotomic_polynomial(order);
    rep_ = rep.degree() < modulus.degree() ? std::move(rep) : rep.divrem(modulus).second;
}

CyclotomicElement CyclotomicElement::zero(unsigned order) {
    return CyclotomicElement(order, Polynomial::zero());
}

CyclotomicElement CyclotomicElement::one(unsigned order) {
    return CyclotomicElement(order, Polynomial::one());
}

CyclotomicElement CyclotomicElement::from_rational(unsigned order, const Rational& q) {
    return CyclotomicElement(order, Polynomial::constant(q));
}

CyclotomicElement CyclotomicElement::root_power(unsigned order, long e) {
    if (order == 0) throw std::domain_error("cyclotomic element of order 0");
    long r = e % static_cast<long>(order);
    if (r < 0) r += order;
    return CyclotomicElement(order, Polynomial::monomial(static_cast<std::size_t>(r), Rational(1)));
}

Rational CyclotomicElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
    return rep_.is_zero() ? Rational(0) : rep_.coeff(0);
}

void CyclotomicElement::require_same_order(const CyclotomicElement& rhs) const {
    if (order_ != rhs.order_) {
        throw std::domain_error("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(rhs.order_));
    }
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& rhs) const {
    require_same_order(rhs);
    return CyclotomicElement(order_, rep_ + rhs.rep_, already_reduced{});
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& rhs) const {
    require_same_order(rhs);
    return CyclotomicElement(order_, rep_ - rhs.rep_, already_reduced{});
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& rhs) const {
    require_same_order(rhs);
    return CyclotomicElement(order_, rep_ * rhs.rep_);
}

CyclotomicElement CyclotomicElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
    if (is_rational()) return from_rational(order_, Rational(1) / rep_.coeff(0));
    // u*rep + v*Phi_N = 1 in Q[x], so u is the inverse mod Phi_N.
    ExtendedGcd e = poly_extended_gcd(rep_, cyclotomic_polynomial(order_));
    if (e.g.degree() != 0) {
        throw InternalError("cyclotomic representative shares a factor with the modulus");
    }
    return CyclotomicElement(order_, e.u.scaled(Rational(1) / e.g.coeff(0)));
}

CyclotomicElement CyclotomicElement::galois(long e) const {
    long r = e % static_cast<long>(order_);
    if (r < 0) r += order_;
    if (std::gcd(static_cast<unsigned long>(r), static_cast<unsigned long>(order_)) != 1) {
        throw std::domain_error("galois exponent not coprime to the order");
    }
    CyclotomicElement acc = zero(order_);
    for (std::size_t i = 0; i < rep_.coeffs().size(); ++i) {
        const Rational& c = rep_.coeff(i);
        if (c == 0) continue;
        acc += root_power(order_, static_cast<long>(i) * r).scaled(c);
    }
    return acc;
}

CyclotomicElement CyclotomicElement::lift_to(unsigned target_order) const {
    if (target_order % order_ != 0) {
        throw std::domain_error("lift target is not a multiple of the element order");
    }
    const unsigned scale = target_order / order_;
    if (scale == 1) return *this;
    return CyclotomicElement(target_order, rep_.substitute_power(scale));
}

std::complex<double> CyclotomicElement::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
    for (std::size_t i = 0; i < rep_.coeffs().size(); ++i) {
        const Rational& c = rep_.coeff(i);
        if (c == 0) continue;
        acc += c.get_d() * std::polar(1.0, step * static_cast<double>(i));
    }
    return acc;
}

std::string CyclotomicElement::to_string() const {
    std::ostringstream os;
    os << rep_.to_string("z" + std::to_string(order_));
    return os.str();
}

Polynomial CycloFactorCertificate::reconstruct() const {
    Polynomial p = remainder;
    for (const Factor& f : factors) {
        p *= cyclotomic_polynomial(f.order).pow(f.multiplicity);
    }
    return p;
}

std::uint64_t CycloFactorCertificate::lcm_of_orders() const {
    Int acc(1);
    for (const Factor& f : factors) {
        Int d(static_cast<unsigned long>(f.order));
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
    }
    if (!acc.fits_ulong_p()) throw std::overflow_error("lcm of cyclotomic orders overflows");
    return acc.get_ui();
}

std::string CycloFactorCertificate::factors_to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Factor& f : factors) {
        if (!first) os << ";";
        os << f.order << ":" << f.multiplicity;
        first = false;
    }
    os << "}";
    return os.str();
}

CycloFactorCertificate strip_cyclotomic_factors(const Polynomial& p) {
    if (p.is_zero() || !p.is_monic()) {
        throw std::domain_error("cyclotomic stripping requires a monic polynomial");
    }
    CycloFactorCertificate cert;
    cert.remainder = p;
    if (p.degree() == 0) return cert;

    const unsigned deg = static_cast<unsigned>(p.degree());
    const std::uint64_t bound = 2ull * deg * deg;
    // phi sieve up to the candidate bound; only orders whose phi fits the
    // current remainder get a trial division.
    std::vector<unsigned> phi(bound + 1);
    for (std::uint64_t i = 0; i <= bound; ++i) phi[i] = static_cast<unsigned>(i);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (phi[i] == i) {  // prime
            for (std::uint64_t j = i; j <= bound; j += i) phi[j] -= phi[j] / i;
        }
    }

    for (std::uint64_t d = 1; d <= bound; ++d) {
        if (cert.remainder.degree() == 0) break;
        if (phi[d] > static_cast<unsigned>(cert.remainder.degree())) continue;
        const Polynomial& phi_d = cyclotomic_polynomial(static_cast<unsigned>(d));
        unsigned mult = 0;
        while (true) {
            auto [q, r] = cert.remainder.divrem(phi_d);
            if (!r.is_zero()) break;
            cert.remainder = q;
            ++mult;
        }
        if (mult > 0) {
            cert.factors.push_back({static_cast<unsigned>(d), mult});
        }
    }
    return cert;
}

}  // namespace cyclewalk
