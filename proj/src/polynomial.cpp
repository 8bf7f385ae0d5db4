#include "cyclewalk/polynomial.hpp"

#include <sstream>

namespace cyclewalk {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

Polynomial Polynomial::power_minus_one(unsigned n) {
    Polynomial p = monomial(n, Rational(1));
    return p - one();
}

const Rational& Polynomial::coeff(std::size_t i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool Polynomial::is_integer_poly() const {
    for (const auto& c : coeffs_) {
        if (!is_integer(c)) return false;
    }
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero();
    Polynomial r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Polynomial Polynomial::shifted_up(unsigned k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : *this;
    std::vector<Rational> out(coeffs_.size() + k, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {zero(), r};
    std::vector<Rational> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
    const Rational& lead = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        Rational factor = r.leading() / lead;
        q[shift] = factor;
        // r -= factor * x^shift * d, done in place to avoid realloc churn
        for (std::size_t i = 0; i < d.coeffs_.size(); ++i) {
            r.coeffs_[i + shift] -= factor * d.coeffs_[i];
        }
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool Polynomial::divisible_by(const Polynomial& d) const {
    return divrem(d).second.is_zero();
}

Rational Polynomial::eval(const Rational& v) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * v + *it;
    }
    return acc;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::substitute_power(unsigned k) const {
    if (k == 0) return constant(eval(Rational(1)));
    if (is_zero()) return zero();
    std::vector<Rational> out(static_cast<std::size_t>(degree()) * k + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
    return Polynomial(std::move(out));
}

std::optional<unsigned> Polynomial::monomial_valuation() const {
    if (is_zero()) return std::nullopt;
    unsigned e = 0;
    while (coeffs_[e] == 0) ++e;
    return e;
}

std::optional<std::size_t> Polynomial::lowest_non_integer_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!is_integer(coeffs_[i])) return i;
    }
    return std::nullopt;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Rational& c = coeffs_[idx];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == 1;
        if (idx == 0) {
            os << cyclewalk::to_string(abs_c);
        } else {
            if (!unit) os << cyclewalk::to_string(abs_c) << "*";
            os << var;
            if (idx > 1) os << "^" << idx;
        }
    }
    return os.str();
}

ExtendedGcd poly_extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::one(), u1 = Polynomial::zero();
    Polynomial v0 = Polynomial::zero(), v1 = Polynomial::one();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::exchange(r1, r);
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    // normalize the gcd to monic
    Rational inv_lead = Rational(1) / r0.leading();
    return {r0.scaled(inv_lead), u0.scaled(inv_lead), v0.scaled(inv_lead)};
}

}  // namespace cyclewalk
