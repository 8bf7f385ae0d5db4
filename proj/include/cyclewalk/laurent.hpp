#pragma once

#include <string>

#include "cyclewalk/polynomial.hpp"

namespace cyclewalk {

// Laurent polynomial over Q: value = t^shift * body, with body having a
// nonzero constant term (shift = 0 and empty body for zero). Used for the
// sector characteristic polynomial computed once with a formal root of
// unity, before specializing t to a concrete zeta power.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(Polynomial body, long shift) : body_(std::move(body)), shift_(shift) { normalize(); }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return from_constant(Rational(1)); }
    static LaurentPoly from_constant(const Rational& c) { return LaurentPoly(Polynomial::constant(c), 0); }
    // c * t^e, e of either sign
    static LaurentPoly term(const Rational& c, long e) { return LaurentPoly(Polynomial::constant(c), e); }

    bool is_zero() const { return body_.is_zero(); }
    long min_exponent() const { return shift_; }
    long max_exponent() const { return shift_ + body_.degree(); }
    const Polynomial& body() const { return body_; }

    Rational coeff(long e) const {
        if (is_zero() || e < shift_ || e > max_exponent()) return Rational(0);
        return body_.coeff(static_cast<std::size_t>(e - shift_));
    }

    LaurentPoly operator-() const { return LaurentPoly(-body_, shift_); }
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }
    LaurentPoly operator*(const LaurentPoly& rhs) const {
        if (is_zero() || rhs.is_zero()) return zero();
        return LaurentPoly(body_ * rhs.body_, shift_ + rhs.shift_);
    }
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    bool operator==(const LaurentPoly& rhs) const { return shift_ == rhs.shift_ && body_ == rhs.body_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly scaled(const Rational& c) const {
        if (c == 0) return zero();
        return LaurentPoly(body_.scaled(c), shift_);
    }

    std::string to_string(const std::string& var = "t") const;

  private:
    void normalize() {
        if (body_.is_zero()) {
            shift_ = 0;
            return;
        }
        unsigned v = *body_.monomial_valuation();
        if (v > 0) {
            auto [q, r] = body_.divrem(Polynomial::monomial(v, Rational(1)));
            body_ = q;
            shift_ += static_cast<long>(v);
        }
    }

    Polynomial body_;
    long shift_ = 0;
};

}  // namespace cyclewalk
