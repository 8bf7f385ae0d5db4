#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cyclewalk {

// Exact scalars. GMP keeps mpq_class canonical (gcd(|num|,den)=1, den>=1)
// after every arithmetic operation, which is exactly the representation
// contract we need; construction from raw num/den goes through
// make_rational so the invariant holds from birth.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

// "num/den", with the denominator omitted when it is 1.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("unparsable rational: " + s);
    }
    if (q.get_den() == 0) {
        throw std::domain_error("rational with zero denominator: " + s);
    }
    q.canonicalize();
    return q;
}

// Floor quotient of m by n for n > 0 (the q_n(m) of the coefficient
// certificates).
inline Int floor_quotient(const Int& m, const Int& n) {
    if (n <= 0) throw std::domain_error("floor_quotient needs n > 0");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    return q;
}

// Raised when an internal exactness contract is violated (for example a
// sector product failing to be rational). Distinguished from domain errors
// so the CLI can map it to its own exit code.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cyclewalk
