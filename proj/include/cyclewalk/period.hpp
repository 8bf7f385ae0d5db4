#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cyclewalk/spectral.hpp"

namespace cyclewalk {

// Verdict of the periodicity decision. A walk operator is orthogonal,
// hence diagonalizable, so U^T = I exactly when every eigenvalue is a
// T-th root of unity. A monic rational polynomial whose roots are all
// roots of unity is a product of cyclotomic polynomials (and in
// particular has integer coefficients), which makes the following a total
// decision procedure:
//   1. any non-integer coefficient of det(xI - U)  -> infinite period;
//   2. otherwise strip cyclotomic factors; a nontrivial remainder has a
//      root off the root-of-unity locus              -> infinite period;
//   3. otherwise the period is the lcm of the factor orders.
struct PeriodResult {
    enum class Kind { Finite, InfiniteNonIntegerCoefficient, InfiniteNonCyclotomicRemainder };

    Kind kind;

    // Finite
    std::uint64_t period = 0;
    CycloFactorCertificate factors;
    bool confirmed_by_power = false;

    // InfiniteNonIntegerCoefficient
    std::size_t witness_degree = 0;
    Rational witness_value;

    // InfiniteNonCyclotomicRemainder
    Polynomial remainder;

    bool finite() const { return kind == Kind::Finite; }
    std::string certificate_kind() const;
    std::string certificate_detail() const;
};

// Budget for confirming a finite verdict by explicit powering, measured in
// matrix-entry operations T * (LN)^3. Beyond it the verdict rests on the
// factor certificate alone and is flagged unconfirmed.
inline constexpr std::uint64_t kPowerCheckBudget = 1'000'000;

PeriodResult decide_period(const WalkSpec& spec);

// Least T <= max_period with U^T = I, by exact repeated multiplication
// (scaled to an integer matrix, denominator tracked as a power of L).
std::optional<unsigned> period_by_power(const WalkSpec& spec, unsigned max_period);

// Closed-form first-degree coefficient of the full characteristic
// polynomial when gcd(N, L) = 1, asserted against the exact engine and
// non-integral. Returns nullopt when N and L are not coprime.
//   M family: (-1)^N * (2m-1)/L * (2*floor(m/N)+1) * N
//   F family: (-1)^(N(m+1)) * N/L * (L - 2*(2*floor(m/N)+1))
// The F form follows the exact engine's sign for the sector root sums.
std::optional<Rational> coprime_certificate(const WalkSpec& spec);

// For the F family on N = L vertices: every momentum sector operator
// satisfies B^4 = I while some sector has B^2 != I, all in exact
// cyclotomic arithmetic.
bool fourth_power_check(const WalkSpec& spec);

}  // namespace cyclewalk
