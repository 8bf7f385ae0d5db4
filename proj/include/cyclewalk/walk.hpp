#pragma once

#include <string>

#include "cyclewalk/cyclotomic.hpp"
#include "cyclewalk/matrix.hpp"
#include "cyclewalk/rational.hpp"

namespace cyclewalk {

enum class Family { M, F };

inline char family_letter(Family f) { return f == Family::M ? 'M' : 'F'; }
Family family_from_string(const std::string& s);

// A Grover walk instance: family, odd state count L = 2m+1 >= 3, and the
// cycle length N >= 2.
struct WalkSpec {
    Family family;
    unsigned states;    // L
    unsigned vertices;  // N

    unsigned m() const { return (states - 1) / 2; }
    unsigned dimension() const { return states * vertices; }
    void validate() const;
    std::string to_string() const;
    bool operator==(const WalkSpec&) const = default;
};

using RationalMatrix = DenseMatrix<Rational>;
using CycloMatrix = DenseMatrix<CyclotomicElement>;

// The L x L local coin: off-pattern entries 2/L, distinguished entries
// -(2m-1)/L on the diagonal (M) or the anti-diagonal (F).
RationalMatrix coin_matrix(const WalkSpec& spec);

// The k-th power of the diagonal momentum matrix, entries
// zeta_N^(m*k), zeta_N^((m-1)*k), ..., zeta_N^(-m*k) in Q(zeta_N).
CycloMatrix momentum_matrix(const WalkSpec& spec, unsigned k);

// Z^k * coin over Q(zeta_N): the momentum-sector operator.
CycloMatrix sector_matrix(const WalkSpec& spec, unsigned k);

// The LN x LN evolution operator U = S*C in the vertex-major basis with
// chirality order (<-m, ..., <-1, stay, 1->, ..., m->) inside each vertex.
// Row ((v + d) mod N, c) picks up coin row c at column block v, where d is
// the displacement of chirality c.
RationalMatrix evolution_matrix(const WalkSpec& spec);

// Displacement of chirality index c (0-based): c - m.
inline long chirality_displacement(const WalkSpec& spec, unsigned c) {
    return static_cast<long>(c) - static_cast<long>(spec.m());
}

RationalMatrix rational_identity(std::size_t n);
bool is_identity(const RationalMatrix& a);
bool is_orthogonal(const RationalMatrix& a);

CycloMatrix cyclo_identity(std::size_t n, unsigned order);
bool is_identity(const CycloMatrix& a);

}  // namespace cyclewalk
