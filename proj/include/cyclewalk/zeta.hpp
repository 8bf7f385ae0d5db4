#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclewalk/polynomial.hpp"
#include "cyclewalk/walk.hpp"

namespace cyclewalk {

// zeta(u) = det(I - uU)^{-1}, held as the exact reciprocal polynomial.
// denominator(u) = u^{LN} f(1/u) for f = det(xI - U), so denominator(0) = 1.
struct WalkZeta {
    WalkSpec spec;
    Polynomial denominator;
    bool direct_checked = false;
};

WalkZeta walk_zeta(const WalkSpec& spec);

// sign * x^{l/2} * prod_i (x^{m(i)}-1) / prod_j (x^{n(j)}-1).
struct KurokawaForm {
    int sign = 1;
    long l = 0;  // always even
    std::vector<unsigned> m_list;  // ascending
    std::vector<unsigned> n_list;  // ascending

    unsigned a() const { return static_cast<unsigned>(m_list.size()); }
    unsigned b() const { return static_cast<unsigned>(n_list.size()); }
    // The explicit absolute-zeta expansion requires nonempty products on
    // both sides.
    bool theorem_conformant() const { return a() >= 1 && b() >= 1; }

    Rational deg() const;       // l/2 + sum m - sum n
    long weight() const;        // D = l + sum m - sum n
    int reflection_sign() const;  // C = (-1)^(a-b)

    // Expanded (numerator, denominator) pair over Z[x].
    std::pair<Polynomial, Polynomial> expand() const;
    std::string to_string(const std::string& var = "x") const;
};

// Recognizes num/den as a Kurokawa form. Works on the cyclotomic exponent
// vector of both sides (monomial content stripped first), which keeps
// recognition exact even when a factor has to migrate across the fraction
// bar; absent means not representable as such a quotient.
std::optional<KurokawaForm> recognize_kurokawa(const Polynomial& num, const Polynomial& den);

// One group of equal-(|I|, m(I)) subsets in the subset expansion of
// Z_f(w,s) = sum_I sign*(-1)^{|I|} zeta_b(w, s - deg f + m(I), n).
struct AbsZetaTerm {
    unsigned subset_size;
    std::uint64_t multiplicity;
    long weight;  // m(I)
    int sign;     // form sign * (-1)^{|I|}
    bool operator==(const AbsZetaTerm&) const = default;
};

// Symbolic Gamma_b / S_b factor of the absolute zeta function or of the
// functional-equation factor: (s - deg f + weight) argument, omega = n,
// exponent counted with multiplicity.
struct FactorRecord {
    unsigned subset_size;
    std::uint64_t multiplicity;
    long weight;
    int exponent;
    bool operator==(const FactorRecord&) const = default;
};

struct AbsZetaDescriptor {
    KurokawaForm form;
    std::vector<AbsZetaTerm> terms;          // ordered by (subset_size, weight)
    std::vector<unsigned> omega;             // = n_list
    Rational deg_f;
    long weight_D = 0;
    int sign_C = 1;
    std::vector<FactorRecord> gamma_factors;  // zeta_f as a Gamma_b product
    std::vector<FactorRecord> sine_factors;   // epsilon_f as an S_b product

    // Shift offset added to s in every argument of a term with the given
    // weight: -deg_f + weight (an integer for even l).
    Rational shift_offset(long term_weight) const { return Rational(term_weight) - deg_f; }

    std::string render_text() const;
};

// Subset expansion of the explicit absolute-zeta theorem for a form with
// b >= 1 (a = 0 degenerates to the single empty subset) and a <= 20.
AbsZetaDescriptor absolute_zeta_descriptor(const KurokawaForm& form);

// Truncated lattice sum of the multiple Hurwitz zeta function
// zeta_r(w, x, omega) = sum_{n >= 0} (n.omega + x)^{-w}, with the cutoff
// chosen so the integral-comparison tail bound stays below tol.
double eval_multiple_hurwitz(double w, double x, const std::vector<unsigned>& omega, double tol);

// Right side of the explicit theorem: the signed sum of multiple Hurwitz
// zeta values over subset groups, each evaluated within a share of tol.
double eval_subset_series(const AbsZetaDescriptor& desc, double w, double s, double tol);

// Mellin-transform route: (1/Gamma(w)) Int_0^inf f(e^t) e^{-st} t^{w-1} dt
// with the removable t->0 behavior handled by series substitution below
// t0 = 1/4 and an adaptive Simpson rule beyond it.
double eval_Zf_mellin(const KurokawaForm& form, double w, double s, double tol);

}  // namespace cyclewalk
