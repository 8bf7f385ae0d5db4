#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclewalk/cyclotomic.hpp"
#include "cyclewalk/laurent.hpp"
#include "cyclewalk/walk.hpp"

namespace cyclewalk {

// Polynomial with coefficients in Q(zeta_N), ascending degree. Carrier for
// momentum-sector characteristic polynomials.
class CyclotomicPolynomial {
  public:
    CyclotomicPolynomial(unsigned order, std::vector<CyclotomicElement> coeffs);
    static CyclotomicPolynomial one(unsigned order);

    unsigned order() const { return order_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<CyclotomicElement>& coeffs() const { return coeffs_; }
    CyclotomicElement coeff(std::size_t i) const;
    bool is_monic() const;

    CyclotomicPolynomial operator*(const CyclotomicPolynomial& rhs) const;
    bool operator==(const CyclotomicPolynomial& rhs) const {
        return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
    }

    // All coefficients rational after reduction; throws InternalError
    // otherwise (that would signal an arithmetic bug, never expected for
    // full sector products).
    Polynomial to_rational_polynomial() const;
    bool all_coefficients_rational() const;

  private:
    unsigned order_;
    std::vector<CyclotomicElement> coeffs_;
};

// det(xI_L - Z_L^k A) over Q(zeta_N) via Faddeev-LeVerrier; monic, degree L.
CyclotomicPolynomial sector_charpoly(const WalkSpec& spec, unsigned k);

// All N sectors, their product reduced to Q[x], and (for LN <= 60) the
// independent dense determinant cross-check of the product identity.
struct CharPolyBundle {
    WalkSpec spec;
    std::vector<CyclotomicPolynomial> sectors;
    Polynomial product;
    bool direct_checked = false;
};
CharPolyBundle full_charpoly(const WalkSpec& spec);

// Sector characteristic polynomial with a formal root of unity t in place
// of zeta_N^k: coefficients are Laurent polynomials in t depending only on
// (family, L). Specializing t -> zeta_N^k reproduces every sector.
// Memoized; coefficients ascending, length L+1.
const std::vector<LaurentPoly>& universal_sector_charpoly(Family family, unsigned states);

CyclotomicElement specialize_at_root(const LaurentPoly& p, unsigned order, long k);

// One compared coefficient of a sector polynomial.
struct CoeffCheckEntry {
    unsigned degree;
    bool ok;
    std::string expected;
    std::string actual;
    std::string note;
};

// Outcome of checking the low-order coefficient formulas of a sector
// characteristic polynomial. The degree-2/3 coefficients of the M family
// are only pinned down up to integer weight families; those are solved
// from the universal polynomial and reported here.
struct CoeffFormulaReport {
    WalkSpec spec;
    unsigned k = 0;
    std::vector<CoeffCheckEntry> entries;
    std::map<long, Int> a_family;  // M only: weights of the degree-2 root sums
    std::map<long, Int> b_family;  // M only: weights of the degree-3 root sums
    bool families_integer = true;
    bool a_matches_floor_rule = true;  // a_j = m - floor(|j|/2)
    bool universal_matches_engine = true;

    bool all_ok() const;
    std::string failure_summary() const;
};

// Compares engine coefficients of x^0..x^3 (those below the leading term)
// against the closed forms, exactly. Signs that the closed forms get from
// the exact engine rather than the printed text are flagged in the entry
// notes.
CoeffFormulaReport check_coefficient_formulas(const WalkSpec& spec, unsigned k);

// Exact closed-form expectations for the two fully explicit coefficients.
CyclotomicElement expected_constant_term(const WalkSpec& spec, unsigned k);
CyclotomicElement expected_linear_coefficient(const WalkSpec& spec, unsigned k);

}  // namespace cyclewalk
