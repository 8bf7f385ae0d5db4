#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cyclewalk/period.hpp"
#include "cyclewalk/spectral.hpp"
#include "cyclewalk/zeta.hpp"

// Single home for the wire formats: rationals as "num/den" strings (den
// omitted when 1), polynomials as ascending coefficient arrays, matrices
// as dense row-major string arrays.
namespace cyclewalk::io {

nlohmann::json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json cyclotomic_json(const CyclotomicElement& e);
CyclotomicElement cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json matrix_json(const RationalMatrix& m);
nlohmann::json cyclo_poly_json(const CyclotomicPolynomial& p);

nlohmann::json walk_spec_json(const WalkSpec& s);
WalkSpec walk_spec_from_json(const nlohmann::json& j);

nlohmann::json period_result_json(const PeriodResult& r);
PeriodResult period_result_from_json(const nlohmann::json& j);

nlohmann::json kurokawa_form_json(const KurokawaForm& f);
KurokawaForm kurokawa_form_from_json(const nlohmann::json& j);

nlohmann::json abs_zeta_descriptor_json(const AbsZetaDescriptor& d);

nlohmann::json coeff_report_json(const CoeffFormulaReport& r);

}  // namespace cyclewalk::io
