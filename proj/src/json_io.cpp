#include "cyclewalk/json_io.hpp"

#include <nlohmann/json.hpp>

namespace cyclewalk::io {

using nlohmann::json;

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) { return rational_from_string(j.get<std::string>()); }

json polynomial_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_json(c));
    return arr;
}

Polynomial polynomial_from_json(const json& j) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

json cyclotomic_json(const CyclotomicElement& e) {
    return json{{"order", e.order()}, {"coeffs", polynomial_json(e.rep())}};
}

CyclotomicElement cyclotomic_from_json(const json& j) {
    return CyclotomicElement(j.at("order").get<unsigned>(),
                             polynomial_from_json(j.at("coeffs")));
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json cyclo_poly_json(const CyclotomicPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(polynomial_json(c.rep()));
    return json{{"order", p.order()}, {"coeffs", coeffs}};
}

json walk_spec_json(const WalkSpec& s) {
    return json{{"family", std::string(1, family_letter(s.family))},
                {"states", s.states},
                {"vertices", s.vertices}};
}

WalkSpec walk_spec_from_json(const json& j) {
    return WalkSpec{family_from_string(j.at("family").get<std::string>()),
                    j.at("states").get<unsigned>(), j.at("vertices").get<unsigned>()};
}

json period_result_json(const PeriodResult& r) {
    json out;
    if (r.finite()) {
        out["verdict"] = "finite";
        out["T"] = r.period;
        json factors = json::array();
        for (const auto& f : r.factors.factors) {
            factors.push_back(json{{"order", f.order}, {"multiplicity", f.multiplicity}});
        }
        out["certificate"] = json{{"kind", "cyclotomic"},
                                  {"factors", std::move(factors)},
                                  {"confirmed_by_power", r.confirmed_by_power}};
    } else {
        out["verdict"] = "infinite";
        if (r.kind == PeriodResult::Kind::InfiniteNonIntegerCoefficient) {
            out["certificate"] = json{{"kind", "non_integer_coeff"},
                                      {"degree", r.witness_degree},
                                      {"value", rational_json(r.witness_value)}};
        } else {
            out["certificate"] = json{{"kind", "non_cyclotomic_remainder"},
                                      {"remainder", polynomial_json(r.remainder)}};
        }
    }
    return out;
}

PeriodResult period_result_from_json(const json& j) {
    PeriodResult r;
    const json& cert = j.at("certificate");
    const std::string kind = cert.at("kind").get<std::string>();
    if (j.at("verdict") == "finite") {
        r.kind = PeriodResult::Kind::Finite;
        r.period = j.at("T").get<std::uint64_t>();
        r.confirmed_by_power = cert.at("confirmed_by_power").get<bool>();
        for (const auto& f : cert.at("factors")) {
            r.factors.factors.push_back(
                {f.at("order").get<unsigned>(), f.at("multiplicity").get<unsigned>()});
        }
        r.factors.remainder = Polynomial::one();
    } else if (kind == "non_integer_coeff") {
        r.kind = PeriodResult::Kind::InfiniteNonIntegerCoefficient;
        r.witness_degree = cert.at("degree").get<std::size_t>();
        r.witness_value = rational_from_json(cert.at("value"));
    } else {
        r.kind = PeriodResult::Kind::InfiniteNonCyclotomicRemainder;
        r.remainder = polynomial_from_json(cert.at("remainder"));
    }
    return r;
}

json kurokawa_form_json(const KurokawaForm& f) {
    return json{{"sign", f.sign},
                {"l", f.l},
                {"m_list", f.m_list},
                {"n_list", f.n_list},
                {"theorem_conformant", f.theorem_conformant()}};
}

KurokawaForm kurokawa_form_from_json(const json& j) {
    KurokawaForm f;
    f.sign = j.at("sign").get<int>();
    f.l = j.at("l").get<long>();
    f.m_list = j.at("m_list").get<std::vector<unsigned>>();
    f.n_list = j.at("n_list").get<std::vector<unsigned>>();
    return f;
}

json abs_zeta_descriptor_json(const AbsZetaDescriptor& d) {
    json terms = json::array();
    for (const auto& t : d.terms) {
        terms.push_back(json{{"subset_size", t.subset_size},
                             {"multiplicity", t.multiplicity},
                             {"shift_offset", rational_json(d.shift_offset(t.weight))},
                             {"sign", t.sign}});
    }
    auto factor_list = [&](const std::vector<FactorRecord>& fs) {
        json arr = json::array();
        for (const auto& f : fs) {
            arr.push_back(json{{"subset_size", f.subset_size},
                               {"multiplicity", f.multiplicity},
                               {"shift_offset", rational_json(d.shift_offset(f.weight))},
                               {"exponent", f.exponent}});
        }
        return arr;
    };
    return json{{"form", kurokawa_form_json(d.form)},
                {"terms", std::move(terms)},
                {"omega", d.omega},
                {"deg_f", rational_json(d.deg_f)},
                {"D", d.weight_D},
                {"C", d.sign_C},
                {"gamma_factors", factor_list(d.gamma_factors)},
                {"sine_factors", factor_list(d.sine_factors)},
                {"rendered", d.render_text()}};
}

json coeff_report_json(const CoeffFormulaReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json item{{"degree", e.degree}, {"ok", e.ok}, {"expected", e.expected}, {"actual", e.actual}};
        if (!e.note.empty()) item["note"] = e.note;
        entries.push_back(std::move(item));
    }
    json families;
    auto family_json = [](const std::map<long, Int>& fam) {
        json out = json::object();
        for (const auto& [j, v] : fam) out[std::to_string(j)] = v.get_str();
        return out;
    };
    return json{{"spec", walk_spec_json(r.spec)},
                {"k", r.k},
                {"entries", std::move(entries)},
                {"a_family", family_json(r.a_family)},
                {"b_family", family_json(r.b_family)},
                {"families_integer", r.families_integer},
                {"a_matches_floor_rule", r.a_matches_floor_rule},
                {"universal_matches_engine", r.universal_matches_engine},
                {"all_ok", r.all_ok()}};
}

}  // namespace cyclewalk::io
