#include "cyclewalk/spectral.hpp"

#include <mutex>
#include <sstream>

#include "cyclewalk/exact_det.hpp"

namespace cyclewalk {

CyclotomicPolynomial::CyclotomicPolynomial(unsigned order, std::vector<CyclotomicElement> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.order() != order_) throw std::domain_error("coefficient order mismatch");
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CyclotomicPolynomial CyclotomicPolynomial::one(unsigned order) {
    return CyclotomicPolynomial(order, {CyclotomicElement::one(order)});
}

CyclotomicElement CyclotomicPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : CyclotomicElement::zero(order_);
}

bool CyclotomicPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_rational() &&
           coeffs_.back().rational_value() == 1;
}

CyclotomicPolynomial CyclotomicPolynomial::operator*(const CyclotomicPolynomial& rhs) const {
    if (order_ != rhs.order_) throw std::domain_error("cyclotomic polynomial order mismatch");
    if (coeffs_.empty() || rhs.coeffs_.empty()) return CyclotomicPolynomial(order_, {});
    std::vector<CyclotomicElement> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                                       CyclotomicElement::zero(order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return CyclotomicPolynomial(order_, std::move(out));
}

bool CyclotomicPolynomial::all_coefficients_rational() const {
    for (const auto& c : coeffs_) {
        if (!c.is_rational()) return false;
    }
    return true;
}

Polynomial CyclotomicPolynomial::to_rational_polynomial() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!c.is_rational()) {
            throw InternalError("sector product has a non-rational coefficient: " + c.to_string());
        }
        out.push_back(c.rational_value());
    }
    return Polynomial(std::move(out));
}

CyclotomicPolynomial sector_charpoly(const WalkSpec& spec, unsigned k) {
    spec.validate();
    if (k >= spec.vertices) {
        throw std::domain_error("sector index out of range: k=" + std::to_string(k));
    }
    const CycloMatrix m = sector_matrix(spec, k);
    auto coeffs = faddeev_leverrier_charpoly(m, CyclotomicElement::one(spec.vertices));
    return CyclotomicPolynomial(spec.vertices, std::move(coeffs));
}

CharPolyBundle full_charpoly(const WalkSpec& spec) {
    spec.validate();
    CharPolyBundle bundle;
    bundle.spec = spec;
    bundle.sectors.reserve(spec.vertices);
    for (unsigned k = 0; k < spec.vertices; ++k) {
        bundle.sectors.push_back(sector_charpoly(spec, k));
    }
    CyclotomicPolynomial prod = CyclotomicPolynomial::one(spec.vertices);
    for (const auto& s : bundle.sectors) prod = prod * s;
    bundle.product = prod.to_rational_polynomial();

    if (spec.dimension() <= 60) {
        const Polynomial direct = charpoly_direct(evolution_matrix(spec));
        if (direct != bundle.product) {
            throw InternalError("sector product disagrees with the dense determinant for " +
                                spec.to_string());
        }
        bundle.direct_checked = true;
    }
    return bundle;
}

namespace {

std::mutex g_universal_mutex;

DenseMatrix<LaurentPoly> universal_sector_matrix(Family family, unsigned states) {
    const WalkSpec probe{family, states, 2};  // N is irrelevant for the coin
    const RationalMatrix a = coin_matrix(probe);
    const long m = static_cast<long>(probe.m());
    DenseMatrix<LaurentPoly> out(states, states, LaurentPoly::zero());
    for (unsigned i = 0; i < states; ++i) {
        for (unsigned j = 0; j < states; ++j) {
            if (a(i, j) != 0) out(i, j) = LaurentPoly::term(a(i, j), m - static_cast<long>(i));
        }
    }
    return out;
}

}  // namespace

const std::vector<LaurentPoly>& universal_sector_charpoly(Family family, unsigned states) {
    static std::map<std::pair<int, unsigned>, std::vector<LaurentPoly>> cache;
    const auto key = std::make_pair(family == Family::M ? 0 : 1, states);
    std::lock_guard<std::mutex> lock(g_universal_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto coeffs =
        faddeev_leverrier_charpoly(universal_sector_matrix(family, states), LaurentPoly::one());
    return cache.emplace(key, std::move(coeffs)).first->second;
}

CyclotomicElement specialize_at_root(const LaurentPoly& p, unsigned order, long k) {
    CyclotomicElement acc = CyclotomicElement::zero(order);
    if (p.is_zero()) return acc;
    for (long e = p.min_exponent(); e <= p.max_exponent(); ++e) {
        const Rational c = p.coeff(e);
        if (c == 0) continue;
        acc += CyclotomicElement::root_power(order, e * k).scaled(c);
    }
    return acc;
}

namespace {

// Sum of zeta_N^(j*k) over 0 < |j| <= m.
CyclotomicElement punctured_root_sum(unsigned order, long k, unsigned m) {
    CyclotomicElement acc = CyclotomicElement::zero(order);
    for (long j = 1; j <= static_cast<long>(m); ++j) {
        acc += CyclotomicElement::root_power(order, j * k);
        acc += CyclotomicElement::root_power(order, -j * k);
    }
    return acc;
}

Rational sign_power(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

CyclotomicElement expected_constant_term(const WalkSpec& spec, unsigned k) {
    (void)k;
    const unsigned N = spec.vertices;
    if (spec.family == Family::M) return CyclotomicElement::from_rational(N, Rational(-1));
    return CyclotomicElement::from_rational(N, sign_power(spec.m() + 1));
}

CyclotomicElement expected_linear_coefficient(const WalkSpec& spec, unsigned k) {
    const unsigned N = spec.vertices;
    const long m = static_cast<long>(spec.m());
    const long L = static_cast<long>(spec.states);
    if (spec.family == Family::M) {
        // -(2m-1)/L * sum_{|j|<=m} zeta^{jk}
        CyclotomicElement sum = punctured_root_sum(N, k, spec.m()) + CyclotomicElement::one(N);
        return sum.scaled(make_rational(-(2 * m - 1), L));
    }
    // (-1)^{m+1}/L * ((2m-1) - 2*sum_{0<|j|<=m} zeta^{jk}); the sign of the
    // root sum is the exact engine's, not the printed one.
    CyclotomicElement sum = punctured_root_sum(N, k, spec.m());
    CyclotomicElement val =
        CyclotomicElement::from_rational(N, Rational(2 * m - 1)) - sum.scaled(Rational(2));
    return val.scaled(sign_power(m + 1) / Rational(L));
}

namespace {

CyclotomicElement expected_f_quadratic(const WalkSpec& spec, unsigned k) {
    const unsigned N = spec.vertices;
    const long m = static_cast<long>(spec.m());
    CyclotomicElement sum = punctured_root_sum(N, k, spec.m());
    CyclotomicElement val = sum.scaled(Rational(2)) +
                            CyclotomicElement::from_rational(N, Rational(m * (2 * m - 3)));
    return val.scaled(sign_power(m) / Rational(static_cast<long>(spec.states)));
}

CyclotomicElement expected_f_cubic(const WalkSpec& spec, unsigned k) {
    const unsigned N = spec.vertices;
    const long m = static_cast<long>(spec.m());
    CyclotomicElement sum = punctured_root_sum(N, k, spec.m());
    CyclotomicElement val = sum.scaled(Rational(-2 * (m - 1))) +
                            CyclotomicElement::from_rational(N, Rational(m * (2 * m - 5)));
    return val.scaled(sign_power(m) / Rational(static_cast<long>(spec.states)));
}

CoeffCheckEntry compare_entry(unsigned degree, const CyclotomicElement& expected,
                              const CyclotomicElement& actual, const std::string& note) {
    return CoeffCheckEntry{degree, expected == actual, expected.to_string(), actual.to_string(),
                           note};
}

}  // namespace

bool CoeffFormulaReport::all_ok() const {
    if (!families_integer || !universal_matches_engine) return false;
    for (const auto& e : entries) {
        if (!e.ok) return false;
    }
    return true;
}

std::string CoeffFormulaReport::failure_summary() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        if (!e.ok) {
            os << spec.to_string() << " k=" << k << " degree " << e.degree << ": expected "
               << e.expected << ", got " << e.actual << "\n";
        }
    }
    if (!families_integer) os << spec.to_string() << " k=" << k << ": non-integer weight family\n";
    if (!universal_matches_engine) {
        os << spec.to_string() << " k=" << k << ": universal specialization mismatch\n";
    }
    return os.str();
}

CoeffFormulaReport check_coefficient_formulas(const WalkSpec& spec, unsigned k) {
    spec.validate();
    if (k >= spec.vertices) {
        throw std::domain_error("sector index out of range: k=" + std::to_string(k));
    }
    const unsigned L = spec.states;
    const long m = static_cast<long>(spec.m());
    const CyclotomicPolynomial engine = sector_charpoly(spec, k);

    CoeffFormulaReport report;
    report.spec = spec;
    report.k = k;

    report.entries.push_back(
        compare_entry(0, expected_constant_term(spec, k), engine.coeff(0), ""));
    if (L > 1) {
        const std::string note =
            spec.family == Family::F ? "root-sum sign fixed by the exact engine" : "";
        report.entries.push_back(
            compare_entry(1, expected_linear_coefficient(spec, k), engine.coeff(1), note));
    }
    if (spec.family == Family::F) {
        if (L > 2) {
            report.entries.push_back(compare_entry(
                2, expected_f_quadratic(spec, k), engine.coeff(2),
                "root-sum range 0<|j|<=m (the statement's strict bound is a misprint)"));
        }
        if (L > 3) {
            report.entries.push_back(
                compare_entry(3, expected_f_cubic(spec, k), engine.coeff(3), ""));
        }
    }

    // Universal polynomial: ground the per-sector computation and, for the
    // M family, extract the integer weight families of degrees 2 and 3.
    const auto& universal = universal_sector_charpoly(spec.family, L);
    for (std::size_t d = 0; d < universal.size(); ++d) {
        if (specialize_at_root(universal[d], spec.vertices, static_cast<long>(k)) !=
            engine.coeff(d)) {
            report.universal_matches_engine = false;
        }
    }

    if (spec.family == Family::M) {
        const auto solve_family = [&](const LaurentPoly& c, const Rational& factor, long max_abs,
                                      std::map<long, Int>& out) {
            if (c.is_zero()) return;
            for (long e = c.min_exponent(); e <= c.max_exponent(); ++e) {
                const Rational w = c.coeff(e) / factor;
                if (w == 0) continue;
                if (std::labs(e) > max_abs || !is_integer(w)) {
                    report.families_integer = false;
                    continue;
                }
                out[e] = Int(w.get_num());
            }
        };
        if (L > 2) {
            solve_family(universal[2], make_rational(-(2 * m - 3), L), 2 * m - 1, report.a_family);
            for (const auto& [j, aj] : report.a_family) {
                if (aj != m - std::labs(j) / 2) report.a_matches_floor_rule = false;
            }
            // weights absent from the support count as zero; the floor rule
            // must not predict a nonzero weight there
            for (long j = -(2 * m - 1); j <= 2 * m - 1; ++j) {
                if (!report.a_family.count(j) && m - std::labs(j) / 2 != 0) {
                    report.a_matches_floor_rule = false;
                }
            }
        }
        if (L > 3) {
            solve_family(universal[3], make_rational(-(2 * m - 5), L), 3 * m - 3, report.b_family);
        }
    }
    return report;
}

}  // namespace cyclewalk
