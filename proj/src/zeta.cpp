#include "cyclewalk/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "cyclewalk/cyclotomic.hpp"
#include "cyclewalk/exact_det.hpp"
#include "cyclewalk/spectral.hpp"

namespace cyclewalk {

WalkZeta walk_zeta(const WalkSpec& spec) {
    const CharPolyBundle bundle = full_charpoly(spec);
    WalkZeta z;
    z.spec = spec;
    z.denominator = bundle.product.reversed();

    if (spec.dimension() <= 60) {
        // Independent evaluation-interpolation of det(I - uU).
        const std::size_t n = spec.dimension();
        const RationalMatrix u = evolution_matrix(spec);
        RationalMatrix neg_u(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) neg_u(i, j) = -u(i, j);
        }
        if (determinant_pencil(rational_identity(n), neg_u) != z.denominator) {
            throw InternalError("zeta reversal disagrees with the dense determinant for " +
                                spec.to_string());
        }
        z.direct_checked = true;
    }
    if (z.denominator.coeff(0) != 1) {
        throw InternalError("zeta denominator does not evaluate to 1 at the origin");
    }
    return z;
}

Rational KurokawaForm::deg() const {
    long acc = 0;
    for (unsigned m : m_list) acc += m;
    for (unsigned n : n_list) acc -= n;
    return Rational(l) / 2 + Rational(acc);
}

long KurokawaForm::weight() const {
    long acc = l;
    for (unsigned m : m_list) acc += m;
    for (unsigned n : n_list) acc -= n;
    return acc;
}

int KurokawaForm::reflection_sign() const {
    return (static_cast<long>(a()) - static_cast<long>(b())) % 2 == 0 ? 1 : -1;
}

std::pair<Polynomial, Polynomial> KurokawaForm::expand() const {
    Polynomial num = Polynomial::constant(Rational(sign));
    Polynomial den = Polynomial::one();
    for (unsigned m : m_list) num *= Polynomial::power_minus_one(m);
    for (unsigned n : n_list) den *= Polynomial::power_minus_one(n);
    if (l > 0) {
        num = num.shifted_up(static_cast<unsigned>(l / 2));
    } else if (l < 0) {
        den = den.shifted_up(static_cast<unsigned>(-l / 2));
    }
    return {num, den};
}

std::string KurokawaForm::to_string(const std::string& var) const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    if (l != 0) os << var << "^" << cyclewalk::to_string(Rational(l) / Rational(2)) << " * ";
    auto product = [&](const std::vector<unsigned>& list) {
        if (list.empty()) {
            os << "1";
            return;
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) os << "*";
            os << "(" << var;
            if (list[i] != 1) os << "^" << list[i];
            os << "-1)";
        }
    };
    product(m_list);
    os << " / ";
    product(n_list);
    return os.str();
}

std::optional<KurokawaForm> recognize_kurokawa(const Polynomial& num, const Polynomial& den) {
    if (num.is_zero() || den.is_zero()) return std::nullopt;
    if (!num.is_integer_poly() || !den.is_integer_poly()) return std::nullopt;

    const unsigned val_num = *num.monomial_valuation();
    const unsigned val_den = *den.monomial_valuation();
    Polynomial core_num = num.divide_exact(Polynomial::monomial(val_num, Rational(1)));
    Polynomial core_den = den.divide_exact(Polynomial::monomial(val_den, Rational(1)));

    const Rational lead_num = core_num.leading();
    const Rational lead_den = core_den.leading();

    auto cyclotomic_exponents = [](Polynomial p) -> std::optional<std::map<unsigned, long>> {
        p = p.scaled(Rational(1) / p.leading());
        CycloFactorCertificate cert = strip_cyclotomic_factors(p);
        if (!cert.fully_cyclotomic()) return std::nullopt;
        std::map<unsigned, long> out;
        for (const auto& f : cert.factors) out[f.order] = f.multiplicity;
        return out;
    };
    auto exp_num = cyclotomic_exponents(core_num);
    auto exp_den = cyclotomic_exponents(core_den);
    if (!exp_num || !exp_den) return std::nullopt;

    // Net cyclotomic exponent vector of num/den.
    std::map<unsigned, long> net = *exp_num;
    for (const auto& [d, e] : *exp_den) net[d] -= e;

    KurokawaForm form;
    form.l = 2 * (static_cast<long>(val_num) - static_cast<long>(val_den));

    // Peel (x^d - 1) blocks from the top. Each block accounts for one unit
    // of exponent at every divisor of d, so working downward from the
    // largest unmatched order resolves the multiset uniquely.
    while (true) {
        unsigned top = 0;
        long count = 0;
        for (auto it = net.rbegin(); it != net.rend(); ++it) {
            if (it->second != 0) {
                top = it->first;
                count = it->second;
                break;
            }
        }
        if (top == 0) break;
        auto& target = count > 0 ? form.m_list : form.n_list;
        const long copies = std::labs(count);
        const long step = count > 0 ? -1 : 1;
        for (long c = 0; c < copies; ++c) target.push_back(top);
        for (unsigned d : divisors(top)) net[d] += step * copies;
    }

    // The cyclotomic parts now match exactly; the scalar ratio must be a
    // unit for the form to reproduce num/den.
    if (lead_num == lead_den) {
        form.sign = 1;
    } else if (lead_num == -lead_den) {
        form.sign = -1;
    } else {
        return std::nullopt;
    }
    std::sort(form.m_list.begin(), form.m_list.end());
    std::sort(form.n_list.begin(), form.n_list.end());
    return form;
}

AbsZetaDescriptor absolute_zeta_descriptor(const KurokawaForm& form) {
    if (form.b() < 1) {
        throw std::domain_error("absolute zeta descriptor needs a nonempty denominator product");
    }
    if (form.a() > 20) {
        throw std::domain_error("subset enumeration guard: more than 20 numerator factors");
    }

    AbsZetaDescriptor desc;
    desc.form = form;
    desc.omega = form.n_list;
    desc.deg_f = form.deg();
    desc.weight_D = form.weight();
    desc.sign_C = form.reflection_sign();

    // Count subsets I of the numerator indices grouped by (|I|, m(I)).
    std::map<std::pair<unsigned, long>, std::uint64_t> groups;
    groups[{0, 0}] = 1;
    for (unsigned m : form.m_list) {
        std::map<std::pair<unsigned, long>, std::uint64_t> next = groups;
        for (const auto& [key, count] : groups) {
            next[{key.first + 1, key.second + static_cast<long>(m)}] += count;
        }
        groups = std::move(next);
    }
    for (const auto& [key, count] : groups) {
        const int term_sign = (key.first % 2 == 0 ? 1 : -1) * form.sign;
        desc.terms.push_back(AbsZetaTerm{key.first, count, key.second, term_sign});
        desc.gamma_factors.push_back(FactorRecord{key.first, count, key.second, term_sign});
    }

    // Functional-equation factor: S_b over the same subsets with the same
    // exponents; enumerated in a second pass so the bookkeeping identity
    // with the Gamma list stays a real check.
    std::map<std::pair<unsigned, long>, std::uint64_t> sine_groups;
    sine_groups[{0, 0}] = 1;
    for (unsigned m : form.m_list) {
        std::map<std::pair<unsigned, long>, std::uint64_t> next = sine_groups;
        for (const auto& [key, count] : sine_groups) {
            next[{key.first + 1, key.second + static_cast<long>(m)}] += count;
        }
        sine_groups = std::move(next);
    }
    for (const auto& [key, count] : sine_groups) {
        const int term_sign = (key.first % 2 == 0 ? 1 : -1) * form.sign;
        desc.sine_factors.push_back(FactorRecord{key.first, count, key.second, term_sign});
    }
    return desc;
}

namespace {

std::string offset_argument(const Rational& offset) {
    std::ostringstream os;
    os << "s";
    if (offset > 0) {
        os << "+" << offset.get_str();
    } else if (offset < 0) {
        os << "-" << Rational(-offset).get_str();
    }
    return os.str();
}

std::string omega_tuple(const std::vector<unsigned>& omega) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i) os << ",";
        os << omega[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string AbsZetaDescriptor::render_text() const {
    const std::string om = omega_tuple(omega);
    const std::string b = std::to_string(omega.size());
    std::ostringstream os;

    os << "Z_f(w,s) =";
    bool first = true;
    for (const auto& t : terms) {
        os << (t.sign < 0 ? " - " : (first ? " " : " + "));
        if (t.multiplicity != 1) os << t.multiplicity << "*";
        os << "zeta_" << b << "(w, " << offset_argument(shift_offset(t.weight)) << ", " << om
           << ")";
        first = false;
    }
    os << "\nzeta_f(s) =";
    for (std::size_t i = 0; i < gamma_factors.size(); ++i) {
        const auto& g = gamma_factors[i];
        if (i) os << " *";
        os << " Gamma_" << b << "(" << offset_argument(shift_offset(g.weight)) << ", " << om
           << ")^{" << (g.exponent > 0 ? "+" : "") << g.exponent;
        if (g.multiplicity != 1) os << " x" << g.multiplicity;
        os << "}";
    }
    os << "\nzeta_f(" << weight_D << "-s)^{" << (sign_C > 0 ? "+1" : "-1")
       << "} = eps_f(s) * zeta_f(s)";
    os << "\neps_f(s) =";
    for (std::size_t i = 0; i < sine_factors.size(); ++i) {
        const auto& g = sine_factors[i];
        if (i) os << " *";
        os << " S_" << b << "(" << offset_argument(shift_offset(g.weight)) << ", " << om << ")^{"
           << (g.exponent > 0 ? "+" : "") << g.exponent;
        if (g.multiplicity != 1) os << " x" << g.multiplicity;
        os << "}";
    }
    return os.str();
}

double eval_multiple_hurwitz(double w, double x, const std::vector<unsigned>& omega, double tol) {
    const std::size_t r = omega.size();
    if (r == 0) throw std::domain_error("multiple Hurwitz zeta needs a nonempty weight tuple");
    for (unsigned o : omega) {
        if (o < 1) throw std::domain_error("multiple Hurwitz zeta weights must be >= 1");
    }
    if (!(w > static_cast<double>(r))) {
        throw std::domain_error("multiple Hurwitz zeta requires w > r for absolute convergence");
    }
    if (!(x > 0.0)) throw std::domain_error("multiple Hurwitz zeta requires x > 0");
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");

    double inv_weight_product = 1.0;
    unsigned omega_max = 1;
    for (unsigned o : omega) {
        inv_weight_product /= o;
        omega_max = std::max(omega_max, o);
    }
    // tail(R) <= w * prod(1/omega) * (1 + omega_max/R)^r * R^{r-w} / (w-r)
    auto tail_bound = [&](double R) {
        return w * inv_weight_product * std::pow(1.0 + omega_max / R, static_cast<double>(r)) *
               std::pow(R, static_cast<double>(r) - w) / (w - static_cast<double>(r));
    };
    std::size_t levels = 64;
    while (tail_bound(x + static_cast<double>(levels)) >= tol) {
        levels *= 2;
        if (levels > (std::size_t(1) << 23)) {
            throw std::runtime_error("multiple Hurwitz zeta tolerance unreachable");
        }
    }

    // counts[g] = #{n >= 0 : n.omega = g}, the coefficient of t^g in
    // prod_i 1/(1 - t^{omega_i}).
    std::vector<double> counts(levels + 1, 0.0);
    counts[0] = 1.0;
    for (unsigned o : omega) {
        for (std::size_t g = o; g <= levels; ++g) counts[g] += counts[g - o];
    }
    double acc = 0.0;
    for (std::size_t g = levels + 1; g-- > 0;) {
        if (counts[g] != 0.0) acc += counts[g] * std::pow(x + static_cast<double>(g), -w);
    }
    return acc;
}

double eval_subset_series(const AbsZetaDescriptor& desc, double w, double s, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
    double total_multiplicity = 0.0;
    for (const auto& t : desc.terms) total_multiplicity += static_cast<double>(t.multiplicity);
    const double tol_each = tol / total_multiplicity;

    double acc = 0.0;
    for (const auto& t : desc.terms) {
        const double shift = s + desc.shift_offset(t.weight).get_d();
        const double value = eval_multiple_hurwitz(w, shift, desc.omega, tol_each);
        acc += t.sign * static_cast<double>(t.multiplicity) * value;
    }
    return acc;
}

namespace {

// Power series with double coefficients, for the t->0 substitution.
using Series = std::vector<double>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
    Series out(len, 0.0);
    for (std::size_t i = 0; i < std::min(a.size(), len); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j + i < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_div(const Series& a, const Series& b, std::size_t len) {
    Series out(len, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
        double v = i < a.size() ? a[i] : 0.0;
        for (std::size_t j = 1; j <= i && j < b.size(); ++j) v -= b[j] * out[i - j];
        out[i] = v / b[0];
    }
    return out;
}

// (e^{ct} - 1)/t = sum_k c^{k+1} t^k / (k+1)!
Series series_expm1_over_t(double c, std::size_t len) {
    Series out(len, 0.0);
    double term = c;
    for (std::size_t k = 0; k < len; ++k) {
        out[k] = term;
        term *= c / static_cast<double>(k + 2);
    }
    return out;
}

Series series_exp(double c, std::size_t len) {
    Series out(len, 0.0);
    double term = 1.0;
    for (std::size_t k = 0; k < len; ++k) {
        out[k] = term;
        term *= c / static_cast<double>(k + 1);
    }
    return out;
}

double form_at_exp(const KurokawaForm& form, double t) {
    if (t < 1.0) {
        double value = form.sign;
        value *= std::exp(0.5 * static_cast<double>(form.l) * t);
        for (unsigned m : form.m_list) value *= std::expm1(m * t);
        for (unsigned n : form.n_list) value /= std::expm1(n * t);
        return value;
    }
    // log space; every expm1 factor is positive for t > 0, so the sign is
    // carried separately and large t cannot overflow intermediate products
    double log_abs = 0.5 * static_cast<double>(form.l) * t;
    for (unsigned m : form.m_list) log_abs += m * t + std::log1p(-std::exp(-double(m) * t));
    for (unsigned n : form.n_list) log_abs -= n * t + std::log1p(-std::exp(-double(n) * t));
    return form.sign * std::exp(log_abs);
}

struct SimpsonWorker {
    const KurokawaForm& form;
    double w, s;

    double integrand(double t) const {
        return form_at_exp(form, t) * std::exp(-s * t) * std::pow(t, w - 1.0);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole, double eps,
                   int depth) const {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = integrand(lm), frm = integrand(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if (depth > 40 || std::abs(left + right - whole) <= 15.0 * eps) {
            return left + right + (left + right - whole) / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, eps / 2.0, depth + 1) +
               recurse(m, b, fm, frm, fb, right, eps / 2.0, depth + 1);
    }

    double integrate(double a, double b, double eps) const {
        const double fa = integrand(a), fb = integrand(b), fm = integrand(0.5 * (a + b));
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return recurse(a, b, fa, fm, fb, whole, eps, 0);
    }
};

}  // namespace

double eval_Zf_mellin(const KurokawaForm& form, double w, double s, double tol) {
    const double a = form.a(), b = form.b();
    if (!(w > b - a)) {
        throw std::domain_error("Mellin evaluation requires w > b - a for t->0 integrability");
    }
    const double deg = form.deg().get_d();
    if (!(s > deg)) {
        throw std::domain_error("Mellin evaluation requires s > deg(f) for t->inf decay");
    }
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");

    const double gamma_w = std::tgamma(w);
    const double budget = tol * gamma_w / 4.0;  // per piece: series, simpson, tail
    const double t0 = 0.25;

    // [0, t0]: f(e^t) e^{-st} t^{w-1} = t^{w-1+a-b} q(t) with q analytic.
    const std::size_t len = 120;
    Series q = series_exp(0.5 * static_cast<double>(form.l) - s, len);
    for (unsigned m : form.m_list) q = series_mul(q, series_expm1_over_t(m, len), len);
    for (unsigned n : form.n_list) q = series_div(q, series_expm1_over_t(n, len), len);
    for (auto& c : q) c *= form.sign;

    double series_part = 0.0;
    const double base_exponent = w + a - b;
    double tail_estimate = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        const double e = base_exponent + static_cast<double>(k);
        const double term = q[k] * std::pow(t0, e) / e;
        series_part += term;
        tail_estimate = std::abs(term);
    }
    // coefficients decay geometrically inside the disk of analyticity
    // (radius 2*pi/max(n)); t0 = 1/4 leaves a wide margin, so the final
    // term dominates the truncation error
    if (tail_estimate * 2.0 > budget) {
        throw std::runtime_error("series tail at t0 exceeds the error budget");
    }

    // [t0, T]: adaptive Simpson, T from the exponential tail bound.
    const double decay = s - deg;
    double T = std::max(1.0, 2.0 * std::max(w - 1.0, 1.0) / decay);
    auto tail_bound = [&](double T_cand) {
        double head = 1.0;
        for (unsigned n : form.n_list) head /= -std::expm1(-static_cast<double>(n) * T_cand);
        const double denom = 1.0 - std::max(w - 1.0, 0.0) / (decay * T_cand);
        if (denom <= 0.0) return std::numeric_limits<double>::infinity();
        return head * std::pow(T_cand, w - 1.0) * std::exp(-decay * T_cand) / (decay * denom);
    };
    while (tail_bound(T) >= budget) {
        T += 1.0;
        if (T > 5000.0) throw std::runtime_error("Mellin tail bound did not close");
    }

    SimpsonWorker worker{form, w, s};
    const double simpson_part = worker.integrate(t0, T, budget);

    return (series_part + simpson_part) / gamma_w;
}

}  // namespace cyclewalk
