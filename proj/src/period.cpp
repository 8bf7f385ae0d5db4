#include "cyclewalk/period.hpp"

#include <numeric>
#include <sstream>

namespace cyclewalk {

std::string PeriodResult::certificate_kind() const {
    switch (kind) {
        case Kind::Finite:
            return "cyclotomic";
        case Kind::InfiniteNonIntegerCoefficient:
            return "non_integer_coeff";
        case Kind::InfiniteNonCyclotomicRemainder:
            return "non_cyclotomic_remainder";
    }
    return "";
}

std::string PeriodResult::certificate_detail() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Finite:
            os << factors.factors_to_string();
            break;
        case Kind::InfiniteNonIntegerCoefficient:
            os << "deg=" << witness_degree << " val=" << to_string(witness_value);
            break;
        case Kind::InfiniteNonCyclotomicRemainder:
            os << "remainder=" << remainder.to_string();
            break;
    }
    return os.str();
}

PeriodResult decide_period(const WalkSpec& spec) {
    const CharPolyBundle bundle = full_charpoly(spec);

    PeriodResult result;
    if (auto deg = bundle.product.lowest_non_integer_degree()) {
        result.kind = PeriodResult::Kind::InfiniteNonIntegerCoefficient;
        result.witness_degree = *deg;
        result.witness_value = bundle.product.coeff(*deg);
        return result;
    }

    CycloFactorCertificate cert = strip_cyclotomic_factors(bundle.product);
    if (!cert.fully_cyclotomic()) {
        result.kind = PeriodResult::Kind::InfiniteNonCyclotomicRemainder;
        result.remainder = cert.remainder;
        return result;
    }

    result.kind = PeriodResult::Kind::Finite;
    result.period = cert.lcm_of_orders();
    result.factors = std::move(cert);

    const std::uint64_t dim = spec.dimension();
    if (result.period * dim * dim * dim <= kPowerCheckBudget) {
        auto confirmed = period_by_power(spec, static_cast<unsigned>(result.period));
        if (!confirmed || *confirmed != result.period) {
            throw InternalError("power confirmation disagrees with the factor certificate for " +
                                spec.to_string());
        }
        result.confirmed_by_power = true;
    }
    return result;
}

std::optional<unsigned> period_by_power(const WalkSpec& spec, unsigned max_period) {
    spec.validate();
    const unsigned n = spec.dimension();
    const RationalMatrix u = evolution_matrix(spec);

    // W = (L*U)^t has integer entries; U^t = I  iff  W = L^t * I.
    DenseMatrix<Int> scaled(n, n, Int(0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            Rational e = u(i, j) * spec.states;
            if (!is_integer(e)) throw InternalError("scaled evolution matrix is not integral");
            scaled(i, j) = Int(e.get_num());
        }
    }

    DenseMatrix<Int> power = scaled;
    Int denom(spec.states);
    for (unsigned t = 1; t <= max_period; ++t) {
        bool ident = true;
        for (unsigned i = 0; i < n && ident; ++i) {
            for (unsigned j = 0; j < n && ident; ++j) {
                const Int expect = (i == j) ? denom : Int(0);
                if (power(i, j) != expect) ident = false;
            }
        }
        if (ident) return t;
        if (t < max_period) {
            power = power * scaled;
            denom *= spec.states;
        }
    }
    return std::nullopt;
}

std::optional<Rational> coprime_certificate(const WalkSpec& spec) {
    spec.validate();
    const unsigned L = spec.states;
    const unsigned N = spec.vertices;
    if (std::gcd(L, N) != 1) return std::nullopt;

    const long m = static_cast<long>(spec.m());
    const Int q = floor_quotient(Int(m), Int(static_cast<long>(N)));
    Rational formula;
    if (spec.family == Family::M) {
        formula = make_rational(Int(2 * m - 1) * (2 * q + 1) * N, Int(L));
        if (N % 2 == 1) formula = -formula;
    } else {
        formula = make_rational(Int(static_cast<long>(N)) * (Int(L) - 2 * (2 * q + 1)), Int(L));
        if ((static_cast<unsigned long>(N) * (m + 1)) % 2 == 1) formula = -formula;
    }

    const CharPolyBundle bundle = full_charpoly(spec);
    const Rational engine = bundle.product.coeff(1);
    if (engine != formula) {
        throw InternalError("coprime certificate formula disagrees with the engine for " +
                            spec.to_string() + ": formula " + to_string(formula) + ", engine " +
                            to_string(engine));
    }
    if (is_integer(engine)) {
        throw InternalError("coprime certificate coefficient is unexpectedly integral for " +
                            spec.to_string());
    }
    return engine;
}

bool fourth_power_check(const WalkSpec& spec) {
    spec.validate();
    if (spec.family != Family::F || spec.states != spec.vertices) {
        throw std::domain_error("fourth power check applies to the F family with N = L");
    }
    bool some_sector_has_order_four = false;
    for (unsigned k = 0; k < spec.vertices; ++k) {
        const CycloMatrix b = sector_matrix(spec, k);
        const CycloMatrix b2 = b * b;
        if (!is_identity(b2 * b2)) return false;
        if (!is_identity(b2)) some_sector_has_order_four = true;
    }
    return some_sector_has_order_four;
}

}  // namespace cyclewalk
