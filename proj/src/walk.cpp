#include "cyclewalk/walk.hpp"

#include <sstream>

namespace cyclewalk {

Family family_from_string(const std::string& s) {
    if (s == "M" || s == "m") return Family::M;
    if (s == "F" || s == "f") return Family::F;
    throw std::domain_error("unknown walk family: " + s);
}

void WalkSpec::validate() const {
    if (states < 3 || states % 2 == 0) {
        throw std::domain_error("state count must be an odd integer >= 3, got " +
                                std::to_string(states));
    }
    if (vertices < 2) {
        throw std::domain_error("vertex count must be >= 2, got " + std::to_string(vertices));
    }
}

std::string WalkSpec::to_string() const {
    std::ostringstream os;
    os << "(" << family_letter(family) << ", L=" << states << ", N=" << vertices << ")";
    return os.str();
}

RationalMatrix coin_matrix(const WalkSpec& spec) {
    spec.validate();
    const unsigned L = spec.states;
    const Rational off = make_rational(2, L);
    const Rational hit = make_rational(-(2L * static_cast<long>(spec.m()) - 1), L);
    RationalMatrix a(L, L, off);
    for (unsigned i = 0; i < L; ++i) {
        if (spec.family == Family::M) {
            a(i, i) = hit;
        } else {
            a(i, L - 1 - i) = hit;
        }
    }
    return a;
}

CycloMatrix momentum_matrix(const WalkSpec& spec, unsigned k) {
    spec.validate();
    if (k >= spec.vertices) {
        throw std::domain_error("momentum index out of range: k=" + std::to_string(k));
    }
    const unsigned L = spec.states;
    const unsigned N = spec.vertices;
    CycloMatrix z(L, L, CyclotomicElement::zero(N));
    for (unsigned i = 0; i < L; ++i) {
        const long exponent = (static_cast<long>(spec.m()) - static_cast<long>(i)) *
                              static_cast<long>(k);
        z(i, i) = CyclotomicElement::root_power(N, exponent);
    }
    return z;
}

CycloMatrix sector_matrix(const WalkSpec& spec, unsigned k) {
    const RationalMatrix a = coin_matrix(spec);
    const unsigned L = spec.states;
    const unsigned N = spec.vertices;
    CycloMatrix out(L, L, CyclotomicElement::zero(N));
    for (unsigned i = 0; i < L; ++i) {
        const long exponent = (static_cast<long>(spec.m()) - static_cast<long>(i)) *
                              static_cast<long>(k);
        const CyclotomicElement zi = CyclotomicElement::root_power(N, exponent);
        for (unsigned j = 0; j < L; ++j) {
            out(i, j) = zi.scaled(a(i, j));
        }
    }
    return out;
}

RationalMatrix evolution_matrix(const WalkSpec& spec) {
    spec.validate();
    const unsigned L = spec.states;
    const unsigned N = spec.vertices;
    const RationalMatrix a = coin_matrix(spec);
    RationalMatrix u(spec.dimension(), spec.dimension(), Rational(0));
    for (unsigned v = 0; v < N; ++v) {
        for (unsigned c = 0; c < L; ++c) {
            const long d = chirality_displacement(spec, c);
            const unsigned target =
                static_cast<unsigned>(((static_cast<long>(v) + d) % static_cast<long>(N) + N) % N);
            for (unsigned j = 0; j < L; ++j) {
                u(target * L + c, v * L + j) = a(c, j);
            }
        }
    }
    return u;
}

RationalMatrix rational_identity(std::size_t n) {
    RationalMatrix id(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
}

bool is_identity(const RationalMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

bool is_orthogonal(const RationalMatrix& a) {
    return a.rows() == a.cols() && is_identity(a.transposed() * a);
}

CycloMatrix cyclo_identity(std::size_t n, unsigned order) {
    CycloMatrix id(n, n, CyclotomicElement::zero(order));
    for (std::size_t i = 0; i < n; ++i) id(i, i) = CyclotomicElement::one(order);
    return id;
}

bool is_identity(const CycloMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const CyclotomicElement& e = a(i, j);
            if (i == j) {
                if (!e.is_rational() || e.rational_value() != 1) return false;
            } else if (!e.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cyclewalk
