#pragma once

#include <cstdint>
#include <vector>

#include "cyclewalk/matrix.hpp"
#include "cyclewalk/polynomial.hpp"
#include "cyclewalk/rational.hpp"

namespace cyclewalk {

// Faddeev-LeVerrier characteristic polynomial over any commutative
// Q-algebra: only ring operations plus division by small integers, which
// keeps cyclotomic (and Laurent) intermediates in canonical form. Returns
// coefficients of det(xI - A) in ascending degree, length n+1, monic.
template <class T>
std::vector<T> faddeev_leverrier_charpoly(const DenseMatrix<T>& a, const T& one_element) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw std::domain_error("charpoly needs a nonempty square matrix");

    auto trace = [&](const DenseMatrix<T>& m) {
        T t = m(0, 0);
        for (std::size_t i = 1; i < n; ++i) t += m(i, i);
        return t;
    };

    std::vector<T> coeffs(n + 1, one_element.scaled(Rational(0)));
    coeffs[n] = one_element;

    DenseMatrix<T> mk = a;
    coeffs[n - 1] = trace(a).scaled(Rational(-1));
    for (std::size_t k = 2; k <= n; ++k) {
        // mk <- a * (mk + c_{n-k+1} I)
        DenseMatrix<T> shifted = mk;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
        mk = a * shifted;
        coeffs[n - k] = trace(mk).scaled(Rational(-1) / Rational(static_cast<long>(k)));
    }
    return coeffs;
}

// Exact determinant of an integer matrix: residues modulo 62-bit primes,
// recombined by CRT against the Hadamard bound.
Int integer_determinant(const DenseMatrix<Int>& a);

// Exact interpolation through (x_i, y_i) with distinct integer nodes;
// degree < number of points.
Polynomial lagrange_interpolate(const std::vector<Int>& xs, const std::vector<Rational>& ys);

// det(base + x * slope) as an exact polynomial in x, by evaluation at
// n+1 integer points and interpolation. Entries may be rational; a common
// denominator is factored out so the point evaluations run over Z.
Polynomial determinant_pencil(const DenseMatrix<Rational>& base, const DenseMatrix<Rational>& slope);

// det(xI - M), computed by the pencil route (independent of any
// factored/sector structure of M).
Polynomial charpoly_direct(const DenseMatrix<Rational>& m);

// Plain fraction-arithmetic Gaussian elimination determinant. Quadratic
// coefficient growth makes it slow beyond small sizes; it exists as an
// independent cross-check for the modular route.
Rational determinant_fraction_elimination(const DenseMatrix<Rational>& a);

}  // namespace cyclewalk
