#pragma once

#include <complex>
#include <vector>

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

// Floating eigenvalues of an exact rational matrix (dense solver).
std::vector<std::complex<double>> eigenvalue_shadow(const RationalMatrix& m);

// Largest | |lambda| - 1 | over the spectrum.
double max_unit_circle_deviation(const std::vector<std::complex<double>>& eigs);

// True when some eigenvalue stays bounded away from every root of unity:
// |lambda^n - 1| > margin for all n <= max_power. Heuristic corroboration
// of an infinite-period verdict, not a proof.
bool some_eigenvalue_avoids_unity(const std::vector<std::complex<double>>& eigs,
                                  unsigned max_power, double margin);

}  // namespace cyclewalk
