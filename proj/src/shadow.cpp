#include "cyclewalk/shadow.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace cyclewalk {

std::vector<std::complex<double>> eigenvalue_shadow(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    Eigen::MatrixXd dense(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) dense(i, j) = m(i, j).get_d();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

double max_unit_circle_deviation(const std::vector<std::complex<double>>& eigs) {
    double worst = 0.0;
    for (const auto& l : eigs) worst = std::max(worst, std::abs(std::abs(l) - 1.0));
    return worst;
}

bool some_eigenvalue_avoids_unity(const std::vector<std::complex<double>>& eigs,
                                  unsigned max_power, double margin) {
    for (const auto& lambda : eigs) {
        bool avoids = true;
        std::complex<double> power(1.0, 0.0);
        for (unsigned n = 1; n <= max_power && avoids; ++n) {
            power *= lambda;
            if (std::abs(power - 1.0) <= margin) avoids = false;
        }
        if (avoids) return true;
    }
    return false;
}

}  // namespace cyclewalk
