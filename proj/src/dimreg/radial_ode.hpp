#pragma once

#include <utility>
#include <vector>

#include "boundstate/coulomb.hpp"

namespace boundstate::detail {

constexpr double kRho0 = 1e-3;
constexpr int kStartTerms = 12;
constexpr double kOdeTol = 1e-12;

inline double rho_max(long n) { return 20.0 + 10.0 * static_cast<double>(n); }

// (power, coefficient) pairs of L(ρ) = Σ a_{jk} n̄^k ρ^{j+2εk}, j < jmax
std::vector<std::pair<double, double>> l_series(long l, double eps, double nbar, int jmax);

struct OdeRun {
    double L = 0, dL = 0;
    int nodes = 0;
    std::vector<double> integrals;  // ∫ ρ^{c_i} e^{−ρ} L² over [ρ_a, ρ_b]
};

// Integrates the radial equation for L from ρ_a (initial data from `start`) to ρ_b.
OdeRun integrate_L(long l, double eps, double nbar, const std::vector<std::pair<double, double>>& start,
                   double rho_a, double rho_b, const std::vector<double>& powers = {});

}  // namespace boundstate::detail
