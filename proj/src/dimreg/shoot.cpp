#include <boost/math/special_functions/gamma.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"
#include "radial_ode.hpp"

namespace boundstate {

namespace detail {

std::vector<std::pair<double, double>> l_series(long l, double eps, double nbar, int jmax) {
    auto tab = series_coefficients(l, Real(eps), jmax);
    std::vector<std::pair<double, double>> out;
    for (int j = 0; j < jmax; ++j) {
        double nk = 1;
        for (int k = 0; k <= j; ++k, nk *= nbar)
            out.emplace_back(j + 2.0 * eps * k, tab.at(j, k).convert_to<double>() * nk);
    }
    return out;
}

namespace {

std::pair<double, double> eval_series(const std::vector<std::pair<double, double>>& s, double rho) {
    double L = 0, dL = 0;
    for (const auto& [p, c] : s) {
        L += c * std::pow(rho, p);
        if (p != 0) dL += c * p * std::pow(rho, p - 1);
    }
    return {L, dL};
}

}  // namespace

OdeRun integrate_L(long l, double eps, double nbar, const std::vector<std::pair<double, double>>& start,
                   double rho_a, double rho_b, const std::vector<double>& powers) {
    namespace odeint = boost::numeric::odeint;
    using State = std::vector<double>;
    const double a1 = static_cast<double>(l) + 1.0 - eps;
    auto rhs = [&](const State& y, State& dy, double rho) {
        dy[0] = y[1];
        dy[1] = -(2 * a1 / rho - 1) * y[1] + (a1 / rho) * y[0] - nbar * std::pow(rho, 2 * eps - 1) * y[0];
        double w = std::exp(-rho) * y[0] * y[0];
        for (size_t i = 0; i < powers.size(); ++i) dy[2 + i] = std::pow(rho, powers[i]) * w;
    };
    State y(2 + powers.size(), 0.0);
    std::tie(y[0], y[1]) = eval_series(start, rho_a);

    OdeRun run;
    double last = y[0];
    auto observe = [&](const State& s, double) {
        if ((s[0] < 0) != (last < 0) && s[0] != 0) ++run.nodes;
        if (s[0] != 0) last = s[0];
    };
    auto stepper = odeint::make_controlled(kOdeTol, kOdeTol, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_adaptive(stepper, rhs, y, rho_a, rho_b, 1e-4, observe);
    run.L = y[0];
    run.dL = y[1];
    run.integrals.assign(y.begin() + 2, y.end());
    return run;
}

}  // namespace detail

double gammabar_from_nbar(double nbar, double eps, double mu) {
    // γ̄^{1+2ε} = Γ(½−ε) π^{ε−½} (μ̄/2)^{2ε} / n̄,  μ̄ = μ e^{γ_E/2}/√(4π)
    const double pi = M_PI;
    double mubar = mu * std::exp(0.5 * 0.57721566490153286061) / std::sqrt(4 * pi);
    double lg = std::lgamma(0.5 - eps) + (eps - 0.5) * std::log(pi) + 2 * eps * std::log(mubar / 2) - std::log(nbar);
    return std::exp(lg / (1 + 2 * eps));
}

DimRegEigen eigenvalue_shoot(const QuantumState& st, double eps, double mu) {
    if (!(std::abs(eps) <= 0.05))
        throw DomainError("eigenvalue_shoot: |ε| must be ≤ 0.05 (got " + std::to_string(eps) + ")");
    const double rmax = detail::rho_max(st.n);
    auto end_value = [&](double nbar) {
        auto start = detail::l_series(st.l, eps, nbar, detail::kStartTerms);
        return detail::integrate_L(st.l, eps, nbar, start, detail::kRho0, rmax);
    };
    // n̄ drifts by up to ~0.5 over the range for n = 3, so center on the O(ε) estimate
    double n = static_cast<double>(st.n);
    double guess = n + eps * (2 * n * 0.57721566490153286061 - 2 * n * harmonic(st.n + st.l).to_double() - 1);
    double lo = guess - 0.5, hi = guess + 0.5;
    double flo = end_value(lo).L, fhi = end_value(hi).L;
    if ((flo < 0) == (fhi < 0))
        throw ConvergenceError("eigenvalue_shoot: no sign change of L(ρ_max) within ½ of the O(ε) estimate for " +
                               st.str());
    for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = end_value(mid).L;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    int nodes = end_value(lo).nodes;
    if (nodes != st.nr())
        throw ConvergenceError("eigenvalue_shoot: wrong branch for " + st.str() + " (" + std::to_string(nodes) +
                               " nodes, expected " + std::to_string(st.nr()) + ")");
    DimRegEigen e{st, eps, 0.5 * (lo + hi), 0, 0, nodes};
    e.gammabar = gammabar_from_nbar(e.nbar, eps, mu);
    e.Ebar = -0.5 * e.gammabar * e.gammabar;
    return e;
}

}  // namespace boundstate
