#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "boundstate/brackets.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

Value bracket_lnq(const QuantumState& st) {
    Rat n(st.n);
    const Units u{3, 3, -1};
    if (st.l == 0) {
        SymExpr c = -SymExpr::log_scale("kappa") + SymExpr(harmonic(st.n) + (n - Rat(1)) / (Rat(2) * n));
        return Value{c / n.pow(3), u};
    }
    Rat l(st.l);
    return Value{SymExpr(Rat(-1) / (Rat(4) * st.L() * (l + Rat(1, 2)) * n.pow(3))), u};
}

double bracket_lnq_numeric(const QuantumState& st) {
    // κ = m_r Zα = 1, so Λ_κ = ln(n/2)
    Value v = bracket_lnq(st);
    return evaluate(v.coeff, {{"kappa", Real(std::log(st.n / 2.0))}}).convert_to<double>() / M_PI;
}

namespace {

// (1/2)∫_{−1}^{1} ln|a − b| dx over the relative angle, |a−b|² = a² + b² − 2abx
double mean_log_distance(double a, double b) {
    if (a > b) std::swap(a, b);
    // scale out b so nothing underflows near the origin
    double t = a / b;
    if (t < 1e-5) return std::log(b) + t * t / 6;
    double s = 1 + t, d = 1 - t;
    double dd = d > 0 ? d * d * std::log(d) : 0.0;
    return std::log(b) + (s * s * std::log(s) - dd) / (4 * t) - 0.5;
}

}  // namespace

double bracket_lnq_oracle(long n) {
    if (n < 1 || n > 4) throw DomainError("bracket_lnq_oracle covers S states with 1 ≤ n ≤ 4");
    MomentumRadialWF wf(QuantumState(n, 0));
    auto R = [&wf](double p) { return wf.eval(p); };

    constexpr double tol = 1e-11;
    boost::math::quadrature::tanh_sinh<double> ts;
    double worst = 0;

    // symmetric in p₁ ↔ p₂: twice the p₁ < p₂ triangle; p₂ = t/(1−t)
    auto outer = [&](double t) {
        double u = 1 - t;
        double p2 = t / u;
        if (p2 == 0 || !std::isfinite(p2)) return 0.0;
        auto inner = [&](double p1) { return p1 * p1 * R(p1) * mean_log_distance(p1, p2); };
        double err = 0, l1 = 0;
        double in = ts.integrate(inner, 0.0, p2, tol, &err, &l1);
        double w = p2 * p2 * R(p2) / (u * u);
        worst = std::max(worst, std::abs(w) * err);
        return w * in;
    };
    double err = 0, l1 = 0;
    double I = 2 * ts.integrate(outer, 0.0, 1.0, tol, &err, &l1);
    // inner errors are absolute, weighted by the outer integrand
    worst = std::max(worst / std::abs(I), l1 > 0 ? err / l1 : 0.0);
    if (worst > 1e-10)
        throw ConvergenceError("⟨ln q⟩ momentum quadrature did not settle (relative error " + std::to_string(worst) +
                               ")");
    return I / (16 * std::pow(M_PI, 5));
}

}  // namespace boundstate
