#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "boundstate/coulomb.hpp"
#include "boundstate/laguerre.hpp"

namespace boundstate {

MomentumRadialWF::MomentumRadialWF(const QuantumState& st)
    : st_(st), gegen_(gegenbauer(st.nr(), Rat(st.l + 1)).poly) {
    // φ_n N_nℓ γ^{ℓ+1} with γ = 1/n
    Real pi = pi_value();
    Real n = st.n;
    Real phi = sqrt(1 / (pi * n * n * n));
    Real N = pow(Real(2), 2 * st.l + 3) * pi * to_real(factorial(st.l)) *
             sqrt(4 * pi * n * to_real(factorial(st.nr())) / to_real(factorial(st.n + st.l)));
    pref_ = phi * N / pow(n, st.l + 1);
    pref_d_ = pref_.convert_to<double>();
    for (const auto& c : gegen_.coeffs()) gegen_d_.push_back(c.to_double());
}

double MomentumRadialWF::eval(double p) const {
    double g = 1.0 / static_cast<double>(st_.n);
    double D = p * p + g * g;
    double x = (p * p - g * g) / D;
    double c = 0;
    for (size_t i = gegen_d_.size(); i-- > 0;) c = c * x + gegen_d_[i];
    return pref_d_ * std::pow(p, st_.l) / std::pow(D, st_.l + 2) * c;
}

Real MomentumRadialWF::operator()(const Real& p) const {
    Real g = Real(1) / st_.n;
    Real D = p * p + g * g;
    Real x = (p * p - g * g) / D;
    Real c = 0;
    const auto& cs = gegen_.coeffs();
    for (size_t i = cs.size(); i-- > 0;) c = c * x + to_real(cs[i]);
    return pref_ * pow(p, st_.l) / pow(D, st_.l + 2) * c;
}

Real MomentumRadialWF::norm_numeric() const {
    boost::math::quadrature::tanh_sinh<Real> ts;
    // p = t/(1−t) keeps the nodes finite
    auto f = [this](const Real& t) -> Real {
        Real u = 1 - t;
        Real p = t / u;
        Real r = (*this)(p);
        return p * p * r * r / (u * u);
    };
    Real pi = pi_value();
    return ts.integrate(f, Real(0), Real(1)) / (8 * pi * pi * pi);
}

}  // namespace boundstate
