#include <cmath>

#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"
#include "radial_ode.hpp"

namespace boundstate {

namespace {

constexpr double kRhoSplit = 1.0;
constexpr int kHeadTerms = 40;

// ∫_0^x ρ^c e^{−ρ} dρ continued analytically in c (c ≠ −1, −2, …)
double lower_moment(double c, double x) {
    double sum = 0, term = 1;  // (−1)^m / m!
    for (int m = 0; m < 80; ++m) {
        double e = c + m + 1;
        if (std::abs(e) < 1e-14) throw DivergenceError("moment not regulated: ρ^" + std::to_string(c + m));
        sum += term * std::pow(x, e) / e;
        term *= -1.0 / (m + 1);
        if (std::abs(term) < 1e-20) break;
    }
    return sum;
}

}  // namespace

NumericWF::NumericWF(const QuantumState& st, double eps, double mu)
    : st_(st), eps_(eps), eig_(eigenvalue_shoot(st, eps, mu)) {
    head_ = detail::l_series(st.l, eps, eig_.nbar, kHeadTerms);
}

double NumericWF::moment(double a, double b) const {
    const double c = 2.0 * st_.l + a + b * eps_;
    double near = 0;
    for (const auto& [p, x] : head_)
        for (const auto& [q, y] : head_) near += x * y * lower_moment(c + p + q, kRhoSplit);
    auto run = detail::integrate_L(st_.l, eps_, eig_.nbar, head_, kRhoSplit, detail::rho_max(st_.n), {c});
    return near + run.integrals[0];
}

double NumericWF::expectation_rpow(double t, double u) const {
    // r^{D−1} = r^{2−2ε}; ρ = 2γ̄r
    double s = t + u * eps_;
    return std::pow(2 * eig_.gammabar, -s) * moment(2 + t, u - 2) / moment(2, -2);
}

double NumericWF::contact() const {
    if (st_.l != 0) throw DomainError("NumericWF::contact: S states only");
    const double D = 3 - 2 * eps_;
    double omega = 2 * std::pow(M_PI, D / 2) / std::tgamma(D / 2);
    double norm = omega * std::pow(2 * eig_.gammabar, -D) * moment(2, -2);
    return 1 / std::sqrt(norm);
}

double NumericWF::beta() const {
    double g = eig_.gammabar;
    return eig_.nbar * g * std::pow(2 * g, 2 * eps_);
}

double v3_numeric(const QuantumState& st, double eps, double mu) {
    NumericWF wf(st, eps, mu);
    return -std::pow(wf.beta(), 3) * wf.expectation_rpow(-3, 6);
}

double vprime2_numeric(const QuantumState& st, double eps, double mu) {
    NumericWF wf(st, eps, mu);
    double b = (1 - 2 * eps) * wf.beta();
    return b * b * wf.expectation_rpow(-4, 4);
}

PoleFit fit_pole(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() != 3) throw DomainError("fit_pole needs exactly three points");
    // rows (1/ε, 1, ε) · (c₋₁, c₀, c₁) = value
    double A[3][4];
    for (int i = 0; i < 3; ++i) {
        double e = pts[static_cast<size_t>(i)].first;
        if (e == 0) throw DomainError("fit_pole: ε = 0");
        A[i][0] = 1 / e;
        A[i][1] = 1;
        A[i][2] = e;
        A[i][3] = pts[static_cast<size_t>(i)].second;
    }
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        if (A[c][c] == 0) throw DomainError("fit_pole: repeated ε values");
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            double f = A[r][c] / A[c][c];
            for (int k = c; k < 4; ++k) A[r][k] -= f * A[c][k];
        }
    }
    return PoleFit{A[0][3] / A[0][0], A[1][3] / A[1][1], A[2][3] / A[2][2]};
}

}  // namespace boundstate
