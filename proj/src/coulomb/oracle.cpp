#include "boundstate/coulomb.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/lagint.hpp"

namespace boundstate {

using Fn = RadialOracle::Fn;

namespace {

void clean(Fn& f) {
    for (auto it = f.begin(); it != f.end();) it = it->second.is_zero() ? f.erase(it) : std::next(it);
}

}  // namespace

Fn operator+(Fn a, const Fn& b) {
    for (const auto& [k, c] : b) a[k] += c;
    clean(a);
    return a;
}

Fn operator-(Fn a, const Fn& b) {
    for (const auto& [k, c] : b) a[k] -= c;
    clean(a);
    return a;
}

Fn operator*(Fn a, const Rat& c) {
    for (auto& [k, v] : a) v *= c;
    clean(a);
    return a;
}

RadialOracle::RadialOracle(const QuantumState& st) : st_(st) {
    RadialWF wf = radial_wavefunction(st);
    norm2_ = wf.norm2;
    const auto& cs = wf.poly.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) R_[st.l + static_cast<long>(i)] = cs[i];
    clean(R_);
}

Fn RadialOracle::d(const Fn& f) const {
    // ∂_r = (2/n) ∂_ρ acting on g(ρ) e^{−ρ/2}
    Fn out;
    for (const auto& [k, c] : f) {
        if (k != 0) out[k - 1] += c * Rat(k);
        out[k] -= c / Rat(2);
    }
    clean(out);
    return out * Rat(2, st_.n);
}

Fn RadialOracle::rpow(long s, const Fn& f) const {
    Fn out;
    Rat scale = Rat(st_.n, 2).pow(static_cast<int>(s));
    for (const auto& [k, c] : f) out[k + s] = c * scale;
    return out;
}

Fn RadialOracle::V(const Fn& f) const { return rpow(-1, f) * Rat(-1); }

Fn RadialOracle::p2(const Fn& f) const {
    Fn df = d(f);
    return (d(df) + rpow(-1, df) * Rat(2) - rpow(-2, f) * st_.L()) * Rat(-1);
}

Fn RadialOracle::mul(const Fn& a, const Fn& b) {
    Fn out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) out[i + j] += x * y;
    clean(out);
    return out;
}

SymExpr RadialOracle::integrate(const Fn& integrand, int logpow) const {
    // ∫ r² dr = (n/2)³ ∫ ρ² dρ, ln(κr) = Λ_κ + ln ρ
    SymExpr lam = SymExpr::log_scale("kappa");
    SymExpr total;
    for (const auto& [k, c] : integrand) {
        long t = k + 2;
        if (t <= -1)
            throw DivergenceError("radial integrand has a ρ^" + std::to_string(k) +
                                  " term at the origin (3D integral diverges)");
        SymExpr g0 = gamma_derivative_int(t + 1, 0);
        SymExpr term;
        if (logpow == 0) {
            term = g0;
        } else if (logpow == 1) {
            term = lam * g0 + gamma_derivative_int(t + 1, 1);
        } else if (logpow == 2) {
            term = lam * lam * g0 + lam * gamma_derivative_int(t + 1, 1) * Rat(2) + gamma_derivative_int(t + 1, 2);
        } else {
            throw UnsupportedError("log power above 2");
        }
        total += term * c;
    }
    return total * (norm2_ * Rat(st_.n, 2).pow(3));
}

Rat RadialOracle::contact(const Fn& product) const {
    Rat v(0);
    for (const auto& [k, c] : product) {
        if (k < 0) throw DivergenceError("contact value diverges (ρ^" + std::to_string(k) + " at the origin)");
        if (k == 0) v = c;
    }
    return v * norm2_;
}

}  // namespace boundstate
