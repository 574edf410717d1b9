#include <boost/multiprecision/cpp_dec_float.hpp>

#include "boundstate/coulomb.hpp"
#include "boundstate/errors.hpp"

namespace boundstate {

QuantumState::QuantumState(long n_, long l_) : n(n_), l(l_) {
    if (n < 1 || l < 0 || l > n - 1)
        throw DomainError("invalid state (n,ℓ) = (" + std::to_string(n_) + "," + std::to_string(l_) +
                          "): need n ≥ 1 and 0 ≤ ℓ ≤ n−1");
}

std::string QuantumState::str() const { return "(" + std::to_string(n) + "," + std::to_string(l) + ")"; }

std::string Units::str() const {
    std::string s;
    auto part = [&](const char* sym, int p) {
        if (p == 0) return;
        if (!s.empty()) s += " ";
        s += sym;
        if (p != 1) s += "^" + std::to_string(p);
    };
    if (mr == za && mr != 0) {
        part("(m_r Zα)", mr);
    } else {
        part("m_r", mr);
        part("(Zα)", za);
    }
    part("π", pi);
    return s.empty() ? "1" : s;
}

ScaleValues PhysScale::logs(long n) const {
    ScaleValues v;
    Real base = Real(n) / (2 * mr * zalpha);
    if (mu) v["mu"] = log(*mu * base);
    if (kappa) v["kappa"] = log(*kappa * base);
    return v;
}

Real PhysScale::restore(const Value& v, long n) const {
    Real x = evaluate(v.coeff, logs(n));
    return x * pow(mr, v.units.mr) * pow(zalpha, v.units.za) * pow(pi_value(), v.units.pi);
}

}  // namespace boundstate
