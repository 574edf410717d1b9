#include "boundstate/coulomb.hpp"
#include "boundstate/errors.hpp"

namespace boundstate {

namespace {

// ⟨r^s⟩ from the catalog where tabulated, else exact integration
Rat moment(long s, const QuantumState& st) {
    if (s <= -2 * st.l - 3)
        throw DivergenceError("⟨r^" + std::to_string(s) + "⟩ diverges for ℓ = " + std::to_string(st.l));
    std::string tag = s == 0 ? "1" : s == 1 ? "r" : "r^" + std::to_string(s);
    for (const auto& e : coulomb_catalog())
        if (e.tag == tag && st.l >= e.min_l) return e.closed(st).as_rational();
    RadialOracle o(st);
    return o.integrate(o.rpow(s, RadialOracle::mul(o.R(), o.R()))).as_rational();
}

Rat closed(const char* tag, const QuantumState& st) { return expectation_closed(tag, st).coeff.as_rational(); }

}  // namespace

Rat recursion_residual(long s, const QuantumState& st) {
    Rat E(-1, 2 * st.n * st.n);
    Rat out = Rat(8) * E * Rat(s + 1) * moment(s, st) + Rat(4 * (2 * s + 1)) * moment(s - 1, st);
    // ⟨r^{s−2}⟩ must be finite even when its coefficient vanishes (s = −1, ℓ = 0 has a boundary term)
    return out + Rat(s) * (Rat(s * s - 1) - Rat(4) * st.L()) * moment(s - 2, st);
}

Rat rsdr_residual(long s, const QuantumState& st) {
    RadialOracle o(st);
    auto R = o.R();
    Rat lhs = o.integrate(o.rpow(s, RadialOracle::mul(R, o.d(R)))).as_rational();
    Rat c = Rat(s + 2, 2);
    return c.is_zero() ? lhs : lhs + c * moment(s - 1, st);
}

Rat feynman_hellmann_residual(const QuantumState& st) {
    return -closed("r^-1", st) + Rat(1, st.n * st.n);
}

Rat feynman_hellmann_mr_residual(const QuantumState& st) {
    // ∂H/∂m_r = −p²/(2m_r²), ∂E/∂m_r = −1/(2n²)
    return -closed("p2", st) / Rat(2) + Rat(1, 2 * st.n * st.n);
}

Rat feynman_hellmann_l_residual(const QuantumState& st) {
    // ∂H/∂ℓ = (2ℓ+1)/(2r²); ∂E/∂ℓ = 1/n³ at fixed n_r
    return Rat(2 * st.l + 1, 2) * closed("r^-2", st) - Rat(1) / Rat(st.n).pow(3);
}

}  // namespace boundstate
