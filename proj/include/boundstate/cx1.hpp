#pragma once

#include "boundstate/coulomb.hpp"
#include "boundstate/eps_series.hpp"

namespace boundstate {

// ΔE = −4 m_r (c1/m1⁴ + c2/m2⁴) ⟨(V̄′)²⟩, masses in units of m_r.
struct Cx1Shift {
    QuantumState state;
    Rat prefactor;           // −4 (c1/m1⁴ + c2/m2⁴)
    bool laurent = false;    // ℓ = 0
    EpsSeries series;        // ℓ = 0: units π φ̄² (Zα)³ μ̄^{2ε} / m_r², through ε⁰
    SymExpr exact;           // ℓ > 0: units m_r (Zα)⁶
};

Cx1Shift cx1_energy_shift(const QuantumState& st, const Rat& c1, const Rat& c2, const Rat& m1, const Rat& m2);

}  // namespace boundstate
