#include "boundstate/coulomb.hpp"
#include "boundstate/laguerre.hpp"
#include "boundstate/lagint.hpp"

namespace boundstate {

RadialWF radial_wavefunction(const QuantumState& st) {
    // {4 (n−ℓ−1)! / (n⁴ (n+ℓ)!)} with a = 1
    Rat norm2 = Rat(4) * factorial(st.nr()) / (Rat(st.n).pow(4) * factorial(st.n + st.l));
    return RadialWF{st, norm2, assoc_laguerre(st.nr(), 2 * st.l + 1)};
}

Rat radial_norm(const RadialWF& wf) {
    const auto& st = wf.state;
    long k = 2 * st.l + 1;
    Rat K = integral_K(Rat(2 * st.l + 2), st.nr(), k, st.nr(), k).symbolic().as_rational();
    return wf.norm2 * Rat(st.n, 2).pow(3) * K;
}

}  // namespace boundstate
