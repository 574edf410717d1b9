#include "boundstate/dimreg.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

namespace {
const SymExpr kLamMu = SymExpr::log_scale("mu");
}

EpsSeries energy_expansion(const QuantumState& st) {
    SymExpr c1 = kLamMu * Rat(4) + harmonic(st.n + st.l) * Rat(4) + Rat(2, st.n);
    return EpsSeries::linear(SymExpr(1), c1, 1) * Rat(-1, 2 * st.n * st.n);
}

EpsSeries nbar_expansion(const QuantumState& st) {
    Rat n(st.n);
    SymExpr c1 = SymExpr::gamma_e() * (Rat(2) * n) - SymExpr(Rat(2) * n * harmonic(st.n + st.l)) - SymExpr(1);
    return EpsSeries::linear(SymExpr(n), c1, 1);
}

EpsSeries gammabar_expansion(const QuantumState& st) {
    SymExpr g1 = kLamMu * Rat(2) + harmonic(st.n + st.l) * Rat(2) + Rat(1, st.n);
    return EpsSeries::linear(SymExpr(1), g1, 1);
}

EpsSeries solid_angle_ratio() {
    SymExpr c1 = SymExpr(2) - SymExpr::gamma_e() - SymExpr::ln2() * Rat(2) - SymExpr::lnpi();
    return EpsSeries::linear(SymExpr(1), c1, 1);
}

EpsSeries contact_expansion(const QuantumState& st) {
    long n = st.n, l = st.l, nr = st.nr();
    Rat N(n);
    Rat h = harmonic(n + l), h2 = harmonic(n + l, 2);
    Rat hr = harmonic(nr), hr2 = harmonic(nr, 2);
    Rat rat = Rat(2) * N * diharmonic(DiSign::Plus, n + l, -nr) - N * (h * h - h2) + N * (hr * hr + hr2) +
              Rat(2) * h + Rat(2) * harmonic(2 * l + 1) - Rat(2) + Rat(2) / N;
    SymExpr c1 = kLamMu * Rat(3) + SymExpr(rat) + (SymExpr::lnpi() - SymExpr::gamma_e()) * Rat(1, 2) -
                 SymExpr::zeta2() * (Rat(2) * N);
    return EpsSeries::linear(SymExpr(1), c1, 1);
}

}  // namespace boundstate
