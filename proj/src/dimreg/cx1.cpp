#include "boundstate/cx1.hpp"
#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"

namespace boundstate {

Cx1Shift cx1_energy_shift(const QuantumState& st, const Rat& c1, const Rat& c2, const Rat& m1, const Rat& m2) {
    if (m1.sign() <= 0 || m2.sign() <= 0) throw DomainError("cx1_energy_shift: masses must be positive");
    Cx1Shift out{st, Rat(-4) * (c1 / m1.pow(4) + c2 / m2.pow(4)), st.l == 0, {}, {}};
    DivergentValue v = divergent_expectation("V'^2", st);
    if (out.laurent)
        out.series = v.split.series * out.prefactor;
    else
        out.exact = v.exact.coeff * out.prefactor;
    return out;
}

}  // namespace boundstate
