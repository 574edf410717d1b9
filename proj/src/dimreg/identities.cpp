#include "boundstate/dimreg.hpp"

namespace boundstate {

namespace {
IdentityResidual make(std::string name, const EpsSeries& r) { return IdentityResidual{std::move(name), r.truncated(0)}; }
}  // namespace

std::vector<IdentityResidual> identity_residuals(const QuantumState& st) {
    const long l = st.l;
    const RExpr R = RExpr::psi();
    auto sp = [&](const Integrand& f) { return split_expectation(f, st).series; };
    auto tag = [&](const std::string& t) { return divergent_split(t, st).series; };
    auto lin = [](long a, long b) { return EpsSeries::linear(SymExpr(a), SymExpr(b), 1); };

    EpsSeries vp2 = tag("V'^2"), v3 = tag("V^3"), vpv = tag("V*p2*V");
    EpsSeries v2 = sp(inner(R, R.V().V()));
    EpsSeries E = energy_expansion(st);

    std::vector<IdentityResidual> out;
    out.push_back(make("V p2 V = p_i V^2 p_i", vpv - tag("p_i*V^2*p_i")));
    out.push_back(make("V'^2 = -2 V V' dr", vp2 + sp(inner(R, R.d().Vprime().V())) * Rat(2)));
    out.push_back(make("V'^2 = 2 V^3 + V p2 V - 2 E V^2",
                       vp2 - v3 * Rat(2) - vpv + mul_to(E, v2, 0) * Rat(2)));
    out.push_back(make("V'^2 = V p2 V - V^2 p2", vp2 - vpv + tag("V^2*p2")));
    out.push_back(make("2 V'^2 = p2 V p2 - p4 V", vp2 * Rat(2) - tag("p2*V*p2") + tag("p4*V")));
    EpsSeries vpdr = sp(inner(R, R.d().Vprime()));
    if (l == 0) vpdr += EpsSeries::constant(SymExpr(2), 0);
    out.push_back(make("V' dr = -2 pi phi^2 delta_l0", vpdr));

    // [H, r^{s+1}∂_r]-type recursion at s = −2+4ε
    EpsSeries c2 = mul_to(E * Rat(4), lin(1, -4), 1);
    EpsSeries c3 = lin(-6, 20);
    EpsSeries c4 = lin(3, -6) - mul_to(lin(4 * l * (l + 1), -8 * l), lin(1, -2).inverse(), 1);
    out.push_back(make("s = -2+4eps recursion",
                       mul_to(c2, v2, 0) + mul_to(c3, v3, 0) + mul_to(c4, vp2, 0)));
    return out;
}

}  // namespace boundstate
