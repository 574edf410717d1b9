#include "boundstate/coulomb.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/suites.hpp"

namespace boundstate {

namespace {

std::string at(const std::string& what, const QuantumState& st) { return what + " " + st.str(); }

template <class F>
void each_state(long nmax, F&& f) {
    for (long n = 1; n <= nmax; ++n)
        for (long l = 0; l < n; ++l) f(QuantumState(n, l));
}

Rat closed(const char* tag, const QuantumState& st) { return expectation_closed(tag, st).coeff.as_rational(); }

}  // namespace

void suite_coulomb_catalog(Checker& c, long nmax) {
    for (const auto& e : coulomb_catalog())
        each_state(nmax, [&](const QuantumState& st) {
            if (st.l < e.min_l || (st.l == 0 && e.dimreg_at_l0)) return;
            c.guarded(at(e.tag, st), [&] {
                c.equal(expectation_oracle(e.tag, st).coeff, expectation_closed(e.tag, st).coeff, at(e.tag, st));
            });
        });
}

void suite_coulomb_relations(Checker& c) {
    each_state(10, [&](const QuantumState& st) {
        Rat E(-1, 2 * st.n * st.n);
        c.equal(closed("p2", st), Rat(-2) * E, at("virial ⟨p²⟩ = −2E", st));
        c.equal(closed("V", st), Rat(2) * E, at("virial ⟨V⟩ = 2E", st));
        // (2m_r)²⟨(E−V)²⟩
        Rat p4 = Rat(4) * (E * E - Rat(2) * E * closed("V", st) + closed("V^2", st));
        c.equal(p4, closed("p4", st), at("⟨p⁴⟩ through the Schrödinger equation", st));
    });
    each_state(8, [&](const QuantumState& st) {
        for (long s = 0; s <= 4; ++s) c.equal(recursion_residual(s, st), Rat(0), at("recursion s=" + std::to_string(s), st));
        for (long s = 1; s <= 3; ++s) c.equal(rsdr_residual(s, st), Rat(0), at("⟨r^s ∂_r⟩ s=" + std::to_string(s), st));
        c.equal(feynman_hellmann_residual(st), Rat(0), at("Feynman-Hellmann in Zα", st));
        c.equal(feynman_hellmann_mr_residual(st), Rat(0), at("Feynman-Hellmann in m_r", st));
        c.equal(feynman_hellmann_l_residual(st), Rat(0), at("Feynman-Hellmann in ℓ", st));
    });
}

void suite_coulomb_wavefunctions(Checker& c) {
    each_state(10, [&](const QuantumState& st) {
        c.equal(radial_norm(radial_wavefunction(st)), Rat(1), at("∫r²R² dr", st));
    });
    for (long n = 1; n <= 10; ++n) {
        QuantumState st(n, 0);
        RadialOracle o(st);
        Rat contact = o.contact(RadialOracle::mul(o.R(), o.R()));
        c.equal(contact, Rat(4) / Rat(n).pow(3), at("R(0)² = 4/n³", st));
    }
    for (long n = 1; n <= 4; ++n)
        for (long l = 0; l < n; ++l) {
            QuantumState st(n, l);
            Real dev = abs(MomentumRadialWF(st).norm_numeric() - 1);
            c.expect(dev < Real(1e-10), at("momentum normalization", st));
        }
    // p⁶ has no ℓ = 0 value in three dimensions
    for (long n = 1; n <= 6; ++n) {
        RadialOracle o({n, 0});
        auto P = o.p2(o.R());
        auto dP = o.d(P), Pr = o.rpow(-1, P);
        bool threw = false;
        try {
            o.integrate(RadialOracle::mul(dP, dP) + RadialOracle::mul(Pr, Pr) * Rat(0));
        } catch (const DivergenceError&) {
            threw = true;
        }
        c.expect(threw, "naive ⟨p⁶⟩ diverges at n=" + std::to_string(n) + ", ℓ=0");
    }
}

}  // namespace boundstate
