#include <cmath>

#include "boundstate/brackets.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"
#include "boundstate/suites.hpp"

namespace boundstate {

namespace {

std::string at(const std::string& what, const QuantumState& st) { return what + " " + st.str(); }

template <class F>
void each_state(long nmax, F&& f) {
    for (long n = 1; n <= nmax; ++n)
        for (long l = 0; l < n; ++l) f(QuantumState(n, l));
}

template <class E, class F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    }
    return false;
}

const EpsSeries& dim_d() {
    static const EpsSeries d = EpsSeries::linear(SymExpr(3), SymExpr(-2), 1);
    return d;
}

// π^{pi_power} × prefactor, with the π power kept apart
bool same_kernel_scale(const FourierKernel& a, const EpsSeries& a_scaled, const FourierKernel& b, int through) {
    return a.pi_power == b.pi_power && a.r_const == b.r_const && a.r_eps == b.r_eps &&
           a_scaled.equal_through(b.prefactor, through);
}

}  // namespace

void suite_fourier_kernels(Checker& c) {
    c.guarded("kernel examples", [&] {
        auto k2 = fourier_kernel(2, 0, false);
        c.expect(k2.pi_power == -1 && k2.r_const == -1, "FT[1/q²] ∝ π⁻¹ r⁻¹");
        c.equal(k2.prefactor_at_3d(), Rat(1, 4), "FT[1/q²] = 1/(4πr)");
        auto k1 = fourier_kernel(1, 0, false);
        c.expect(k1.pi_power == -2 && k1.r_const == -2, "FT[1/|q|] ∝ π⁻² r⁻²");
        c.equal(k1.prefactor_at_3d(), Rat(1, 2), "FT[1/|q|] = 1/(2π²r²)");
        // Γ(−1/2−ε)/(16π^{D/2}) r^{1+2ε}: at ε = 0 that is −2√π/(16π^{3/2})
        auto k4 = fourier_kernel(4, 0, true);
        c.expect(k4.pi_power == -1 && k4.r_const == 1 && k4.r_eps == 2, "FT_D[1/q⁴] ∝ π⁻¹ r^{1+2ε}");
        c.equal(k4.prefactor.coeff(0), SymExpr(Rat(-1, 8)), "FT_D[1/q⁴] at ε⁰");
        // ∂_ε of Γ(−1/2−ε)π^ε: −ψ(−1/2) + ln π
        SymExpr psi = SymExpr(Rat(2)) - SymExpr::gamma_e() - SymExpr::ln2() * Rat(2);
        c.equal(k4.prefactor.coeff(1), (SymExpr::lnpi() - psi) * Rat(-1, 8), "FT_D[1/q⁴] at ε¹");
    });

    c.expect(kernel_singularity(4, 0) == KernelSingularity::Log, "1/q⁴ in 3D is log-type");
    c.expect(throws<SingularityError>([] { fourier_kernel(4, 0, false); }), "3D FT[1/q⁴] is rejected");
    c.expect(kernel_singularity(0, 0) == KernelSingularity::Delta, "FT[1] is delta-type");
    c.expect(kernel_singularity(2, 2) == KernelSingularity::Delta, "FT[q_iq_j/q²] is delta-type");
    c.expect(throws<SingularityError>([] { fourier_kernel(2, 2, true); }), "FT[q_iq_j/q²] is rejected");
    c.expect(kernel_singularity(3, 0) == KernelSingularity::Log, "1/q³ is log-type");
    c.expect(kernel_singularity(-2, 0) == KernelSingularity::Delta, "q² is delta-type");

    // Tracing i = j turns q_iq_j/q^α into 1/q^{α−2}
    for (long alpha : {3L, 4L, 5L, 6L}) {
        std::string lab = "rank-2 trace, α = " + std::to_string(alpha);
        c.guarded(lab, [&] {
            auto k = fourier_kernel(alpha, 2, true);
            auto k0 = fourier_kernel(alpha - 2, 0, true);
            EpsSeries tr = k.terms[0].coeff * dim_d() + k.terms[1].coeff;
            EpsSeries lhs = mul_to(k.prefactor, tr, 1);
            int through = std::min(1, k0.prefactor.leading_order() + 1);
            c.expect(same_kernel_scale(k, lhs, k0, through), lab + ": " + lhs.str() + " vs " + k0.prefactor.str());
        });
    }
    // rank 3: q_iq_iq_k/q^α → q_k/q^{α−2}
    for (long alpha : {4L, 5L, 6L, 7L}) {
        std::string lab = "rank-3 trace, α = " + std::to_string(alpha);
        c.guarded(lab, [&] {
            auto k = fourier_kernel(alpha, 3, true);
            auto k1 = fourier_kernel(alpha - 2, 1, true);
            // δ_ij x̂_k over 3 placements traces to (D + 2) x̂_k; x̂x̂x̂ to x̂_k
            EpsSeries tr = k.terms[0].coeff * (dim_d() + EpsSeries::constant(SymExpr(2), 1)) + k.terms[1].coeff;
            EpsSeries lhs = mul_to(k.prefactor, tr, 1);
            int through = std::min(1, k1.prefactor.leading_order() + 1);
            c.expect(same_kernel_scale(k, lhs, k1, through), lab + ": " + lhs.str() + " vs " + k1.prefactor.str());
        });
    }
    // rank 4, both pairs traced: q⁴/q^α → 1/q^{α−4}
    for (long alpha : {6L, 7L, 8L}) {
        std::string lab = "rank-4 double trace, α = " + std::to_string(alpha);
        c.guarded(lab, [&] {
            auto k = fourier_kernel(alpha, 4, true);
            auto k0 = fourier_kernel(alpha - 4, 0, true);
            EpsSeries D = dim_d();
            EpsSeries two = EpsSeries::constant(SymExpr(2), 1);
            // δδ: D(D+2); δx̂x̂: 2(D+2); x̂⁴: 1
            EpsSeries tr = mul_to(k.terms[0].coeff, mul_to(D, D + two, 1), 1) +
                           mul_to(k.terms[1].coeff, (D + two) * Rat(2), 1) + k.terms[2].coeff;
            EpsSeries lhs = mul_to(k.prefactor, tr, 1);
            int through = std::min(1, k0.prefactor.leading_order() + 1);
            c.expect(same_kernel_scale(k, lhs, k0, through), lab + ": " + lhs.str() + " vs " + k0.prefactor.str());
        });
    }

    c.guarded("log transform", [&] {
        auto kl = fourier_kernel_log();
        c.expect(kl.r_const == -3 && kl.pi_power == -1, "FT[ln q] ∝ π⁻¹ r⁻³");
        c.equal(kl.prefactor.coeff(0), SymExpr(Rat(-1, 4)), "FT[ln q] = −1/(4πr³)");
    });
    c.expect(throws<DivergenceError>([] { bracket_reduced("ln q", QuantumState(2, 0)); }),
             "FT[ln q] at ℓ = 0 is refused");
}

void suite_brackets_table(Checker& c) {
    for (const auto& b : bracket_catalog())
        each_state(8, [&](const QuantumState& st) {
            if (b.tag == "ln q" && st.l == 0) return;
            c.guarded(at(b.tag, st), [&] {
                BracketValue x = bracket(b.tag, st), y = bracket_reduced(b.tag, st);
                c.expect(x.laurent == y.laurent, at(b.tag + " branch", st));
                if (x.laurent) {
                    c.expect(x.pi_power == y.pi_power && x.split.mubar == y.split.mubar &&
                                 x.split.series.equal_through(y.split.series, 0),
                             at(b.tag, st) + ": " + x.split.series.str() + " vs " + y.split.series.str());
                } else {
                    c.equal(x.exact.coeff, y.exact.coeff, at(b.tag, st));
                    c.expect(x.exact.units == b.units && y.exact.units == b.units, at(b.tag + " units", st));
                }
            });
        });
    c.guarded("bracket examples", [&] {
        c.equal(bracket("1/q^2", {2, 0}).exact.coeff, SymExpr(Rat(1, 16)), "⟨1/q²⟩ (2,0)");
        c.expect(bracket("1/q^2", {2, 0}).exact.units == Units{1, 1, -1}, "⟨1/q²⟩ ∝ m_rZα/π");
        c.equal(bracket("1/q^4", {1, 0}).exact.coeff, SymExpr(Rat(-3, 16)), "⟨1/q⁴⟩ (1,0)");
        c.equal(bracket("p2.p1", {2, 1}).exact.coeff, SymExpr(Rat(1, 32)), "⟨p₂·p₁⟩ (2,1)");
    });
    c.expect(throws<CatalogError>([] { bracket("q^7", {1, 0}); }), "unknown bracket tag");
}

void suite_brackets_duality(Checker& c) {
    each_state(8, [&](const QuantumState& st) {
        c.guarded(at("duality", st), [&] {
            for (long alpha : {1L, 2L}) {
                auto k = fourier_kernel(alpha, 0, false);
                std::string rtag = "r^" + std::to_string(alpha - 3);
                Value e = expectation_closed(rtag, st);
                BracketValue b = bracket(alpha == 1 ? "1/|q|" : "1/q^2", st);
                c.equal(b.exact.coeff, e.coeff * k.prefactor_at_3d(), at("⟨1/q^" + std::to_string(alpha) + "⟩", st));
                c.expect(b.exact.units.pi == e.units.pi + k.pi_power, at("π power of 1/q^α", st));
            }
            // (1/8π){⟨p_k r⁻¹ p_k⟩ − ⟨∂_r† r⁻¹ ∂_r⟩}
            SymExpr want = (expectation_closed("p_i*r^-1*p_i", st).coeff - expectation_closed("drdag*r^-1*dr", st).coeff) *
                           Rat(1, 8);
            c.equal(bracket("(p2.q)(q.p1)/q^4", st).exact.coeff, want, at("⟨(p₂·q)(q·p₁)/q⁴⟩", st));
        });
    });
}

void suite_bracket_lnq(Checker& c) {
    Value v1 = bracket_lnq({1, 0});
    c.equal(v1.coeff, -SymExpr::log_scale("kappa") + SymExpr(Rat(1)), "⟨ln q⟩ (1,0)");
    c.equal(bracket_lnq({3, 0}).coeff,
            (-SymExpr::log_scale("kappa") + SymExpr(Rat(11, 6) + Rat(1, 3))) * Rat(1, 27), "⟨ln q⟩ (3,0)");
    c.equal(bracket_lnq({3, 1}).coeff, SymExpr(Rat(-1) / (Rat(4) * Rat(2) * Rat(3, 2) * Rat(27))), "⟨ln q⟩ (3,1)");
    c.expect(v1.units == Units{3, 3, -1}, "⟨ln q⟩ ∝ (m_rZα)³/π");
    c.expect(std::abs(bracket_lnq_numeric({1, 0}) - (std::log(2.0) + 1) / M_PI) < 1e-14, "⟨ln q⟩ (1,0) numeric");
    // ℓ > 0 closed form against ⟨r⁻³⟩ via FT[ln q] = −1/(4πr³)
    each_state(8, [&](const QuantumState& st) {
        if (st.l == 0) return;
        c.guarded(at("⟨ln q⟩", st), [&] {
            c.equal(bracket_lnq(st).coeff, expectation_closed("r^-3", st).coeff * Rat(-1, 4), at("⟨ln q⟩", st));
        });
    });
    for (long n = 1; n <= 4; ++n) {
        QuantumState st(n, 0);
        c.guarded(at("⟨ln q⟩ oracle", st), [&] {
            double o = bracket_lnq_oracle(n), w = bracket_lnq_numeric(st);
            double rel = std::abs(o / w - 1);
            char buf[96];
            std::snprintf(buf, sizeof buf, ": oracle %.12g, closed %.12g, rel %.2e", o, w, rel);
            c.expect(rel < 1e-8, at("⟨ln q⟩ oracle", st) + buf);
        });
    }
    c.expect(throws<DomainError>([] { bracket_lnq_oracle(5); }), "oracle range is n ≤ 4");
}

}  // namespace boundstate
