#include "boundstate/coulomb.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

namespace {

using Q = const QuantumState&;
using Fn = RadialOracle::Fn;

// shorthand for the closed forms
struct S {
    Rat n, l, L, h, D3, d0, d1;
    explicit S(Q st)
        : n(st.n),
          l(st.l),
          L(st.L()),
          h(Rat(st.l) + Rat(1, 2)),
          D3((Rat(st.l) - Rat(1, 2)) * (Rat(st.l) + Rat(1, 2)) * (Rat(st.l) + Rat(3, 2))),
          d0(st.l == 0 ? 1 : 0),
          d1(st.l == 1 ? 1 : 0) {}
    Rat np(int k) const { return n.pow(k); }
    // (ℓ−1)ℓ(ℓ+1)(ℓ+2)(ℓ−½)(ℓ+½)(ℓ+3/2)
    Rat D7() const { return (l - Rat(1)) * l * (l + Rat(1)) * (l + Rat(2)) * D3; }
};

// Derivatives and building blocks of the exact radial integrand.
struct W {
    RadialOracle o;
    Fn R, R1, R2, R3, P;
    Rat L;
    explicit W(Q st) : o(st), L(st.L()) {
        R = o.R();
        R1 = o.d(R);
        R2 = o.d(R1);
        R3 = o.d(R2);
        P = o.p2(R);
    }
    Fn m(const Fn& a, const Fn& b) const { return RadialOracle::mul(a, b); }
    Fn r(long s, const Fn& f) const { return o.rpow(s, f); }
    SymExpr I(const Fn& f, int logpow = 0) const { return o.integrate(f, logpow); }
    // |∇ψ|² after the angular integral
    Fn grad2() const { return m(R1, R1) + r(-2, m(R, R)) * L; }
    Fn Rr() const { return r(-1, R); }
    Fn R1mRr() const { return R1 - Rr(); }
};

SymExpr H(long k) { return SymExpr(k <= 0 ? Rat(0) : harmonic(k)); }

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string tag, std::string desc, Units u, long min_l, auto closed, auto oracle,
                   bool dimreg_l0 = false) {
        c.push_back(CatalogEntry{std::move(tag), std::move(desc), u, min_l, dimreg_l0,
                                 [closed](Q st) { return SymExpr(closed(S(st))); },
                                 [oracle](Q st) { return SymExpr(oracle(W(st))); }});
    };
    auto mz = Units::mza;
    const Units per_pi3{3, 3, -1}, per_pi5{5, 5, -1};

    // ---- powers of r and contact terms
    add("delta3", "⟨δ³(x)⟩", per_pi3, 0, [](const S& s) { return s.d0 / s.np(3); },
        [](const W& w) { return SymExpr(w.o.contact(w.m(w.R, w.R)) / Rat(4)); });
    add("1", "⟨1⟩", mz(0), 0, [](const S&) { return Rat(1); }, [](const W& w) { return w.I(w.m(w.R, w.R)); });
    add("r", "⟨r⟩", mz(-1), 0, [](const S& s) { return (Rat(3) * s.np(2) - s.L) / Rat(2); },
        [](const W& w) { return w.I(w.r(1, w.m(w.R, w.R))); });
    add("r^2", "⟨r²⟩", mz(-2), 0,
        [](const S& s) { return s.np(2) / Rat(2) * (Rat(5) * s.np(2) + Rat(1) - Rat(3) * s.L); },
        [](const W& w) { return w.I(w.r(2, w.m(w.R, w.R))); });
    add("r^3", "⟨r³⟩", mz(-3), 0,
        [](const S& s) {
            return s.np(2) / Rat(8) *
                   (Rat(35) * s.np(4) + Rat(25) * s.np(2) - Rat(30) * s.np(2) * s.L - Rat(6) * s.L +
                    Rat(3) * s.L * s.L);
        },
        [](const W& w) { return w.I(w.r(3, w.m(w.R, w.R))); });
    add("r^4", "⟨r⁴⟩", mz(-4), 0,
        [](const S& s) {
            return s.np(4) / Rat(8) *
                   (Rat(63) * s.np(4) + Rat(105) * s.np(2) + Rat(12) - Rat(70) * s.np(2) * s.L -
                    Rat(50) * s.L + Rat(15) * s.L * s.L);
        },
        [](const W& w) { return w.I(w.r(4, w.m(w.R, w.R))); });
    add("r^-1", "⟨1/r⟩", mz(1), 0, [](const S& s) { return Rat(1) / s.np(2); },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R, w.R))); });
    add("r^-2", "⟨1/r²⟩", mz(2), 0, [](const S& s) { return Rat(1) / (s.h * s.np(3)); },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R, w.R))); });
    add("r^-3", "⟨1/r³⟩", mz(3), 1, [](const S& s) { return Rat(1) / (s.L * s.h * s.np(3)); },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R, w.R))); });
    add("r^-4", "⟨1/r⁴⟩", mz(4), 1,
        [](const S& s) { return (Rat(3) * s.np(2) - s.L) / (Rat(2) * s.L * s.D3 * s.np(5)); },
        [](const W& w) { return w.I(w.r(-4, w.m(w.R, w.R))); });
    add("r^-5", "⟨1/r⁵⟩", mz(5), 2,
        [](const S& s) { return (Rat(5) * s.np(2) + Rat(1) - Rat(3) * s.L) / (Rat(2) * s.D7() * s.np(5)); },
        [](const W& w) { return w.I(w.r(-5, w.m(w.R, w.R))); });
    add("r^-2*delta3", "⟨δ³(x)/r²⟩", per_pi5, 1,
        [](const S& s) { return (s.np(2) - Rat(1)) * s.d1 / (Rat(9) * s.np(5)); },
        [](const W& w) { return SymExpr(w.o.contact(w.m(w.Rr(), w.Rr())) / Rat(4)); });

    // ---- momentum operators
    add("p2", "⟨p²⟩", mz(2), 0, [](const S& s) { return Rat(1) / s.np(2); },
        [](const W& w) { return w.I(w.m(w.R, w.P)); });
    add("p4", "⟨p⁴⟩", mz(4), 0, [](const S& s) { return Rat(4) / (s.h * s.np(3)) - Rat(3) / s.np(4); },
        [](const W& w) { return w.I(w.m(w.P, w.P)); });
    add("p6", "⟨p⁶⟩", mz(6), 0,
        [](const S& s) {
            return Rat(5) / s.np(6) - Rat(8) / (s.h * s.np(5)) +
                   (Rat(8) * s.np(2) + Rat(1) - Rat(4) * s.L) / (s.D3 * s.np(5)) + Rat(32) * s.d0 / s.np(3);
        },
        [](const W& w) {
            if (w.L.is_zero()) {
                // naive |∇p²ψ|² diverges for S states: 4⟨(E−V)p²(E−V)⟩ with ⟨Vp²V⟩ = ⟨p_i V² p_i⟩
                Rat E = w.o.energy();
                SymExpr p2 = w.I(w.m(w.R, w.P));
                SymExpr vp2 = w.I(w.m(w.o.V(w.R), w.P));
                SymExpr pv2p = w.I(w.r(-2, w.grad2()));
                return (p2 * (E * E) - vp2 * (Rat(2) * E) + pv2p) * Rat(4);
            }
            Fn dP = w.o.d(w.P), Pr = w.r(-1, w.P);
            return w.I(w.m(dP, dP) + w.m(Pr, Pr) * w.L);
        });
    add("p_i*r^-1*p_i", "⟨p_i (1/r) p_i⟩", mz(3), 0,
        [](const S& s) { return Rat(2) / (s.h * s.np(3)) - Rat(1) / s.np(4) - Rat(2) * s.d0 / s.np(3); },
        [](const W& w) { return w.I(w.r(-1, w.grad2())); });
    add("p_i*r^-2*p_i", "⟨p_i (1/r²) p_i⟩", mz(4), 0,
        [](const S& s) {
            return (Rat(8) * s.np(2) + Rat(1) - Rat(4) * s.L) / (Rat(4) * s.D3 * s.np(5)) + Rat(8) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.r(-2, w.grad2())); });
    add("p_i*delta3*p_i", "⟨p_i δ³(x) p_i⟩", per_pi5, 0,
        [](const S& s) { return s.d0 / s.np(3) + (s.np(2) - Rat(1)) * s.d1 / (Rat(3) * s.np(5)); },
        [](const W& w) { return SymExpr(w.o.contact(w.grad2()) / Rat(4)); });
    add("drdag*dr", "⟨p_i x̂_i x̂_j p_j⟩ = ⟨∂_r† ∂_r⟩", mz(2), 0,
        [](const S& s) { return Rat(1) / s.np(2) - s.L / (s.h * s.np(3)); },
        [](const W& w) { return w.I(w.m(w.R1, w.R1)); });
    add("drdag*r^-1*dr", "⟨p_i x̂_i (1/r) x̂_j p_j⟩ = ⟨∂_r† (1/r) ∂_r⟩", mz(3), 0,
        [](const S& s) { return Rat(-1) / s.np(4) + Rat(1) / (s.h * s.np(3)); },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R1, w.R1))); });
    add("drdag*r^-2*dr", "⟨p_i x̂_i (1/r²) x̂_j p_j⟩ = ⟨∂_r† (1/r²) ∂_r⟩", mz(4), 0,
        [](const S& s) {
            return (Rat(2) * s.np(2) + Rat(1) - Rat(2) * s.L) / (Rat(4) * s.D3 * s.np(5)) + Rat(4) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R1, w.R1))); });
    add("drdag*r^-3*dr", "⟨p_i x̂_i (1/r³) x̂_j p_j⟩ = ⟨∂_r† (1/r³) ∂_r⟩", mz(5), 2,
        [](const S& s) {
            return (Rat(6) * s.np(2) + s.L * (Rat(2) * s.np(2) - Rat(1) - Rat(2) * s.L)) /
                   (Rat(4) * s.D7() * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R1, w.R1))); });
    add("tensor*r^-1", "⟨p_i (1/r) p_i − 3 p_i x̂_i (1/r) x̂_j p_j⟩", mz(3), 0,
        [](const S& s) { return Rat(2) / s.np(4) - Rat(1) / (s.h * s.np(3)) - Rat(2) * s.d0 / s.np(3); },
        [](const W& w) { return w.I(w.r(-1, w.grad2() - w.m(w.R1, w.R1) * Rat(3))); });
    add("tensor*r^-2", "⟨p_i (1/r²) p_i − 3 p_i x̂_i (1/r²) x̂_j p_j⟩", mz(4), 0,
        [](const S& s) {
            return (s.np(2) - Rat(1) + s.L) / (Rat(2) * s.D3 * s.np(5)) - Rat(4) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.r(-2, w.grad2() - w.m(w.R1, w.R1) * Rat(3))); });
    add("tensor*r^-3", "⟨p_i (1/r³) p_i − 3 p_i x̂_i (1/r³) x̂_j p_j⟩", mz(5), 1,
        [](const S& s) {
            return (Rat(3) * s.np(2) - s.L) / (Rat(2) * s.L * s.D3 * s.np(5)) +
                   Rat(2) * (s.np(2) - Rat(1)) * s.d1 / (Rat(9) * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-3, w.grad2() - w.m(w.R1, w.R1) * Rat(3))); });
    add("p2*r", "⟨p² r⟩ = ⟨r p²⟩", mz(1), 0, [](const S& s) { return s.L / (Rat(2) * s.np(2)) + Rat(1, 2); },
        [](const W& w) { return w.I(w.r(1, w.m(w.P, w.R))); });
    add("p2*r^-1", "⟨p² (1/r)⟩ = ⟨(1/r) p²⟩", mz(3), 0,
        [](const S& s) { return Rat(2) / (s.h * s.np(3)) - Rat(1) / s.np(4); },
        [](const W& w) { return w.I(w.r(-1, w.m(w.P, w.R))); });
    add("p4*r^-1", "⟨p⁴ (1/r)⟩ = ⟨(1/r) p⁴⟩", mz(5), 1,
        [](const S& s) {
            return (Rat(4) * s.np(2) + Rat(2) - Rat(4) * s.L) / (s.D3 * s.np(5)) + Rat(1) / s.np(6);
        },
        [](const W& w) { return w.I(w.m(w.P, w.o.p2(w.Rr()))); });
    add("p2*r^-2", "⟨p² (1/r²)⟩ = ⟨(1/r²) p²⟩", mz(4), 1,
        [](const S& s) { return Rat(2) / (s.L * s.h * s.np(3)) - Rat(1) / (s.h * s.np(5)); },
        [](const W& w) { return w.I(w.r(-2, w.m(w.P, w.R))); });
    add("p2*r^-3", "⟨p² (1/r³)⟩ = ⟨(1/r³) p²⟩", mz(5), 1,
        [](const S& s) {
            return (Rat(3) * s.np(2) + Rat(3, 4) - Rat(2) * s.L) / (s.L * s.D3 * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-3, w.m(w.P, w.R))); });
    add("p2*r*p2", "⟨p² r p²⟩", mz(3), 0,
        [](const S& s) { return -s.L / (Rat(2) * s.np(4)) + Rat(3) / (Rat(2) * s.np(2)); },
        [](const W& w) { return w.I(w.r(1, w.m(w.P, w.P))); });
    add("p2*r^-1*p2", "⟨p² (1/r) p²⟩", mz(5), 1,
        [](const S& s) {
            return Rat(1) / s.np(6) + (Rat(4) * s.np(2) - Rat(4) * s.L) / (s.L * s.h * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-1, w.m(w.P, w.P))); });

    // ---- radial derivatives
    add("r*dr", "⟨r ∂_r⟩", mz(0), 0, [](const S&) { return Rat(-3, 2); },
        [](const W& w) { return w.I(w.r(1, w.m(w.R, w.R1))); });
    add("dr", "⟨∂_r⟩", mz(1), 0, [](const S& s) { return Rat(-1) / s.np(2); },
        [](const W& w) { return w.I(w.m(w.R, w.R1)); });
    add("r^-1*dr", "⟨(1/r) ∂_r⟩", mz(2), 0, [](const S& s) { return Rat(-1) / (Rat(2) * s.h * s.np(3)); },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R, w.R1))); });
    add("r^-2*dr", "⟨(1/r²) ∂_r⟩", mz(3), 0, [](const S& s) { return Rat(-2) * s.d0 / s.np(3); },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R, w.R1))); });
    add("r^-3*dr", "⟨(1/r³) ∂_r⟩", mz(4), 1,
        [](const S& s) { return (Rat(3) * s.np(2) - s.L) / (Rat(4) * s.L * s.D3 * s.np(5)); },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R, w.R1))); });
    add("r^-3*(dr+1)", "⟨(1/r³)(∂_r + m_r Zα)⟩", mz(4), 0,
        [](const S& s) {
            return (Rat(4) * s.np(2) - Rat(1)) / (Rat(4) * s.D3 * s.np(5)) + Rat(2) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R, w.R1 + w.R))); });
    add("r^-4*dr", "⟨(1/r⁴) ∂_r⟩", mz(5), 2,
        [](const S& s) { return (Rat(5) * s.np(2) + Rat(1) - Rat(3) * s.L) / (Rat(2) * s.D7() * s.np(5)); },
        [](const W& w) { return w.I(w.r(-4, w.m(w.R, w.R1))); });
    add("r^-4*(dr-r^-1)", "⟨(1/r⁴)(∂_r − 1/r)⟩", mz(5), 1,
        [](const S& s) { return Rat(-2) * (s.np(2) - Rat(1)) * s.d1 / (Rat(9) * s.np(5)); },
        [](const W& w) { return w.I(w.r(-4, w.m(w.R, w.R1mRr()))); });
    add("r*dr2", "⟨r ∂_r²⟩", mz(1), 0,
        [](const S& s) { return (Rat(4) + s.L) / (Rat(2) * s.np(2)) - Rat(1, 2); },
        [](const W& w) { return w.I(w.r(1, w.m(w.R, w.R2))); });
    add("dr2", "⟨∂_r²⟩", mz(2), 0,
        [](const S& s) { return (Rat(1) + s.L) / (s.h * s.np(3)) - Rat(1) / s.np(2); },
        [](const W& w) { return w.I(w.m(w.R, w.R2)); });
    add("r^-1*dr2", "⟨(1/r) ∂_r²⟩", mz(3), 0,
        [](const S& s) { return Rat(1) / s.np(4) - Rat(1) / (s.h * s.np(3)) + Rat(2) * s.d0 / s.np(3); },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R, w.R2))); });
    add("r^-2*dr2", "⟨(1/r²) ∂_r²⟩", mz(4), 0,
        [](const S& s) { return (Rat(-2) * s.np(2) - Rat(1) + Rat(2) * s.L) / (Rat(4) * s.D3 * s.np(5)); },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R, w.R2))); });
    add("r^-3*dr2", "⟨(1/r³) ∂_r²⟩", mz(5), 1,
        [](const S& s) {
            return (-s.np(2) - Rat(1, 2) + s.L) / (Rat(2) * s.L * s.D3 * s.np(5)) -
                   Rat(2) * (s.np(2) - Rat(1)) * s.d1 / (Rat(9) * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R, w.R2))); });
    add("drdag*dr2", "⟨∂_r† ∂_r²⟩", mz(3), 0,
        [](const S& s) { return Rat(1) / s.np(4) - Rat(1) / (s.h * s.np(3)); },
        [](const W& w) { return w.I(w.m(w.R1, w.R2)); });
    add("drdag*r^-1*dr2", "⟨∂_r† (1/r) ∂_r²⟩", mz(4), 0,
        [](const S& s) {
            return (-s.np(2) - Rat(1, 2) + s.L) / (Rat(4) * s.D3 * s.np(5)) - Rat(2) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R1, w.R2))); });
    add("drdag*r^-2*dr2", "⟨∂_r† (1/r²) ∂_r²⟩", mz(5), 0,
        [](const S& s) {
            return Rat(-2) * s.d0 / s.np(3) - Rat(2) * (s.np(2) - Rat(1)) * s.d1 / (Rat(9) * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R1, w.R2))); });
    add("drdag2*dr2", "⟨(∂_r†)² ∂_r²⟩", mz(4), 0,
        [](const S& s) {
            return (Rat(-4) * s.np(2) - Rat(2) - Rat(2) * s.L + Rat(6) * s.np(2) * s.L + Rat(6) * s.L * s.L) /
                       (Rat(4) * s.D3 * s.np(5)) -
                   Rat(3) / s.np(4);
        },
        [](const W& w) { return w.I(w.m(w.R2, w.R2)); });
    add("p2*r*dr2", "⟨p² r ∂_r²⟩", mz(3), 0,
        [](const S& s) {
            return -(Rat(4) + s.L) / (Rat(2) * s.np(4)) + (Rat(2) + Rat(2) * s.L) / (s.h * s.np(3)) -
                   Rat(3) / (Rat(2) * s.np(2));
        },
        [](const W& w) { return w.I(w.r(1, w.m(w.P, w.R2))); });
    add("p2*dr2", "⟨p² ∂_r²⟩", mz(4), 0,
        [](const S& s) {
            return -(Rat(2) * s.np(2) + Rat(1) + s.L) / (s.h * s.np(5)) + Rat(3) / s.np(4) +
                   Rat(4) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.m(w.P, w.R2)); });
    add("dr3", "⟨∂_r³⟩", mz(3), 0,
        [](const S& s) { return Rat(-3) / s.np(4) + Rat(3) / (s.h * s.np(3)) - Rat(4) * s.d0 / s.np(3); },
        [](const W& w) { return w.I(w.m(w.R, w.R3)); });
    add("r^-1*dr3", "⟨(1/r) ∂_r³⟩", mz(4), 0,
        [](const S& s) {
            return (Rat(3) * s.np(2) + Rat(3, 2) - Rat(3) * s.L) / (Rat(4) * s.D3 * s.np(5)) +
                   Rat(2) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R, w.R3))); });
    add("r^-2*dr3", "⟨(1/r²) ∂_r³⟩", mz(5), 0,
        [](const S& s) {
            return Rat(-2) * (s.np(2) + Rat(2)) * s.d0 / (Rat(3) * s.np(5)) +
                   Rat(2) * (s.np(2) - Rat(1)) * s.d1 / (Rat(9) * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R, w.R3))); });
    add("drdag*dr3", "⟨∂_r† ∂_r³⟩", mz(4), 0,
        [](const S& s) {
            return (Rat(6) * s.np(2) + Rat(3) - Rat(6) * s.np(2) * s.L - Rat(6) * s.L * s.L) /
                       (Rat(4) * s.D3 * s.np(5)) +
                   Rat(3) / s.np(4) + Rat(4) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.m(w.R1, w.R3)); });
    add("drdag*r^-3*(dr-r^-1)", "⟨∂_r† (1/r³)(∂_r − 1/r)⟩", mz(5), 1,
        [](const S& s) {
            return (s.np(2) + Rat(1, 2) - s.L) / (Rat(2) * s.L * s.D3 * s.np(5)) -
                   Rat(2) * (s.np(2) - Rat(1)) * s.d1 / (Rat(9) * s.np(5));
        },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R1, w.R1mRr()))); });
    add("(drdag-r^-1)*r^-3*(dr-r^-1)", "⟨(∂_r† − 1/r)(1/r³)(∂_r − 1/r)⟩", mz(5), 1,
        [](const S& s) { return (s.np(2) + Rat(1, 2) - s.L) / (Rat(2) * s.L * s.D3 * s.np(5)); },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R1mRr(), w.R1mRr()))); });
    auto dpd = [](const S& s) {
        return (Rat(2) * s.np(2) - Rat(2) + Rat(2) * s.L) / (Rat(4) * s.D3 * s.np(5)) + s.L / (s.h * s.np(5)) +
               Rat(2) / (s.h * s.np(3)) - Rat(3) / s.np(4);
    };
    add("drdag*p2*dr", "⟨∂_r† p² ∂_r⟩", mz(4), 0, dpd,
        [](const W& w) { return w.I(w.m(w.R2, w.R2) + w.r(-2, w.m(w.R1, w.R1)) * w.L); });
    add("p_n*r^-1*dr*p_n", "⟨p_n (1/r) ∂_r p_n⟩", mz(4), 0,
        [](const S& s) {
            return (Rat(-4) * s.np(2) - Rat(1, 2) + Rat(2) * s.L) / (Rat(4) * s.D3 * s.np(5)) -
                   Rat(4) * s.d0 / s.np(3);
        },
        [](const W& w) {
            return w.I(w.r(-1, w.m(w.R1, w.R2) + w.r(-1, w.m(w.Rr(), w.R1mRr())) * w.L));
        });
    add("p_n*p_i*xi*xj*p_j*p_n", "⟨p_n p_i x̂_i x̂_j p_j p_n⟩", mz(4), 0, dpd,
        [](const W& w) { return w.I(w.m(w.R2, w.R2) + w.r(-2, w.m(w.R1mRr(), w.R1mRr())) * w.L); });

    // ---- logarithms; Λ_κ = ln(κn/(2 m_r Zα))
    auto lam = [] { return SymExpr::log_scale("kappa"); };
    auto G = [] { return SymExpr::gamma_e(); };
    add("ln(kr)", "⟨ln(κr)⟩", mz(0), 0,
        [lam, G](const S& s) {
            long n = s.n.to_long(), l = s.l.to_long();
            return lam() + H(n + l) - G() + SymExpr(Rat(1) - Rat(2 * l + 1) / (Rat(2) * s.n));
        },
        [](const W& w) { return w.I(w.m(w.R, w.R), 1); });
    add("ln(kr)/r", "⟨ln(κr)/r⟩", mz(1), 0,
        [lam, G](const S& s) {
            long n = s.n.to_long(), l = s.l.to_long();
            return (lam() + H(n + l) - G()) / s.np(2);
        },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R, w.R)), 1); });
    add("ln(kr)/r^2", "⟨ln(κr)/r²⟩", mz(2), 0,
        [lam, G](const S& s) {
            long n = s.n.to_long(), l = s.l.to_long();
            return (lam() + H(2 * l + 1) + H(2 * l) - H(n + l) - G()) / (s.h * s.np(3));
        },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R, w.R)), 1); });
    add("ln(kr)/r^3", "⟨ln(κr)/r³⟩", mz(3), 1,
        [lam, G](const S& s) {
            long n = s.n.to_long(), l = s.l.to_long();
            SymExpr in = lam() + H(2 * l + 2) + H(2 * l - 1) - H(n + l) - G() -
                         SymExpr((s.n - s.l - Rat(1, 2)) / s.n);
            return in / (s.L * s.h * s.np(3));
        },
        [](const W& w) { return w.I(w.r(-3, w.m(w.R, w.R)), 1); });
    add("ln2(kr)/r", "⟨ln²(κr)/r⟩", mz(1), 0,
        [lam, G](const S& s) {
            long n = s.n.to_long(), l = s.l.to_long();
            SymExpr Hnl = H(n + l);
            Rat h = harmonic(n + l), h2 = harmonic(n + l, 2);
            SymExpr in = lam() * lam() + lam() * (Hnl - G()) * Rat(2) + SymExpr(h * h - h2) +
                         (H(n - l - 1) - G()) * (Rat(2) * h) -
                         SymExpr(Rat(2) * diharmonic(DiSign::Minus, n - l - 1, n + l - 1)) + G() * G() +
                         SymExpr::zeta2();
            return in / s.np(2);
        },
        [](const W& w) { return w.I(w.r(-1, w.m(w.R, w.R)), 2); });
    add("ln(kr)*dr", "⟨ln(κr) ∂_r⟩", mz(1), 0,
        [lam, G](const S& s) {
            long n = s.n.to_long(), l = s.l.to_long();
            return -(lam() + H(n + l) - G() + SymExpr(Rat(1, 2))) / s.np(2);
        },
        [](const W& w) { return w.I(w.m(w.R, w.R1), 1); });

    // ---- Coulomb potential V = −Zα/r; ℓ = 0 entries with V̄ live in dimreg
    add("V", "⟨V⟩", {1, 2, 0}, 0, [](const S& s) { return Rat(-1) / s.np(2); },
        [](const W& w) { return w.I(w.m(w.R, w.o.V(w.R))); });
    add("V^2", "⟨V²⟩", {2, 4, 0}, 0, [](const S& s) { return Rat(1) / (s.h * s.np(3)); },
        [](const W& w) { return w.I(w.m(w.o.V(w.R), w.o.V(w.R))); });
    auto v3 = [](const S& s) { return Rat(-1) / (s.L * s.h * s.np(3)); };
    auto vp2 = [](const S& s) { return (Rat(3) * s.np(2) - s.L) / (Rat(2) * s.L * s.D3 * s.np(5)); };
    add("V^3", "⟨V̄³⟩", {3, 6, 0}, 1, v3, [](const W& w) { return w.I(w.r(-3, w.m(w.R, w.R)) * Rat(-1)); }, true);
    add("V*V'", "⟨V̄ V̄′⟩", {3, 5, 0}, 1, v3, [](const W& w) { return w.I(w.r(-3, w.m(w.R, w.R)) * Rat(-1)); },
        true);
    add("V'^2", "⟨(V̄′)²⟩", {4, 6, 0}, 1, vp2, [](const W& w) { return w.I(w.r(-4, w.m(w.R, w.R))); }, true);
    add("V^2*dr2", "⟨V̄² ∂_r²⟩", {4, 6, 0}, 0,
        [](const S& s) {
            return (Rat(-2) * s.np(2) - Rat(1) + Rat(2) * s.L) / (Rat(4) * s.D3 * s.np(5)) -
                   Rat(2) * s.d0 / s.np(3);
        },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R, w.R2))); }, true);
    add("p_i*V*p_i", "⟨p_i V p_i⟩", {3, 4, 0}, 0,
        [](const S& s) { return Rat(1) / s.np(4) - Rat(2) / (s.h * s.np(3)) + Rat(2) * s.d0 / s.np(3); },
        [](const W& w) { return w.I(w.r(-1, w.grad2()) * Rat(-1)); });
    add("V*p2*V", "⟨V̄ p² V̄⟩ = ⟨p_i V̄² p_i⟩", {4, 6, 0}, 0,
        [](const S& s) {
            return (Rat(8) * s.np(2) + Rat(1) - Rat(4) * s.L) / (Rat(4) * s.D3 * s.np(5)) + Rat(8) * s.d0 / s.np(3);
        },
        [](const W& w) {
            if (w.L.is_zero()) return w.I(w.r(-2, w.grad2()));
            Fn VR = w.o.V(w.R), dVR = w.o.d(VR), VRr = w.r(-1, VR);
            return w.I(w.m(dVR, dVR) + w.m(VRr, VRr) * w.L);
        });
    add("p2*V", "⟨p² V⟩ = ⟨V p²⟩", {3, 4, 0}, 0,
        [](const S& s) { return Rat(1) / s.np(4) - Rat(2) / (s.h * s.np(3)); },
        [](const W& w) { return w.I(w.m(w.P, w.o.V(w.R))); });
    add("p4*V", "⟨p⁴ V̄⟩ = ⟨V̄ p⁴⟩", {5, 6, 0}, 0,
        [](const S& s) {
            return (Rat(-4) * s.np(2) - Rat(2) + Rat(4) * s.L) / (s.D3 * s.np(5)) - Rat(1) / s.np(6) -
                   Rat(16) * s.d0 / s.np(3);
        },
        [](const W& w) {
            if (w.L.is_zero()) {
                // ⟨V p²p²⟩ = 2E⟨V p²⟩ − 2⟨V p² V⟩
                Rat E = w.o.energy();
                SymExpr vp2 = w.I(w.m(w.o.V(w.R), w.P));
                return vp2 * (Rat(2) * E) - w.I(w.r(-2, w.grad2())) * Rat(2);
            }
            return w.I(w.m(w.P, w.o.p2(w.o.V(w.R))));
        });
    add("V^2*p2", "⟨V̄² p²⟩ = ⟨p² V̄²⟩", {4, 6, 0}, 1,
        [](const S& s) { return (Rat(2) * s.np(2) - s.L) / (s.L * s.h * s.np(5)); },
        [](const W& w) { return w.I(w.r(-2, w.m(w.R, w.P))); }, true);
    add("p_i*V*p_i*V", "⟨p_i V̄ p_i V̄⟩", {4, 6, 0}, 1,
        [v3](const S& s) {
            return (Rat(4) * s.np(2) + Rat(2) - Rat(4) * s.L) / (Rat(4) * s.D3 * s.np(5)) +
                   Rat(4) * s.d0 / s.np(3) - v3(s);
        },
        [](const W& w) { return w.I(w.r(-2, w.grad2()) - w.r(-3, w.m(w.R1, w.R))); }, true);
    add("drdag*V*dr*V", "⟨∂_r† V̄ ∂_r V̄⟩", {4, 6, 0}, 1,
        [vp2](const S& s) {
            return (Rat(2) * s.np(2) + Rat(1) - Rat(2) * s.L) / (Rat(4) * s.D3 * s.np(5)) +
                   Rat(4) * s.d0 / s.np(3) - vp2(s) / Rat(2);
        },
        [](const W& w) { return w.I(w.m(w.R1, w.o.V(w.o.d(w.o.V(w.R))))); }, true);
    add("p2*V*p2", "⟨p² V̄ p²⟩", {5, 6, 0}, 1,
        [](const S& s) {
            return Rat(-1) / s.np(6) + Rat(4) / (s.h * s.np(5)) - Rat(4) / (s.L * s.h * s.np(3));
        },
        [](const W& w) { return w.I(w.r(-1, w.m(w.P, w.P)) * Rat(-1)); }, true);
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& coulomb_catalog() {
    static const std::vector<CatalogEntry> table = build();
    return table;
}

const CatalogEntry& catalog_entry(const std::string& tag) {
    for (const auto& e : coulomb_catalog())
        if (e.tag == tag) return e;
    std::string valid;
    for (const auto& e : coulomb_catalog()) valid += (valid.empty() ? "" : ", ") + e.tag;
    throw CatalogError("unknown operator tag '" + tag + "'; valid tags: " + valid);
}

namespace {

void check_validity(const CatalogEntry& e, const QuantumState& st) {
    if (st.l < e.min_l)
        throw RequiresDimregError(e.description + " at ℓ = " + std::to_string(st.l) +
                                  " is not finite in three dimensions (needs ℓ ≥ " + std::to_string(e.min_l) +
                                  "); use the dimreg evaluation");
}

}  // namespace

Value expectation_closed(const std::string& tag, const QuantumState& st) {
    const auto& e = catalog_entry(tag);
    check_validity(e, st);
    return {e.closed(st), e.units};
}

Value expectation_oracle(const std::string& tag, const QuantumState& st) {
    const auto& e = catalog_entry(tag);
    check_validity(e, st);
    if (st.l == 0 && e.dimreg_at_l0)
        throw RequiresDimregError(e.description + " for S states takes its value from D dimensions");
    return {e.oracle(st), e.units};
}

}  // namespace boundstate
