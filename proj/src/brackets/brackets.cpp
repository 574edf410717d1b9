#include <map>

#include "boundstate/brackets.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

namespace {

struct Q {
    Rat n, l, L, h;  // h = ℓ + ½
    Rat d0, d1;
    Rat D3;  // (ℓ−½)(ℓ+½)(ℓ+3/2)
    explicit Q(const QuantumState& st)
        : n(st.n), l(st.l), L(st.L()), h(Rat(st.l) + Rat(1, 2)), d0(st.l == 0 ? 1 : 0), d1(st.l == 1 ? 1 : 0),
          D3((Rat(st.l) - Rat(1, 2)) * h * (Rat(st.l) + Rat(3, 2))) {}
    Rat np(int k) const { return n.pow(k); }
};

BracketValue exact(SymExpr c, Units u) { return BracketValue{false, {}, 0, Value{std::move(c), u}}; }

BracketValue laurent(EpsSeries s, int mubar, int pi_power) {
    return BracketValue{true, SplitResult{std::move(s), mubar, 0}, pi_power, Value{}};
}

// Kernel × coordinate expectation: the kernel's rational prefactor and π power fold into the Value.
Value scaled(const Value& v, const Rat& c, int pi_power) {
    return Value{v.coeff * c, Units{v.units.mr, v.units.za, v.units.pi + pi_power}};
}

Value add(const Value& a, const Value& b) {
    if (!(a.units == b.units))
        throw InternalError("bracket reduction adds values with units " + a.units.str() + " and " + b.units.str());
    return Value{a.coeff + b.coeff, a.units};
}

Value oracle(const std::string& tag, const QuantumState& st) { return expectation_oracle(tag, st); }

std::string rtag(long k) { return k == 1 ? "r" : "r^" + std::to_string(k); }

// ⟨p_{2i} K_ij(q) p_{1j}⟩ for a rank-0 (contracted with δ_ij) or rank-2 kernel in D = 3
Value sandwich(const FourierKernel& k, const QuantumState& st) {
    Rat pre = k.prefactor_at_3d();
    std::string f = rtag(k.r_const);
    Value out = scaled(oracle("p_i*" + f + "*p_i", st), pre * k.terms[0].coeff.coeff(0).as_rational(), k.pi_power);
    if (k.rank == 2) {
        Rat cx = k.terms[1].coeff.coeff(0).as_rational();
        out = add(out, scaled(oracle("drdag*" + f + "*dr", st), pre * cx, k.pi_power));
    }
    return out;
}

// ⟨K(q)⟩ for a scalar kernel in D = 3
Value scalar(long alpha, const QuantumState& st) {
    FourierKernel k = fourier_kernel(alpha, 0, false);
    return scaled(oracle(rtag(k.r_const), st), k.prefactor_at_3d(), k.pi_power);
}

// 4[E²⟨V̄⟩ − 2E⟨V̄²⟩ + ⟨V̄³⟩] = ⟨p²V̄p²⟩ with p²ψ = 2(Ē − V̄)ψ on both sides
EpsSeries p2vp2_by_schrodinger(const QuantumState& st) {
    const RExpr R = RExpr::psi();
    EpsSeries E = energy_expansion(st);
    auto ev = [&](const RExpr& b) {
        SplitResult s = split_expectation(inner(R, b), st);
        if (s.mubar != 2) throw InternalError("p²V̄p² reduction: unexpected μ̄ power");
        return s.series;
    };
    EpsSeries v1 = ev(R.V()), v2 = ev(R.V().V()), v3 = ev(R.V().V().V());
    EpsSeries out = mul_to(mul_to(E, E, 1), v1, 0) - mul_to(E, v2, 0) * Rat(2) + v3;
    return out * Rat(4);
}

// ⟨(p₂·q)(q·p₁)/q²⟩ for S states in D dims: Γ(D/2)/(2π^{D/2}) (1 − D)⟨∂_r ψ| r^{−D} |∂_r ψ⟩;
// the δ^D(x) trace part drops because ∇ψ̄ vanishes at the origin.
EpsSeries qq_over_q2_s_state(const QuantumState& st) {
    const RExpr R = RExpr::psi();
    SplitResult s = split_expectation(inner(R.d(), R.d().rpow(-3, 2)), st);
    if (s.mubar != 0) throw InternalError("tensor bracket: unexpected μ̄ power");
    // Γ(3/2−ε)/(2π^{3/2−ε}) = (1/(4π)) (1 + ε(ln π − ψ(3/2))), ψ(3/2) = 2 − γ − 2 ln 2
    SymExpr psi32 = SymExpr(2) - SymExpr::gamma_e() - SymExpr::ln2() * Rat(2);
    EpsSeries pre = EpsSeries::linear(SymExpr(1), SymExpr::lnpi() - psi32, 1) * Rat(1, 4);
    EpsSeries oneD = EpsSeries::linear(SymExpr(-2), SymExpr(2), 1);
    return mul_to(mul_to(pre, oneD, 1), s.series, 0);
}

struct Entry {
    BracketSpec spec;
    std::function<BracketValue(const QuantumState&)> closed;
    std::function<BracketValue(const QuantumState&)> reduced;
};

std::vector<Entry> build() {
    std::vector<Entry> v;
    auto add_entry = [&](std::string tag, std::string desc, Units u, std::string red, auto closed, auto reduced) {
        v.push_back(Entry{BracketSpec{std::move(tag), std::move(desc), u, std::move(red)}, closed, reduced});
    };
    auto ex = [](Units u, auto f) {
        return [u, f](const QuantumState& st) { return exact(SymExpr(f(Q(st))), u); };
    };
    auto red = [](auto f) {
        return [f](const QuantumState& st) {
            Value val = f(st);
            return exact(val.coeff, val.units);
        };
    };

    const Units u2{2, 2, -2}, u1{1, 1, -1}, um1{-1, -1, -1}, u3{3, 3, -1}, u4{4, 4, -2}, u5{5, 5, -1};

    add_entry("1/|q|", "⟨1/|q|⟩", u2, "catalog:r^-2",
              ex(u2, [](const Q& q) { return Rat(1) / (Rat(2) * q.h * q.np(3)); }),
              red([](const QuantumState& st) { return scalar(1, st); }));
    add_entry("1/q^2", "⟨1/q²⟩", u1, "catalog:r^-1",
              ex(u1, [](const Q& q) { return Rat(1) / (Rat(4) * q.np(2)); }),
              red([](const QuantumState& st) { return scalar(2, st); }));
    add_entry("1/q^4", "⟨1/q⁴⟩", um1, "catalog:r (D-dimensional kernel, finite D → 3 limit)",
              ex(um1, [](const Q& q) { return -(Rat(3) * q.np(2) - q.L) / Rat(16); }),
              red([](const QuantumState& st) {
                  // Γ(−½−ε)/(16π^{D/2}) r^{1+2ε}; both factors finite, so the limit is the product
                  FourierKernel k = fourier_kernel(4, 0, true);
                  return scaled(oracle("r", st), k.prefactor_at_3d(), k.pi_power);
              }));
    add_entry("ln q", "⟨ln(q/κ)⟩", u3, "closed form; ℓ>0: catalog:r^-3",
              [](const QuantumState& st) {
                  Value val = bracket_lnq(st);
                  return exact(val.coeff, val.units);
              },
              red([](const QuantumState& st) {
                  if (st.l == 0)
                      throw DivergenceError("FT[ln q] ∝ 1/r³ has an S-state expectation value not regulated by "
                                            "dimensional regularization; see bracket_lnq_oracle");
                  FourierKernel k = fourier_kernel_log();
                  return scaled(oracle("r^-3", st), k.prefactor_at_3d(), k.pi_power);
              }));
    add_entry("ln q/q^2", "⟨ln(q/κ)/q²⟩", u1, "catalog:ln(kr)/r, catalog:r^-1",
              [](const QuantumState& st) {
                  Q q(st);
                  SymExpr c = -SymExpr::log_scale("kappa") - SymExpr(harmonic(st.n + st.l));
                  return exact(c / (Rat(4) * q.np(2)), Units{1, 1, -1});
              },
              red([](const QuantumState& st) {
                  // K(c − ln(κr)) with ln(q/κ) = ln q − ln κ
                  FourierKernel k = fourier_kernel(2, 0, false);
                  Value a = oracle("r^-1", st), b = oracle("ln(kr)/r", st);
                  Value sum{fourier_log_shift(2) * a.coeff.as_rational() - b.coeff, a.units};
                  return scaled(sum, k.prefactor_at_3d(), k.pi_power);
              }));
    add_entry("p2.p1", "⟨p₂·p₁⟩", u5, "catalog:p_i*delta3*p_i",
              ex(u5, [](const Q& q) { return q.d1 * (q.np(2) - Rat(1)) / (Rat(3) * q.np(5)); }),
              // FT[1] = δ³(x), the α = 0 delta-type case taken by hand. The bracket is |∫p ψ(p)|²,
              // which sees the angular mean of ∇ψ at the origin: zero across the S-state cusp.
              red([](const QuantumState& st) {
                  Value v = oracle("p_i*delta3*p_i", st);
                  if (st.l == 0) v.coeff = SymExpr();
                  return v;
              }));
    add_entry("p2.p1/|q|", "⟨p₂·p₁/|q|⟩", u4, "catalog:p_i*r^-2*p_i",
              ex(u4,
                 [](const Q& q) {
                     return ((Rat(8) * q.np(2) - Rat(4) * q.L + Rat(1)) / (Rat(4) * q.D3 * q.np(5)) +
                             Rat(8) * q.d0 / q.np(3)) /
                            Rat(2);
                 }),
              red([](const QuantumState& st) { return sandwich(fourier_kernel(1, 0, false), st); }));
    add_entry("(p2.q)(q.p1)/|q|^3", "⟨(p₂·q)(q·p₁)/|q|³⟩", u4, "catalog:p_i*r^-2*p_i, catalog:drdag*r^-2*dr",
              ex(u4, [](const Q& q) { return (Rat(4) * q.np(2) - Rat(1)) / (Rat(8) * q.D3 * q.np(5)); }),
              red([](const QuantumState& st) { return sandwich(fourier_kernel(3, 2, false), st); }));
    add_entry("p2.p1/q^2", "⟨p₂·p₁/q²⟩", u3, "catalog:p_i*r^-1*p_i",
              ex(u3,
                 [](const Q& q) {
                     return (Rat(2) / (q.h * q.np(3)) - Rat(1) / q.np(4) - Rat(2) * q.d0 / q.np(3)) / Rat(4);
                 }),
              red([](const QuantumState& st) { return sandwich(fourier_kernel(2, 0, false), st); }));
    add_entry("(p2.q)(q.p1)/q^4", "⟨(p₂·q)(q·p₁)/q⁴⟩", u3, "catalog:p_i*r^-1*p_i, catalog:drdag*r^-1*dr",
              ex(u3, [](const Q& q) { return (Rat(1) / (q.h * q.np(3)) - Rat(2) * q.d0 / q.np(3)) / Rat(8); }),
              red([](const QuantumState& st) { return sandwich(fourier_kernel(4, 2, false), st); }));
    add_entry("(p2^2p1^2-(p2.p1)^2)/q^4", "⟨(p₂²p₁² − (p₂·p₁)²)/q⁴⟩", u3,
              "(p₂·p₁)q² − (p₂·q)(q·p₁) = p₂²p₁² − (p₂·p₁)²",
              ex(u3,
                 [](const Q& q) {
                     return (Rat(-1) / q.n + Rat(3) / (Rat(2) * q.h) - q.d0) / (Rat(4) * q.np(3));
                 }),
              red([](const QuantumState& st) {
                  Value a = sandwich(fourier_kernel(2, 0, false), st);
                  Value b = sandwich(fourier_kernel(4, 2, false), st);
                  return add(a, scaled(b, Rat(-1), 0));
              }));

    // tied to divergent quantities
    add_entry(
        "(p2^2-p1^2)^2/q^2", "⟨(p₂² − p₁²)²/q²⟩", u5, "dimreg:V'^2",
        [](const QuantumState& st) {
            DivergentValue d = divergent_expectation("V'^2", st);
            if (d.laurent) return laurent(d.split.series, d.split.mubar - 2, -1);
            return exact(d.exact.coeff, Units{d.exact.units.mr + 1, d.exact.units.za - 1, d.exact.units.pi - 1});
        },
        [](const QuantumState& st) {
            if (st.l == 0) {
                // −(1/(4πμ̄^{2ε}))[⟨p⁴V̄⟩ + ⟨V̄p⁴⟩ − 2⟨p²V̄p²⟩]
                SplitResult p4v = divergent_split("p4*V", st);
                return laurent((p2vp2_by_schrodinger(st) - p4v.series) * Rat(1, 2), p4v.mubar - 2, -1);
            }
            Value a = oracle("p4*r^-1", st), b = oracle("p2*r^-1*p2", st);
            Value d = add(a, scaled(b, Rat(-1), 0));
            return exact(d.coeff * Rat(1, 2), Units{d.units.mr, d.units.za, d.units.pi - 1});
        });
    add_entry(
        "p2^2p1^2/q^2", "⟨p₂² p₁²/q²⟩", u5, "dimreg:p2*V*p2",
        [](const QuantumState& st) {
            DivergentValue d = divergent_expectation("p2*V*p2", st);
            if (d.laurent) return laurent(d.split.series * Rat(-1, 4), d.split.mubar - 2, -1);
            return exact(d.exact.coeff * Rat(-1, 4),
                         Units{d.exact.units.mr, d.exact.units.za - 1, d.exact.units.pi - 1});
        },
        [](const QuantumState& st) {
            if (st.l == 0) return laurent(p2vp2_by_schrodinger(st) * Rat(-1, 4), 0, -1);
            Value b = oracle("p2*r^-1*p2", st);
            return exact(b.coeff * Rat(1, 4), Units{b.units.mr, b.units.za, b.units.pi - 1});
        });
    add_entry(
        "(p2^2p1^2-(p2.p1)^2)/q^2", "⟨(p₂²p₁² − (p₂·p₁)²)/q²⟩", u5, "dimreg:V'^2",
        [](const QuantumState& st) {
            Q q(st);
            DivergentValue d = divergent_expectation("V'^2", st);
            Rat extra = -q.d0 / (Rat(2) * q.np(5)) + (q.np(2) - Rat(1)) * q.d1 / (Rat(6) * q.np(5));
            // a finite c enters the π φ̄²-normalized series as c·n³
            if (d.laurent)
                return laurent(d.split.series * Rat(-1, 4) + EpsSeries::constant(SymExpr(extra * q.np(3)), 0),
                               d.split.mubar - 2, -1);
            return exact(d.exact.coeff * Rat(-1, 4) + SymExpr(extra), Units{5, 5, -1});
        },
        [](const QuantumState& st) {
            // (p₂·p₁) q² − (p₂·q)(q·p₁) over q²; FT[q_i q_j/q²] = δ_ij δ³(x)/3 + (δ_ij − 3x̂_i x̂_j)/(4πr³)
            if (st.l == 0) return laurent(qq_over_q2_s_state(st) * Rat(-1), 0, -1);
            Value pdp = oracle("p_i*delta3*p_i", st);
            Value t = oracle("tensor*r^-3", st);
            return exact(pdp.coeff * Rat(2, 3) - t.coeff * Rat(1, 4), Units{5, 5, -1});
        });
    return v;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = build();
    return e;
}

const Entry& entry(const std::string& tag) {
    for (const auto& e : entries())
        if (e.spec.tag == tag) return e;
    std::string valid;
    for (const auto& e : entries()) valid += (valid.empty() ? "" : ", ") + e.spec.tag;
    throw CatalogError("unknown bracket tag '" + tag + "'; valid tags: " + valid);
}

}  // namespace

const std::vector<BracketSpec>& bracket_catalog() {
    static const std::vector<BracketSpec> specs = [] {
        std::vector<BracketSpec> s;
        for (const auto& e : entries()) s.push_back(e.spec);
        return s;
    }();
    return specs;
}

const BracketSpec& bracket_spec(const std::string& tag) { return entry(tag).spec; }

BracketValue bracket(const std::string& tag, const QuantumState& st) { return entry(tag).closed(st); }

BracketValue bracket_reduced(const std::string& tag, const QuantumState& st) { return entry(tag).reduced(st); }

}  // namespace boundstate
