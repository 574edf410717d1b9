#include <map>

#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

namespace {

constexpr long kMaxN = 20;

using Mid = std::function<RExpr(const RExpr&)>;

RExpr R() { return RExpr::psi(); }
Mid times_V() {
    return [](const RExpr& x) { return x.V(); };
}
Mid times_r4e() {
    return [](const RExpr& x) { return x.rpow(0, 4); };
}

// Pieces of the ℓ-general closed forms; all in units m_r = Zα = 1.
struct Shape {
    Rat n, l, L, h, D7;
    explicit Shape(const QuantumState& st)
        : n(st.n), l(st.l), L(st.L()), h(Rat(2 * st.l + 1, 2)),
          D7((Rat(st.l) - Rat(1, 2)) * h * (Rat(st.l) + Rat(3, 2))) {}
    Rat n3() const { return n.pow(3); }
    Rat n4() const { return n.pow(4); }
    Rat n5() const { return n.pow(5); }
    Rat n6() const { return n.pow(6); }
    // num / (4 (ℓ−½)(ℓ+½)(ℓ+³⁄₂) n⁵)
    Rat f4(const Rat& num) const { return num / (Rat(4) * D7 * n5()); }
    // ⟨V̄³⟩ at ℓ > 0
    Rat v3() const { return Rat(-1) / (L * h * n3()); }
};

// Finite 3D part X and the multiple w of ⟨V̄³⟩/β² in the anomalous block.
struct Anomalous {
    Rat x;
    Rat w;
};

using AnomalousFn = Anomalous (*)(const Shape&, bool l0);

struct Entry {
    DivergentOp op;
    std::function<Integrand(long)> integrand;  // direct form; p⁶ and p⁴V̄ evaluate through composites
    // ℓ = 0 tabulated data, normalized units
    std::function<EpsSeries(const Shape&)> table;
    AnomalousFn anomalous = nullptr;
};

EpsSeries laurent(const Rat& pole, const SymExpr& finite) { return EpsSeries(-1, 0, {SymExpr(pole), finite}); }

SymExpr lam() { return SymExpr::log_scale("mu"); }

// {−1/ε − 4Λ + 4H_n − 2/n − 4}
EpsSeries v3_brace(const Shape& s) {
    long n = s.n.to_long();
    return laurent(Rat(-1), lam() * Rat(-4) + SymExpr(Rat(4) * harmonic(n) - Rat(2) / s.n - Rat(4)));
}

EpsSeries vp2_brace(const Shape& s) {
    long n = s.n.to_long();
    return laurent(Rat(-2), lam() * Rat(-8) + SymExpr(Rat(8) * harmonic(n) + Rat(4, 3) / s.n.pow(2) -
                                                      Rat(4) / s.n - Rat(16, 3)));
}

// ⟨V̄³⟩/β² with μ̄^{−2ε}: the β^{−2} = μ̄^{−4ε}(1 − 2ε(γ_E + 2 ln 2 + ln π) + …) expansion folded in
EpsSeries w_series(const Shape& s) {
    SymExpr a = (SymExpr::gamma_e() + SymExpr::ln2() * Rat(2) + SymExpr::lnpi()) * Rat(-2);
    return mul_to(v3_brace(s), EpsSeries::linear(SymExpr(1), a, 1), 0);
}

EpsSeries finite(const Rat& absolute, const Shape& s) {
    return EpsSeries::constant(SymExpr(absolute * s.n3()), 0);
}

Rat delta(bool l0, const Rat& v) { return l0 ? v : Rat(0); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        auto add = [&](DivergentOp op, std::function<Integrand(long)> f, std::function<EpsSeries(const Shape&)> tab,
                       AnomalousFn an = nullptr) { t.push_back(Entry{std::move(op), std::move(f), std::move(tab), an}); };

        add({"V^3", "⟨V̄³⟩", Units{3, 6, 0}, "V^3"},
            [](long) { return inner(R(), R().V().V().V()); }, v3_brace);
        add({"V*V'", "⟨V̄ V̄′⟩", Units{3, 5, 0}, "V*V'"},
            [](long) { return inner(R(), R().Vprime().V()); },
            [](const Shape& s) {
                return laurent(Rat(-2), lam() * Rat(-4) + SymExpr(Rat(4) * harmonic(s.n.to_long()) -
                                                                  Rat(2) / s.n - Rat(2)));
            });
        add({"V'^2", "⟨(V̄′)²⟩", Units{4, 6, 0}, "V'^2"},
            [](long) { return inner(R().Vprime(), R().Vprime()); }, vp2_brace);
        add({"V^2*p2", "⟨V̄² p²⟩", Units{4, 6, 0}, "V^2*p2"},
            [](long l) { return inner(R().V().V(), R().p2(l)); },
            [](const Shape& s) {
                return laurent(Rat(2), lam() * Rat(8) + SymExpr(Rat(-8) * harmonic(s.n.to_long()) + Rat(4) / s.n -
                                                                Rat(2) / s.n.pow(2) + Rat(8)));
            });
        add({"p2*V*p2", "⟨p² V̄ p²⟩", Units{5, 6, 0}, "p2*V*p2"},
            [](long l) { return inner(R().p2(l), R().p2(l).V()); },
            [](const Shape& s) {
                return laurent(Rat(-4), lam() * Rat(-16) +
                                            SymExpr(Rat(16) * harmonic(s.n.to_long()) - Rat(8) / s.n -
                                                    Rat(1) / s.n3() + Rat(8) / s.n.pow(2) - Rat(16)));
            });
        // direct ⟨∇p²ψ|∇p²ψ⟩: diverges at ℓ = 0 even in D dimensions
        add({"p6", "⟨p⁶⟩", Units::mza(6), "p6"},
            [](long l) { return inner_grad(R().p2(l), R().p2(l), l); },
            [](const Shape& s) {
                return finite(Rat(5) / s.n6() - Rat(8) / (s.h * s.n5()) + s.f4(Rat(4) * (Rat(8) * s.n * s.n + 1)) +
                                  Rat(32) / s.n3(),
                              s);
            });
        // direct ⟨p²ψ|p²(V̄ψ)⟩; the evaluation goes through the Schrödinger rewrite
        add({"p4*V", "⟨p⁴ V̄⟩", Units{5, 6, 0}, "p4*V"},
            [](long l) { return inner(R().p2(l), R().V().p2(l)); },
            [](const Shape& s) {
                return finite(s.f4(Rat(4) * (Rat(-4) * s.n * s.n - 2)) - Rat(1) / s.n6() - Rat(16) / s.n3(), s);
            });
        add({"V*p2*V", "⟨V̄ p² V̄⟩", Units{4, 6, 0}, "V*p2*V"},
            [](long l) { return inner_grad(R().V(), R().V(), l); },
            [](const Shape& s) { return finite(s.f4(Rat(8) * s.n * s.n + 1) + Rat(8) / s.n3(), s); });
        add({"p_i*V^2*p_i", "⟨p_i V̄² p_i⟩", Units{4, 6, 0}, "V*p2*V"},
            [](long l) { return inner_grad(R(), R(), l, [](const RExpr& x) { return x.V().V(); }); },
            [](const Shape& s) { return finite(s.f4(Rat(8) * s.n * s.n + 1) + Rat(8) / s.n3(), s); });
        add({"p_i*V*p_i*V", "⟨p_i V̄ p_i V̄⟩", Units{4, 6, 0}, "p_i*V*p_i*V"},
            [](long l) { return inner_grad(R(), R().V(), l, times_V()); },
            [](const Shape& s) {
                return finite(s.f4(Rat(4) * s.n * s.n + 2) + Rat(4) / s.n3(), s) - v3_brace(s);
            });
        add({"drdag*V*dr*V", "⟨∂_r† V̄ ∂_r V̄⟩", Units{4, 6, 0}, "drdag*V*dr*V"},
            [](long) { return inner(R().d(), R().V().d().V()); },
            [](const Shape& s) {
                return finite(s.f4(Rat(2) * s.n * s.n + 1) + Rat(4) / s.n3(), s) - vp2_brace(s) * Rat(1, 2);
            });
        add({"V^2*dr2", "⟨V̄² ∂_r²⟩", Units{4, 6, 0}, "V^2*dr2"},
            [](long) { return inner(R().V().V(), R().d().d()); },
            [](const Shape& s) { return finite(s.f4(Rat(-2) * s.n * s.n - 1) - Rat(2) / s.n3(), s); });

        // finite in 3D, but the D → 3 limit and the expectation value do not commute at ℓ = 0
        auto anom = [&](std::string tag, std::string desc, Units u, std::function<Integrand(long)> f, AnomalousFn fn) {
            DivergentOp op{std::move(tag), std::move(desc), u, "", true};
            add(std::move(op), std::move(f), nullptr, fn);
        };
        anom("r^(-2+4e)*dr2", "⟨r^{−2+4ε} ∂_r²⟩", Units::mza(4),
             [](long) { return inner(R().rpow(-2, 4), R().d().d()); },
             [](const Shape& s, bool l0) {
                 return Anomalous{s.f4(Rat(-2) * s.n * s.n - 1 + Rat(2) * s.L) - delta(l0, Rat(2) / s.n3()), 0};
             });
        anom("r^(-2+4e)*p2", "⟨r^{−2+4ε} p²⟩", Units::mza(4),
             [](long l) { return inner(R().rpow(-2, 4), R().p2(l)); },
             [](const Shape& s, bool) { return Anomalous{Rat(-1) / (s.h * s.n5()), -2}; });
        anom("r^(-1+4e)*dr3", "⟨r^{−1+4ε} ∂_r³⟩", Units::mza(4),
             [](long) { return inner(R().rpow(-1, 4), R().d().d().d()); },
             [](const Shape& s, bool l0) {
                 return Anomalous{s.f4(Rat(3) * s.n * s.n + Rat(3, 2) - Rat(3) * s.L) + delta(l0, Rat(4) / s.n3()), 0};
             });
        anom("r^(4e)*dr2*V", "⟨r^{4ε} ∂_r² V̄⟩", Units{3, 4, 0},
             [](long) { return inner(R().rpow(0, 4), R().V().d().d()); },
             [](const Shape& s, bool) { return Anomalous{Rat(-1) / s.n4() + Rat(1) / (s.h * s.n3()), 2}; });
        anom("r^(4e)*dr2*p2", "⟨r^{4ε} ∂_r² p²⟩", Units::mza(4),
             [](long l) { return inner(R().rpow(0, 4), R().p2(l).d().d()); },
             [](const Shape& s, bool) {
                 return Anomalous{-(Rat(1) + s.L) / (s.h * s.n5()) + Rat(3) / s.n4() - Rat(2) / (s.h * s.n3()), -4};
             });
        anom("r^(4e)*p2*V", "⟨r^{4ε} p² V̄⟩", Units{3, 4, 0},
             [](long l) { return inner(R().rpow(0, 4), R().V().p2(l)); },
             [](const Shape& s, bool l0) {
                 return Anomalous{Rat(1) / s.n4() - Rat(2) / (s.h * s.n3()) + delta(l0, Rat(4) / s.n3()), 0};
             });
        anom("r^(4e)*p4", "⟨r^{4ε} p⁴⟩", Units::mza(4),
             [](long l) { return inner(R().rpow(0, 4).p2(l), R().p2(l)); },
             [](const Shape& s, bool l0) {
                 return Anomalous{Rat(-3) / s.n4() + Rat(4) / (s.h * s.n3()) - delta(l0, Rat(8) / s.n3()), 0};
             });
        anom("r^(-1+4e)*dr*V", "⟨r^{−1+4ε} ∂_r V̄⟩", Units{3, 4, 0},
             [](long) { return inner(R().rpow(-1, 4), R().V().d()); },
             [](const Shape&, bool) { return Anomalous{0, -1}; });
        anom("p_i*r^(4e)*p_i*V", "⟨p_i r^{4ε} p_i V̄⟩", Units{3, 4, 0},
             [](long l) { return inner_grad(R(), R().V(), l, times_r4e()); },
             [](const Shape& s, bool) { return Anomalous{Rat(1) / s.n4() - Rat(2) / (s.h * s.n3()), 0}; });
        anom("r^(4e)*p_i*V*p_i", "⟨r^{4ε} p_i V̄ p_i⟩", Units{3, 4, 0},
             [](long l) { return inner_grad(R().rpow(0, 4), R(), l, times_V()); },
             [](const Shape& s, bool l0) {
                 return Anomalous{Rat(1) / s.n4() - Rat(2) / (s.h * s.n3()) + delta(l0, Rat(2) / s.n3()), 0};
             });
        anom("r^(-1+4e)*dr*p2", "⟨r^{−1+4ε} ∂_r p²⟩", Units::mza(4),
             [](long l) { return inner(R().rpow(-1, 4), R().p2(l).d()); },
             [](const Shape& s, bool) { return Anomalous{Rat(1) / (Rat(2) * s.h * s.n5()), 2}; });
        return t;
    }();
    return table;
}

const Entry& entry(const std::string& tag) {
    for (const auto& e : entries())
        if (e.op.tag == tag) return e;
    std::string valid;
    for (const auto& e : entries()) valid += (valid.empty() ? "" : ", ") + e.op.tag;
    throw CatalogError("unknown divergent operator tag '" + tag + "'; valid tags: " + valid);
}

void check_state(const QuantumState& st) {
    if (st.l == 0 && st.n > kMaxN)
        throw UnsupportedError("ℓ = 0 split evaluation is capped at n ≤ " + std::to_string(kMaxN));
}

// ⟨p⁶⟩ = 4⟨(E−V̄)ψ|p²|(E−V̄)ψ⟩ with ⟨V̄p²V̄⟩ taken as ⟨p_i V̄² p_i⟩; every piece is finite.
SplitResult p6_composite(const QuantumState& st) {
    long l = st.l;
    Rat E = Rat(-1, 2 * st.n * st.n);
    auto at0 = [&](const Integrand& f) { return split_expectation(f, st).series.coeff(0); };
    SymExpr p2 = at0(inner_grad(R(), R(), l));
    SymExpr vp2 = at0(inner(R().V(), R().p2(l)));
    SymExpr pv2p = at0(inner_grad(R(), R(), l, [](const RExpr& x) { return x.V().V(); }));
    SymExpr v = (p2 * (E * E) - vp2 * (Rat(2) * E) + pv2p) * Rat(4);
    return SplitResult{EpsSeries::constant(v, 0), 2, 0};
}

// ⟨p⁴V̄⟩ = 2E⟨p²V̄⟩ − 2⟨p_i V̄² p_i⟩. Applying p² to V̄ψ radially misses the
// δ-function in ∇² r^{−1+2ε}, so the direct form is off by a contact term at ℓ = 0.
SplitResult p4v_composite(const QuantumState& st) {
    long l = st.l;
    Rat E = Rat(-1, 2 * st.n * st.n);
    auto at0 = [&](const Integrand& f) { return split_expectation(f, st).series.coeff(0); };
    SymExpr p2v = at0(inner(R().p2(l), R().V()));
    SymExpr pv2p = at0(inner_grad(R(), R(), l, [](const RExpr& x) { return x.V().V(); }));
    SymExpr v = p2v * (Rat(2) * E) - pv2p * Rat(2);
    return SplitResult{EpsSeries::constant(v, 0), 2, 0};
}

}  // namespace

const std::vector<DivergentOp>& divergent_catalog() {
    static const std::vector<DivergentOp> ops = [] {
        std::vector<DivergentOp> v;
        for (const auto& e : entries()) v.push_back(e.op);
        return v;
    }();
    return ops;
}

const DivergentOp& divergent_op(const std::string& tag) { return entry(tag).op; }

Integrand divergent_integrand(const std::string& tag, long l) { return entry(tag).integrand(l); }

SplitResult divergent_table(const std::string& tag, const QuantumState& st) {
    const Entry& e = entry(tag);
    if (st.l != 0) throw DomainError("divergent_table holds ℓ = 0 data only");
    Shape s(st);
    if (e.anomalous) {
        Anomalous a = e.anomalous(s, true);
        EpsSeries v = EpsSeries::constant(SymExpr(a.x * s.n3()), 0);
        if (!a.w.is_zero()) v += w_series(s) * a.w;
        return SplitResult{v, -2, 0};
    }
    return SplitResult{e.table(s), 2, 0};
}

SplitResult divergent_split(const std::string& tag, const QuantumState& st) {
    check_state(st);
    if (tag == "p6") return p6_composite(st);
    if (tag == "p4*V") return p4v_composite(st);
    return split_expectation(entry(tag).integrand(st.l), st);
}

DivergentValue divergent_expectation(const std::string& tag, const QuantumState& st) {
    const Entry& e = entry(tag);
    DivergentValue out;
    if (st.l == 0) {
        out.laurent = true;
        out.split = divergent_split(tag, st);
        return out;
    }
    if (!e.op.catalog_tag.empty()) {
        out.exact = expectation_closed(e.op.catalog_tag, st);
        return out;
    }
    Shape s(st);
    Anomalous a = e.anomalous(s, false);
    out.exact = Value{SymExpr(a.x + a.w * s.v3()), e.op.units};
    return out;
}

}  // namespace boundstate
