#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/laguerre.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

namespace {

// Every ε-dependent coefficient in this file is kept through ε¹: enough for a
// simple pole times an O(ε) factor to land correctly at ε⁰.
constexpr int kT = 1;

EpsSeries lin(long a, long b) { return EpsSeries::linear(SymExpr(a), SymExpr(b), kT); }
EpsSeries one() { return EpsSeries::constant(SymExpr(1), kT); }

bool is_zero(const EpsSeries& s) { return s.leading_order() > s.truncation(); }

std::vector<RTerm> merged(const std::vector<RTerm>& in) {
    std::map<std::tuple<int, long, long, int>, EpsSeries> acc;
    for (const auto& t : in) {
        auto key = std::make_tuple(t.m, t.t, t.u, t.k);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, t.c);
        else
            it->second += t.c;
    }
    std::vector<RTerm> out;
    for (const auto& [key, c] : acc) {
        if (is_zero(c)) continue;
        auto [m, t, u, k] = key;
        out.push_back(RTerm{c, m, t, u, k});
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- RExpr

RExpr RExpr::psi() {
    RExpr e;
    e.terms_.push_back(RTerm{one(), 0, 0, 0, 0});
    return e;
}

RExpr RExpr::d() const {
    std::vector<RTerm> out;
    for (const auto& t : terms_) {
        if (t.t != 0 || t.u != 0) out.push_back(RTerm{mul_to(t.c, lin(t.t, t.u), kT), t.m, t.t - 1, t.u, t.k});
        out.push_back(RTerm{t.c, t.m, t.t, t.u, t.k + 1});
    }
    RExpr e;
    e.terms_ = merged(out);
    return e;
}

RExpr RExpr::rpow(long t, long u) const {
    RExpr e = *this;
    for (auto& x : e.terms_) {
        x.t += t;
        x.u += u;
    }
    return e;
}

RExpr RExpr::V() const {
    RExpr e = rpow(-1, 2) * Rat(-1);
    for (auto& x : e.terms_) ++x.m;
    return e;
}

RExpr RExpr::Vprime() const {
    RExpr e = rpow(-2, 2) * lin(1, -2);
    for (auto& x : e.terms_) ++x.m;
    return e;
}

RExpr RExpr::p2(long l) const {
    // −∂² − (D−1)/r ∂ + ℓ(ℓ+D−2)/r²
    RExpr dx = d();
    return dx.d() * Rat(-1) + dx.rpow(-1) * lin(-2, 2) + rpow(-2) * lin(l * (l + 1), -2 * l);
}

RExpr RExpr::operator+(const RExpr& o) const {
    std::vector<RTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    RExpr e;
    e.terms_ = merged(all);
    return e;
}

RExpr RExpr::operator*(const EpsSeries& c) const {
    RExpr e = *this;
    for (auto& x : e.terms_) x.c = mul_to(x.c, c, kT);
    e.terms_ = merged(e.terms_);
    return e;
}

RExpr RExpr::operator*(const Rat& c) const { return *this * EpsSeries::constant(SymExpr(c), kT); }

Integrand inner(const RExpr& a, const RExpr& b) {
    Integrand out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            out.push_back(PairTerm{mul_to(x.c, y.c, kT), x.m + y.m, x.t + y.t, x.u + y.u, x.k, y.k});
    return out;
}

Integrand inner_grad(const RExpr& a, const RExpr& b, long l, const std::function<RExpr(const RExpr&)>& mid) {
    auto M = [&](const RExpr& x) { return mid ? mid(x) : x; };
    Integrand out = inner(a.d(), M(b.d()));
    if (l > 0) out = out + inner(a, M(b).rpow(-2) * lin(l * (l + 1), -2 * l));
    return out;
}

Integrand operator+(Integrand a, const Integrand& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// ---------------------------------------------------------------- split integrator

namespace {

// c ρ^{p+qε} with an implicit e^{−ρ/2}
struct GTerm {
    EpsSeries c;
    long p;
    long q;
};

std::vector<GTerm> merge_g(const std::vector<GTerm>& in) {
    std::map<std::pair<long, long>, EpsSeries> acc;
    for (const auto& g : in) {
        auto it = acc.find({g.p, g.q});
        if (it == acc.end())
            acc.emplace(std::make_pair(g.p, g.q), g.c);
        else
            it->second += g.c;
    }
    std::vector<GTerm> out;
    for (const auto& [k, c] : acc)
        if (!is_zero(c)) out.push_back(GTerm{c, k.first, k.second});
    return out;
}

// ∂_ρ acting on Σ c ρ^{p+qε} e^{−ρ/2}
std::vector<GTerm> dg(const std::vector<GTerm>& in, int k) {
    std::vector<GTerm> cur = in;
    for (int i = 0; i < k; ++i) {
        std::vector<GTerm> nxt;
        for (const auto& g : cur) {
            if (g.p != 0 || g.q != 0) nxt.push_back(GTerm{mul_to(g.c, lin(g.p, g.q), kT), g.p - 1, g.q});
            nxt.push_back(GTerm{g.c * Rat(-1, 2), g.p, g.q});
        }
        cur = merge_g(nxt);
    }
    return cur;
}

// Laurent polynomials in ρ (ε = 0), again with an implicit e^{−ρ/2}
using LPoly = std::map<long, Rat>;

LPoly dp(LPoly f, int k) {
    for (int i = 0; i < k; ++i) {
        LPoly g;
        for (const auto& [p, c] : f) {
            if (p != 0) g[p - 1] += c * Rat(p);
            g[p] -= c / Rat(2);
        }
        f.clear();
        for (const auto& [p, c] : g)
            if (!c.is_zero()) f[p] = c;
    }
    return f;
}

LPoly mul(const LPoly& a, const LPoly& b) {
    LPoly out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) out[i + j] += x * y;
    return out;
}

// Γ(x0 + qε) through ε⁰; a pole only when regulated.
EpsSeries gamma_eps(long x0, long q) {
    if (x0 <= 0 && q == 0)
        throw DivergenceError("radial integral ∫ρ^" + std::to_string(x0 - 1) +
                              " e^{−ρ} dρ is not regulated by dimensional regularization");
    return gamma_series(x0, Rat(q), 0);
}

EpsSeries power(const EpsSeries& x, int e) {
    EpsSeries base = e >= 0 ? x : x.inverse();
    EpsSeries r = one();
    for (int i = 0; i < std::abs(e); ++i) r = mul_to(r, base, kT);
    return r;
}

int head_depth(const Integrand& f, long l) {
    long T = 1;
    for (const auto& pt : f) T = std::max(T, pt.k1 + pt.k2 - (2 + pt.t) - 2 * l + 1);
    return static_cast<int>(T);
}

}  // namespace

SplitResult split_expectation(const Integrand& f, const QuantumState& st) {
    if (f.empty()) return SplitResult{EpsSeries::zero(0), 0, 0};
    const long n = st.n, l = st.l, nr = st.nr();
    const int T = head_depth(f, l);

    EpsSeries nbar = nbar_expansion(st);
    EpsSeries gbar = gammabar_expansion(st) * Rat(1, n);
    SymExpr lnmu = -SymExpr::log_scale("mu") - SymExpr::gamma_e() * Rat(1, 2) + SymExpr::ln2() +
                   SymExpr::lnpi() * Rat(1, 2);

    // head L̂: a_{jk} n̄^k ρ^{ℓ+j+2εk}, j < T
    auto tab = series_coefficients_formal(l, std::max(T, 1), kT);
    std::vector<GTerm> head;
    LPoly head0;
    for (int j = 0; j < T; ++j) {
        EpsSeries nk = one();
        for (int k = 0; k <= j; ++k, nk = mul_to(nk, nbar, kT)) {
            EpsSeries c = mul_to(tab.at(j, k), nk, kT);
            head.push_back(GTerm{c, l + j, 2L * k});
            Rat c0 = c.coeff(0).as_rational();
            if (!c0.is_zero()) head0[l + j] += c0;
        }
    }
    head = merge_g(head);

    // full ε = 0 polynomial and its tail
    LPoly full;
    {
        Poly lag = assoc_laguerre(nr, 2 * l + 1);
        Rat norm = lag(Rat(0));
        for (long i = 0; i <= lag.degree(); ++i)
            if (!lag.coeff(i).is_zero()) full[l + i] = lag.coeff(i) / norm;
    }
    LPoly tail = full;
    for (const auto& [p, c] : head0) tail[p] -= c;
    for (auto it = tail.begin(); it != tail.end();) it = it->second.is_zero() ? tail.erase(it) : std::next(it);

    Rat fact = factorial(n + l) / (Rat(n) * factorial(nr)) / factorial(2 * l + 1).pow(2);
    EpsSeries omega = solid_angle_ratio() * Rat(4);

    // Terms sharing (m, E0, E1) share the prefactor; within a group, pieces with
    // the same Γ argument are summed first so that unregulated powers can cancel.
    struct Group {
        std::map<std::pair<long, long>, EpsSeries> head;  // (x0, q) of Γ(x0 + qε)
        EpsSeries cross = EpsSeries::zero(kT);
    };
    std::map<std::tuple<int, long, int>, Group> groups;
    std::optional<int> mubar;
    for (const auto& pt : f) {
        const long s0 = 2 + pt.t;
        const long E0 = pt.k1 + pt.k2 - 3 - pt.t;
        const int E1 = static_cast<int>(2 + 2 * pt.m - pt.u);
        if (mubar && *mubar != E1) throw InternalError("split_expectation: mixed μ̄ powers in one integrand");
        mubar = E1;
        Group& g = groups[{pt.m, E0, E1}];

        auto h1 = dg(head, pt.k1), h2 = dg(head, pt.k2);
        for (const auto& a : h1)
            for (const auto& b : h2) {
                EpsSeries c = mul_to(mul_to(pt.c, a.c, kT), b.c, kT);
                auto key = std::make_pair(s0 + 1 + a.p + b.p, a.q + b.q + pt.u - 2);
                auto it = g.head.find(key);
                if (it == g.head.end())
                    g.head.emplace(key, c);
                else
                    it->second += c;
            }

        // cross terms with the tail, at ε = 0
        LPoly cross = mul(dp(tail, pt.k1), dp(full, pt.k2));
        for (const auto& [p, c] : mul(dp(head0, pt.k1), dp(tail, pt.k2))) cross[p] += c;
        Rat Jc(0);
        for (const auto& [p, c] : cross) {
            if (c.is_zero()) continue;
            long e = p + s0;
            if (e < 0)
                throw InternalError("split_expectation: head depth " + std::to_string(T) +
                                    " insufficient, tail leaves ρ^" + std::to_string(e));
            Jc += c * factorial(e);
        }
        g.cross += pt.c * Jc;
    }

    EpsSeries total = EpsSeries::zero(0);
    for (const auto& [key, g] : groups) {
        auto [m, E0, E1] = key;
        EpsSeries J = g.cross.truncated(0);
        for (const auto& [xq, c] : g.head) {
            if (is_zero(c)) continue;
            J += mul_to(c, gamma_eps(xq.first, xq.second), 0);
        }
        EpsSeries pref = omega * fact;
        pref = mul_to(pref, power(mul_to(nbar, gbar, kT), m), kT);
        pref = mul_to(pref, power(gbar * Rat(2), static_cast<int>(E0)), kT);
        pref = mul_to(pref, EpsSeries::linear(SymExpr(1), lnmu * Rat(E1), kT), kT);
        total += mul_to(pref, J, 0);
    }
    return SplitResult{total, *mubar, T};
}

}  // namespace boundstate
