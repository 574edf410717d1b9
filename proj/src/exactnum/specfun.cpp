#include "boundstate/specfun.hpp"

#include <mutex>
#include <vector>

#include "boundstate/errors.hpp"

namespace boundstate {

Rat harmonic(long n, int alpha) {
    if (alpha < 1) throw DomainError("harmonic: order must be ≥ 1");
    if (n < 0) throw DomainError("harmonic: n = " + std::to_string(n) + " is negative");
    if (alpha > 2) {
        Rat h(0);
        for (long k = 1; k <= n; ++k) h += Rat(1) / Rat(k).pow(alpha);
        return h;
    }
    // the diharmonic grids hit the same H_n thousands of times
    static std::mutex mu;
    static std::vector<Rat> cache[2] = {{Rat(0)}, {Rat(0)}};
    std::lock_guard<std::mutex> lock(mu);
    auto& v = cache[alpha - 1];
    while (static_cast<long>(v.size()) <= n) {
        long k = static_cast<long>(v.size());
        v.push_back(v.back() + Rat(1) / Rat(k).pow(alpha));
    }
    return v[static_cast<size_t>(n)];
}

Rat diharmonic(DiSign sign, long n, long m) {
    Rat s(0);
    for (long i = 1; i <= n; ++i) {
        long top = sign == DiSign::Plus ? m - 1 + i : m + 1 - i;
        if (top > 0) s += harmonic(top) / Rat(i);
    }
    return s;
}

Rat diharmonic_region_sum(DiSign sign, long n, long m) {
    Rat s(0);
    for (long i = 1; i <= n; ++i) {
        long jmax = sign == DiSign::Plus ? m - 1 + i : m + 1 - i;
        for (long j = 1; j <= jmax; ++j) s += Rat(1, i * j);
    }
    return s;
}

EpsSeries gamma_ratio_limit(long N, int orders) {
    if (N < 0) throw DomainError("gamma_ratio_limit: N must be ≥ 0");
    if (orders < 0 || orders > 2)
        throw UnsupportedError("gamma_ratio_limit: expansion depth " + std::to_string(orders) +
                               " exceeds the supported 2");
    EpsSeries r = EpsSeries::constant(SymExpr(1), orders);
    for (long k = 1; k <= N; ++k) r = r * EpsSeries::linear(SymExpr(-k), SymExpr(1), orders);
    return r;
}

SymExpr polygamma_int(int k, long N) {
    if (N < 1) throw DomainError("polygamma_int: argument must be a positive integer");
    if (k == 0) return -SymExpr::gamma_e() + SymExpr(harmonic(N - 1));
    if (k == 1) return SymExpr::zeta2() - SymExpr(harmonic(N - 1, 2));
    throw UnsupportedError("polygamma_int: order " + std::to_string(k) + " not supported (k ≤ 1)");
}

EpsSeries gamma_unit(const Rat& q, int trunc) {
    if (trunc > 2) throw UnsupportedError("Γ(1+qε) is only expanded through ε²");
    SymExpr g = SymExpr::gamma_e();
    SymExpr c2 = (g * g + SymExpr::zeta2()) * Rat(1, 2);
    return EpsSeries(0, trunc, {SymExpr(1), -g * q, c2 * q * q});
}

EpsSeries gamma_rational_factor(long x0, const Rat& q, int trunc) {
    if (x0 >= 1) {
        EpsSeries r = EpsSeries::constant(SymExpr(1), trunc);
        for (long i = 1; i < x0; ++i) r = r * EpsSeries::linear(SymExpr(i), SymExpr(q), trunc);
        return r;
    }
    if (q.is_zero())
        throw DomainError("Γ at the non-positive integer " + std::to_string(x0));
    // Γ(1+y) = y(y−1)…(y+x0) Γ(y+x0)
    int inner = trunc + 2;
    EpsSeries p = EpsSeries(1, inner, {SymExpr(q)});
    for (long i = 1; i <= -x0; ++i) p = p * EpsSeries::linear(SymExpr(-i), SymExpr(q), inner);
    return p.inverse().truncated(trunc);
}

EpsSeries gamma_series(long x0, const Rat& q, int trunc) {
    EpsSeries f = gamma_rational_factor(x0, q, trunc + 1);
    int need = trunc - f.leading_order();
    return mul_to(gamma_unit(q, std::min(need, 2)), f, trunc);
}

}  // namespace boundstate
