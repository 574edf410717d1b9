#pragma once

#include "boundstate/eps_series.hpp"
#include "boundstate/rat.hpp"
#include "boundstate/symexpr.hpp"

namespace boundstate {

// H_n^(α), H_0 = 0; negative n throws DomainError.
Rat harmonic(long n, int alpha = 1);

enum class DiSign { Plus, Minus };

// diH_+(n,m) = Σ_{i=1..n} H_{m-1+i}/i,  diH_-(n,m) = Σ_{i=1..n} H_{m+1-i}/i
Rat diharmonic(DiSign sign, long n, long m);
// Independent region sum over lattice points 1/(ij); used only to check diharmonic().
Rat diharmonic_region_sum(DiSign sign, long n, long m);

// Γ(ε)/Γ(ε−N) = (ε−1)(ε−2)…(ε−N), expanded through ε^orders (orders ≤ 2).
EpsSeries gamma_ratio_limit(long N, int orders);

// ψ(N) for k = 0, ψ(1,N) for k = 1.
SymExpr polygamma_int(int k, long N);

// Γ(1+qε) = exp(−γ_E qε + Σ_{m≥2} ζ(m)(−qε)^m/m) through ε^trunc, trunc ≤ 2.
EpsSeries gamma_unit(const Rat& q, int trunc);
// Γ(x0+qε)/Γ(1+qε): a rational Laurent series (pole order one when x0 ≤ 0).
EpsSeries gamma_rational_factor(long x0, const Rat& q, int trunc);
// Γ(x0+qε) through ε^trunc.
EpsSeries gamma_series(long x0, const Rat& q, int trunc);

}  // namespace boundstate
