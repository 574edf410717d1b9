#pragma once

#include "boundstate/eps_series.hpp"
#include "boundstate/numeric.hpp"
#include "boundstate/rat.hpp"

namespace boundstate {

// ₂F₁(a, −n; c; 1) = (c−a)^{rising n} / c^{rising n}
Rat hypergeometric_2f1_unit(const Rat& a, long n, const Rat& c);
// Same value by summing the terminating series term by term.
Rat hypergeometric_2f1_unit_series(const Rat& a, long n, const Rat& c);

// f(n,k,a,b) = ₂F₁(−n+aε, k+bε; −n+1+aε; −1).
// k ≥ 1: pole + finite part (truncation 0).  k = 0: through ε¹.
EpsSeries hypergeometric_f_expansion(long n, long k, const Rat& a, const Rat& b);
// Same function at a numeric ε through the Pfaff-transformed series at z = 1/2.
Real hypergeometric_f_numeric(long n, long k, const Rat& a, const Rat& b, const Real& eps);

// Bernoulli numbers with B_1 = −1/2.
Rat bernoulli(int m);
// Abel-regularized Σ_{j≥0} (−1)^j j^m.
Rat alternating_power_sum(int m);

}  // namespace boundstate
