#pragma once

#include "boundstate/poly.hpp"

namespace boundstate {

// L_n^k(x) = Σ_r (−1)^r/r! C(n+k, n−r) x^r.  k may be a half-integer; zero for n < 0.
Poly assoc_laguerre(long n, const Rat& k);
inline Poly assoc_laguerre(long n, long k) { return assoc_laguerre(n, Rat(k)); }

// ^pL_n^k: L_n^k with the monomials below x^p removed.
struct SubtractedPoly {
    long n = 0;
    Rat k;
    long p = 0;
    Poly poly;
};
SubtractedPoly subtract_laguerre(long n, const Rat& k, long p);
inline SubtractedPoly subtract_laguerre(long n, long k, long p) {
    return subtract_laguerre(n, Rat(k), p);
}

// C_n^λ(β) = Σ_{m≤n/2} (−1)^m (λ)_{n−m}/(m!(n−2m)!) (2β)^{n−2m}
struct GegenbauerPoly {
    long n = 0;
    Rat lambda;
    Poly poly;
};
GegenbauerPoly gegenbauer(long n, const Rat& lambda);

}  // namespace boundstate
