#pragma once

#include <optional>
#include <string>

#include "boundstate/numeric.hpp"
#include "boundstate/symexpr.hpp"

namespace boundstate {

// Exact results are SymExpr; Γ at non-integer arguments is irrational, so those
// come back numeric-only and must never enter an exact comparison.
struct Moment {
    bool exact = true;
    SymExpr value;  // meaningful only when exact
    Real numeric = 0;

    static Moment of(SymExpr v);
    static Moment approx(Real v);
    // Throws InternalError when asked for the exact value of a numeric-only result.
    const SymExpr& symbolic() const;
};

struct LaguerreRef {
    long n = 0;
    long k = 0;
};

// ∫_0^∞ e^{-x} x^s ln^logpow(x) ^pL_n^k(x) [L_{n'}^{k'}(x)] dx
struct MomentSpec {
    Rat s;
    int logpow = 0;
    LaguerreRef left;
    long p = 0;
    std::optional<LaguerreRef> right;

    std::string str() const;
};

Moment integral_I(const Rat& s, long n, long k, long p = 0);
Moment integral_J(const Rat& s, long n, long k, long p = 0);
Moment integral_K(const Rat& s, long n, long k, long n2, long k2, long p = 0);
Moment integral_L(const Rat& s, long n, long k, long n2, long k2, long p = 0);
Moment integral_M(const Rat& s, long n, long k, long n2, long k2, long p = 0);

// Dispatches a spec to the closed forms above.
Moment closed_moment(const MomentSpec& spec);

// Independent path: multiply out the polynomials and integrate monomial by
// monomial with Γ(t+1), Γ'(t+1), Γ''(t+1).
Moment brute_force_moment(const MomentSpec& spec);

// Γ^{(m)}(N) for integer N ≥ 1 and m ≤ 2, shared with the oracles.
SymExpr gamma_derivative_int(long N, int order);

}  // namespace boundstate
