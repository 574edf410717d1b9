#include "boundstate/lagint.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "boundstate/errors.hpp"
#include "boundstate/poly.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

Moment Moment::of(SymExpr v) {
    Moment m;
    m.exact = true;
    m.numeric = evaluate(v);
    m.value = std::move(v);
    return m;
}

Moment Moment::approx(Real v) {
    Moment m;
    m.exact = false;
    m.numeric = std::move(v);
    return m;
}

const SymExpr& Moment::symbolic() const {
    if (!exact) throw InternalError("exact value requested from a numeric-only moment");
    return value;
}

std::string MomentSpec::str() const {
    std::string s_ = "∫e^{-x} x^" + s.str();
    if (logpow > 0) s_ += " ln^" + std::to_string(logpow) + "x";
    s_ += " " + (p > 0 ? std::to_string(p) : std::string()) + "L_" + std::to_string(left.n) + "^" +
          std::to_string(left.k);
    if (right) s_ += " L_" + std::to_string(right->n) + "^" + std::to_string(right->k);
    return s_;
}

SymExpr gamma_derivative_int(long N, int order) {
    if (N < 1) throw DomainError("Γ derivative at non-positive integer " + std::to_string(N));
    Rat f = factorial(N - 1);
    if (order == 0) return SymExpr(f);
    SymExpr psi = polygamma_int(0, N);
    if (order == 1) return psi * f;
    if (order == 2) return (psi * psi + polygamma_int(1, N)) * f;
    throw UnsupportedError("Γ derivatives beyond second order");
}

namespace {

void require_convergent(const Rat& s, long p, const char* what) {
    if (s + Rat(p) <= Rat(-1))
        throw DivergenceError(std::string(what) + ": the x^" + (s + Rat(p)).str() +
                              " monomial diverges at x → 0 (need s + p > −1)");
}

// Π_{i=0}^{m−1} (x + a − i) as a polynomial in x
Poly falling_poly(const Rat& a, long m) {
    Poly q(Rat(1));
    for (long i = 0; i < m; ++i) q = q * Poly({a - Rat(i), Rat(1)});
    return q;
}

Real real_gamma_deriv(const Real& x, int order) {
    Real g = boost::math::tgamma(x);
    if (order == 0) return g;
    Real psi = boost::math::digamma(x);
    if (order == 1) return g * psi;
    return g * (psi * psi + boost::math::trigamma(x));
}

// Integration by parts against L_{n'}^{k'} (Rodrigues) leaves
//   Σ_{r≥p} A_r Γ(s+r+1) · (s+r−k')^{falling n'}
// which is an entire function of s times Γ; its s-derivatives give the log
// moments without any limiting procedure.
Moment rodrigues_sum(const Rat& s, long n, long k, long n2, long k2, long p, int logpow) {
    Rat pref = factorial(n + k) * sign_power(n2) / factorial(n2);
    if (s.is_integer()) {
        SymExpr total;
        long si = s.to_long();
        for (long r = p; r <= n; ++r) {
            Rat a = pref * sign_power(r) / (factorial(r) * factorial(n - r) * factorial(k + r));
            Poly q = falling_poly(Rat(r - k2), n2);
            Rat q0 = q(s), q1 = q.derivative()(s), q2 = q.derivative().derivative()(s);
            long N = si + r + 1;
            SymExpr term;
            if (logpow == 0) {
                term = gamma_derivative_int(N, 0) * q0;
            } else if (logpow == 1) {
                term = gamma_derivative_int(N, 1) * q0 + gamma_derivative_int(N, 0) * q1;
            } else {
                term = gamma_derivative_int(N, 2) * q0 + gamma_derivative_int(N, 1) * (Rat(2) * q1) +
                       gamma_derivative_int(N, 0) * q2;
            }
            total += term * a;
        }
        return Moment::of(total);
    }
    Real sr = to_real(s);
    Real total = 0;
    for (long r = p; r <= n; ++r) {
        Rat a = pref * sign_power(r) / (factorial(r) * factorial(n - r) * factorial(k + r));
        Poly q = falling_poly(Rat(r - k2), n2);
        Poly d1 = q.derivative(), d2 = d1.derivative();
        auto ev = [&](const Poly& P) {
            Real v = 0;
            for (long i = P.degree(); i >= 0; --i) v = v * sr + to_real(P.coeff(i));
            return v;
        };
        Real x = sr + Real(r + 1);
        Real term;
        if (logpow == 0) {
            term = real_gamma_deriv(x, 0) * ev(q);
        } else if (logpow == 1) {
            term = real_gamma_deriv(x, 1) * ev(q) + real_gamma_deriv(x, 0) * ev(d1);
        } else {
            term = real_gamma_deriv(x, 2) * ev(q) + 2 * real_gamma_deriv(x, 1) * ev(d1) +
                   real_gamma_deriv(x, 0) * ev(d2);
        }
        total += to_real(a) * term;
    }
    return Moment::approx(total);
}

// Three-region closed form for integer s.
Rat k_three_region(long s, long n, long k, long n2, long k2, long p) {
    Rat pref = factorial(n + k) * sign_power(n2) / factorial(n2);
    Rat sum(0);
    for (long r = p; r <= std::min(n, k2 - s - 1); ++r)
        sum += sign_power(r) * factorial(r + s) * sign_power(n2) * factorial(n2 + k2 - s - 1 - r) /
               (factorial(r) * factorial(r + k) * factorial(n - r) * factorial(k2 - s - 1 - r));
    for (long r = std::max(p, n2 + k2 - s); r <= n; ++r)
        sum += sign_power(r) * factorial(r + s) * factorial(r + s - k2) /
               (factorial(r) * factorial(r + k) * factorial(n - r) * factorial(r + s - n2 - k2));
    return pref * sum;
}

}  // namespace

Moment integral_I(const Rat& s, long n, long k, long p) {
    if (n < 0 || k < 0 || p < 0) throw DomainError("integral_I: indices must be non-negative");
    require_convergent(s, p, "integral_I");
    if (p > n) return Moment::of(SymExpr());
    if (!s.is_integer()) return rodrigues_sum(s, n, k, 0, 0, p, 0);
    long si = s.to_long();
    if (p == 0) {
        // Γ(s−k+1)/Γ(s−k−n+1) is the falling factorial (s−k)^{falling n}
        return Moment::of(SymExpr(sign_power(n) / factorial(n) * factorial(si) * falling(Rat(si - k), n)));
    }
    if (p <= 2) {
        // ^pI_s = (n+k)! Γ(s+1)/(n! k!) g(s) with g from ₂F₁(−n, s+1; k+1; 1)
        Poly rise(Rat(1));
        for (long i = 0; i < n; ++i) rise = rise * Poly({Rat(k + i), Rat(-1)});
        Poly g = rise * (factorial(k) / factorial(n + k)) - Poly(Rat(1));
        if (p == 2) g += Poly({Rat(n), Rat(n)}) * (Rat(1) / Rat(k + 1));
        Rat pref = factorial(n + k) / (factorial(n) * factorial(k));
        if (si >= 0) return Moment::of(SymExpr(pref * factorial(si) * g(s)));
        long j = -si - 1;  // Γ(−j+ε) = (−1)^j/(j! ε) + …
        if (!g(s).is_zero()) throw InternalError("^pI_s: uncancelled Γ pole");
        return Moment::of(SymExpr(pref * sign_power(j) / factorial(j) * g.derivative()(s)));
    }
    Rat sum(0);
    for (long r = p; r <= n; ++r)
        sum += sign_power(r) / factorial(r) * binomial(n + k, n - r) * factorial(si + r);
    return Moment::of(SymExpr(sum));
}

Moment integral_J(const Rat& s, long n, long k, long p) {
    if (n < 0 || k < 0 || p < 0) throw DomainError("integral_J: indices must be non-negative");
    require_convergent(s, p, "integral_J");
    if (p > n) return Moment::of(SymExpr());
    if (p > 0 || !s.is_integer()) return rodrigues_sum(s, n, k, 0, 0, p, 1);
    // d/ds [ (−1)^n/n! Γ(s+1) (s−k)^{falling n} ]
    long si = s.to_long();
    Poly P = falling_poly(Rat(-k), n);
    Rat pref = sign_power(n) / factorial(n) * factorial(si);
    SymExpr v = polygamma_int(0, si + 1) * P(s) + SymExpr(P.derivative()(s));
    return Moment::of(v * pref);
}

Moment integral_K(const Rat& s, long n, long k, long n2, long k2, long p) {
    if (n < 0 || k < 0 || n2 < 0 || k2 < 0 || p < 0)
        throw DomainError("integral_K: indices must be non-negative");
    require_convergent(s, p, "integral_K");
    if (p > n) return Moment::of(SymExpr());
    if (!s.is_integer()) return rodrigues_sum(s, n, k, n2, k2, p, 0);
    return Moment::of(SymExpr(k_three_region(s.to_long(), n, k, n2, k2, p)));
}

Moment integral_L(const Rat& s, long n, long k, long n2, long k2, long p) {
    if (n < 0 || k < 0 || n2 < 0 || k2 < 0 || p < 0)
        throw DomainError("integral_L: indices must be non-negative");
    require_convergent(s, p, "integral_L");
    if (p > n) return Moment::of(SymExpr());
    return rodrigues_sum(s, n, k, n2, k2, p, 1);
}

Moment integral_M(const Rat& s, long n, long k, long n2, long k2, long p) {
    if (n < 0 || k < 0 || n2 < 0 || k2 < 0 || p < 0)
        throw DomainError("integral_M: indices must be non-negative");
    require_convergent(s, p, "integral_M");
    if (p > n) return Moment::of(SymExpr());
    return rodrigues_sum(s, n, k, n2, k2, p, 2);
}

Moment closed_moment(const MomentSpec& spec) {
    const auto& L = spec.left;
    if (!spec.right) {
        switch (spec.logpow) {
            case 0: return integral_I(spec.s, L.n, L.k, spec.p);
            case 1: return integral_J(spec.s, L.n, L.k, spec.p);
            case 2: return integral_M(spec.s, L.n, L.k, 0, 0, spec.p);
        }
    } else {
        const auto& R = *spec.right;
        switch (spec.logpow) {
            case 0: return integral_K(spec.s, L.n, L.k, R.n, R.k, spec.p);
            case 1: return integral_L(spec.s, L.n, L.k, R.n, R.k, spec.p);
            case 2: return integral_M(spec.s, L.n, L.k, R.n, R.k, spec.p);
        }
    }
    throw UnsupportedError("log power " + std::to_string(spec.logpow) + " (only 0–2)");
}

}  // namespace boundstate
