#include "boundstate/hypergeometric.hpp"

#include <mutex>
#include <vector>

#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

Rat hypergeometric_2f1_unit(const Rat& a, long n, const Rat& c) {
    if (n < 0) throw DomainError("₂F₁(a,−n;c;1) needs n ≥ 0");
    Rat den = rising(c, n);
    if (den.is_zero())
        throw SingularityError("₂F₁(a,−n;c;1): c^{rising n} vanishes at c = " + c.str());
    return rising(c - a, n) / den;
}

Rat hypergeometric_2f1_unit_series(const Rat& a, long n, const Rat& c) {
    Rat sum(0), term(1);
    for (long j = 0; j <= n; ++j) {
        sum += term;
        Rat cj = c + Rat(j);
        if (cj.is_zero() && j < n)
            throw SingularityError("₂F₁ series hits a zero lower parameter");
        term *= (a + Rat(j)) * Rat(j - n) / (cj * Rat(j + 1));
    }
    return sum;
}

Rat bernoulli(int m) {
    static std::mutex mu;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= m) {
        int k = static_cast<int>(cache.size());
        Rat s(0);
        for (int j = 0; j < k; ++j) s += binomial(k + 1, j) * cache[static_cast<size_t>(j)];
        cache.push_back(-s / Rat(k + 1));
    }
    return cache[static_cast<size_t>(m)];
}

Rat alternating_power_sum(int m) {
    if (m == 0) return Rat(1, 2);
    Rat two_pow = Rat(2).pow(m + 1);
    return -(two_pow - Rat(1)) * bernoulli(m + 1) / Rat(m + 1);
}

namespace {

// Σ_{j>n} (−1)^j C(k+j−1, j)/(j−n) = α ln2 + β, summed exactly by splitting the
// polynomial C(k+j−1,j) = Q(j)(j−n) + R and Abel-summing the Q part.
SymExpr binomial_tail(long n, long k) {
    // P(j) = (j+1)(j+2)…(j+k−1)/(k−1)!, ascending coefficients
    std::vector<Rat> p{Rat(1)};
    for (long i = 1; i <= k - 1; ++i) {
        std::vector<Rat> q(p.size() + 1, Rat(0));
        for (size_t d = 0; d < p.size(); ++d) {
            q[d] += p[d] * Rat(i);
            q[d + 1] += p[d];
        }
        p = std::move(q);
    }
    Rat fk = factorial(k - 1);
    for (auto& c : p) c /= fk;

    // synthetic division by (j − n)
    size_t deg = p.size() - 1;
    std::vector<Rat> quot(deg, Rat(0));
    Rat carry(0);
    for (size_t d = deg + 1; d-- > 0;) {
        Rat v = p[d] + carry * Rat(n);
        if (d == 0) {
            carry = v;
        } else {
            quot[d - 1] = v;
            carry = v;
        }
    }
    Rat rem = carry;

    Rat beta(0);
    for (size_t m = 0; m < quot.size(); ++m) {
        if (quot[m].is_zero()) continue;
        Rat s = alternating_power_sum(static_cast<int>(m));
        for (long j = 0; j <= n; ++j) s -= sign_power(j) * Rat(j).pow(static_cast<int>(m));
        beta += quot[m] * s;
    }
    Rat alpha = sign_power(n + 1) * rem;
    return SymExpr(beta) + SymExpr::ln2() * alpha;
}

}  // namespace

EpsSeries hypergeometric_f_expansion(long n, long k, const Rat& a, const Rat& b) {
    if (a.is_zero()) throw DomainError("f(n,k,a,b): a = 0 is a degenerate parameter choice");
    if (n < 1 || k < 0) throw DomainError("f(n,k,a,b) needs n ≥ 1, k ≥ 0");
    Rat sn = sign_power(n);
    if (k == 0) {
        Rat c0 = Rat(1) - sn * b / a;
        Rat s(0);
        for (long j = 1; j <= n - 1; ++j) s += sign_power(j) / Rat(n - j);
        SymExpr c1 = SymExpr::ln2() * (Rat(-1) + sn) + SymExpr(-sn * b / a * harmonic(n - 1) + s);
        return EpsSeries(0, 1, {SymExpr(c0), c1 * b});
    }
    Rat C = binomial(k + n - 1, n);
    Rat pole = -sn * Rat(n) / a * C;
    Rat c0 = Rat(1) + sn * C * (Rat(1) - Rat(n) * b / a * (harmonic(k + n - 1) - harmonic(k - 1)));
    for (long j = 1; j <= n - 1; ++j)
        c0 += Rat(n) * sign_power(j) * binomial(k + j - 1, j) / Rat(n - j);
    SymExpr finite = SymExpr(c0) - binomial_tail(n, k) * Rat(n);
    return EpsSeries(-1, 0, {SymExpr(pole), finite});
}

Real hypergeometric_f_numeric(long n, long k, const Rat& a, const Rat& b, const Real& eps) {
    // ₂F₁(A,B;C;−1) = 2^{−B} ₂F₁(C−A, B; C; 1/2) and C − A = 1 here.
    Real B = Real(k) + to_real(b) * eps;
    Real C = Real(1 - n) + to_real(a) * eps;
    Real term = 1, sum = 1;
    const Real tiny = Real("1e-45");
    for (long j = 0; j < 4000; ++j) {
        term *= (B + j) / (C + j) / 2;
        sum += term;
        if (j > n + 2 && abs(term) < tiny * abs(sum)) return sum * pow(Real(2), -B);
    }
    throw ConvergenceError("Pfaff series for f(n,k,a,b) did not converge");
}

}  // namespace boundstate
