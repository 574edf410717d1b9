#include <boost/math/special_functions/gamma.hpp>
#include <random>

#include "boundstate/eps_series.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/hypergeometric.hpp"
#include "boundstate/numeric.hpp"
#include "boundstate/specfun.hpp"
#include "boundstate/suites.hpp"

namespace boundstate {

namespace {

// H_j = 0 for j ≤ 0, the convention the diharmonic identities are written in
Rat H(long n) { return n <= 0 ? Rat(0) : harmonic(n); }
Rat H2(long n) { return n <= 0 ? Rat(0) : harmonic(n, 2); }
Rat dp(long n, long m) { return diharmonic(DiSign::Plus, n, m); }
Rat dm(long n, long m) { return diharmonic(DiSign::Minus, n, m); }

std::string nm(const char* what, long n, long m) {
    return std::string(what) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
}

}  // namespace

void suite_diharmonic(Checker& c) {
    for (long n = 1; n <= 40; ++n) {
        for (long m = -n; m <= 40; ++m) {
            c.equal(dp(n + 1, m), dp(n, m) + H(n + m) / Rat(n + 1), nm("diH+(n+1,m)", n, m));
            Rat up;
            if (m >= 1)
                up = dp(n, m) + (H(n) + H(m) - H(n + m)) / Rat(m);
            else if (m == 0)
                up = dp(n, 0) + H2(n);
            else
                up = dp(n, m) + (H(n) - H(-m) - H(n + m)) / Rat(m);
            c.equal(dp(n, m + 1), up, nm("diH+(n,m+1)", n, m));
            c.equal(dp(n, m), diharmonic_region_sum(DiSign::Plus, n, m), nm("diH+ region", n, m));
        }
        for (long m = 0; m <= 40; ++m) {
            Rat next = n >= m ? dm(n, m) : dm(n, m) + H(m - n) / Rat(n + 1);
            c.equal(dm(n + 1, m), next, nm("diH-(n+1,m)", n, m));
            Rat up = m >= n - 1 ? dm(n, m) + (H(m + 1) + H(n) - H(m + 1 - n)) / Rat(m + 2)
                                : dm(n, m) + Rat(2) / Rat(m + 2) * H(m + 1);
            c.equal(dm(n, m + 1), up, nm("diH-(n,m+1)", n, m));
            c.equal(dm(n, m), diharmonic_region_sum(DiSign::Minus, n, m), nm("diH- region", n, m));
        }
    }

    // reflections; diH+ needs n+m−1 ≥ 0, diH− needs m−n+1 ≥ 0 for the mirrored region to exist
    for (long n = 1; n <= 20; ++n)
        for (long m = -10; m <= 20; ++m) {
            if (n + m - 1 >= 0)
                c.equal(dp(n, m), H(n + m - 1) * H(n) - dp(n + m - 1, 1 - m), nm("diH+ reflection", n, m));
            if (m - n + 1 >= 0)
                c.equal(dm(n, m), H(m + 1) * H(m + 1) - H2(m + 1) - dm(m - n + 1, m) + H(m - n + 1) * H(n),
                        nm("diH- reflection", n, m));
        }

    for (long n = 1; n <= 60; ++n) {
        Rat h = H(n), h2 = H2(n);
        c.equal(dp(n, 2), (h * h + h2) / Rat(2) + Rat(1) - Rat(1, n + 1), nm("diH+(n,2)", n, 2));
        c.equal(dp(n, 1), (h * h + h2) / Rat(2), nm("diH+(n,1)", n, 1));
        c.equal(dp(n, 0), (h * h - h2) / Rat(2), nm("diH+(n,0)", n, 0));
        c.equal(dp(n, -1), (h * h - h2) / Rat(2) - Rat(1) + Rat(1, n), nm("diH+(n,-1)", n, -1));
        Rat a = H(n + 1), b = H(n + 2);
        c.equal(dm(n - 1, n - 1), h * h - h2, nm("diH-(n-1,n-1)", n, n - 1));
        c.equal(dm(n - 1, n), a * a - H2(n + 1) - Rat(1, n), nm("diH-(n-1,n)", n, n));
        c.equal(dm(n - 1, n + 1),
                b * b - H2(n + 2) - Rat(1, n) - (Rat(1, n) + Rat(1, n + 1) + Rat(3, 2)) / Rat(n + 2),
                nm("diH-(n-1,n+1)", n, n + 1));

        Rat s1(0), s2(0);
        for (long r = 1; r <= n; ++r) s1 += H(r) / Rat(r);
        for (long r = 1; r <= n - 1; ++r) s2 += H(r) / Rat(n - r);
        c.equal(s1, (h * h + h2) / Rat(2), nm("Σ H_r/r", n, 0));
        c.equal(s2, h * h - h2, nm("Σ H_r/(n-r)", n, 0));
    }
}

void suite_harmonic(Checker& c) {
    for (long n = 1; n <= 50; ++n) c.equal(harmonic(n) - harmonic(n - 1), Rat(1, n), nm("H_n − H_{n−1}", n, 0));
    c.equal(harmonic(5), Rat(137, 60), "H_5");
    c.equal(harmonic(4, 2), Rat(205, 144), "H_4^(2)");
    c.equal(harmonic(0), Rat(0), "H_0");
    bool threw = false;
    try {
        harmonic(-1);
    } catch (const DomainError&) {
        threw = true;
    }
    c.expect(threw, "H_{-1} is a domain error");
    for (long N = 1; N <= 12; ++N) {
        c.equal(polygamma_int(0, N), -SymExpr::gamma_e() + SymExpr(harmonic(N - 1)), nm("ψ(N)", N, 0));
        c.equal(polygamma_int(1, N), SymExpr::zeta2() - SymExpr(harmonic(N - 1, 2)), nm("ψ(1,N)", N, 0));
    }
}

void suite_gamma_ratio(Checker& c) {
    const Real eps("1e-6");
    for (long N = 0; N <= 10; ++N) {
        EpsSeries s = gamma_ratio_limit(N, 1);
        Real approx = evaluate(s, eps, {});
        Real exact = boost::math::tgamma(eps) / boost::math::tgamma(eps - Real(N));
        c.expect(abs(approx / exact - 1) < Real("1e-5"), nm("Γ(ε)/Γ(ε−N) numeric", N, 0));
        Rat sgnfact = sign_power(N) * factorial(N);
        c.equal(s.coeff(0), SymExpr(sgnfact), nm("Γ ratio ε^0", N, 0));
        c.equal(s.coeff(1), SymExpr(-sgnfact * harmonic(N)), nm("Γ ratio ε^1", N, 0));
    }
}

void suite_eps_ring(Checker& c) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto rnd = [&](int low) {
        std::vector<SymExpr> cs;
        for (int i = low; i <= 2; ++i)
            cs.push_back(SymExpr(Rat(d(rng), 1 + (d(rng) + 9) % 5)) + SymExpr::gamma_e() * Rat(d(rng)));
        return EpsSeries(low, 2, cs);
    };
    for (int t = 0; t < 200; ++t) {
        EpsSeries x = rnd(-1), y = rnd(0), z = rnd(0);
        c.expect((x + y) + z == x + (y + z), "EpsSeries additive associativity");
        c.expect(x * (y + z) == x * y + x * z, "EpsSeries distributivity");
        c.expect(x * y == y * x, "EpsSeries commutativity");
    }
}

void suite_hypergeometric(Checker& c) {
    for (long n = 0; n <= 10; ++n)
        for (long a = -4; a <= 4; ++a)
            for (long cc = 1; cc <= 6; ++cc)
                c.equal(hypergeometric_2f1_unit(Rat(a), n, Rat(cc)), hypergeometric_2f1_unit_series(Rat(a), n, Rat(cc)),
                        nm("₂F₁(a,−n;c;1)", n, a));
    // small-ε numeric check of the f(n,k,a,b) expansion; the O(ε) remainder sets the tolerance
    const Real eps("1e-8");
    for (long n = 1; n <= 5; ++n)
        for (long k = 0; k <= 3; ++k)
            for (auto [a, b] : {std::pair{Rat(1), Rat(1)}, {Rat(2), Rat(-1)}, {Rat(-1, 2), Rat(3)}}) {
                EpsSeries f = hypergeometric_f_expansion(n, k, a, b);
                Real got = evaluate(f, eps, {});
                Real want = hypergeometric_f_numeric(n, k, a, b, eps);
                Real scale = abs(want) > 1 ? abs(want) : Real(1);
                c.expect(abs(got - want) / scale < Real("1e-5"), nm("f(n,k,a,b) expansion", n, k));
            }
}

}  // namespace boundstate
