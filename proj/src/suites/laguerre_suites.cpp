#include "boundstate/errors.hpp"
#include "boundstate/laguerre.hpp"
#include "boundstate/suites.hpp"

namespace boundstate {

namespace {

std::string nk(const char* what, long n, long k) {
    return std::string(what) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

Poly L(long n, long k) { return assoc_laguerre(n, k); }

}  // namespace

void suite_laguerre(Checker& c) {
    for (long n = 0; n <= 15; ++n)
        for (long k = 0; k <= 8; ++k) {
            c.equal(L(n, k).derivative(), -L(n - 1, k + 1), nk("d/dx L", n, k));
            c.equal(L(n, k)(Rat(0)), binomial(n + k, n), nk("L(0)", n, k));
            c.expect(L(n, k).degree() == n, nk("deg L", n, k));
        }
    const Poly x = Poly::monomial(1);
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= 6; ++k) {
            c.equal(L(n + 1, k) * Rat(n + 1), Poly({Rat(2 * n + 1 + k), Rat(-1)}) * L(n, k) - L(n - 1, k) * Rat(n + k),
                    nk("three-term in n", n, k));
            c.equal(L(n, k - 1), L(n, k) - L(n - 1, k), nk("lowering k", n, k));
            c.equal(x * L(n, k + 1), L(n, k) * Rat(n + k + 1) - L(n + 1, k) * Rat(n + 1), nk("x L^{k+1}, up", n, k));
            c.equal(x * L(n, k + 1), L(n - 1, k) * Rat(n + k) - Poly({Rat(n), Rat(-1)}) * L(n, k),
                    nk("x L^{k+1}, down", n, k));
        }
    for (long n = 0; n <= 8; ++n)
        for (long p = 0; p <= 3; ++p) {
            auto s = subtract_laguerre(n, 2, p);
            c.equal(s.poly, L(n, 2).without_low_powers(p), nk("subtracted", n, p));
        }
    for (Rat lam : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)})
        for (long n = 0; n <= 12; ++n) {
            std::string lab = "Gegenbauer n=" + std::to_string(n) + " λ=" + lam.str();
            Poly C = gegenbauer(n, lam).poly;
            if (n >= 1) c.equal(C.derivative(), gegenbauer(n - 1, lam + Rat(1)).poly * (Rat(2) * lam), lab + " derivative");
            Poly ode = Poly({Rat(1), Rat(0), Rat(-1)}) * C.derivative().derivative() -
                       Poly({Rat(0), Rat(1) + Rat(2) * lam}) * C.derivative() + C * (Rat(n) * (Rat(n) + Rat(2) * lam));
            c.expect(ode.is_zero(), lab + " ODE residual");
        }
    bool threw = false;
    try {
        assoc_laguerre(2, Rat(1, 3));
    } catch (const DomainError&) {
        threw = true;
    }
    c.expect(threw, "L_n^k with k outside the half-integers is rejected");
}

}  // namespace boundstate
