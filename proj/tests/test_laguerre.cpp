#include <doctest.h>

#include "boundstate/errors.hpp"
#include "boundstate/laguerre.hpp"

using namespace boundstate;

namespace {
Poly x_poly() { return Poly::monomial(1); }
}  // namespace

TEST_CASE("laguerre explicit values") {
    CHECK(assoc_laguerre(0, 5) == Poly(Rat(1)));
    CHECK(assoc_laguerre(1, 1) == Poly({Rat(2), Rat(-1)}));
    CHECK(assoc_laguerre(2, 1) == Poly({Rat(3), Rat(-3), Rat(1, 2)}));
    CHECK(assoc_laguerre(-1, 2).is_zero());
    CHECK(assoc_laguerre(3, Rat(1, 2)).degree() == 3);
    CHECK_THROWS_AS(assoc_laguerre(2, Rat(1, 3)), DomainError);
}

TEST_CASE("subtracted laguerre") {
    CHECK(subtract_laguerre(1, 1, 1).poly == Poly({Rat(0), Rat(-1)}));
    CHECK(subtract_laguerre(4, 3, 0).poly == assoc_laguerre(4, 3));
    CHECK(subtract_laguerre(1, 1, 2).poly.is_zero());
}

TEST_CASE("laguerre derivative and value at zero") {
    for (long n = 0; n <= 15; ++n)
        for (long k = 0; k <= 8; ++k) {
            CHECK(assoc_laguerre(n, k).derivative() == -assoc_laguerre(n - 1, k + 1));
            CHECK(assoc_laguerre(n, k)(Rat(0)) == binomial(n + k, n));
        }
}

TEST_CASE("laguerre three-term recursions") {
    Poly x = x_poly();
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= 6; ++k) {
            auto L = [](long a, long b) { return assoc_laguerre(a, b); };
            // (n+1) L_{n+1}^k = (2n+1+k−x) L_n^k − (n+k) L_{n−1}^k
            CHECK(L(n + 1, k) * Rat(n + 1) ==
                  (Poly({Rat(2 * n + 1 + k), Rat(-1)})) * L(n, k) - L(n - 1, k) * Rat(n + k));
            // L_n^{k−1} = L_n^k − L_{n−1}^k
            CHECK(L(n, k - 1) == L(n, k) - L(n - 1, k));
            // x L_n^{k+1} = (n+k+1) L_n^k − (n+1) L_{n+1}^k
            CHECK(x * L(n, k + 1) == L(n, k) * Rat(n + k + 1) - L(n + 1, k) * Rat(n + 1));
            // x L_n^{k+1} = (n+k) L_{n−1}^k − (n − x) L_n^k
            CHECK(x * L(n, k + 1) == L(n - 1, k) * Rat(n + k) - Poly({Rat(n), Rat(-1)}) * L(n, k));
        }
}

TEST_CASE("gegenbauer") {
    Rat lam(7, 3);
    CHECK(gegenbauer(1, lam).poly == Poly({Rat(0), Rat(2) * lam}));
    CHECK(gegenbauer(2, lam).poly == Poly({-lam, Rat(0), Rat(2) * lam * (lam + Rat(1))}));
    CHECK(gegenbauer(0, Rat(3, 2)).poly == Poly(Rat(1)));
    CHECK_THROWS_AS(gegenbauer(2, Rat(0)), DomainError);
    for (Rat l : {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)})
        for (long n = 0; n <= 12; ++n) {
            Poly C = gegenbauer(n, l).poly;
            if (n >= 1) CHECK(C.derivative() == gegenbauer(n - 1, l + Rat(1)).poly * (Rat(2) * l));
            Poly ode = Poly({Rat(1), Rat(0), Rat(-1)}) * C.derivative().derivative() -
                       Poly({Rat(0), Rat(1) + Rat(2) * l}) * C.derivative() +
                       C * (Rat(n) * (Rat(n) + Rat(2) * l));
            CHECK(ode.is_zero());
            for (long i = 0; i <= C.degree(); ++i)
                if ((i + n) % 2 == 1) CHECK(C.coeff(i).is_zero());
        }
}
