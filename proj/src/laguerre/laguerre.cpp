#include "boundstate/laguerre.hpp"

#include "boundstate/errors.hpp"

namespace boundstate {

Poly assoc_laguerre(long n, const Rat& k) {
    if (!(k + k).is_integer())
        throw DomainError("assoc_laguerre: order " + k.str() + " is neither integer nor half-integer");
    if (n < 0) return Poly();
    std::vector<Rat> c(static_cast<size_t>(n + 1));
    Rat top = Rat(n) + k;
    for (long r = 0; r <= n; ++r)
        c[static_cast<size_t>(r)] = sign_power(r) / factorial(r) * binomial(top, n - r);
    return Poly(std::move(c));
}

SubtractedPoly subtract_laguerre(long n, const Rat& k, long p) {
    if (p < 0) throw DomainError("subtract_laguerre: p must be ≥ 0");
    return {n, k, p, assoc_laguerre(n, k).without_low_powers(p)};
}

GegenbauerPoly gegenbauer(long n, const Rat& lambda) {
    if (n < 0) throw DomainError("gegenbauer: degree must be ≥ 0");
    if (lambda.sign() <= 0) throw DomainError("gegenbauer: λ must be positive");
    Poly p;
    for (long m = 0; 2 * m <= n; ++m) {
        Rat c = sign_power(m) * rising(lambda, n - m) / (factorial(m) * factorial(n - 2 * m)) *
                Rat(2).pow(static_cast<int>(n - 2 * m));
        p += Poly::monomial(n - 2 * m, c);
    }
    return {n, lambda, p};
}

}  // namespace boundstate
