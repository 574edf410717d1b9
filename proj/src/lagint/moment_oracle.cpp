#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "boundstate/errors.hpp"
#include "boundstate/lagint.hpp"
#include "boundstate/laguerre.hpp"

namespace boundstate {

Moment brute_force_moment(const MomentSpec& spec) {
    if (spec.logpow < 0 || spec.logpow > 2) throw UnsupportedError("log power outside 0–2");
    if (!(spec.s + spec.s).is_integer())
        throw DomainError("brute_force_moment: s must be an integer or half-integer");
    Poly poly = subtract_laguerre(spec.left.n, spec.left.k, spec.p).poly;
    if (spec.right) poly = poly * assoc_laguerre(spec.right->n, spec.right->k);

    bool exact = spec.s.is_integer();
    SymExpr sym;
    Real num = 0;
    for (long t = 0; t <= poly.degree(); ++t) {
        Rat c = poly.coeff(t);
        if (c.is_zero()) continue;
        Rat arg = spec.s + Rat(t) + Rat(1);  // Γ argument
        if (arg <= Rat(0))
            throw DivergenceError("monomial x^" + (spec.s + Rat(t)).str() + " of " + spec.str() +
                                  " diverges at x → 0");
        if (exact) {
            sym += gamma_derivative_int(arg.to_long(), spec.logpow) * c;
        } else {
            Real x = to_real(arg);
            Real g = boost::math::tgamma(x);
            if (spec.logpow >= 1) {
                Real psi = boost::math::digamma(x);
                g *= spec.logpow == 1 ? psi : psi * psi + boost::math::trigamma(x);
            }
            num += to_real(c) * g;
        }
    }
    return exact ? Moment::of(sym) : Moment::approx(num);
}

}  // namespace boundstate
