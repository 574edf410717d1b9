#include <doctest.h>

#include "boundstate/errors.hpp"
#include "boundstate/lagint.hpp"
#include "boundstate/specfun.hpp"

using namespace boundstate;

namespace {
SymExpr G() { return SymExpr::gamma_e(); }
SymExpr R(long a, long b = 1) { return SymExpr(Rat(a, b)); }
}  // namespace

TEST_CASE("I integrals") {
    CHECK(integral_I(Rat(0), 4, 1).symbolic() == R(1));
    CHECK(integral_I(Rat(1), 0, 1).symbolic() == R(1));
    CHECK(integral_I(Rat(1), 2, 1).symbolic() == R(0));
    CHECK(integral_I(Rat(-1), 3, 1, 1).symbolic() == R(-13, 3));
    CHECK(integral_I(Rat(-2), 2, 1, 2).symbolic() == R(1, 2));
    CHECK_THROWS_AS(integral_I(Rat(-1), 3, 1), DivergenceError);
    CHECK_THROWS_AS(integral_I(Rat(-3), 3, 1, 2), DivergenceError);
}

TEST_CASE("J integrals") {
    CHECK(integral_J(Rat(0), 2, 1).symbolic() == -G() - R(3, 2));
    CHECK(integral_J(Rat(2), 3, 1).symbolic() == R(1, 3));
    CHECK(integral_J(Rat(1), 0, 1).symbolic() == R(1) - G());
}

TEST_CASE("K integrals") {
    CHECK(integral_K(Rat(2), 3, 2, 5, 2).symbolic() == R(0));
    CHECK(integral_K(Rat(2), 4, 2, 4, 2).symbolic() == R(30));
    CHECK(integral_K(Rat(2), 5, 1, 5, 1).symbolic() == R(72));
    CHECK(integral_K(Rat(-2), 4, 1, 4, 1, 2).symbolic() == R(5));
    CHECK(integral_K(Rat(0), 4, 1, 3, 2).symbolic() == R(10));
}

TEST_CASE("L and M integrals") {
    CHECK(integral_L(Rat(3), 2, 3, 2, 3).symbolic() == (R(137, 60) - G()) * Rat(60));
    CHECK(integral_L(Rat(0), 1, 1, 1, 1).symbolic() == (R(1, 2) + G()) * Rat(-2));
    SymExpr m01 = G() * G() - G() * Rat(2) + SymExpr::zeta2();
    CHECK(integral_M(Rat(1), 0, 1, 0, 1).symbolic() == m01);
    Rat h3 = harmonic(3), h2 = harmonic(2);
    SymExpr m = SymExpr(h3 * h3 - harmonic(3, 2) - Rat(2) * diharmonic(DiSign::Minus, 2, 2)) +
                (SymExpr(h2) - G()) * (Rat(2) * h3) + G() * G() + SymExpr::zeta2();
    CHECK(integral_M(Rat(1), 2, 1, 2, 1).symbolic() == m * Rat(3));
}

TEST_CASE("non-integer s is numeric only") {
    Moment m = integral_I(Rat(1, 2), 2, 1);
    CHECK_FALSE(m.exact);
    CHECK_THROWS_AS(m.symbolic(), InternalError);
    MomentSpec spec{Rat(1, 2), 0, {2, 1}, 0, std::nullopt};
    CHECK(abs(brute_force_moment(spec).numeric - m.numeric) < Real("1e-40"));
}

TEST_CASE("brute force oracle") {
    MomentSpec a{Rat(2), 0, {1, 1}, 0, LaguerreRef{1, 1}};
    CHECK(brute_force_moment(a).symbolic() == R(8));
    MomentSpec b{Rat(1), 0, {1, 1}, 1, std::nullopt};
    CHECK(brute_force_moment(b).symbolic() == R(-2));
    MomentSpec d{Rat(-2), 1, {2, 1}, 0, std::nullopt};
    CHECK_THROWS_AS(brute_force_moment(d), DivergenceError);
    CHECK_THROWS_AS(closed_moment(d), DivergenceError);
    MomentSpec e{Rat(0), 3, {2, 1}, 0, std::nullopt};
    CHECK_THROWS_AS(closed_moment(e), UnsupportedError);
}
