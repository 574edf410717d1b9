#include <doctest.h>

#include <cmath>

#include "boundstate/cx1.hpp"
#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"

using namespace boundstate;

namespace {
SymExpr lam() { return SymExpr::log_scale("mu"); }
}  // namespace

TEST_CASE("series coefficients") {
    auto t = series_coefficients(1, Rat(0), 4);
    CHECK(t.at(0, 0) == Rat(1));
    CHECK(t.at(1, 0) == Rat(1, 2));
    CHECK(t.at(1, 1) == Rat(-1, 4));
    // ε = 0, n = 2, ℓ = 0 terminates after j = 1
    auto A = collapsed_coefficients(2, 0, 3);
    CHECK(A == std::vector<Rat>{Rat(1), Rat(-1, 2), Rat(0), Rat(0)});
    CHECK_THROWS_AS(series_coefficients(0, Rat(-1, 2), 2), SingularityError);
    auto f = series_coefficients_formal(0, 2, 1);
    CHECK(f.at(1, 1).coeff(0) == SymExpr(Rat(-1, 2)));
    CHECK(f.at(1, 1).coeff(1) == SymExpr(Rat(1)));
}

TEST_CASE("O(eps) expansions") {
    EpsSeries nb = nbar_expansion({1, 0});
    CHECK(nb.coeff(0) == SymExpr(1));
    CHECK(nb.coeff(1) == SymExpr::gamma_e() * Rat(2) - SymExpr(Rat(3)));
    EpsSeries e = energy_expansion({2, 1});
    CHECK(e.coeff(0) == SymExpr(Rat(-1, 8)));
    CHECK(e.coeff(1) == (lam() * Rat(4) + SymExpr(Rat(4) * harmonic(3) + Rat(1))) * Rat(-1, 8));
}

TEST_CASE("shooting") {
    auto e = eigenvalue_shoot({2, 1}, 0.0);
    CHECK(e.nbar == doctest::Approx(2).epsilon(1e-10));
    CHECK(e.Ebar == doctest::Approx(-0.125).epsilon(1e-10));
    CHECK_THROWS_AS(eigenvalue_shoot({1, 0}, 0.2), DomainError);
    // the series tracks the solver to O(ε²)
    double eps = 1e-3;
    double series = evaluate(energy_expansion({1, 0}), Real(eps), {{"mu", Real(std::log(0.5))}}).convert_to<double>();
    CHECK(std::abs(eigenvalue_shoot({1, 0}, eps).Ebar - series) < 1e-4);
}

TEST_CASE("Laurent data") {
    auto v = divergent_expectation("V*V'", {1, 0});
    REQUIRE(v.laurent);
    CHECK(v.split.series.coeff(-1) == SymExpr(-2));
    CHECK(v.split.series.coeff(0) == lam() * Rat(-4));
    CHECK(v.split.mubar == 2);
    auto w = divergent_expectation("V^3", {3, 1});
    CHECK(!w.laurent);
    CHECK(w.exact.units == Units{3, 6, 0});
    CHECK_THROWS_AS(divergent_op("V^4"), CatalogError);
}

TEST_CASE("pole fit is exact on three points") {
    auto f = [](double e) { return 2.0 / e - 1.0 + 0.5 * e; };
    PoleFit p = fit_pole({{0.02, f(0.02)}, {0.01, f(0.01)}, {0.005, f(0.005)}});
    CHECK(p.cm1 == doctest::Approx(2).epsilon(1e-9));
    CHECK(p.c0 == doctest::Approx(-1).epsilon(1e-9));
}

TEST_CASE("cx1 energy shift") {
    // equal masses m1 = m2 = 2 m_r, c1 = c2 = 1: prefactor −4·(2/16)
    Cx1Shift s = cx1_energy_shift({1, 0}, Rat(1), Rat(1), Rat(2), Rat(2));
    CHECK(s.prefactor == Rat(-1, 2));
    CHECK(s.laurent);
    CHECK(s.series.coeff(-1) == SymExpr(Rat(1)));
    Cx1Shift p = cx1_energy_shift({2, 1}, Rat(1), Rat(1), Rat(2), Rat(2));
    CHECK(!p.laurent);
    // (3·4 − 2)/(2·2·(1/2)(3/2)(5/2)·32) = 1/24
    CHECK(p.exact == SymExpr(Rat(-1, 2) * Rat(1, 24)));
}
