#include <doctest.h>

#include "boundstate/coulomb.hpp"
#include "boundstate/errors.hpp"

using namespace boundstate;

namespace {
SymExpr R(long a, long b = 1) { return SymExpr(Rat(a, b)); }
SymExpr closed(const char* tag, long n, long l) { return expectation_closed(tag, {n, l}).coeff; }
SymExpr oracle(const char* tag, long n, long l) { return expectation_oracle(tag, {n, l}).coeff; }
}  // namespace

TEST_CASE("quantum state validation") {
    CHECK_THROWS_AS(QuantumState(0, 0), DomainError);
    CHECK_THROWS_AS(QuantumState(2, 2), DomainError);
    CHECK_THROWS_AS(QuantumState(3, -1), DomainError);
    CHECK(QuantumState(5, 3).nr() == 1);
}

TEST_CASE("radial wave functions") {
    CHECK(radial_wavefunction({1, 0}).poly.coeffs() == std::vector<Rat>{Rat(1)});
    CHECK(radial_wavefunction({2, 0}).poly.coeffs() == std::vector<Rat>{Rat(2), Rat(-1)});
    CHECK(radial_wavefunction({3, 1}).poly.coeffs() == std::vector<Rat>{Rat(4), Rat(-1)});
    CHECK(radial_wavefunction({1, 0}).norm2 == Rat(4));
    for (long n = 1; n <= 5; ++n)
        for (long l = 0; l < n; ++l) CHECK(radial_norm(radial_wavefunction({n, l})) == Rat(1));
}

TEST_CASE("closed forms") {
    CHECK(closed("r^-1", 3, 1) == R(1, 9));
    // 4/((3/2)·8) − 3/16 = 7/48
    CHECK(closed("p4", 2, 1) == R(7, 48));
    CHECK(oracle("p4", 2, 1) == R(7, 48));
    CHECK(closed("r", 2, 1) == R(5));
    SymExpr lnr = closed("ln(kr)/r", 1, 0);
    CHECK(lnr == SymExpr::log_scale("kappa") + R(1) - SymExpr::gamma_e());
    CHECK(expectation_closed("p4", {2, 1}).units == Units::mza(4));
    CHECK(expectation_closed("delta3", {3, 0}).units == Units{3, 3, -1});
    CHECK(closed("delta3", 2, 0) == R(1, 8));
    CHECK(closed("delta3", 2, 1) == R(0));
}

TEST_CASE("oracle values") {
    CHECK(oracle("1", 4, 2) == R(1));
    CHECK(oracle("r^2", 1, 0) == R(3));
    CHECK(oracle("dr", 1, 0) == R(-1));
    CHECK(oracle("p6", 1, 0) == closed("p6", 1, 0));
    CHECK(oracle("p4*V", 2, 0) == closed("p4*V", 2, 0));
}

TEST_CASE("validity domains") {
    CHECK_THROWS_AS(expectation_closed("r^-3", {2, 0}), RequiresDimregError);
    CHECK_THROWS_AS(expectation_closed("r^-5", {3, 1}), RequiresDimregError);
    CHECK_THROWS_AS(expectation_closed("V'^2", {1, 0}), RequiresDimregError);
    CHECK_THROWS_AS(expectation_oracle("V^2*dr2", {1, 0}), RequiresDimregError);
    CHECK_NOTHROW(expectation_closed("V^2*dr2", {1, 0}));
    CHECK_THROWS_AS(expectation_closed("no-such-op", {1, 0}), CatalogError);
    RadialOracle o({2, 0});
    CHECK_THROWS_AS(o.integrate(o.rpow(-3, RadialOracle::mul(o.R(), o.R()))), DivergenceError);
}

TEST_CASE("recursion and Feynman-Hellmann") {
    CHECK(recursion_residual(0, {1, 0}) == Rat(0));
    CHECK(recursion_residual(2, {3, 1}) == Rat(0));
    CHECK(recursion_residual(3, {4, 2}) == Rat(0));
    CHECK_THROWS_AS(recursion_residual(-1, {2, 0}), DivergenceError);
    CHECK(feynman_hellmann_residual({1, 0}) == Rat(0));
    CHECK(feynman_hellmann_residual({5, 3}) == Rat(0));
    CHECK(feynman_hellmann_residual({2, 1}) == Rat(0));
    CHECK(rsdr_residual(2, {3, 2}) == Rat(0));
}

TEST_CASE("momentum wave function") {
    MomentumRadialWF w({1, 0});
    // ψ(p) = 8√π/(1+p²)², R = √(4π) ψ
    Real pi = pi_value();
    CHECK(static_cast<double>(abs(w(Real(0)) - 16 * pi)) < 1e-30);
    CHECK(static_cast<double>(abs(w(Real(2)) - 16 * pi / 25)) < 1e-30);
    CHECK(static_cast<double>(abs(MomentumRadialWF({3, 1}).norm_numeric() - 1)) < 1e-10);
}

TEST_CASE("physical units") {
    PhysScale ps;
    ps.mr = Real("0.5");
    ps.zalpha = Real("0.1");
    Value v = expectation_closed("r^-1", {1, 0});
    CHECK(static_cast<double>(ps.restore(v, 1)) == doctest::Approx(0.05));
    Value lg = expectation_closed("ln(kr)", {1, 0});
    CHECK_THROWS(ps.restore(lg, 1));
    ps.kappa = Real("0.1");
    CHECK(static_cast<double>(ps.restore(lg, 1)) == doctest::Approx(1.5 - 0.5772156649015329));
}
