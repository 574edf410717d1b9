#include <doctest.h>

#include <cmath>

#include "boundstate/brackets.hpp"
#include "boundstate/errors.hpp"

using namespace boundstate;

TEST_CASE("fourier kernels") {
    CHECK(fourier_kernel(2, 0, false).prefactor_at_3d() == Rat(1, 4));
    CHECK(fourier_kernel(1, 0, false).prefactor_at_3d() == Rat(1, 2));
    CHECK(fourier_kernel(1, 0, false).pi_power == -2);
    CHECK(fourier_kernel(3, 1, false).imaginary());
    CHECK_THROWS_AS(fourier_kernel(4, 0, false), SingularityError);
    CHECK_THROWS_AS(fourier_kernel(0, 0, true), SingularityError);
    CHECK_THROWS_AS(fourier_kernel(2, 5, true), DomainError);
    CHECK(kernel_singularity(1, 0) == KernelSingularity::None);
    auto k = fourier_kernel(4, 2, false);
    // (δ_ij − x̂_ix̂_j)/(8πr)
    REQUIRE(k.terms.size() == 2);
    CHECK(k.terms[1].coeff.coeff(0) == SymExpr(-1));
    CHECK(k.terms[1].placements() == 1);
    CHECK(TensorTerm{1, 2, {}}.placements() == 6);
}

TEST_CASE("bracket values") {
    CHECK(bracket("1/q^2", {2, 0}).exact.coeff == SymExpr(Rat(1, 16)));
    CHECK(bracket("1/q^4", {1, 0}).exact.coeff == SymExpr(Rat(-3, 16)));
    CHECK(bracket("p2.p1", {2, 1}).exact.coeff == SymExpr(Rat(1, 32)));
    CHECK(bracket("1/|q|", {1, 0}).exact.units == Units{2, 2, -2});
    CHECK_THROWS_AS(bracket_spec("q^3"), CatalogError);
    for (const auto& b : bracket_catalog()) {
        auto x = bracket(b.tag, {3, 1});
        auto y = bracket_reduced(b.tag, {3, 1});
        CHECK_MESSAGE(x.exact.coeff == y.exact.coeff, b.tag);
    }
}

TEST_CASE("log brackets") {
    SymExpr L = SymExpr::log_scale("kappa");
    CHECK(bracket_lnq({1, 0}).coeff == -L + SymExpr(1));
    CHECK(bracket_lnq({2, 1}).coeff == SymExpr(Rat(-1, 96)));
    CHECK_THROWS_AS(bracket_reduced("ln q", {1, 0}), DivergenceError);
    double o = bracket_lnq_oracle(2);
    CHECK(std::abs(o / bracket_lnq_numeric({2, 0}) - 1) < 1e-8);
    CHECK_THROWS_AS(bracket_lnq_oracle(0), DomainError);
}
