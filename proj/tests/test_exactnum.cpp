#include <doctest.h>

#include <random>

#include "boundstate/errors.hpp"
#include "boundstate/hypergeometric.hpp"
#include "boundstate/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

using namespace boundstate;

TEST_CASE("rat canonical form") {
    Rat a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(Rat::parse("10/4") == Rat(5, 2));
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
    CHECK(factorial(25).str() == "15511210043330985984000000");
    CHECK(binomial(Rat(1, 2), 2) == Rat(-1, 8));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == Rat(0));
    CHECK(harmonic(5) == Rat(137, 60));
    CHECK(harmonic(4, 2) == Rat(205, 144));
    for (long n = 1; n <= 50; ++n) CHECK(harmonic(n) - harmonic(n - 1) == Rat(1, n));
}

TEST_CASE("diharmonic values") {
    CHECK(diharmonic(DiSign::Plus, 4, 1) == Rat(415, 144));
    CHECK(diharmonic(DiSign::Minus, 0, 7) == Rat(0));
    Rat h6 = harmonic(6), h6b = harmonic(6, 2);
    CHECK(diharmonic(DiSign::Plus, 6, 0) == (h6 * h6 - h6b) / Rat(2));
    for (long n = -3; n <= 12; ++n)
        for (long m = -12; m <= 12; ++m) {
            CHECK(diharmonic(DiSign::Plus, n, m) == diharmonic_region_sum(DiSign::Plus, n, m));
            CHECK(diharmonic(DiSign::Minus, n, m) == diharmonic_region_sum(DiSign::Minus, n, m));
        }
}

TEST_CASE("gamma ratio limit") {
    CHECK(gamma_ratio_limit(0, 1) == EpsSeries(0, 1, {SymExpr(1)}));
    CHECK(gamma_ratio_limit(3, 1) == EpsSeries(0, 1, {SymExpr(-6), SymExpr(11)}));
    CHECK(gamma_ratio_limit(1, 1) == EpsSeries(0, 1, {SymExpr(-1), SymExpr(1)}));
    CHECK_THROWS_AS(gamma_ratio_limit(2, 3), UnsupportedError);
    for (long N = 0; N <= 10; ++N) {
        // (−1)^N N! (1 − ε H_N + ε²(H_N² − H_N^(2))/2)
        auto g = gamma_ratio_limit(N, 2);
        Rat lead = sign_power(N) * factorial(N);
        Rat h = harmonic(N), h2 = harmonic(N, 2);
        CHECK(g.coeff(1).as_rational() == -lead * h);
        CHECK(g.coeff(2).as_rational() == lead * (h * h - h2) / Rat(2));
    }
}

TEST_CASE("gamma ratio limit against numeric gamma") {
    Real eps("1e-6");
    for (long N = 0; N <= 10; ++N) {
        Real exact = boost::math::tgamma(eps) / boost::math::tgamma(eps - N);
        Real series = evaluate(gamma_ratio_limit(N, 1), eps);
        CHECK(abs((series - exact) / exact) < Real("1e-5"));
    }
}

TEST_CASE("polygamma at integers") {
    CHECK(polygamma_int(0, 1) == -SymExpr::gamma_e());
    CHECK(polygamma_int(1, 1) == SymExpr::zeta2());
    CHECK(polygamma_int(0, 4) == -SymExpr::gamma_e() + SymExpr(Rat(11, 6)));
    CHECK_THROWS_AS(polygamma_int(2, 3), UnsupportedError);
}

TEST_CASE("gamma series near integers") {
    auto g = gamma_series(-1, Rat(2), 0);  // Γ(−1+2ε)
    CHECK(g.coeff(-1) == SymExpr(Rat(-1, 2)));
    CHECK(g.coeff(0) == SymExpr(-1) + SymExpr::gamma_e());
    auto h = gamma_series(3, Rat(1), 1);
    CHECK(h.coeff(1) == SymExpr(3) - SymExpr::gamma_e() * Rat(2));
    Real e("1e-20");
    CHECK(abs(evaluate(g, e) - boost::math::tgamma(Real(-1) + 2 * e)) < Real("1e-15"));
}

TEST_CASE("terminating 2F1 at unit argument") {
    CHECK(hypergeometric_2f1_unit(Rat(7, 3), 0, Rat(5)) == Rat(1));
    CHECK(hypergeometric_2f1_unit(Rat(1), 2, Rat(3)) == Rat(1, 2));
    CHECK(hypergeometric_2f1_unit(Rat(-1), 1, Rat(2)) == Rat(3, 2));
    CHECK_THROWS_AS(hypergeometric_2f1_unit(Rat(1), 3, Rat(-1)), SingularityError);
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int t = 0; t < 200; ++t) {
        Rat a(d(rng), 3), c(d(rng) * 2 + 1, 2);
        long n = (d(rng) + 9) / 2;
        CHECK(hypergeometric_2f1_unit(a, n, c) == hypergeometric_2f1_unit_series(a, n, c));
    }
}

TEST_CASE("f(n,k,a,b) expansions") {
    auto f1 = hypergeometric_f_expansion(1, 0, Rat(1), Rat(1));
    CHECK(f1.coeff(0) == SymExpr(2));
    auto f2 = hypergeometric_f_expansion(2, 0, Rat(1), Rat(1));
    CHECK(f2.coeff(0).is_zero());
    CHECK(f2.coeff(1) == SymExpr(-2));
    CHECK_THROWS_AS(hypergeometric_f_expansion(2, 1, Rat(0), Rat(1)), DomainError);
    for (long n = 1; n <= 5; ++n)
        for (long k = 0; k <= 5; ++k)
            for (auto [a, b] : {std::pair{Rat(1), Rat(1)}, {Rat(2), Rat(-1)}, {Rat(1, 2), Rat(3)}}) {
                auto f = hypergeometric_f_expansion(n, k, a, b);
                Real e("1e-18");
                Real plus = hypergeometric_f_numeric(n, k, a, b, e);
                Real minus = hypergeometric_f_numeric(n, k, a, b, -e);
                if (k >= 1) {
                    CHECK(f.coeff(-1).as_rational() ==
                          sign_power(n + 1) * Rat(n) / a * binomial(k + n - 1, n));
                    CHECK(abs((plus - minus) / 2 * e - evaluate(f.coeff(-1))) < Real("1e-12"));
                    CHECK(abs((plus + minus) / 2 - evaluate(f.coeff(0))) < Real("1e-12"));
                } else {
                    CHECK(abs((plus + minus) / 2 - evaluate(f.coeff(0))) < Real("1e-12"));
                    CHECK(abs((plus - minus) / (2 * e) - evaluate(f.coeff(1))) < Real("1e-12"));
                }
            }
}

TEST_CASE("eps series ring laws") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-20, 20);
    auto random_series = [&](int low) {
        std::vector<SymExpr> c;
        for (int i = low; i <= 3; ++i) {
            SymExpr e(Rat(d(rng), 7));
            if (i >= 1) e += SymExpr::gamma_e() * Rat(d(rng));
            c.push_back(e);
        }
        return EpsSeries(low, 3, c);
    };
    for (int t = 0; t < 50; ++t) {
        auto x = random_series(0), y = random_series(0), z = random_series(0);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
    }
    auto one_over = EpsSeries(0, 4, {SymExpr(2), SymExpr(3), SymExpr(-1)}).inverse();
    CHECK((one_over * EpsSeries(0, 4, {SymExpr(2), SymExpr(3), SymExpr(-1)}))
              .equal_through(EpsSeries::constant(SymExpr(1), 4), 4));
    CHECK_THROWS_AS(EpsSeries(-3, 0, {SymExpr(1)}), InternalError);
}
