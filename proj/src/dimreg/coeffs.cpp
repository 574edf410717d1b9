#include "boundstate/dimreg.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/laguerre.hpp"

namespace boundstate {

namespace {

void check_args(long l, int jmax) {
    if (l < 0) throw DomainError("series_coefficients: ℓ must be ≥ 0");
    if (jmax < 1) throw DomainError("series_coefficients: j_max must be ≥ 1");
}

bool vanishes(const Rat& x) { return x.is_zero(); }
bool vanishes(const Real& x) { return abs(x) < Real("1e-40"); }

template <class T>
CoeffTable<T> build(long l, const T& eps, int jmax) {
    check_args(l, jmax);
    CoeffTable<T> tab{l, jmax, {}};
    tab.a.assign(static_cast<size_t>(jmax) + 1, {});
    for (int j = 0; j <= jmax; ++j) tab.a[static_cast<size_t>(j)].assign(static_cast<size_t>(j) + 1, T(0));
    tab.a[0][0] = T(1);
    for (int j = 1; j <= jmax; ++j) {
        for (int k = 0; k <= j; ++k) {
            T den = (T(j) + T(2 * k) * eps) * (T(j + 2 * l + 1) + T(2 * (k - 1)) * eps);
            if (vanishes(den))
                throw SingularityError("a_{jk} recursion: denominator vanishes at j=" + std::to_string(j) +
                                       ", k=" + std::to_string(k));
            T num(0);
            if (k < j) num += tab.at(j - 1, k) * (T(j + l) + T(2 * k - 1) * eps);
            if (k > 0) num -= tab.at(j - 1, k - 1);
            tab.a[static_cast<size_t>(j)][static_cast<size_t>(k)] = num / den;
        }
    }
    return tab;
}

}  // namespace

CoeffTable<Rat> series_coefficients(long l, const Rat& eps, int jmax) { return build<Rat>(l, eps, jmax); }
CoeffTable<Real> series_coefficients(long l, const Real& eps, int jmax) { return build<Real>(l, eps, jmax); }

CoeffTable<EpsSeries> series_coefficients_formal(long l, int jmax, int trunc) {
    check_args(l, jmax);
    CoeffTable<EpsSeries> tab{l, jmax, {}};
    tab.a.resize(static_cast<size_t>(jmax) + 1);
    tab.a[0].push_back(EpsSeries::constant(SymExpr(1), trunc));
    for (int j = 1; j <= jmax; ++j) {
        for (int k = 0; k <= j; ++k) {
            EpsSeries den = EpsSeries::linear(SymExpr(j), SymExpr(2 * k), trunc) *
                            EpsSeries::linear(SymExpr(j + 2 * l + 1), SymExpr(2 * (k - 1)), trunc);
            EpsSeries num = EpsSeries::zero(trunc);
            if (k < j) num += tab.at(j - 1, k) * EpsSeries::linear(SymExpr(j + l), SymExpr(2 * k - 1), trunc);
            if (k > 0) num -= tab.at(j - 1, k - 1);
            tab.a[static_cast<size_t>(j)].push_back(num * den.inverse());
        }
    }
    return tab;
}

std::vector<Rat> collapsed_coefficients(long n, long l, int jmax) {
    auto tab = series_coefficients(l, Rat(0), jmax);
    std::vector<Rat> A;
    for (int j = 0; j <= jmax; ++j) {
        Rat s(0), nk(1);
        for (int k = 0; k <= j; ++k, nk *= Rat(n)) s += tab.at(j, k) * nk;
        A.push_back(s);
    }
    return A;
}

}  // namespace boundstate
