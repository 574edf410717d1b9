#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "boundstate/coulomb.hpp"
#include "boundstate/eps_series.hpp"
#include "boundstate/numeric.hpp"

namespace boundstate {

// ---------------------------------------------------------------- a_{jk}

// Triangular table a_{jk}, 0 ≤ k ≤ j ≤ jmax, of the generalized series
// L(ρ) = Σ_j Σ_{k≤j} a_{jk} n̄^k ρ^{j+2εk}.
template <class T>
struct CoeffTable {
    long l = 0;
    int jmax = 0;
    std::vector<std::vector<T>> a;  // a[j][k]

    const T& at(int j, int k) const { return a[static_cast<size_t>(j)][static_cast<size_t>(k)]; }
};

// Exact at a rational ε; SingularityError when a denominator vanishes.
CoeffTable<Rat> series_coefficients(long l, const Rat& eps, int jmax);
CoeffTable<Real> series_coefficients(long l, const Real& eps, int jmax);
// Formal ε: each a_{jk} expanded through ε^trunc.
CoeffTable<EpsSeries> series_coefficients_formal(long l, int jmax, int trunc);

// A_j = Σ_k a_{jk} n^k at ε = 0.
std::vector<Rat> collapsed_coefficients(long n, long l, int jmax);

// ---------------------------------------------------------------- eigenvalues

struct DimRegEigen {
    QuantumState state;
    double eps = 0;
    double nbar = 0;
    double gammabar = 0;  // units m_r Zα = 1
    double Ebar = 0;
    int nodes = 0;
};

// Shooting for n̄ within ½ of its O(ε) estimate; μ enters only γ̄ and Ē (units m_r Zα = 1).
// DomainError for |ε| > 0.05; ConvergenceError for a bracket without sign change or a wrong node count.
DimRegEigen eigenvalue_shoot(const QuantumState& st, double eps, double mu = 1.0);

// γ̄ from n̄ through the defining relation (inverse of the n̄(γ̄) map).
double gammabar_from_nbar(double nbar, double eps, double mu);

// ---------------------------------------------------------------- O(ε) expansions

// Ē = E_n{1 + ε[4Λ_μ + 4H_{n+ℓ} + 2/n]}, truncation 1.
EpsSeries energy_expansion(const QuantumState& st);
// n̄ = n + ε(2nγ_E − 2nH_{n+ℓ} − 1), truncation 1.
EpsSeries nbar_expansion(const QuantumState& st);
// γ̄ n = 1 + ε(2Λ_μ + 2H_{n+ℓ} + 1/n), truncation 1.
EpsSeries gammabar_expansion(const QuantumState& st);
// φ̄_{nℓ} / (γ_n^D/π)^{1/2}, truncation 1.
EpsSeries contact_expansion(const QuantumState& st);
// Ω_{D−1}/(4π), truncation 1.
EpsSeries solid_angle_ratio();

// ---------------------------------------------------------------- radial operator algebra

// c(ε) β^m r^{t+uε} ∂_r^k acting on R̄; β = n̄γ̄(2γ̄)^{2ε} in these units.
struct RTerm {
    EpsSeries c;
    int m = 0;
    long t = 0;
    long u = 0;
    int k = 0;
};

class RExpr {
public:
    RExpr() = default;
    // R̄ itself.
    static RExpr psi();

    RExpr d() const;                          // ∂_r
    RExpr rpow(long t, long u = 0) const;     // × r^{t+uε}
    RExpr V() const;                          // × V̄ = −β r^{−1+2ε}
    RExpr Vprime() const;                     // × V̄′ = (1−2ε)β r^{−2+2ε}
    RExpr p2(long l) const;                   // radial −∇² in D dims at angular momentum ℓ
    RExpr operator+(const RExpr& o) const;
    RExpr operator*(const EpsSeries& c) const;
    RExpr operator*(const Rat& c) const;

    const std::vector<RTerm>& terms() const { return terms_; }

private:
    std::vector<RTerm> terms_;
};

// One term of Σ c β^m ∫ r^{D−1} r^{t+uε} (∂^{k1}R̄)(∂^{k2}R̄) dr.
struct PairTerm {
    EpsSeries c;
    int m = 0;
    long t = 0;
    long u = 0;
    int k1 = 0;
    int k2 = 0;
};

using Integrand = std::vector<PairTerm>;

// ⟨A|B⟩ for radial pieces of the same ℓ.
Integrand inner(const RExpr& a, const RExpr& b);
// ⟨∇A| M |∇B⟩ = ⟨∂A|M|∂B⟩ + ℓ(ℓ+1−2ε)⟨A|M r^{−2}|B⟩ for a multiplicative M.
Integrand inner_grad(const RExpr& a, const RExpr& b, long l,
                     const std::function<RExpr(const RExpr&)>& mid = {});
Integrand operator+(Integrand a, const Integrand& b);

// Laurent result in units π φ̄² μ̄^{mubar·ε} (m_r = Zα = 1), through ε^0.
struct SplitResult {
    EpsSeries series;
    int mubar = 0;
    int depth = 0;  // number of generalized powers kept in the head L̂
};

// L = L̂ + ²L split: head integrated analytically in ε, tail at ε = 0.
// DivergenceError when a head power is not regulated (ε-independent exponent ≤ −1).
SplitResult split_expectation(const Integrand& f, const QuantumState& st);

// ---------------------------------------------------------------- divergent table

struct DivergentOp {
    std::string tag;
    std::string description;
    Units units;              // of the exact ℓ > 0 value
    std::string catalog_tag;  // coulomb entry holding the ℓ > 0 closed form, if any
    bool anomalous = false;   // finite in 3D but not commuting with D → 3 at ℓ = 0
};

const std::vector<DivergentOp>& divergent_catalog();
const DivergentOp& divergent_op(const std::string& tag);

// D-dimensional radial integrand of an operator at angular momentum ℓ.
Integrand divergent_integrand(const std::string& tag, long l);

// ℓ = 0 Laurent data as tabulated, in units π φ̄² μ̄^{mubar ε}; finite
// entries carry n³ × the 3D value. Through ε^0.
SplitResult divergent_table(const std::string& tag, const QuantumState& st);

struct DivergentValue {
    bool laurent = false;
    SplitResult split;  // when laurent
    Value exact;        // otherwise: exact 3D value at ℓ > 0
};

// ℓ = 0 (and anything not finite in 3D): the split; ℓ>0: the exact closed form.
// The ℓ = 0 evaluation itself (composite for p⁶); works at any ℓ.
SplitResult divergent_split(const std::string& tag, const QuantumState& st);

DivergentValue divergent_expectation(const std::string& tag, const QuantumState& st);

// ---------------------------------------------------------------- identities

struct IdentityResidual {
    std::string name;
    EpsSeries residual;  // normalized units; zero through ε^0 when the identity holds
};

std::vector<IdentityResidual> identity_residuals(const QuantumState& st);

// ---------------------------------------------------------------- numeric D-dim wave function

// Shooting solution L(ρ) of the D-dim radial equation at the converged n̄:
// the generalized series on [0, ρ_s], the ODE beyond.
class NumericWF {
public:
    NumericWF(const QuantumState& st, double eps, double mu = 1.0);

    const DimRegEigen& eigen() const { return eig_; }
    // ∫_0^{ρmax} ρ^{2ℓ+a+bε} e^{−ρ} L(ρ)² dρ, analytically continued at the origin
    double moment(double a, double b) const;
    // ⟨r^{t+uε}⟩ in the normalized state, units m_r Zα = 1
    double expectation_rpow(double t, double u) const;
    // φ̄ = ψ(0) from ∫ d^Dx ψ² = 1 (S states only)
    double contact() const;
    double beta() const;

private:
    QuantumState st_;
    double eps_;
    DimRegEigen eig_;
    std::vector<std::pair<double, double>> head_;  // (power, coefficient) of L on [0, ρ_s]
};

// ⟨V̄³⟩ at finite ε by quadrature of the shooting wave function.
double v3_numeric(const QuantumState& st, double eps, double mu = 1.0);
double vprime2_numeric(const QuantumState& st, double eps, double mu = 1.0);

struct PoleFit {
    double cm1 = 0, c0 = 0, c1 = 0;
};
// Exact fit of c₋₁/ε + c₀ + c₁ε through three (ε, value) points.
PoleFit fit_pole(const std::vector<std::pair<double, double>>& pts);

}  // namespace boundstate
