#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boundstate/numeric.hpp"
#include "boundstate/poly.hpp"
#include "boundstate/symexpr.hpp"

namespace boundstate {

struct QuantumState {
    long n = 1;
    long l = 0;

    // Throws DomainError unless n ≥ 1 and 0 ≤ ℓ ≤ n−1.
    QuantumState(long n_, long l_);
    long nr() const { return n - l - 1; }
    // ℓ(ℓ+1)
    Rat L() const { return Rat(l * (l + 1)); }
    std::string str() const;
};

// A value carries m_r^mr (Zα)^za π^pi; the mass dimension is mr.
struct Units {
    int mr = 0;
    int za = 0;
    int pi = 0;

    static Units mza(int d) { return {d, d, 0}; }
    friend bool operator==(const Units&, const Units&) = default;
    std::string str() const;
};

struct Value {
    SymExpr coeff;
    Units units;
};

// Physical parameters; internal results are in units m_r = Zα = 1.
struct PhysScale {
    Real mr = 1;
    Real zalpha = 1;
    std::optional<Real> m1, m2, mu, kappa;

    // Resolves Λ labels ("mu", "kappa") for state n.
    ScaleValues logs(long n) const;
    Real restore(const Value& v, long n) const;
};

// R_{nℓ}(r) = sqrt(norm2) ρ^ℓ e^{−ρ/2} poly(ρ), ρ = 2r/n, Bohr radius 1.
struct RadialWF {
    QuantumState state;
    Rat norm2;
    Poly poly;
};

RadialWF radial_wavefunction(const QuantumState& st);
// ∫ r² R² dr through the lagint K integral; 1 when the representation is right.
Rat radial_norm(const RadialWF& wf);

// One tabulated expectation value.
struct CatalogEntry {
    std::string tag;
    std::string description;
    Units units;
    long min_l = 0;  // ℓ below this is outside the entry's validity
    // ℓ = 0 value exists only in D dimensions (lives in dimreg)
    bool dimreg_at_l0 = false;
    std::function<SymExpr(const QuantumState&)> closed;
    std::function<SymExpr(const QuantumState&)> oracle;
};

const std::vector<CatalogEntry>& coulomb_catalog();
// Throws CatalogError for an unknown tag.
const CatalogEntry& catalog_entry(const std::string& tag);

// Throws RequiresDimregError when the state is outside the entry's 3D validity.
Value expectation_closed(const std::string& tag, const QuantumState& st);
Value expectation_oracle(const std::string& tag, const QuantumState& st);

// Exact radial integration engine behind expectation_oracle. Functions are
// Laurent polynomials in ρ with an implicit e^{−ρ/2}; products carry e^{−ρ}.
class RadialOracle {
public:
    using Fn = std::map<long, Rat>;

    explicit RadialOracle(const QuantumState& st);

    const QuantumState& state() const { return st_; }
    Rat energy() const { return Rat(-1, 2 * st_.n * st_.n); }

    Fn R() const { return R_; }
    Fn d(const Fn& f) const;                 // ∂_r
    Fn rpow(long s, const Fn& f) const;      // r^s f
    Fn p2(const Fn& f) const;                // radial −∇² at this ℓ
    Fn V(const Fn& f) const;                 // −f/r
    static Fn mul(const Fn& a, const Fn& b);

    // ∫ r² dr · integrand · ln^logpow(κr), including the normalization.
    SymExpr integrate(const Fn& integrand, int logpow = 0) const;
    // lim_{r→0} of a product (no exponential); DivergenceError if it blows up.
    Rat contact(const Fn& product) const;

private:
    QuantumState st_;
    Rat norm2_;
    Fn R_;
};

RadialOracle::Fn operator+(RadialOracle::Fn a, const RadialOracle::Fn& b);
RadialOracle::Fn operator-(RadialOracle::Fn a, const RadialOracle::Fn& b);
RadialOracle::Fn operator*(RadialOracle::Fn a, const Rat& c);

// ⟨[H, r^s ∂_r]⟩ combination at ε = 0; zero for a correct moment table.
Rat recursion_residual(long s, const QuantumState& st);
// ⟨r^s ∂_r⟩ + ½(s+2)⟨r^{s−1}⟩
Rat rsdr_residual(long s, const QuantumState& st);
// ⟨V⟩/β − ∂E/∂β
Rat feynman_hellmann_residual(const QuantumState& st);
// ⟨−(H−V)/m_r⟩ − ∂E/∂m_r
Rat feynman_hellmann_mr_residual(const QuantumState& st);
// ⟨∂H/∂ℓ⟩ − ∂E/∂ℓ with n = n_r + ℓ + 1
Rat feynman_hellmann_l_residual(const QuantumState& st);

// Momentum-space radial function of the Fourier-transformed state.
class MomentumRadialWF {
public:
    explicit MomentumRadialWF(const QuantumState& st);
    // R(p) in units m_r Zα = 1.
    Real operator()(const Real& p) const;
    // Same in double precision, for quadrature-heavy callers.
    double eval(double p) const;
    // ∫ p² R(p)² dp / (2π)³ by quadrature; 1 for a consistent normalization.
    Real norm_numeric() const;

private:
    QuantumState st_;
    Real pref_;
    Poly gegen_;
    std::vector<double> gegen_d_;
    double pref_d_ = 0;
};

}  // namespace boundstate
