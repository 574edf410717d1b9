#pragma once

#include <functional>
#include <string>
#include <vector>

#include "boundstate/coulomb.hpp"
#include "boundstate/dimreg.hpp"
#include "boundstate/eps_series.hpp"

namespace boundstate {

// ---------------------------------------------------------------- Fourier kernels

// One symmetrized tensor structure: the sum over distinct index placements of
// `deltas` Kronecker deltas and `xhats` unit vectors (2·deltas + xhats = rank).
struct TensorTerm {
    int deltas = 0;
    int xhats = 0;
    EpsSeries coeff;  // in ε; constant at D = 3
    int placements() const;
};

// ∫d^Dq/(2π)^D e^{iq·x} q_{i1}…q_{ik}/q^α
//   = i^{k mod 2} π^{pi_power} prefactor(ε) r^{r_const + r_eps·ε} Σ terms.
// Each q_j acts as −i∂_j, so even ranks come out real and positive-normalized.
struct FourierKernel {
    long alpha = 0;
    int rank = 0;
    bool dimensional = false;  // D = 3−2ε rather than 3
    int pi_power = 0;
    EpsSeries prefactor;
    long r_const = 0;
    long r_eps = 0;
    std::vector<TensorTerm> terms;

    bool imaginary() const { return rank % 2 == 1; }
    // π^{pi_power} × prefactor at D = 3, for a kernel finite there.
    Rat prefactor_at_3d() const;
    std::string str() const;
};

enum class KernelSingularity { None, Delta, Log };

// Which exceptional case applies to q_{i1..ik}/q^α in D = 3 (Delta: the transform
// carries δ³(x) terms the power formula misses; Log: the Γ formula or the
// q-integral itself diverges at D = 3).
KernelSingularity kernel_singularity(long alpha, int rank);

// `order` is the highest ε power kept in the D-dimensional prefactor (≤ 1).
// At D = 3 a singular case throws SingularityError naming the type.
FourierKernel fourier_kernel(long alpha, int rank, bool dimensional, int order = 1);

// FT[ln q / q^α] = K_α(x) (c_α − ln r) with K_α the rank-0 kernel; returns c_α.
SymExpr fourier_log_shift(long alpha);

// FT[ln q] = −Γ(D/2)/(2π^{D/2} r^D): the exceptional log transform (rank 0, D = 3).
FourierKernel fourier_kernel_log();

// ---------------------------------------------------------------- brackets

struct BracketSpec {
    std::string tag;
    std::string description;
    Units units;
    // "catalog:<tag>" / "dimreg:<tag>" pieces the value reduces to.
    std::string reduction;
};

const std::vector<BracketSpec>& bracket_catalog();
// CatalogError for an unknown tag.
const BracketSpec& bracket_spec(const std::string& tag);

// Laurent values are π^{pi_power} × π φ̄² μ̄^{mubar ε} × series (as in dimreg);
// everything else is an exact Value.
struct BracketValue {
    bool laurent = false;
    SplitResult split;
    int pi_power = 0;
    Value exact;
};

// The tabulated closed form.
BracketValue bracket(const std::string& tag, const QuantumState& st);
// The same bracket rebuilt from Fourier kernels and coordinate expectation values.
BracketValue bracket_reduced(const std::string& tag, const QuantumState& st);

// ⟨ln(q/κ)⟩; the log is Λ_κ = ln(κn/(2m_rZα)).
Value bracket_lnq(const QuantumState& st);
// Double momentum-space integral of ln q (κ = m_rZα = 1) for S states, n ≤ 4.
// ToleranceError when the quadrature does not settle.
double bracket_lnq_oracle(long n);

// ⟨ln(q/κ)⟩ at κ = m_rZα = 1, resolved numerically from the closed form.
double bracket_lnq_numeric(const QuantumState& st);

}  // namespace boundstate
