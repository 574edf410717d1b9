#include <sstream>

#include "boundstate/brackets.hpp"
#include "boundstate/errors.hpp"
#include "boundstate/specfun.hpp"

namespace boundstate {

namespace {

// ψ(h) for h = twice/2, h > 0.
SymExpr digamma_half(long twice) {
    if (twice % 2 == 0) return polygamma_int(0, twice / 2);
    SymExpr s = -SymExpr::gamma_e() - SymExpr::ln2() * Rat(2);
    for (long k = 1; k <= (twice - 1) / 2; ++k) s += SymExpr(Rat(2, 2 * k - 1));
    return s;
}

// Γ(twice/2 + qε) = π^{pi_half/2} × series, through ε^order.
struct HalfGamma {
    int pi_half = 0;
    EpsSeries series;
};

HalfGamma gamma_half(long twice, const Rat& q, int order) {
    if (twice % 2 == 0) return {0, gamma_series(twice / 2, q, order)};
    if (order > 1) throw UnsupportedError("Γ at half-integer argument is only expanded through ε¹");
    // Γ(h) = √π ∏ over the shift from ½; ψ(h) by the same shift
    Rat g(1);
    long t = 1;  // 2h while walking from ½
    SymExpr psi = digamma_half(1);
    while (t < twice) {
        g *= Rat(t, 2);
        psi += SymExpr(Rat(2, t));
        t += 2;
    }
    while (t > twice) {
        t -= 2;
        g /= Rat(t, 2);
        psi -= SymExpr(Rat(2, t));
    }
    EpsSeries s = order >= 1 ? EpsSeries::linear(SymExpr(1), psi * q, order) : EpsSeries::constant(SymExpr(1), 0);
    return {1, s * g};
}

// Γ(A) on top: (D + s − α)/2, with s = 0, 2, 2, 4, 4 for ranks 0…4
long shift_of(int rank) { return rank == 0 ? 0 : (rank <= 2 ? 2 : 4); }

int placements(int rank, int deltas, int xhats) {
    Rat r = factorial(rank) / (Rat(2).pow(deltas) * factorial(deltas) * factorial(xhats));
    return static_cast<int>(r.to_double() + 0.5);
}

bool nonpositive_int(long twice) { return twice <= 0 && twice % 2 == 0; }

}  // namespace

int TensorTerm::placements() const { return boundstate::placements(2 * deltas + xhats, deltas, xhats); }

KernelSingularity kernel_singularity(long alpha, int rank) {
    // a component of angular momentum ℓc behaves as q^{rank−α} Y_ℓc
    for (int lc = rank; lc >= 0; lc -= 2)
        if (nonpositive_int(lc - rank + alpha)) return KernelSingularity::Delta;
    if (nonpositive_int(3 + shift_of(rank) - alpha)) return KernelSingularity::Log;
    if (alpha - rank >= 3 + rank % 2) return KernelSingularity::Log;  // q → 0 not integrable
    return KernelSingularity::None;
}

FourierKernel fourier_kernel(long alpha, int rank, bool dimensional, int order) {
    if (rank < 0 || rank > 4) throw DomainError("Fourier kernels exist for ranks 0 to 4");
    if (order < 0 || order > 1) throw UnsupportedError("Fourier kernel prefactors are expanded through ε¹ only");
    KernelSingularity sing = kernel_singularity(alpha, rank);
    std::string what = "Fourier transform of q^" + std::to_string(rank) + "/q^" + std::to_string(alpha);
    if (sing == KernelSingularity::Delta)
        throw SingularityError(what + ": delta-type exceptional case (δ functions and derivatives)");
    if (sing == KernelSingularity::Log && !dimensional)
        throw SingularityError(what + ": log-type exceptional case in D = 3; use the D-dimensional kernel");

    const int T = dimensional ? order : 0;
    const long s = shift_of(rank);
    FourierKernel k;
    k.alpha = alpha;
    k.rank = rank;
    k.dimensional = dimensional;

    // Γ((D+s−α)/2) / (2^{α−s/2} π^{D/2} Γ(α/2))
    HalfGamma top = gamma_half(3 + s - alpha, dimensional ? Rat(-1) : Rat(0), T);
    HalfGamma bot = gamma_half(alpha, Rat(0), 0);
    Rat bot_c = bot.series.coeff(0).as_rational();
    EpsSeries pre = top.series * (Rat(1) / (bot_c * Rat(2).pow(static_cast<int>(alpha - s / 2))));
    if (dimensional) pre = mul_to(pre, EpsSeries::linear(SymExpr(1), SymExpr::lnpi(), T), T);  // π^ε
    k.prefactor = pre;
    int pi_half = top.pi_half - bot.pi_half - 3;
    if (pi_half % 2 != 0) throw InternalError("Fourier kernel: half-integer power of π left over");
    k.pi_power = pi_half / 2;

    // r^{−(D + rank − α)}
    k.r_const = -(3 + rank - alpha);
    k.r_eps = dimensional ? 2 : 0;

    auto c = [&](long a, long b) { return EpsSeries::linear(SymExpr(a), SymExpr(dimensional ? b : 0), T); };
    auto one = c(1, 0);
    switch (rank) {
        case 0: k.terms = {{0, 0, one}}; break;
        case 1: k.terms = {{0, 1, one}}; break;
        case 2: k.terms = {{1, 0, one}, {0, 2, c(alpha - 5, 2)}}; break;
        case 3: k.terms = {{1, 1, one}, {0, 3, c(alpha - 7, 2)}}; break;
        case 4: {
            EpsSeries a = c(7 - alpha, -2), b = c(9 - alpha, -2);
            k.terms = {{2, 0, one}, {1, 2, a * Rat(-1)}, {0, 4, mul_to(a, b, T)}};
            break;
        }
    }
    return k;
}

SymExpr fourier_log_shift(long alpha) {
    if (kernel_singularity(alpha, 0) != KernelSingularity::None || alpha <= 0)
        throw SingularityError("FT[q^-" + std::to_string(alpha) + " ln q] is an exceptional case");
    // −∂_α of the rank-0 kernel, divided by the kernel, plus ln r
    return digamma_half(3 - alpha) * Rat(1, 2) + SymExpr::ln2() + digamma_half(alpha) * Rat(1, 2);
}

FourierKernel fourier_kernel_log() {
    // −Γ(3/2)/(2π^{3/2}) = −1/(4π)
    FourierKernel k;
    k.alpha = 0;
    k.rank = 0;
    k.pi_power = -1;
    k.prefactor = EpsSeries::constant(SymExpr(Rat(-1, 4)), 0);
    k.r_const = -3;
    k.terms = {{0, 0, EpsSeries::constant(SymExpr(1), 0)}};
    return k;
}

Rat FourierKernel::prefactor_at_3d() const {
    if (prefactor.leading_order() < 0)
        throw DivergenceError("Fourier kernel prefactor has a pole at D = 3: " + prefactor.str());
    return prefactor.coeff(0).as_rational();
}

std::string FourierKernel::str() const {
    std::ostringstream os;
    if (imaginary()) os << "i ";
    os << "π^" << pi_power << " (" << prefactor.str() << ") r^(" << r_const;
    if (r_eps) os << (r_eps > 0 ? "+" : "") << r_eps << "ε";
    os << ") {";
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        for (int i = 0; i < t.deltas; ++i) os << " δ";
        for (int i = 0; i < t.xhats; ++i) os << " x̂";
    }
    os << "}";
    return os.str();
}

}  // namespace boundstate
