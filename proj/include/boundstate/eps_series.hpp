#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "boundstate/symexpr.hpp"

namespace boundstate {

// Truncated Laurent series Σ_{k=low}^{K} c_k ε^k with SymExpr coefficients.
// K (the truncation order) is the highest order that is known; products and
// inverses propagate it the usual way, so a result never claims more
// accuracy than its inputs.
class EpsSeries {
public:
    static constexpr int kMaxPole = 2;

    EpsSeries() = default;  // zero, known to all orders we care about
    EpsSeries(int low, int trunc, std::vector<SymExpr> coeffs);

    static EpsSeries constant(const SymExpr& c, int trunc);
    static EpsSeries zero(int trunc) { return constant(SymExpr(), trunc); }
    // ε itself, exact to order trunc
    static EpsSeries eps(int trunc);
    // a + b ε, exact to order trunc (coefficients above 1 are zero)
    static EpsSeries linear(const SymExpr& a, const SymExpr& b, int trunc);

    int low() const { return low_; }
    int truncation() const { return trunc_; }
    // Order of the first non-zero coefficient (trunc+1 when the series vanishes).
    int leading_order() const;
    int pole_order() const { return std::max(0, -leading_order()); }
    SymExpr coeff(int order) const;

    EpsSeries truncated(int trunc) const;
    EpsSeries shifted(int k) const;  // multiply by ε^k

    EpsSeries& operator+=(const EpsSeries& o);
    EpsSeries& operator-=(const EpsSeries& o);
    friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
    friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
    EpsSeries operator-() const;
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator*(EpsSeries a, const Rat& r);
    friend EpsSeries operator*(const Rat& r, EpsSeries a) { return std::move(a) * r; }
    friend EpsSeries operator*(EpsSeries a, const SymExpr& s);

    // Requires the leading coefficient to be a non-zero rational.
    EpsSeries inverse() const;

    // Same truncation and identical coefficients up to it.
    friend bool operator==(const EpsSeries& a, const EpsSeries& b);
    // Coefficient-wise equality through order k (both must be known that far).
    bool equal_through(const EpsSeries& o, int k) const;

    std::string str() const;

private:
    void normalize();

    int low_ = 0;
    int trunc_ = 8;
    std::vector<SymExpr> c_;  // c_[i] multiplies ε^{low_+i}
};

// Product truncated at `target` before any coefficient beyond it is formed,
// so symbolic factors never multiply out of the basis unnecessarily.
EpsSeries mul_to(const EpsSeries& a, const EpsSeries& b, int target);

}  // namespace boundstate
