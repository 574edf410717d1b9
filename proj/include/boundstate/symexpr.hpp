#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "boundstate/rat.hpp"

namespace boundstate {

// Transcendental constants kept symbolic. LogScale(κ) stands for
// Λ_κ = ln(κ n / (2 m_r Zα)); distinct labels never combine.
struct Symbol {
    enum class Kind { EulerGamma, Zeta2, Ln2, LnPi, LogScale };
    Kind kind;
    std::string label;  // only for LogScale

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
    friend bool operator==(const Symbol&, const Symbol&) = default;
    std::string name() const;
};

// Product of at most two symbols; the empty product is the constant 1.
// Degree-two products are restricted to γ_E and Λ_κ factors.
struct Monomial {
    std::vector<Symbol> factors;  // sorted

    static Monomial one() { return {}; }
    static Monomial of(Symbol s) { return Monomial{{std::move(s)}}; }
    bool is_one() const { return factors.empty(); }
    std::string name() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

// Rat-linear combination of basis monomials; zero coefficients are never stored.
class SymExpr {
public:
    SymExpr() = default;
    SymExpr(Rat r);  // NOLINT: rational constants promote implicitly
    SymExpr(long v) : SymExpr(Rat(v)) {}  // NOLINT

    static SymExpr gamma_e();
    static SymExpr zeta2();
    static SymExpr ln2();
    static SymExpr lnpi();
    static SymExpr log_scale(const std::string& label);
    static SymExpr term(const Monomial& m, const Rat& c);

    SymExpr& operator+=(const SymExpr& o);
    SymExpr& operator-=(const SymExpr& o);
    SymExpr& operator*=(const Rat& r);
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(SymExpr a, const Rat& r) { return a *= r; }
    friend SymExpr operator*(const Rat& r, SymExpr a) { return a *= r; }
    friend SymExpr operator/(SymExpr a, const Rat& r) { return a *= Rat(1) / r; }
    SymExpr operator-() const { return (*this) * Rat(-1); }
    // Throws DomainError when the product leaves the basis.
    friend SymExpr operator*(const SymExpr& a, const SymExpr& b);

    friend bool operator==(const SymExpr&, const SymExpr&) = default;

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rat rational_part() const;  // coefficient of 1
    Rat coefficient(const Monomial& m) const;
    // Throws DomainError unless the expression is a pure rational.
    Rat as_rational() const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<Monomial, Rat> terms_;
};

}  // namespace boundstate
