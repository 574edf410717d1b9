#pragma once

#include <string>
#include <vector>

#include "boundstate/rat.hpp"

namespace boundstate {

// Dense univariate polynomial over Rat; coeffs_[i] multiplies x^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(const Rat& c);  // NOLINT: constants promote

    static Poly monomial(long power, const Rat& c = Rat(1));

    // −1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(long i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& r);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& r) { return a *= r; }
    friend Poly operator*(const Rat& r, Poly a) { return a *= r; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const { return (*this) * Rat(-1); }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative() const;
    Rat operator()(const Rat& x) const;
    // Drop monomials x^r with r < p.
    Poly without_low_powers(long p) const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace boundstate
