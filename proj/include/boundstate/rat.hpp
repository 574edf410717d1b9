#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace boundstate {

// Exact rational, always canonical (gmp keeps mpq reduced after arithmetic).
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT: integer literals should just work
    Rat(long num, long den);
    explicit Rat(mpq_class v);
    explicit Rat(const mpz_class& v) : v_(v) {}

    // Accepts "a", "-a", "a/b".
    static Rat parse(std::string_view s);

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat pow(int e) const;

    // Integer value; throws DomainError if not an integer or out of long range.
    long to_long() const;
    double to_double() const { return v_.get_d(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    std::string str() const;  // "n" or "n/d"

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

Rat factorial(long n);
// Generalized binomial C(top, m) for rational top and integer m ≥ 0 (0 for m < 0).
Rat binomial(const Rat& top, long m);
Rat binomial(long top, long m);
// a(a+1)...(a+n-1)
Rat rising(const Rat& a, long n);
// a(a-1)...(a-n+1)
Rat falling(const Rat& a, long n);
inline Rat sign_power(long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace boundstate
