#include "boundstate/rat.hpp"

#include <climits>

#include "boundstate/errors.hpp"

namespace boundstate {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw DomainError("Rat: zero denominator");
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw DomainError("Rat: zero denominator");
    v_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
    std::string t(s);
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw DomainError("Rat: cannot parse '" + t + "'");
    return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::pow(int e) const {
    if (e < 0) return Rat(1) / pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(n, d));
}

long Rat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw DomainError("Rat: " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Rat binomial(const Rat& top, long m) {
    if (m < 0) return Rat(0);
    return falling(top, m) / factorial(m);
}

Rat binomial(long top, long m) {
    if (m < 0) return Rat(0);
    if (top >= 0) {
        if (m > top) return Rat(0);
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(m));
        return Rat(b);
    }
    return binomial(Rat(top), m);
}

Rat rising(const Rat& a, long n) {
    Rat r(1);
    for (long i = 0; i < n; ++i) r *= a + Rat(i);
    return r;
}

Rat falling(const Rat& a, long n) {
    Rat r(1);
    for (long i = 0; i < n; ++i) r *= a - Rat(i);
    return r;
}

}  // namespace boundstate
