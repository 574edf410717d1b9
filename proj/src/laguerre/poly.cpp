#include "boundstate/poly.hpp"

namespace boundstate {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(long power, const Rat& c) {
    std::vector<Rat> v(static_cast<size_t>(power + 1), Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::coeff(long i) const {
    if (i < 0 || i > degree()) return Rat(0);
    return c_[static_cast<size_t>(i)];
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& r) {
    if (r.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= r;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::without_low_powers(long p) const {
    Poly r = *this;
    for (long i = 0; i < p && i <= r.degree(); ++i) r.c_[static_cast<size_t>(i)] = Rat(0);
    r.trim();
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        std::string mag = c.abs().str();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (i == 0) {
            s += mag;
            continue;
        }
        if (mag != "1") s += mag + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace boundstate
