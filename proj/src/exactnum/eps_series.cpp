#include "boundstate/eps_series.hpp"

#include "boundstate/errors.hpp"

namespace boundstate {

EpsSeries::EpsSeries(int low, int trunc, std::vector<SymExpr> coeffs)
    : low_(low), trunc_(trunc), c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(std::max(0, trunc_ - low_ + 1)));
    normalize();
}

EpsSeries EpsSeries::constant(const SymExpr& c, int trunc) {
    return EpsSeries(0, trunc, {c});
}

EpsSeries EpsSeries::eps(int trunc) { return EpsSeries(1, trunc, {SymExpr(1)}); }

EpsSeries EpsSeries::linear(const SymExpr& a, const SymExpr& b, int trunc) {
    return EpsSeries(0, trunc, {a, b});
}

void EpsSeries::normalize() {
    size_t skip = 0;
    while (skip < c_.size() && c_[skip].is_zero()) ++skip;
    if (skip == c_.size()) {
        c_.clear();
        low_ = trunc_ + 1;
        return;
    }
    if (skip > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
        low_ += static_cast<int>(skip);
    }
    if (low_ < -kMaxPole)
        throw InternalError("ε-series pole of order " + std::to_string(-low_) +
                            " exceeds the supported maximum");
}

int EpsSeries::leading_order() const { return c_.empty() ? trunc_ + 1 : low_; }

SymExpr EpsSeries::coeff(int order) const {
    if (order > trunc_)
        throw InternalError("ε^" + std::to_string(order) + " coefficient requested beyond truncation " +
                            std::to_string(trunc_));
    if (order < low_ || c_.empty()) return SymExpr();
    return c_[static_cast<size_t>(order - low_)];
}

EpsSeries EpsSeries::truncated(int trunc) const {
    if (trunc >= trunc_) return *this;
    EpsSeries r = *this;
    r.trunc_ = trunc;
    if (r.c_.empty() || r.low_ > trunc) {
        r.c_.clear();
        r.low_ = trunc + 1;
        return r;
    }
    r.c_.resize(static_cast<size_t>(trunc - r.low_ + 1));
    r.normalize();
    return r;
}

EpsSeries EpsSeries::shifted(int k) const {
    EpsSeries r = *this;
    r.low_ += k;
    r.trunc_ += k;
    r.normalize();
    return r;
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
    int t = std::min(trunc_, o.trunc_);
    int lo = std::min(leading_order(), o.leading_order());
    if (lo > t) {
        *this = zero(t);
        c_.clear();
        low_ = t + 1;
        return *this;
    }
    std::vector<SymExpr> c(static_cast<size_t>(t - lo + 1));
    for (int k = lo; k <= t; ++k) c[static_cast<size_t>(k - lo)] = coeff(k) + o.coeff(k);
    *this = EpsSeries(lo, t, std::move(c));
    return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) { return *this += -o; }

EpsSeries EpsSeries::operator-() const { return (*this) * Rat(-1); }

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
    int la = a.leading_order(), lb = b.leading_order();
    int t = std::min(a.trunc_ + lb, b.trunc_ + la);
    if (a.c_.empty() || b.c_.empty()) {
        EpsSeries z;
        z.trunc_ = t;
        z.low_ = t + 1;
        return z;
    }
    int lo = la + lb;
    if (lo > t) {
        EpsSeries z;
        z.trunc_ = t;
        z.low_ = t + 1;
        return z;
    }
    std::vector<SymExpr> c(static_cast<size_t>(t - lo + 1));
    for (int k = lo; k <= t; ++k) {
        SymExpr s;
        for (int i = la; i <= k - lb; ++i) {
            if (i > a.trunc_ || k - i > b.trunc_) continue;
            const SymExpr& x = a.c_[static_cast<size_t>(i - la)];
            const SymExpr& y = b.c_[static_cast<size_t>(k - i - lb)];
            if (x.is_zero() || y.is_zero()) continue;
            if (x.is_rational()) {
                s += y * x.rational_part();
            } else if (y.is_rational()) {
                s += x * y.rational_part();
            } else {
                s += x * y;
            }
        }
        c[static_cast<size_t>(k - lo)] = std::move(s);
    }
    return EpsSeries(lo, t, std::move(c));
}

EpsSeries operator*(EpsSeries a, const Rat& r) {
    for (auto& c : a.c_) c *= r;
    a.normalize();
    return a;
}

EpsSeries operator*(EpsSeries a, const SymExpr& s) {
    for (auto& c : a.c_) c = c * s;
    a.normalize();
    return a;
}

EpsSeries EpsSeries::inverse() const {
    if (c_.empty()) throw DomainError("inverse of a vanishing ε-series");
    if (!c_[0].is_rational())
        throw DomainError("inverse needs a rational leading coefficient, got " + c_[0].str());
    Rat inv0 = Rat(1) / c_[0].rational_part();
    int depth = trunc_ - low_;
    std::vector<SymExpr> b(static_cast<size_t>(depth + 1));
    b[0] = SymExpr(inv0);
    for (int k = 1; k <= depth; ++k) {
        SymExpr s;
        for (int i = 1; i <= k; ++i) {
            const SymExpr& x = c_[static_cast<size_t>(i)];
            const SymExpr& y = b[static_cast<size_t>(k - i)];
            if (x.is_zero() || y.is_zero()) continue;
            s += x * y;
        }
        b[static_cast<size_t>(k)] = s * (-inv0);
    }
    return EpsSeries(-low_, -low_ + depth, std::move(b));
}

bool operator==(const EpsSeries& a, const EpsSeries& b) {
    if (a.trunc_ != b.trunc_) return false;
    return a.equal_through(b, a.trunc_);
}

bool EpsSeries::equal_through(const EpsSeries& o, int k) const {
    if (k > trunc_ || k > o.trunc_) return false;
    int lo = std::min(leading_order(), o.leading_order());
    for (int i = lo; i <= k; ++i)
        if (!(coeff(i) == o.coeff(i))) return false;
    return true;
}

std::string EpsSeries::str() const {
    std::string s;
    for (int k = leading_order(); k <= trunc_; ++k) {
        SymExpr c = coeff(k);
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c.str();
        if (k == 0) {
            s += "(" + cs + ")";
        } else {
            s += "(" + cs + ")*eps^" + std::to_string(k);
        }
    }
    if (s.empty()) s = "0";
    return s + " + O(eps^" + std::to_string(trunc_ + 1) + ")";
}

EpsSeries mul_to(const EpsSeries& a, const EpsSeries& b, int target) {
    EpsSeries x = a.truncated(target - b.leading_order());
    EpsSeries y = b.truncated(target - a.leading_order());
    return (x * y).truncated(target);
}

}  // namespace boundstate
