#include "boundstate/symexpr.hpp"

#include <algorithm>

#include "boundstate/errors.hpp"

namespace boundstate {

std::string Symbol::name() const {
    switch (kind) {
        case Kind::EulerGamma: return "gammaE";
        case Kind::Zeta2: return "zeta2";
        case Kind::Ln2: return "ln2";
        case Kind::LnPi: return "lnpi";
        case Kind::LogScale: return "Lambda[" + label + "]";
    }
    return "?";
}

std::string Monomial::name() const {
    if (factors.empty()) return "1";
    if (factors.size() == 2 && factors[0] == factors[1]) return factors[0].name() + "^2";
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += f.name();
    }
    return s;
}

namespace {
bool may_square(const Symbol& s) {
    return s.kind == Symbol::Kind::EulerGamma || s.kind == Symbol::Kind::LogScale;
}
}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.factors = a.factors;
    m.factors.insert(m.factors.end(), b.factors.begin(), b.factors.end());
    if (m.factors.size() > 2)
        throw DomainError("symbolic product " + a.name() + " * " + b.name() + " leaves the basis");
    if (m.factors.size() == 2 && !(may_square(m.factors[0]) && may_square(m.factors[1])))
        throw DomainError("symbolic product " + a.name() + " * " + b.name() + " leaves the basis");
    std::sort(m.factors.begin(), m.factors.end());
    return m;
}

SymExpr::SymExpr(Rat r) {
    if (!r.is_zero()) terms_.emplace(Monomial::one(), std::move(r));
}

SymExpr SymExpr::term(const Monomial& m, const Rat& c) {
    SymExpr e;
    if (!c.is_zero()) e.terms_.emplace(m, c);
    return e;
}

SymExpr SymExpr::gamma_e() { return term(Monomial::of({Symbol::Kind::EulerGamma, ""}), 1); }
SymExpr SymExpr::zeta2() { return term(Monomial::of({Symbol::Kind::Zeta2, ""}), 1); }
SymExpr SymExpr::ln2() { return term(Monomial::of({Symbol::Kind::Ln2, ""}), 1); }
SymExpr SymExpr::lnpi() { return term(Monomial::of({Symbol::Kind::LnPi, ""}), 1); }
SymExpr SymExpr::log_scale(const std::string& label) {
    return term(Monomial::of({Symbol::Kind::LogScale, label}), 1);
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) { return *this += -o; }

SymExpr& SymExpr::operator*=(const Rat& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
    SymExpr out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out += SymExpr::term(ma * mb, ca * cb);
    return out;
}

bool SymExpr::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat SymExpr::rational_part() const { return coefficient(Monomial::one()); }

Rat SymExpr::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat SymExpr::as_rational() const {
    if (!is_rational()) throw DomainError("expected a rational value, got " + str());
    return rational_part();
}

std::string SymExpr::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // constant first, then symbols in basis order
    for (const auto& [m, c] : terms_) {
        std::string mag = c.abs().str();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            s += mag;
        } else if (mag == "1") {
            s += m.name();
        } else {
            s += mag + "*" + m.name();
        }
    }
    return s;
}

}  // namespace boundstate
