#include "boundstate/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include "boundstate/errors.hpp"

namespace boundstate {

namespace bmc = boost::math::constants;

Real euler_gamma() { return bmc::euler<Real>(); }
Real zeta2_value() { return bmc::pi_sqr<Real>() / 6; }
Real ln2_value() { return bmc::ln_two<Real>(); }
Real lnpi_value() { return log(bmc::pi<Real>()); }
Real pi_value() { return bmc::pi<Real>(); }

Real to_real(const Rat& r) { return Real(r.num_str()) / Real(r.den_str()); }

namespace {
Real symbol_value(const Symbol& s, const ScaleValues& scales) {
    switch (s.kind) {
        case Symbol::Kind::EulerGamma: return euler_gamma();
        case Symbol::Kind::Zeta2: return zeta2_value();
        case Symbol::Kind::Ln2: return ln2_value();
        case Symbol::Kind::LnPi: return lnpi_value();
        case Symbol::Kind::LogScale: {
            auto it = scales.find(s.label);
            if (it == scales.end())
                throw DomainError("no numeric value supplied for " + s.name());
            return it->second;
        }
    }
    throw InternalError("unknown symbol kind");
}
}  // namespace

Real evaluate(const SymExpr& e, const ScaleValues& scales) {
    Real total = 0;
    for (const auto& [m, c] : e.terms()) {
        Real v = to_real(c);
        for (const auto& f : m.factors) v *= symbol_value(f, scales);
        total += v;
    }
    return total;
}

Real evaluate(const EpsSeries& s, const Real& eps, const ScaleValues& scales) {
    Real total = 0;
    for (int k = s.leading_order(); k <= s.truncation(); ++k)
        total += evaluate(s.coeff(k), scales) * pow(eps, k);
    return total;
}

}  // namespace boundstate
