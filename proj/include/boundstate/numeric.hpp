#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <map>
#include <string>

#include "boundstate/eps_series.hpp"
#include "boundstate/symexpr.hpp"

namespace boundstate {

using Real = boost::multiprecision::cpp_dec_float_50;

Real euler_gamma();
Real zeta2_value();
Real ln2_value();
Real lnpi_value();
Real pi_value();

// Λ_κ values keyed by label; a missing label is an error, never zero.
using ScaleValues = std::map<std::string, Real>;

Real to_real(const Rat& r);
Real evaluate(const SymExpr& e, const ScaleValues& scales = {});
// Σ c_k ε^k over the known orders.
Real evaluate(const EpsSeries& s, const Real& eps, const ScaleValues& scales = {});

}  // namespace boundstate
