#pragma once

#include "nccalc/classical.hpp"
#include "nccalc/skew.hpp"
#include "nccalc/thetamat.hpp"
#include "nccalc/whcalc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nccalc {

/// Scalars free of rho are written in h = 2 i hbar; everything else keeps
/// hbar. All output is accepted by parse().
std::string print(const RatFun& f);
std::string print(const AElem& a);
std::string print(const UPoly& p);
std::string print(const SkewExpr& e);
std::string print(const ThetaMat& m);
std::string print(const SkewMat& m);
std::string print(const DPoly& d);
/// Classical data; r denotes the classical radius (not parseable).
std::string print(const ClassPoly& p);

/// (coefficient, monomial) pairs in PBW order; monomial "1" for the constant.
std::vector<std::pair<std::string, std::string>> print_terms(const AElem& a);

}  // namespace nccalc
