#pragma once

#include "nccalc/context.hpp"

namespace nccalc {

enum class ArithOp { add, sub, mul, div };

/// Exact field operation; div by zero throws DivisionByZero.
CenterFun cf_arith(const CenterFun& a, const CenterFun& b, ArithOp op);

/// f(rho + k hbar).
CenterFun shift_rho(const CenterFun& f, int k);

/// Central difference (f(rho + hbar) - f(rho - hbar)) / (2 hbar).
CenterFun drho(const CenterFun& f);

/// f(t + i hbar, rho): the image of t under the Theta-hat map.
CenterFun shift_t(const CenterFun& f);

/// hbar -> 0. The rho symbol stands for the classical radius r afterwards.
/// Throws PoleAtZero when the reduced denominator vanishes at hbar = 0 and
/// DomainError when hbar is specialized in the current context.
CenterFun limit_h0(const CenterFun& f);

}  // namespace nccalc
