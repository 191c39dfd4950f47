#include "nccalc/scalars.hpp"

#include "nccalc/errors.hpp"

namespace nccalc {

CenterFun cf_arith(const CenterFun& a, const CenterFun& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw InvariantBreach("unknown arithmetic op");
}

CenterFun shift_rho(const CenterFun& f, int k) {
  if (k == 0 || !f.depends_on(Var::rho)) return f;
  return f.substitute(Var::rho, rho() + hbar() * RatFun(static_cast<long>(k)));
}

CenterFun drho(const CenterFun& f) {
  if (!f.depends_on(Var::rho)) return CenterFun();
  return (shift_rho(f, 1) - shift_rho(f, -1)) / (RatFun(2) * hbar());
}

CenterFun shift_t(const CenterFun& f) {
  if (!f.depends_on(Var::t)) return f;
  return f.substitute(Var::t, t_sym() + RatFun(GaussRat::i()) * hbar());
}

CenterFun limit_h0(const CenterFun& f) {
  if (!current_context().hbar_is_formal()) throw DomainError("classical limit requires a formal hbar");
  if (f.den().substitute(Var::hbar, Poly()).is_zero()) throw PoleAtZero();
  return RatFun(f.num().substitute(Var::hbar, Poly()), f.den().substitute(Var::hbar, Poly()));
}

}  // namespace nccalc
