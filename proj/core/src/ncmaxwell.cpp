#include "nccalc/ncmaxwell.hpp"

#include "nccalc/context.hpp"
#include "nccalc/scalars.hpp"

namespace nccalc {

AElem div(const VecField& h) {
  return deriv(DGen::x, h[0]) + deriv(DGen::y, h[1]) + deriv(DGen::z, h[2]);
}

VecField rot(const VecField& h) {
  return {deriv(DGen::y, h[2]) - deriv(DGen::z, h[1]), deriv(DGen::z, h[0]) - deriv(DGen::x, h[2]),
          deriv(DGen::x, h[1]) - deriv(DGen::y, h[0])};
}

VecField radial_field(const CenterFun& f) {
  return {f * AElem::gen(Gen::x), f * AElem::gen(Gen::y), f * AElem::gen(Gen::z)};
}

CenterFun monopole_residual(const CenterFun& f) {
  if (f.depends_on(Var::t)) throw DomainError("monopole profile must depend on rho only");
  const CenterFun psi = rho() * f;
  const RatFun two_hbar = RatFun(2) * hbar();
  return (rho() + two_hbar) * shift_rho(psi, 1) - (rho() - two_hbar) * shift_rho(psi, -1);
}

CenterFun monopole_profile(const RatFun& gval) {
  return gval / (rho() * (rho() * rho() - hbar() * hbar()));
}

VecField monopole(const RatFun& gval) { return radial_field(monopole_profile(gval)); }

CenterFun endpoint_value(const CenterFun& phi, const Endpoint& e) {
  if (e.kind == Endpoint::Kind::finite) {
    if (phi.den().is_one()) return phi.substitute(Var::rho, e.value);
    RatFun den = RatFun(phi.den()).substitute(Var::rho, e.value);
    if (den.is_zero()) throw IrregularTestFunction("test function has a pole at an endpoint");
    return phi.substitute(Var::rho, e.value);
  }
  const unsigned dn = phi.num().degree(Var::rho), dd = phi.den().degree(Var::rho);
  if (phi.is_zero() || dn < dd) return CenterFun();
  if (dn > dd) throw IrregularTestFunction("test function diverges at infinity");
  return RatFun(phi.num().coefficients_in(Var::rho).back()) / RatFun(phi.den().coefficients_in(Var::rho).back());
}

CenterFun radial_pairing(const CenterFun& phi, const Endpoint& a, const Endpoint& b) {
  return endpoint_value(phi, b) - endpoint_value(phi, a);
}

PiMultiple monopole_pairing(const CenterFun& phi, const RatFun& gval) {
  if (phi.depends_on(Var::t)) throw IrregularTestFunction("test function must be radial");
  if (!endpoint_value(phi, Endpoint::infinity()).is_zero())
    throw IrregularTestFunction("test function has a nonzero limit at infinity");
  endpoint_value(phi, Endpoint::zero());
  const VecField field = monopole(gval);
  const AElem phi_elem(phi);
  AElem integrand;
  for (int k = 0; k < 3; ++k) integrand += field[k] * deriv(static_cast<DGen>(k + 1), phi_elem);
  if (!integrand.is_central()) throw InvariantBreach("pairing integrand is not central");
  // dx dy dz = rho^2 d rho d Omega; the integrand must be g times the radial derivative.
  const CenterFun radial = integrand.central_part() * rho() * rho();
  if (!(radial == gval * drho(phi))) throw InvariantBreach("pairing integrand is not a radial derivative");
  return {RatFun(4) * gval * radial_pairing(phi, Endpoint::zero(), Endpoint::infinity())};
}

std::array<SkewExpr, 3> vector_potential(const std::array<GaussRat, 3>& n, const RatFun& gval) {
  if (!(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] == GaussRat(1))) throw NonUnitVector();
  auto lin = [](const GaussRat& c, Gen g) { return ClassPoly::monomial(Mono3::letter(g), RatFun(c)); };
  const ClassPoly x = ClassPoly::gen(Gen::x), y = ClassPoly::gen(Gen::y), z = ClassPoly::gen(Gen::z);
  const ClassPoly r(rho());
  const ClassPoly gc(gval);
  const std::array<ClassPoly, 3> cross{lin(n[2], Gen::y) - lin(n[1], Gen::z), lin(n[0], Gen::z) - lin(n[2], Gen::x),
                                       lin(n[1], Gen::x) - lin(n[0], Gen::y)};
  const ClassPoly den = r * (r - lin(n[0], Gen::x) - lin(n[1], Gen::y) - lin(n[2], Gen::z));
  return {alpha_fraction(gc * cross[0], den), alpha_fraction(gc * cross[1], den), alpha_fraction(gc * cross[2], den)};
}

std::array<std::complex<double>, 3> classical_potential(const std::array<double, 3>& n, std::complex<double> g,
                                                        const std::array<std::complex<double>, 3>& p) {
  const std::complex<double> r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  const std::complex<double> dot = p[0] * n[0] + p[1] * n[1] + p[2] * n[2];
  const std::complex<double> s = g / (r * (r - dot));
  return {s * (p[1] * n[2] - p[2] * n[1]), s * (p[2] * n[0] - p[0] * n[2]), s * (p[0] * n[1] - p[1] * n[0])};
}

}  // namespace nccalc
