#pragma once

#include "nccalc/quantmap.hpp"

#include <array>

namespace nccalc {

/// (H_x, H_y, H_z) with components in A.
using VecField = std::array<AElem, 3>;

AElem div(const VecField& h);
VecField rot(const VecField& h);
/// f(rho) (x, y, z).
VecField radial_field(const CenterFun& f);

/// (rho + 2 hbar) psi(rho + hbar) - (rho - 2 hbar) psi(rho - hbar) with
/// psi = rho f. DomainError when f depends on t.
CenterFun monopole_residual(const CenterFun& f);
/// g / (rho (rho^2 - hbar^2)).
CenterFun monopole_profile(const RatFun& gval);
VecField monopole(const RatFun& gval);

/// Integration endpoint on the radial half-line.
struct Endpoint {
  enum class Kind { finite, infinity };
  Kind kind = Kind::finite;
  RatFun value;

  static Endpoint at(RatFun v) { return {Kind::finite, std::move(v)}; }
  static Endpoint zero() { return {Kind::finite, RatFun()}; }
  static Endpoint infinity() { return {Kind::infinity, RatFun()}; }
};

/// Value of phi at an endpoint (the limit at infinity); IrregularTestFunction
/// at a pole or when phi diverges at infinity.
CenterFun endpoint_value(const CenterFun& phi, const Endpoint& e);
/// Integral of the quantum radial derivative: phi(b) - phi(a).
CenterFun radial_pairing(const CenterFun& phi, const Endpoint& a, const Endpoint& b);

/// coeff * pi.
struct PiMultiple {
  CenterFun coeff;
};

/// Pairing of the monopole field with the gradient of a radial test function,
/// reduced to 4 pi g (phi(inf) - phi(0)). Requires phi -> 0 at infinity and
/// regularity at 0 (IrregularTestFunction otherwise).
PiMultiple monopole_pairing(const CenterFun& phi, const RatFun& gval);

/// Quantized (g/r) ((x,y,z) x n) / (r - (x,y,z).n); NonUnitVector unless n.n = 1.
std::array<SkewExpr, 3> vector_potential(const std::array<GaussRat, 3>& n, const RatFun& gval);
/// The classical potential at a point (for limit comparisons).
std::array<std::complex<double>, 3> classical_potential(const std::array<double, 3>& n, std::complex<double> g,
                                                        const std::array<std::complex<double>, 3>& p);

}  // namespace nccalc
