#pragma once

#include "generators.hpp"
#include "nccalc/reporacle.hpp"
#include "nccalc/thetamat.hpp"

#include <complex>

namespace oracle {

using namespace nccalc;
using Complex = std::complex<double>;

// Image of an ordered product of affine forms together with the images of
// its four partial derivatives (d_t, d_x, d_y, d_z), built factor by factor
// from the coproduct of the derivative algebra.
struct Jet {
  CMat value;
  std::array<CMat, 4> d;
};

inline Jet jet_of(const testgen::Linear& l, const Rep& r) {
  const int n = r.dim();
  const CMat id = CMat::Identity(n, n);
  Jet j;
  j.value = Complex(static_cast<double>(l.c[0])) * id + Complex(static_cast<double>(l.c[1])) * r.t +
            Complex(static_cast<double>(l.c[2])) * r.x + Complex(static_cast<double>(l.c[3])) * r.y +
            Complex(static_cast<double>(l.c[4])) * r.z;
  for (int u = 0; u < 4; ++u) j.d[u] = Complex(static_cast<double>(l.c[u + 1])) * id;
  return j;
}

inline Jet jet_mul(const Jet& a, const Jet& b, const Rep& r) {
  const Complex hh = r.hval / 2.0;
  Jet out;
  out.value = a.value * b.value;
  out.d[0] = a.d[0] * b.value + a.value * b.d[0] + hh * (a.d[0] * b.d[0]);
  for (int s = 1; s < 4; ++s) out.d[0] -= hh * (a.d[s] * b.d[s]);
  for (int u = 1; u < 4; ++u) {
    const int v = u % 3 + 1, w = (u + 1) % 3 + 1;
    out.d[u] = a.d[u] * b.value + a.value * b.d[u] +
               hh * (a.d[0] * b.d[u] + a.d[u] * b.d[0] + a.d[v] * b.d[w] - a.d[w] * b.d[v]);
  }
  return out;
}

inline Jet jet_of(const testgen::LinearProduct& p, const Rep& r) {
  const int n = r.dim();
  Jet acc;
  acc.value = CMat::Identity(n, n);
  for (auto& m : acc.d) m = CMat::Zero(n, n);
  for (const auto& f : p.factors) acc = jet_mul(acc, jet_of(f, r), r);
  return acc;
}

// Classical value and gradient (d_t, d_x, d_y, d_z) of the commutative
// product of the affine forms at a point (t, x, y, z).
struct ClassicalJet {
  Complex value{1};
  std::array<Complex, 4> d{};
};

inline ClassicalJet classical_jet(const testgen::LinearProduct& p, const std::array<Complex, 4>& pt) {
  ClassicalJet acc;
  for (const auto& f : p.factors) {
    Complex v = static_cast<double>(f.c[0]);
    for (int k = 0; k < 4; ++k) v += static_cast<double>(f.c[k + 1]) * pt[k];
    for (int k = 0; k < 4; ++k) acc.d[k] = acc.d[k] * v + acc.value * static_cast<double>(f.c[k + 1]);
    acc.value *= v;
  }
  return acc;
}

// Numeric value of a classical polynomial at (t, x, y, z) with r = |(x,y,z)|.
inline Complex classical_value(const ClassPoly& p, const std::array<Complex, 4>& pt, Complex g = 1.0) {
  const Complex r = std::sqrt(pt[1] * pt[1] + pt[2] * pt[2] + pt[3] * pt[3]);
  Complex out = 0;
  for (const auto& [m, c] : p.terms())
    out += c.evaluate({r, pt[0], 0.0, g}) * std::pow(pt[1], static_cast<int>(m.e[0])) *
           std::pow(pt[2], static_cast<int>(m.e[1])) * std::pow(pt[3], static_cast<int>(m.e[2]));
  return out;
}

// Theta-hat(rho) as printed: (1/rho) times the 4x4 matrix with diagonal
// rho^2 + hbar^2 and off-diagonal entries +-i hbar x, y, z.
inline ThetaMat printed_theta_rho() {
  const RatFun hb = hbar(), r = rho();
  const RatFun ih = RatFun(GaussRat::i()) * hb;
  const RatFun diag = (r * r + hb * hb) / r;
  const RatFun s = ih / r;
  auto lin = [&](const RatFun& c, Gen g) { return c * AElem::gen(g); };
  ThetaMat m(4, 4);
  const Gen X = Gen::x, Y = Gen::y, Z = Gen::z;
  for (int k = 0; k < 4; ++k) m(k, k) = AElem(diag);
  m(0, 1) = lin(-s, X), m(0, 2) = lin(-s, Y), m(0, 3) = lin(-s, Z);
  m(1, 0) = lin(s, X), m(1, 2) = lin(-s, Z), m(1, 3) = lin(s, Y);
  m(2, 0) = lin(s, Y), m(2, 1) = lin(s, Z), m(2, 3) = lin(-s, X);
  m(3, 0) = lin(s, Z), m(3, 1) = lin(-s, Y), m(3, 2) = lin(s, X);
  return m;
}

// Closed forms for the derivatives of rho^p, written out independently of
// the library's radial difference operator.
inline RatFun shifted_dt_rho_power(int p) {
  const RatFun hb = hbar(), r = rho();
  return RatFun(GaussRat(0, -1)) / (RatFun(2) * hb * r) * ((r + hb).pow(p + 1) + (r - hb).pow(p + 1));
}

inline RatFun radial_derivative_rho_power(int p) {
  const RatFun hb = hbar(), r = rho();
  return ((r + hb).pow(p) - (r - hb).pow(p)) / (RatFun(2) * hb);
}

inline std::vector<Rep> reps_low_spin() {
  std::vector<Rep> out;
  for (const Rep& r : default_reps())
    if (r.two_j >= 1 && r.two_j <= 3) out.push_back(r);
  return out;
}

}  // namespace oracle
