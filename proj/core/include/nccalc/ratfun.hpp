#pragma once

#include "nccalc/poly.hpp"

#include <complex>
#include <string>

namespace nccalc {

/// Reduced fraction num/den of polynomials over Q(i) in rho, t, hbar, g.
///
/// This is the coefficient field of the extended algebra: rational functions
/// in t and the quantum radius rho, with coefficients rational in hbar (and
/// the opaque monopole constant g). The representation is canonical: the
/// fraction is reduced and the denominator has leading coefficient 1, so
/// equality is structural.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(Poly num);  // NOLINT(google-explicit-constructor)
  RatFun(GaussRat c) : RatFun(Poly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  RatFun(long c) : RatFun(Poly(c)) {}                  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  RatFun(const Poly& num, const Poly& den);

  static RatFun variable(Var v) { return RatFun(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Value of a constant; requires is_constant().
  GaussRat constant() const { return num_.constant_term(); }
  bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun&, const RatFun&) = default;

  RatFun inverse() const;
  RatFun pow(int n) const;
  RatFun substitute(Var v, const RatFun& value) const;
  RatFun derivative(Var v) const;

  /// Value at a numeric point. Throws SingularInverse when the denominator
  /// vanishes there (relative to its own term magnitudes).
  std::complex<double> evaluate(const Poly::Point& point) const;

  std::string to_string(const std::array<std::string, kNumVars>& names) const;

 private:
  Poly num_;
  Poly den_;
};

/// Element of K(t, rho) over Q(i)(hbar): the center of the extended algebra.
using CenterFun = RatFun;
/// Rational function of hbar alone; the coefficient ring of U(u(2)_h).
using HRat = RatFun;

inline const std::array<std::string, kNumVars> kSymbolNames{"rho", "t", "hbar", "g"};

}  // namespace nccalc
