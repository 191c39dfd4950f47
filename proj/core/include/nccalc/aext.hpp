#pragma once

#include "nccalc/upbw.hpp"

#include <functional>
#include <map>

namespace nccalc {

class ClassPoly;

/// Element of the extended algebra A in canonical form: sum of
/// f(t, rho) x^a y^b z^c with c <= 1.
class AElem {
 public:
  using Terms = std::map<Mono3, RatFun, Mono3Order>;

  AElem() = default;
  AElem(RatFun c);  // NOLINT(google-explicit-constructor)
  AElem(long c) : AElem(RatFun(c)) {}  // NOLINT(google-explicit-constructor)
  /// t maps to the central symbol t.
  static AElem gen(Gen g);
  /// c * m, reducing z^2 when m is not canonical.
  static AElem monomial(const Mono3& m, const RatFun& c = RatFun(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for elements of K(t, rho) (including zero).
  bool is_central() const;
  /// Coefficient of the unit monomial.
  RatFun central_part() const;
  unsigned degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  void add_term(const Mono3& m, const RatFun& c);
  AElem map_coeffs(const std::function<RatFun(const RatFun&)>& f) const;

  AElem operator-() const;
  AElem& operator+=(const AElem& o);
  AElem& operator-=(const AElem& o);
  friend AElem operator+(AElem a, const AElem& b) { return a += b; }
  friend AElem operator-(AElem a, const AElem& b) { return a -= b; }
  friend AElem operator*(const AElem& a, const AElem& b);
  friend AElem operator*(const RatFun& c, const AElem& a);
  friend bool operator==(const AElem&, const AElem&) = default;

 private:
  Terms terms_;
};

/// Quotient map U(u(2)_h) -> A.
AElem a_from_u(const UPoly& p);
AElem a_mul(const AElem& a, const AElem& b);
/// Canonical form of x^a y^b z^c for any c.
AElem reduce_mono(const Mono3& m);
/// a b - b a.
AElem commutator(const AElem& a, const AElem& b);
/// Image in the commutative limit algebra (rho renamed r); PoleAtZero when a
/// coefficient is singular at hbar = 0.
ClassPoly a_classical_limit(const AElem& a);

}  // namespace nccalc
