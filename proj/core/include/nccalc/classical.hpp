#pragma once

#include "nccalc/upbw.hpp"

#include <map>

namespace nccalc {

/// Commutative polynomial in x, y, z with coefficients in K(t, r) (r is
/// stored in the rho slot). With t kept among the coefficients this is the
/// classical algebra Sym(u(2)) extended by r.
class ClassPoly {
 public:
  using Terms = std::map<Mono3, RatFun, Mono3Order>;

  ClassPoly() = default;
  ClassPoly(RatFun c);  // NOLINT(google-explicit-constructor)
  ClassPoly(long c) : ClassPoly(RatFun(c)) {}  // NOLINT(google-explicit-constructor)
  static ClassPoly gen(Gen g);
  static ClassPoly monomial(const Mono3& m, const RatFun& c = RatFun(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  void add_term(const Mono3& m, const RatFun& c);

  ClassPoly operator-() const;
  friend ClassPoly operator+(ClassPoly a, const ClassPoly& b);
  friend ClassPoly operator-(ClassPoly a, const ClassPoly& b);
  friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
  friend bool operator==(const ClassPoly&, const ClassPoly&) = default;

  /// Eliminates z^2 = r^2 - x^2 - y^2 so that z has degree <= 1.
  ClassPoly reduce_radius() const;
  /// Classical partial derivative; r = sqrt(x^2+y^2+z^2) so d/dx picks up
  /// (x/r) d/dr from the coefficients. u = t differentiates coefficients.
  ClassPoly partial(Gen u) const;

 private:
  Terms terms_;
};

}  // namespace nccalc
