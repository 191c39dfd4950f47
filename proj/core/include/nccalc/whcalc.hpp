#pragma once

#include "nccalc/aext.hpp"
#include "nccalc/matrix.hpp"

#include <array>
#include <cstdint>
#include <map>

namespace nccalc {

/// Derivative generators d_t, d_x, d_y, d_z (d_t unshifted).
enum class DGen : std::uint8_t { t = 0, x = 1, y = 2, z = 3 };

/// Exponents of (d_t, d_x, d_y, d_z); in the shifted view the first slot
/// counts the shifted derivative instead.
using DMono = std::array<std::uint16_t, 4>;

/// Element of the commutative derivative algebra D, stored in the d_t basis.
class DPoly {
 public:
  using Terms = std::map<DMono, RatFun>;

  DPoly() = default;
  DPoly(RatFun c);  // NOLINT(google-explicit-constructor)
  DPoly(long c) : DPoly(RatFun(c)) {}  // NOLINT(google-explicit-constructor)
  static DPoly gen(DGen g);
  /// d_t + 2/h.
  static DPoly shifted_t();
  static DPoly monomial(const DMono& m, const RatFun& c = RatFun(1));
  /// Builds from coefficients in the shifted basis (first slot = shifted d_t).
  static DPoly from_shifted(const Terms& shifted);

  const Terms& terms() const { return terms_; }
  /// The same element written in the shifted basis.
  Terms shifted_view() const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(const DMono& m, const RatFun& c);

  DPoly operator-() const;
  friend DPoly operator+(DPoly a, const DPoly& b);
  friend DPoly operator-(DPoly a, const DPoly& b);
  friend DPoly operator*(const DPoly& a, const DPoly& b);
  friend bool operator==(const DPoly&, const DPoly&) = default;

 private:
  Terms terms_;
};

/// The algebra homomorphism D -> K with eps(d_u) = 0.
RatFun counit(const DPoly& d);

/// Element of W(A): sum of a_n (x) d^n, algebra part on the left.
class WHElem {
 public:
  using Terms = std::map<DMono, AElem>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const DMono& m, const AElem& a);
  friend WHElem operator+(WHElem a, const WHElem& b);
  friend bool operator==(const WHElem&, const WHElem&) = default;

 private:
  Terms terms_;
};

/// Normal-ordered d * a.
WHElem sigma_push(const DPoly& d, const AElem& a);
/// Moves the derivative parts of w to the right of b: sum a_n sigma(d^n, b).
WHElem push_through(const WHElem& w, const AElem& b);
/// Counit on the right factor.
AElem apply_counit(const WHElem& w);

/// The operator d applied to a: eps on the right of sigma(d (x) a).
AElem apply_op(const DPoly& d, const AElem& a);
/// Quantum partial derivative (d_t unshifted).
AElem deriv(DGen u, const AElem& a);
/// Shifted derivative d_t + 2/h.
AElem deriv_shifted_t(const AElem& a);

/// Derivatives of a central element from the closed formulas.
AElem deriv_central(DGen u, const CenterFun& f);
AElem deriv_central_shifted_t(const CenterFun& f);

/// Sum of coeff * (left (x) right), both factors in the d_t basis.
using Tensor2 = std::map<std::pair<DMono, DMono>, RatFun>;
using Tensor3 = std::map<std::array<DMono, 3>, RatFun>;

/// Additive-multiplicative form in d_t, d_x, d_y, d_z.
Tensor2 coprod(DGen u);
/// Multiplicative form with the shifted derivative; u = t gives the
/// coproduct of the shifted derivative itself.
Tensor2 coprod_shifted(DGen u);
/// Algebra-map extension of the coproduct to any DPoly.
Tensor2 coprod(const DPoly& d);
Tensor2 tensor_add(Tensor2 a, const Tensor2& b, const RatFun& scale = RatFun(1));
/// a (x) b.
Tensor2 tensor(const DPoly& a, const DPoly& b);
/// (eps (x) id) and (id (x) eps).
DPoly counit_left(const Tensor2& t);
DPoly counit_right(const Tensor2& t);
Tensor3 coprod_left(const Tensor2& t);
Tensor3 coprod_right(const Tensor2& t);

/// (d_t, d_x, d_y, d_z) of a.
using Derivs = std::array<AElem, 4>;
/// d_u(ab) from the coproduct, given the derivatives of a and b.
AElem deriv_via_coprod(DGen u, const AElem& a, const Derivs& da, const AElem& b, const Derivs& db);
/// Same, computing the derivatives of a and b with deriv_all_coprod.
AElem deriv_via_coprod(DGen u, const AElem& a, const AElem& b);
/// All four derivatives of a by recursive use of the coproduct on
/// monomials and the closed formulas on central coefficients.
Derivs deriv_all_coprod(const AElem& a);

/// Multiplication table of the fundamental module (t = I/2 there).
AElem circ(Gen u, Gen v);
/// d_u(ab) = d_u(a) b + a d_u(b) + h d_u(a o b) for generators a, b.
AElem h_leibniz(DGen u, Gen a, Gen b);

/// The operator matrix Theta: rows/cols (shifted d_t, d_x, d_y, d_z).
Matrix<DPoly> theta_operator_matrix();

/// Differential form: exterior monomial (bit mask over dt, dx, dy, dz, in
/// that order) -> coefficient.
class Form {
 public:
  using Terms = std::map<std::uint8_t, AElem>;

  Form() = default;
  static Form term(std::uint8_t mask, const AElem& a);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(std::uint8_t mask, const AElem& a);
  friend Form operator+(Form a, const Form& b);
  friend bool operator==(const Form&, const Form&) = default;

 private:
  Terms terms_;
};

/// d(w (x) f) = sum_u w ^ du (x) d_u(f).
Form d_op(const Form& w);

}  // namespace nccalc
