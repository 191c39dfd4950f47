#pragma once

#include "nccalc/skew.hpp"

#include <array>
#include <optional>

namespace nccalc {

/// 4x4 matrix over A, the image of an element under Theta-hat. Row and
/// column order: (shifted t, x, y, z).
using ThetaMat = Matrix<AElem>;
/// 4x4 matrix over the lazy skew field (results of inversion).
using SkewMat = Matrix<SkewExpr>;

/// The matrix A with first column (0, -x, -y, -z); it satisfies
/// A^2 = (hbar^2 - rho^2) I - 2 i hbar A.
ThetaMat a_matrix();

/// alpha I + beta A with central alpha, beta: the commutative subalgebra
/// K(t, rho)[A] that contains Theta-hat of every central element.
struct CentralForm {
  CenterFun alpha;
  CenterFun beta;

  ThetaMat matrix() const;
  friend bool operator==(const CentralForm&, const CentralForm&) = default;
};

/// Theta-hat(f(t, rho)) = f(Theta-hat(t), Theta-hat(rho)) in closed form.
CentralForm theta_hat_central(const CenterFun& f);
/// a I + i hbar (alpha0 I + L) for a = alpha0 t + alpha1 x + alpha2 y + alpha3 z.
ThetaMat theta_hat_linear(const std::array<RatFun, 4>& alpha);
ThetaMat theta_hat_gen(Gen g);
/// Multiplicative extension to all of A.
ThetaMat theta_hat(const AElem& a);

/// (shifted d_t a, d_x a, d_y a, d_z a) = first column / (i hbar).
std::array<AElem, 4> deriv_extract(const ThetaMat& m);
std::array<SkewExpr, 4> deriv_extract(const SkewMat& m);

/// Theta-hat(rho^p) from the closed formula.
ThetaMat theta_hat_rho_power(int p);

/// Recognizes alpha I + beta A.
std::optional<CentralForm> as_central_form(const ThetaMat& m);
/// Inverse inside K(t, rho)[A]; NonInvertibleCentral when singular.
CentralForm central_inverse(const CentralForm& m);
/// Same for a matrix; DomainError when m is not of central form.
ThetaMat central_inverse(const ThetaMat& m);

bool entries_commute(const ThetaMat& m);
/// Determinant by cofactor expansion; NonCommutingEntries unless the
/// entries pairwise commute.
AElem theta_det_commuting(const ThetaMat& m);
/// hbar^4 (sum of squared first-column derivatives)^2: the quaternionic
/// norm form of the determinant of Theta-hat(a).
AElem theta_det_norm_form(const AElem& a);
/// Adjugate times det^-1; NonCommutingEntries, SingularDeterminant.
SkewMat commuting_inverse(const ThetaMat& m);

/// Theta-hat(a)^-1 when a is central, Theta-hat(a) lies in K(t, rho)[A], or
/// its entries commute; CannotInvert otherwise.
SkewMat theta_invert(const AElem& a);

/// (shifted d_t, d_x, d_y, d_z) of a^-1 read from Theta-hat(a)^-1.
std::array<SkewExpr, 4> deriv_of_inverse(const AElem& a);

/// Extension of Theta-hat to lazy trees: additive, multiplicative, and
/// Theta-hat(inv(e)) = Theta-hat(e)^-1 for inverses of atoms and of
/// products of invertible factors. CannotInvert for other inverse nodes.
SkewMat theta_hat(const SkewExpr& e);
/// (shifted d_t, d_x, d_y, d_z) of a tree, read from theta_hat(e).
std::array<SkewExpr, 4> deriv_skew(const SkewExpr& e);

}  // namespace nccalc
