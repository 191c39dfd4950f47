#pragma once

#include "nccalc/skew.hpp"

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace nccalc {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// Spin-j representation: x = i h Jx, y = -i h Jy, z = i h Jz, t = t0 I.
/// At j = 1/2, h = 1, t0 = 1/2 these are the Pauli-type matrices of the
/// fundamental module. rho is the principal square root of Cas + hbar^2.
struct Rep {
  int two_j = 1;
  Complex t0{0}, hval{1}, hbar{0}, rho{0}, g{1.25};
  CMat t, x, y, z;

  int dim() const { return two_j + 1; }
  /// Numeric point for central functions: (rho, t, hbar, g).
  Poly::Point point() const { return {rho, t0, hbar, g}; }
  std::string label() const;
};

/// Throws DomainError when hval = 0 and RelationViolation when the
/// constructed matrices fail the defining relations.
Rep make_rep(int two_j, Complex t0, Complex hval, Complex g = Complex(1.25));
/// Validates externally supplied generator images.
Rep rep_from_matrices(int two_j, Complex t0, Complex hval, Complex g, CMat x, CMat y, CMat z);
/// Copy of r with y negated and no validation (a negative control).
Rep corrupted_rep(const Rep& r);
/// Largest violation of [x,y]=hz, [y,z]=hx, [z,x]=hy, rho^2 = Cas + hbar^2.
double relation_defect(const Rep& r);

/// j in {1/2, 1, 3/2}, h in {1, 1/3, i/2}, t0 in {0, 1}. When hbar is
/// specialized in the current context, h is pinned to 2 i hbar.
std::vector<Rep> default_reps();

/// Scalar value; SingularInverse at a pole.
Complex rep_eval(const RatFun& f, const Rep& r);
CMat rep_eval(const UPoly& p, const Rep& r);
CMat rep_eval(const AElem& a, const Rep& r);
CMat rep_eval(const SkewExpr& e, const Rep& r);
/// Block matrices (entry (i, j) is block (i, j)).
CMat rep_eval(const Matrix<UPoly>& m, const Rep& r);
CMat rep_eval(const Matrix<AElem>& m, const Rep& r);
CMat rep_eval(const Matrix<SkewExpr>& m, const Rep& r);

/// Inverse with a singularity test; throws SingularInverse.
CMat numeric_inverse(const CMat& m);

/// max |L - R| / max(1, max|L|, max|R|).
double relative_error(const CMat& lhs, const CMat& rhs);

struct CheckReport {
  bool pass = false;
  double max_error = 0;
  int checked = 0;
  int skipped = 0;
  std::vector<std::string> notes;
};

/// Compares lhs(r) and rhs(r) over the reps. A rep where either side hits a
/// pole or a singular inverse is skipped and noted; the check needs at
/// least one evaluated rep.
template <class L, class R>
CheckReport check_identity(const L& lhs, const R& rhs, const std::vector<Rep>& reps, double tol) {
  CheckReport rep;
  rep.pass = true;
  for (const Rep& r : reps) {
    CMat a, b;
    try {
      a = rep_eval(lhs, r);
      b = rep_eval(rhs, r);
    } catch (const DomainError& e) {
      ++rep.skipped;
      rep.notes.push_back(r.label() + ": " + e.what());
      continue;
    }
    double err = (a.rows() == b.rows() && a.cols() == b.cols()) ? relative_error(a, b) : 1e300;
    rep.max_error = std::max(rep.max_error, err);
    ++rep.checked;
    if (!(err <= tol)) rep.pass = false;
  }
  if (rep.checked == 0) rep.pass = false;
  return rep;
}

}  // namespace nccalc
