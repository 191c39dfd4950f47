#pragma once

#include "nccalc/classical.hpp"
#include "nccalc/skew.hpp"
#include "nccalc/whcalc.hpp"

#include <map>
#include <optional>
#include <vector>

namespace nccalc {

/// Symmetrization map Sym(u(2)) -> U(u(2)_h). Coefficients must be
/// polynomial in t and free of r; DomainError otherwise.
UPoly alpha_poly(const ClassPoly& p);
/// Inverse of alpha_poly (triangular in the degree filtration).
ClassPoly alpha_poly_inverse(const UPoly& p);
/// f(t, r) -> f(t, rho). The symbol r is stored in the rho slot, so this is
/// the identity on the stored data.
CenterFun alpha_central(const CenterFun& f);
/// Split-form input: sum of f_k(t, r) * monomial_k -> sum f_k(t, rho) alpha(monomial_k).
AElem alpha_elem(const ClassPoly& p);
/// alpha(f) alpha(g)^-1; ZeroDenominator when g = 0.
SkewExpr alpha_fraction(const ClassPoly& f, const ClassPoly& g);
/// f * g = alpha^-1(alpha(f) alpha(g)).
ClassPoly star_product(const ClassPoly& f, const ClassPoly& g);

/// Classical differential operator: sum (num/den) * d^m.
struct ClassOp {
  struct Term {
    ClassPoly num;
    ClassPoly den{1};
    DMono d{};
  };
  std::vector<Term> terms;
};

/// Quantized operator: sum coeff * (quantum d^m).
struct QuantumOp {
  struct Term {
    SkewExpr coeff;
    DPoly d;
  };
  std::vector<Term> terms;

  SkewExpr apply(const AElem& a) const;
};

QuantumOp alpha_operator(const ClassOp& p);

/// Classical form: exterior mask -> classical coefficient.
using ClassForm = std::map<std::uint8_t, ClassPoly>;
Form alpha_form(const ClassForm& w);
/// Classical de Rham operator with the same sign convention as d_op.
ClassForm classical_d(const ClassForm& w);
/// A degree-2 polynomial 0-form with alpha(d w) != d(alpha(w)), or nullopt.
std::optional<ClassForm> find_noncommuting_form();

}  // namespace nccalc
