#pragma once

#include "nccalc/aext.hpp"

#include <complex>
#include <memory>

namespace nccalc {

/// Lazy element of the skew field of fractions of A: a tree of atoms, sums,
/// products and inverses. Atoms are folded eagerly where the result stays in
/// A; inverse nodes are only created for operands certified invertible by
/// the numeric oracle.
class SkewExpr {
 public:
  enum class Kind { atom, sum, product, inverse };

  SkewExpr() : SkewExpr(AElem()) {}
  SkewExpr(AElem a);  // NOLINT(google-explicit-constructor)
  SkewExpr(long c) : SkewExpr(AElem(c)) {}  // NOLINT(google-explicit-constructor)
  SkewExpr(RatFun c) : SkewExpr(AElem(std::move(c))) {}  // NOLINT(google-explicit-constructor)

  static SkewExpr atom(AElem a) { return SkewExpr(std::move(a)); }
  static SkewExpr sum(const SkewExpr& a, const SkewExpr& b);
  static SkewExpr product(const SkewExpr& a, const SkewExpr& b);
  /// Throws SingularInverse for a zero operand or one that is singular in
  /// every default representation.
  static SkewExpr inverse(const SkewExpr& a);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::atom; }
  /// Requires is_atom().
  const AElem& as_atom() const { return node_->value; }
  const SkewExpr& left() const { return *node_->lhs; }
  const SkewExpr& right() const { return *node_->rhs; }
  /// Structural zero (zero atom).
  bool is_zero() const { return is_atom() && as_atom().is_zero(); }

  SkewExpr operator-() const;
  friend SkewExpr operator+(const SkewExpr& a, const SkewExpr& b) { return sum(a, b); }
  friend SkewExpr operator-(const SkewExpr& a, const SkewExpr& b) { return sum(a, -b); }
  friend SkewExpr operator*(const SkewExpr& a, const SkewExpr& b) { return product(a, b); }

  /// Value with x, y, z replaced by commuting numbers and rho by
  /// sqrt(x^2 + y^2 + z^2 + hbar^2): the classical reading of the tree.
  std::complex<double> classical_value(const std::array<std::complex<double>, 3>& xyz,
                                       std::complex<double> hbar, std::complex<double> t,
                                       std::complex<double> g) const;

 private:
  struct Node {
    Kind kind = Kind::atom;
    AElem value;
    std::shared_ptr<const SkewExpr> lhs, rhs;
  };
  explicit SkewExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace nccalc
