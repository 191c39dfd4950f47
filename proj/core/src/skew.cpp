#include "nccalc/skew.hpp"

#include "nccalc/reporacle.hpp"

namespace nccalc {

SkewExpr::SkewExpr(AElem a) {
  auto n = std::make_shared<Node>();
  n->value = std::move(a);
  node_ = std::move(n);
}

SkewExpr SkewExpr::sum(const SkewExpr& a, const SkewExpr& b) {
  if (a.is_atom() && b.is_atom()) return SkewExpr(a.as_atom() + b.as_atom());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Adjacent atoms are merged so that a sum has one trailing atom.
  if (b.is_atom() && a.kind() == Kind::sum && a.right().is_atom())
    return sum(a.left(), SkewExpr(a.right().as_atom() + b.as_atom()));
  if (a.is_atom() && b.kind() == Kind::sum && b.left().is_atom())
    return sum(SkewExpr(a.as_atom() + b.left().as_atom()), b.right());
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->lhs = std::make_shared<const SkewExpr>(a);
  n->rhs = std::make_shared<const SkewExpr>(b);
  return SkewExpr(std::shared_ptr<const Node>(std::move(n)));
}

SkewExpr SkewExpr::product(const SkewExpr& a, const SkewExpr& b) {
  if (a.is_atom() && b.is_atom()) return SkewExpr(a.as_atom() * b.as_atom());
  if (a.is_zero() || b.is_zero()) return SkewExpr();
  if (a.is_atom() && a.as_atom() == AElem(1)) return b;
  if (b.is_atom() && b.as_atom() == AElem(1)) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::product;
  n->lhs = std::make_shared<const SkewExpr>(a);
  n->rhs = std::make_shared<const SkewExpr>(b);
  return SkewExpr(std::shared_ptr<const Node>(std::move(n)));
}

SkewExpr SkewExpr::inverse(const SkewExpr& a) {
  if (a.is_zero()) throw SingularInverse("inverse of zero");
  if (a.is_atom() && a.as_atom().is_central()) return SkewExpr(a.as_atom().central_part().inverse());
  if (a.kind() == Kind::inverse) return a.left();
  bool certified = false;
  for (const Rep& r : default_reps()) {
    try {
      numeric_inverse(rep_eval(a, r));
      certified = true;
      break;
    } catch (const DomainError&) {
    }
  }
  if (!certified) throw SingularInverse("operand is singular in every default representation");
  auto n = std::make_shared<Node>();
  n->kind = Kind::inverse;
  n->lhs = std::make_shared<const SkewExpr>(a);
  return SkewExpr(std::shared_ptr<const Node>(std::move(n)));
}

SkewExpr SkewExpr::operator-() const {
  if (is_atom()) return SkewExpr(-as_atom());
  return product(SkewExpr(-1), *this);
}

std::complex<double> SkewExpr::classical_value(const std::array<std::complex<double>, 3>& xyz,
                                               std::complex<double> hbar, std::complex<double> t,
                                               std::complex<double> g) const {
  switch (kind()) {
    case Kind::atom: {
      std::complex<double> r = std::sqrt(xyz[0] * xyz[0] + xyz[1] * xyz[1] + xyz[2] * xyz[2] + hbar * hbar);
      Poly::Point p{r, t, hbar, g};
      std::complex<double> sum = 0;
      for (const auto& [m, c] : as_atom().terms())
        sum += c.evaluate(p) * std::pow(xyz[0], m.e[0]) * std::pow(xyz[1], m.e[1]) * std::pow(xyz[2], m.e[2]);
      return sum;
    }
    case Kind::sum: return left().classical_value(xyz, hbar, t, g) + right().classical_value(xyz, hbar, t, g);
    case Kind::product: return left().classical_value(xyz, hbar, t, g) * right().classical_value(xyz, hbar, t, g);
    case Kind::inverse: {
      std::complex<double> v = left().classical_value(xyz, hbar, t, g);
      if (std::abs(v) < 1e-300) throw SingularInverse("classical value vanishes");
      return 1.0 / v;
    }
  }
  throw InvariantBreach("unknown node kind");
}

}  // namespace nccalc
