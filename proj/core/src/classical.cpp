#include "nccalc/classical.hpp"

#include "nccalc/context.hpp"

namespace nccalc {

ClassPoly::ClassPoly(RatFun c) {
  if (!c.is_zero()) terms_.emplace(Mono3{}, std::move(c));
}

ClassPoly ClassPoly::gen(Gen g) {
  if (g == Gen::t) return ClassPoly(t_sym());
  return monomial(Mono3::letter(g));
}

ClassPoly ClassPoly::monomial(const Mono3& m, const RatFun& c) {
  ClassPoly p;
  p.add_term(m, c);
  return p;
}

void ClassPoly::add_term(const Mono3& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ClassPoly ClassPoly::operator-() const {
  ClassPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

ClassPoly operator+(ClassPoly a, const ClassPoly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, c);
  return a;
}

ClassPoly operator-(ClassPoly a, const ClassPoly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
  return a;
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
  ClassPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ClassPoly ClassPoly::reduce_radius() const {
  ClassPoly out;
  const RatFun r2 = rho() * rho();
  for (const auto& [m, c] : terms_) {
    if (m.e[2] <= 1) {
      out.add_term(m, c);
      continue;
    }
    Mono3 rest = m;
    rest.e[2] = static_cast<std::uint16_t>(rest.e[2] - 2);
    ClassPoly expanded;
    expanded.add_term(rest, c * r2);
    expanded.add_term(rest * Mono3::of(2, 0, 0), -c);
    expanded.add_term(rest * Mono3::of(0, 2, 0), -c);
    out = out + expanded.reduce_radius();
  }
  return out;
}

ClassPoly ClassPoly::partial(Gen u) const {
  ClassPoly out;
  if (u == Gen::t) {
    for (const auto& [m, c] : terms_) out.add_term(m, c.derivative(Var::t));
    return out;
  }
  const int k = static_cast<int>(u) - 1;
  const Mono3 letter = Mono3::letter(u);
  for (const auto& [m, c] : terms_) {
    if (m.e[k] > 0) {
      Mono3 d = m;
      --d.e[k];
      out.add_term(d, c * RatFun(static_cast<long>(m.e[k])));
    }
    RatFun dr = c.derivative(Var::rho);
    if (!dr.is_zero()) out.add_term(m * letter, dr / rho());
  }
  return out;
}

}  // namespace nccalc
