#include "nccalc/quantmap.hpp"

#include "nccalc/context.hpp"

#include <algorithm>

namespace nccalc {

namespace {

struct QuantCache {
  std::map<std::array<std::uint16_t, 3>, UPoly> sym;
};

const UPoly& symmetrized(const Mono3& m) {
  auto& memo = cache<QuantCache>().sym;
  if (auto it = memo.find(m.e); it != memo.end()) return it->second;
  std::vector<Gen> word;
  for (int k = 0; k < 3; ++k) word.insert(word.end(), m.e[k], static_cast<Gen>(k + 1));
  UPoly sum;
  long count = 0;
  do {
    sum = sum + pbw_normalize(word);
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return memo.emplace(m.e, RatFun(1) / RatFun(count) * sum).first->second;
}

}  // namespace

UPoly alpha_poly(const ClassPoly& p) {
  UPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_polynomial() || c.depends_on(Var::rho))
      throw DomainError("alpha_poly needs coefficients polynomial in t and free of r");
    auto by_t = c.num().coefficients_in(Var::t);
    for (std::size_t k = 0; k < by_t.size(); ++k) {
      if (by_t[k].is_zero()) continue;
      for (const auto& [um, uc] : symmetrized(m).terms()) {
        UMono mm = um;
        mm.t = static_cast<std::uint16_t>(mm.t + k);
        out = out + UPoly::monomial(mm, RatFun(by_t[k]) * uc);
      }
    }
  }
  return out;
}

ClassPoly alpha_poly_inverse(const UPoly& p) {
  ClassPoly out;
  UPoly rest = p;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().begin();
    RatFun coeff = c * t_sym().pow(m.t);
    out.add_term(m.xyz, coeff);
    UPoly image;
    for (const auto& [um, uc] : symmetrized(m.xyz).terms()) {
      UMono mm = um;
      mm.t = static_cast<std::uint16_t>(mm.t + m.t);
      image.add_term(mm, c * uc);
    }
    rest = rest - image;
  }
  return out;
}

CenterFun alpha_central(const CenterFun& f) { return f; }

AElem alpha_elem(const ClassPoly& p) {
  AElem out;
  for (const auto& [m, c] : p.terms()) out += alpha_central(c) * a_from_u(symmetrized(m));
  return out;
}

SkewExpr alpha_fraction(const ClassPoly& f, const ClassPoly& g) {
  if (g.is_zero()) throw ZeroDenominator();
  return SkewExpr(alpha_elem(f)) * SkewExpr::inverse(SkewExpr(alpha_elem(g)));
}

ClassPoly star_product(const ClassPoly& f, const ClassPoly& g) {
  return alpha_poly_inverse(alpha_poly(f) * alpha_poly(g));
}

SkewExpr QuantumOp::apply(const AElem& a) const {
  SkewExpr out;
  for (const auto& t : terms) out = out + t.coeff * SkewExpr(apply_op(t.d, a));
  return out;
}

QuantumOp alpha_operator(const ClassOp& p) {
  QuantumOp q;
  for (const auto& t : p.terms) q.terms.push_back({alpha_fraction(t.num, t.den), DPoly::monomial(t.d)});
  return q;
}

Form alpha_form(const ClassForm& w) {
  Form out;
  for (const auto& [mask, c] : w) out.add_term(mask, alpha_elem(c));
  return out;
}

ClassForm classical_d(const ClassForm& w) {
  ClassForm out;
  for (const auto& [mask, f] : w) {
    for (int u = 0; u < 4; ++u) {
      const std::uint8_t bit = static_cast<std::uint8_t>(1u << u);
      if (mask & bit) continue;
      ClassPoly du = f.partial(static_cast<Gen>(u));
      if (du.is_zero()) continue;
      const int swaps = __builtin_popcount(static_cast<unsigned>(mask) >> (u + 1));
      ClassPoly& slot = out[static_cast<std::uint8_t>(mask | bit)];
      slot = swaps % 2 ? slot - du : slot + du;
      if (slot.is_zero()) out.erase(static_cast<std::uint8_t>(mask | bit));
    }
  }
  return out;
}

std::optional<ClassForm> find_noncommuting_form() {
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; a + b <= 2; ++b) {
      ClassForm w{{0, ClassPoly::monomial(Mono3::of(a, b, 2 - a - b))}};
      if (!(alpha_form(classical_d(w)) == d_op(alpha_form(w)))) return w;
    }
  return std::nullopt;
}

}  // namespace nccalc
