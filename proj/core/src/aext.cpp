#include "nccalc/aext.hpp"

#include "nccalc/classical.hpp"
#include "nccalc/context.hpp"
#include "nccalc/scalars.hpp"

namespace nccalc {

namespace {

struct AextCache {
  std::map<std::array<std::uint16_t, 3>, AElem> reduced;
  std::map<std::pair<std::array<std::uint16_t, 3>, std::array<std::uint16_t, 3>>, AElem> product;
};

// Adds c * reduce(m) for every term of a t-free UPoly.
void accumulate(AElem& out, const UPoly& p, const RatFun& c) {
  for (const auto& [m, cm] : p.terms()) {
    RatFun coeff = c * cm;
    if (m.t > 0) coeff *= t_sym().pow(m.t);
    if (m.xyz.e[2] <= 1) {
      out.add_term(m.xyz, coeff);
    } else {
      const AElem reduced = reduce_mono(m.xyz);
      for (const auto& [rm, rc] : reduced.terms()) out.add_term(rm, coeff * rc);
    }
  }
}

}  // namespace

AElem::AElem(RatFun c) {
  if (!c.is_zero()) terms_.emplace(Mono3{}, std::move(c));
}

AElem AElem::gen(Gen g) {
  if (g == Gen::t) return AElem(t_sym());
  return monomial(Mono3::letter(g));
}

AElem AElem::monomial(const Mono3& m, const RatFun& c) {
  AElem a;
  if (m.e[2] <= 1) {
    a.add_term(m, c);
    return a;
  }
  return c * reduce_mono(m);
}

bool AElem::is_central() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

RatFun AElem::central_part() const {
  auto it = terms_.find(Mono3{});
  return it == terms_.end() ? RatFun() : it->second;
}

void AElem::add_term(const Mono3& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AElem AElem::map_coeffs(const std::function<RatFun(const RatFun&)>& f) const {
  AElem out;
  for (const auto& [m, c] : terms_) out.add_term(m, f(c));
  return out;
}

AElem AElem::operator-() const {
  AElem a = *this;
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

AElem& AElem::operator+=(const AElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AElem& AElem::operator-=(const AElem& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AElem operator*(const RatFun& c, const AElem& a) {
  if (c.is_zero()) return AElem();
  if (c.is_one()) return a;
  AElem out = a;
  for (auto& [m, v] : out.terms_) v = c * v;
  return out;
}

AElem reduce_mono(const Mono3& m) {
  if (m.e[2] <= 1) return AElem::monomial(m);
  auto& memo = cache<AextCache>().reduced;
  if (auto it = memo.find(m.e); it != memo.end()) return it->second;
  // x^a y^b z^c = x^a y^b z^(c-2) (Cas - x^2 - y^2), Cas = rho^2 - hbar^2.
  Mono3 prefix = m;
  prefix.e[2] = static_cast<std::uint16_t>(prefix.e[2] - 2);
  const RatFun cas = rho() * rho() - hbar() * hbar();
  AElem out;
  accumulate(out, UPoly::monomial(UMono{0, prefix}), cas);
  accumulate(out, mono_times_mono(prefix, Mono3::of(2, 0, 0)), RatFun(-1));
  accumulate(out, mono_times_mono(prefix, Mono3::of(0, 2, 0)), RatFun(-1));
  memo.emplace(m.e, out);
  return out;
}

AElem a_from_u(const UPoly& p) {
  AElem out;
  accumulate(out, p, RatFun(1));
  return out;
}

namespace {

const AElem& mono_product(const Mono3& a, const Mono3& b) {
  auto& memo = cache<AextCache>().product;
  auto key = std::make_pair(a.e, b.e);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  AElem out;
  accumulate(out, mono_times_mono(a, b), RatFun(1));
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

AElem operator*(const AElem& a, const AElem& b) {
  if (a.is_zero() || b.is_zero()) return AElem();
  if (a.is_central()) return a.central_part() * b;
  if (b.is_central()) return b.central_part() * a;
  AElem out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      RatFun c = ca * cb;
      if (ma.is_one() || mb.is_one()) {
        out.add_term(ma * mb, c);
        continue;
      }
      for (const auto& [m, cm] : mono_product(ma, mb).terms_) out.add_term(m, c * cm);
    }
  return out;
}

AElem a_mul(const AElem& a, const AElem& b) { return a * b; }

AElem commutator(const AElem& a, const AElem& b) { return a * b - b * a; }

ClassPoly a_classical_limit(const AElem& a) {
  ClassPoly out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, limit_h0(c));
  return out;
}

}  // namespace nccalc
