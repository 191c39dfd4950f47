#include "nccalc/whcalc.hpp"

#include "nccalc/context.hpp"
#include "nccalc/scalars.hpp"
#include "nccalc/thetamat.hpp"

namespace nccalc {

namespace {

using Row = std::array<AElem, 4>;

RatFun two_over_h() { return RatFun(2) / h(); }
RatFun half_h() { return h() / RatFun(2); }

DMono unit(int k) {
  DMono m{};
  m[k] = 1;
  return m;
}

DMono mono_mul(const DMono& a, const DMono& b) {
  DMono m{};
  for (int k = 0; k < 4; ++k) m[k] = static_cast<std::uint16_t>(a[k] + b[k]);
  return m;
}

// [D_k, L] = (h/2) sum_j kTable[L][k][j] D_j in the shifted basis.
constexpr int kTable[3][4][4] = {
    // x
    {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
    // y
    {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}},
    // z
    {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}},
};

struct WhCache {
  std::map<std::array<std::uint16_t, 3>, Matrix<AElem>> push;
  std::map<std::array<std::uint16_t, 3>, Derivs> coprod_derivs;
};

// D_i m = sum_j P(m)_ij D_j for a spatial monomial m, by the permutation table.
const Matrix<AElem>& push_matrix(const Mono3& m) {
  auto& memo = cache<WhCache>().push;
  if (auto it = memo.find(m.e); it != memo.end()) return it->second;
  Matrix<AElem> out;
  if (m.is_one()) {
    out = Matrix<AElem>::identity(4);
  } else {
    int l = 2;
    while (m.e[l] == 0) --l;
    Mono3 prefix = m;
    --prefix.e[l];
    const Matrix<AElem>& p = push_matrix(prefix);
    const AElem letter = AElem::monomial(Mono3::letter(static_cast<Gen>(l + 1)));
    const RatFun hh = half_h();
    out = Matrix<AElem>(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        AElem e = p(i, j) * letter;
        for (int k = 0; k < 4; ++k)
          if (kTable[l][k][j] != 0 && !p(i, k).is_zero()) e += (hh * RatFun(kTable[l][k][j])) * p(i, k);
        out(i, j) = std::move(e);
      }
  }
  return memo.emplace(m.e, std::move(out)).first->second;
}

// D_i a = sum_j row_j D_j (shifted basis). Central coefficients move through
// their Theta-hat image.
Row push_row(int i, const AElem& a) {
  Row row;
  const ThetaMat amat = a_matrix();
  for (const auto& [m, c] : a.terms()) {
    const Matrix<AElem>& p = push_matrix(m);
    CentralForm cf = theta_hat_central(c);
    for (int k = 0; k < 4; ++k) {
      AElem lead(k == i ? cf.alpha : RatFun());
      if (!cf.beta.is_zero()) lead += cf.beta * amat(i, k);
      if (lead.is_zero()) continue;
      for (int j = 0; j < 4; ++j)
        if (!p(k, j).is_zero()) row[j] += lead * p(k, j);
    }
  }
  return row;
}

// Sum over the binomial expansion of (d_t + s)^n, s = 2/h, times rest.
void expand_shifted(const DMono& shifted, const RatFun& c, const std::function<void(const DMono&, const RatFun&)>& emit,
                    const RatFun& s) {
  const unsigned n = shifted[0];
  RatFun binom(1);
  for (unsigned k = 0; k <= n; ++k) {
    DMono m = shifted;
    m[0] = static_cast<std::uint16_t>(k);
    emit(m, c * binom * s.pow(static_cast<int>(n - k)));
    binom = binom * RatFun(static_cast<long>(n - k)) / RatFun(static_cast<long>(k + 1));
  }
}

AElem apply_mono(const DMono& m, const AElem& a, const Derivs& da) {
  int deg = m[0] + m[1] + m[2] + m[3];
  if (deg == 0) return a;
  for (int k = 0; k < 4; ++k)
    if (m[k] == 1 && deg == 1) return da[k];
  throw InvariantBreach("coproduct factor of degree > 1");
}

Tensor2 tensor_mul(const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto key = std::make_pair(mono_mul(ka.first, kb.first), mono_mul(ka.second, kb.second));
      RatFun v = ca * cb;
      auto [it, inserted] = out.emplace(key, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

void tensor_put(Tensor2& t, const DMono& l, const DMono& r, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(std::make_pair(l, r), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void tensor3_put(Tensor3& t, const std::array<DMono, 3>& k, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

DPoly::DPoly(RatFun c) {
  if (!c.is_zero()) terms_.emplace(DMono{}, std::move(c));
}

DPoly DPoly::gen(DGen g) { return monomial(unit(static_cast<int>(g))); }

DPoly DPoly::shifted_t() { return gen(DGen::t) + DPoly(two_over_h()); }

DPoly DPoly::monomial(const DMono& m, const RatFun& c) {
  DPoly d;
  d.add_term(m, c);
  return d;
}

DPoly DPoly::from_shifted(const Terms& shifted) {
  DPoly d;
  const RatFun s = two_over_h();
  for (const auto& [m, c] : shifted)
    expand_shifted(m, c, [&](const DMono& mm, const RatFun& cc) { d.add_term(mm, cc); }, s);
  return d;
}

DPoly::Terms DPoly::shifted_view() const {
  DPoly d;
  const RatFun s = -two_over_h();
  for (const auto& [m, c] : terms_)
    expand_shifted(m, c, [&](const DMono& mm, const RatFun& cc) { d.add_term(mm, cc); }, s);
  return d.terms_;
}

void DPoly::add_term(const DMono& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DPoly DPoly::operator-() const {
  DPoly d = *this;
  for (auto& [m, c] : d.terms_) c = -c;
  return d;
}

DPoly operator+(DPoly a, const DPoly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, c);
  return a;
}

DPoly operator-(DPoly a, const DPoly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
  return a;
}

DPoly operator*(const DPoly& a, const DPoly& b) {
  DPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

RatFun counit(const DPoly& d) {
  auto it = d.terms().find(DMono{});
  return it == d.terms().end() ? RatFun() : it->second;
}

void WHElem::add_term(const DMono& m, const AElem& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) terms_.erase(it);
}

WHElem operator+(WHElem a, const WHElem& b) {
  for (const auto& [m, e] : b.terms_) a.add_term(m, e);
  return a;
}

WHElem sigma_push(const DPoly& d, const AElem& a) {
  WHElem out;
  const RatFun s = two_over_h();
  for (const auto& [mono, c] : d.shifted_view()) {
    std::map<DMono, AElem> state{{DMono{}, a}};
    for (int g = 0; g < 4; ++g)
      for (unsigned rep = 0; rep < mono[g]; ++rep) {
        std::map<DMono, AElem> next;
        for (const auto& [n, elem] : state) {
          Row row = push_row(g, elem);
          for (int j = 0; j < 4; ++j) {
            if (row[j].is_zero()) continue;
            DMono key = mono_mul(n, unit(j));
            auto [it, inserted] = next.emplace(key, row[j]);
            if (!inserted) it->second += row[j];
          }
        }
        state = std::move(next);
      }
    for (const auto& [n, elem] : state) {
      if (elem.is_zero()) continue;
      expand_shifted(n, c, [&](const DMono& mm, const RatFun& cc) { out.add_term(mm, cc * elem); }, s);
    }
  }
  return out;
}

WHElem push_through(const WHElem& w, const AElem& b) {
  WHElem out;
  for (const auto& [m, a] : w.terms()) {
    WHElem pushed = sigma_push(DPoly::monomial(m), b);
    for (const auto& [m2, e] : pushed.terms()) out.add_term(m2, a * e);
  }
  return out;
}

AElem apply_counit(const WHElem& w) {
  auto it = w.terms().find(DMono{});
  return it == w.terms().end() ? AElem() : it->second;
}

AElem apply_op(const DPoly& d, const AElem& a) { return apply_counit(sigma_push(d, a)); }

AElem deriv(DGen u, const AElem& a) { return apply_op(DPoly::gen(u), a); }

AElem deriv_shifted_t(const AElem& a) { return apply_op(DPoly::shifted_t(), a); }

AElem deriv_central_shifted_t(const CenterFun& f) {
  CenterFun ft = shift_t(f);
  const RatFun ih = RatFun(GaussRat::i()) * hbar();
  if (!ft.depends_on(Var::rho)) return AElem(ft / ih);
  CenterFun fp = shift_rho(ft, 1), fm = shift_rho(ft, -1);
  return AElem(((rho() + hbar()) * fp + (rho() - hbar()) * fm) / (RatFun(2) * ih * rho()));
}

AElem deriv_central(DGen u, const CenterFun& f) {
  if (u == DGen::t) return deriv_central_shifted_t(f) - AElem(two_over_h() * f);
  CenterFun ft = shift_t(f);
  if (!ft.depends_on(Var::rho)) return AElem();
  CenterFun fp = shift_rho(ft, 1), fm = shift_rho(ft, -1);
  return ((fp - fm) / (RatFun(2) * hbar() * rho())) * AElem::gen(static_cast<Gen>(u));
}

Tensor2 coprod(DGen u) {
  Tensor2 t;
  const RatFun hh = half_h();
  const int k = static_cast<int>(u);
  const DMono one{};
  tensor_put(t, unit(k), one, RatFun(1));
  tensor_put(t, one, unit(k), RatFun(1));
  if (u == DGen::t) {
    tensor_put(t, unit(0), unit(0), hh);
    for (int s = 1; s < 4; ++s) tensor_put(t, unit(s), unit(s), -hh);
    return t;
  }
  const int v = k % 3 + 1, w = (k + 1) % 3 + 1;
  tensor_put(t, unit(0), unit(k), hh);
  tensor_put(t, unit(k), unit(0), hh);
  tensor_put(t, unit(v), unit(w), hh);
  tensor_put(t, unit(w), unit(v), -hh);
  return t;
}

Tensor2 tensor(const DPoly& a, const DPoly& b) {
  Tensor2 t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) tensor_put(t, ma, mb, ca * cb);
  return t;
}

Tensor2 tensor_add(Tensor2 a, const Tensor2& b, const RatFun& scale) {
  for (const auto& [k, c] : b) tensor_put(a, k.first, k.second, scale * c);
  return a;
}

Tensor2 coprod_shifted(DGen u) {
  const RatFun hh = half_h();
  auto d = [](int k) { return k == 0 ? DPoly::shifted_t() : DPoly::gen(static_cast<DGen>(k)); };
  Tensor2 t;
  const int k = static_cast<int>(u);
  if (u == DGen::t) {
    t = tensor_add(t, tensor(d(0), d(0)), hh);
    for (int s = 1; s < 4; ++s) t = tensor_add(t, tensor(d(s), d(s)), -hh);
    return t;
  }
  const int v = k % 3 + 1, w = (k + 1) % 3 + 1;
  t = tensor_add(t, tensor(d(0), d(k)), hh);
  t = tensor_add(t, tensor(d(k), d(0)), hh);
  t = tensor_add(t, tensor(d(v), d(w)), hh);
  t = tensor_add(t, tensor(d(w), d(v)), -hh);
  return t;
}

Tensor2 coprod(const DPoly& d) {
  Tensor2 out;
  for (const auto& [m, c] : d.terms()) {
    Tensor2 acc;
    tensor_put(acc, DMono{}, DMono{}, c);
    for (int g = 0; g < 4; ++g)
      for (unsigned r = 0; r < m[g]; ++r) acc = tensor_mul(acc, coprod(static_cast<DGen>(g)));
    out = tensor_add(out, acc);
  }
  return out;
}

DPoly counit_left(const Tensor2& t) {
  DPoly out;
  for (const auto& [k, c] : t)
    if (k.first == DMono{}) out.add_term(k.second, c);
  return out;
}

DPoly counit_right(const Tensor2& t) {
  DPoly out;
  for (const auto& [k, c] : t)
    if (k.second == DMono{}) out.add_term(k.first, c);
  return out;
}

Tensor3 coprod_left(const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t)
    for (const auto& [k2, c2] : coprod(DPoly::monomial(k.first))) tensor3_put(out, {k2.first, k2.second, k.second}, c * c2);
  return out;
}

Tensor3 coprod_right(const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t)
    for (const auto& [k2, c2] : coprod(DPoly::monomial(k.second))) tensor3_put(out, {k.first, k2.first, k2.second}, c * c2);
  return out;
}

AElem deriv_via_coprod(DGen u, const AElem& a, const Derivs& da, const AElem& b, const Derivs& db) {
  AElem out;
  for (const auto& [k, c] : coprod(u)) out += c * (apply_mono(k.first, a, da) * apply_mono(k.second, b, db));
  return out;
}

namespace {

Derivs central_derivs(const CenterFun& f) {
  return {deriv_central(DGen::t, f), deriv_central(DGen::x, f), deriv_central(DGen::y, f),
          deriv_central(DGen::z, f)};
}

const Derivs& mono_derivs(const Mono3& m) {
  auto& memo = cache<WhCache>().coprod_derivs;
  if (auto it = memo.find(m.e); it != memo.end()) return it->second;
  Derivs out;
  if (!m.is_one()) {
    int l = 2;
    while (m.e[l] == 0) --l;
    Mono3 prefix = m;
    --prefix.e[l];
    const AElem a = AElem::monomial(prefix);
    const AElem letter = AElem::monomial(Mono3::letter(static_cast<Gen>(l + 1)));
    Derivs dl;
    dl[l + 1] = AElem(1);
    const Derivs& da = mono_derivs(prefix);
    for (int u = 0; u < 4; ++u) out[u] = deriv_via_coprod(static_cast<DGen>(u), a, da, letter, dl);
  }
  return memo.emplace(m.e, std::move(out)).first->second;
}

}  // namespace

Derivs deriv_all_coprod(const AElem& a) {
  Derivs out;
  for (const auto& [m, c] : a.terms()) {
    if (m.is_one()) {
      Derivs dc = central_derivs(c);
      for (int u = 0; u < 4; ++u) out[u] += dc[u];
      continue;
    }
    const Derivs& dm = mono_derivs(m);
    if (c.is_one()) {
      for (int u = 0; u < 4; ++u) out[u] += dm[u];
      continue;
    }
    const AElem fa(c), ma = AElem::monomial(m);
    const Derivs dc = central_derivs(c);
    for (int u = 0; u < 4; ++u) out[u] += deriv_via_coprod(static_cast<DGen>(u), fa, dc, ma, dm);
  }
  return out;
}

AElem deriv_via_coprod(DGen u, const AElem& a, const AElem& b) {
  return deriv_via_coprod(u, a, deriv_all_coprod(a), b, deriv_all_coprod(b));
}

AElem circ(Gen u, Gen v) {
  const RatFun half(GaussRat(mpq_class(1, 2)));
  if (u == Gen::t) return half * AElem::gen(v);
  if (v == Gen::t) return half * AElem::gen(u);
  if (u == v) return -half * AElem::gen(Gen::t);
  const int a = static_cast<int>(u), b = static_cast<int>(v);
  const Gen third = static_cast<Gen>(6 - a - b);
  // x o y = z/2 and cyclic; reversed order flips the sign.
  const bool cyclic = (b - a + 3) % 3 == 1;
  return (cyclic ? half : -half) * AElem::gen(third);
}

AElem h_leibniz(DGen u, Gen a, Gen b) {
  auto d = [&](Gen g) { return AElem(static_cast<int>(g) == static_cast<int>(u) ? 1 : 0); };
  return d(a) * AElem::gen(b) + AElem::gen(a) * d(b) + h() * deriv(u, circ(a, b));
}

Matrix<DPoly> theta_operator_matrix() {
  Matrix<DPoly> m(4, 4);
  DPoly dx = DPoly::gen(DGen::x), dy = DPoly::gen(DGen::y), dz = DPoly::gen(DGen::z);
  for (int k = 0; k < 4; ++k) m(k, k) = DPoly::shifted_t();
  m(0, 1) = -dx, m(0, 2) = -dy, m(0, 3) = -dz;
  m(1, 0) = dx, m(1, 2) = -dz, m(1, 3) = dy;
  m(2, 0) = dy, m(2, 1) = dz, m(2, 3) = -dx;
  m(3, 0) = dz, m(3, 1) = -dy, m(3, 2) = dx;
  return m;
}

Form Form::term(std::uint8_t mask, const AElem& a) {
  Form f;
  f.add_term(mask, a);
  return f;
}

void Form::add_term(std::uint8_t mask, const AElem& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) terms_.erase(it);
}

Form operator+(Form a, const Form& b) {
  for (const auto& [m, e] : b.terms_) a.add_term(m, e);
  return a;
}

Form d_op(const Form& w) {
  Form out;
  for (const auto& [mask, f] : w.terms()) {
    for (int u = 0; u < 4; ++u) {
      const std::uint8_t bit = static_cast<std::uint8_t>(1u << u);
      if (mask & bit) continue;
      AElem du = deriv(static_cast<DGen>(u), f);
      if (du.is_zero()) continue;
      // Moving du left past the differentials with larger index.
      const int swaps = __builtin_popcount(static_cast<unsigned>(mask) >> (u + 1));
      out.add_term(static_cast<std::uint8_t>(mask | bit), swaps % 2 ? -du : du);
    }
  }
  return out;
}

}  // namespace nccalc
