#include "nccalc/upbw.hpp"

#include "nccalc/context.hpp"

#include <map>
#include <utility>

namespace nccalc {

namespace {

struct Mono3Key {
  bool operator()(const Mono3& a, const Mono3& b) const { return a.e < b.e; }
};

struct UpbwCache {
  std::map<std::pair<std::array<std::uint16_t, 3>, int>, UPoly> letter;
  std::map<std::pair<std::array<std::uint16_t, 3>, std::array<std::uint16_t, 3>>, UPoly> mono;
};

int spatial_index(Gen g) { return static_cast<int>(g) - 1; }

Gen spatial_gen(int k) { return static_cast<Gen>(k + 1); }

// [a, b] = sign * h * third, for spatial a > b.
std::pair<long, Gen> bracket(Gen a, Gen b) {
  if (a == Gen::y && b == Gen::x) return {-1, Gen::z};
  if (a == Gen::z && b == Gen::x) return {1, Gen::y};
  return {-1, Gen::x};  // [z, y] = -h x
}

UPoly times_letter(const UPoly& p, Gen g) {
  UPoly out;
  for (const auto& [m, c] : p.terms()) {
    const UPoly prod = mono_times_letter(m.xyz, g);
    for (const auto& [m2, c2] : prod.terms()) {
      UMono mm = m2;
      mm.t = static_cast<std::uint16_t>(mm.t + m.t);
      out.add_term(mm, c * c2);
    }
  }
  return out;
}

}  // namespace

Mono3 Mono3::letter(Gen g) {
  Mono3 m;
  m.e[spatial_index(g)] = 1;
  return m;
}

UPoly::UPoly(RatFun c) {
  if (!c.is_zero()) terms_.emplace(UMono{}, std::move(c));
}

UPoly UPoly::gen(Gen g) {
  UMono m;
  if (g == Gen::t)
    m.t = 1;
  else
    m.xyz = Mono3::letter(g);
  return monomial(m);
}

UPoly UPoly::monomial(const UMono& m, RatFun c) {
  UPoly p;
  p.add_term(m, c);
  return p;
}

void UPoly::add_term(const UMono& m, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

UPoly operator+(UPoly a, const UPoly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, c);
  return a;
}

UPoly operator-(UPoly a, const UPoly& b) {
  for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
  return a;
}

UPoly operator*(const RatFun& c, UPoly a) {
  if (c.is_zero()) return UPoly();
  for (auto& [m, v] : a.terms_) v = c * v;
  return a;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      RatFun c = ca * cb;
      const UPoly prod = mono_times_mono(ma.xyz, mb.xyz);
      for (const auto& [m, cm] : prod.terms_) {
        UMono mm = m;
        mm.t = static_cast<std::uint16_t>(ma.t + mb.t);
        out.add_term(mm, c * cm);
      }
    }
  return out;
}

UPoly u_mul(const UPoly& p, const UPoly& q) { return p * q; }

UPoly mono_times_letter(const Mono3& m, Gen g) {
  auto& memo = cache<UpbwCache>().letter;
  auto key = std::make_pair(m.e, static_cast<int>(g));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int gi = spatial_index(g);
  int last = -1;
  for (int k = 2; k >= 0; --k)
    if (m.e[k] > 0) {
      last = k;
      break;
    }
  UPoly result;
  if (last <= gi) {
    Mono3 mm = m;
    ++mm.e[gi];
    result = UPoly::monomial(UMono{0, mm});
  } else {
    // m = m' L with L > g:  m g = (m' g) L + m' [L, g].
    Mono3 prefix = m;
    --prefix.e[last];
    const Gen big = spatial_gen(last);
    auto [sign, third] = bracket(big, g);
    result = times_letter(mono_times_letter(prefix, g), big) +
             (h() * RatFun(sign)) * mono_times_letter(prefix, third);
  }
  memo.emplace(key, result);
  return result;
}

UPoly mono_times_mono(const Mono3& m1, const Mono3& m2) {
  if (m2.is_one()) return UPoly::monomial(UMono{0, m1});
  if (m1.is_one()) return UPoly::monomial(UMono{0, m2});
  auto& memo = cache<UpbwCache>().mono;
  auto key = std::make_pair(m1.e, m2.e);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  UPoly acc = UPoly::monomial(UMono{0, m1});
  for (int k = 0; k < 3; ++k)
    for (unsigned r = 0; r < m2.e[k]; ++r) acc = times_letter(acc, spatial_gen(k));
  memo.emplace(key, acc);
  return acc;
}

UPoly pbw_normalize(const std::vector<Gen>& word) {
  UPoly acc(1);
  for (Gen g : word) acc = acc * UPoly::gen(g);
  return acc;
}

UPoly casimir() {
  UPoly x = UPoly::gen(Gen::x), y = UPoly::gen(Gen::y), z = UPoly::gen(Gen::z);
  return x * x + y * y + z * z;
}

UMat gen_matrix_N() {
  const RatFun i(GaussRat::i());
  UPoly t = UPoly::gen(Gen::t), x = UPoly::gen(Gen::x), y = UPoly::gen(Gen::y), z = UPoly::gen(Gen::z);
  UMat n(2, 2);
  n(0, 0) = t - i * z;
  n(0, 1) = -(i * x) - y;
  n(1, 0) = -(i * x) + y;
  n(1, 1) = t + i * z;
  return n;
}

UMat ch_residual() {
  UMat n = gen_matrix_N();
  UPoly t = UPoly::gen(Gen::t);
  UPoly hh(h());
  UPoly c1 = RatFun(2) * t + hh;
  UPoly c0 = t * t + casimir() + hh * t;
  return n * n - c1 * n + c0 * UMat::identity(2);
}

UMat flip_matrix() {
  UMat p(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) p(2 * a + b, 2 * b + a) = UPoly(1);
  return p;
}

UMat braid_residual() {
  UMat n = gen_matrix_N();
  UMat n1(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) n1(2 * a + b, 2 * c + b) = n(a, c);
  UMat p = flip_matrix();
  UPoly hh(h());
  return p * n1 * p * n1 - n1 * p * n1 * p - hh * (p * n1 - n1 * p);
}

}  // namespace nccalc
