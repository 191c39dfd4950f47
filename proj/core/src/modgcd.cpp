#include "modgcd.hpp"

#include "nccalc/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>

namespace nccalc::detail {
namespace {

using u64 = std::uint64_t;
using Exp = std::array<std::uint16_t, kNumVars>;
using Dense = std::vector<u64>;
using MPoly = std::map<Exp, u64>;

struct Field {
  u64 p;

  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 sqrt_minus_one() const {
    for (u64 n = 2;; ++n)
      if (pow(n, (p - 1) / 2) == p - 1) return pow(n, (p - 1) / 4);
  }
};

const std::vector<u64>& primes() {
  static const std::vector<u64> list = [] {
    std::vector<u64> out;
    mpz_class n = (mpz_class(1) << 31) - 1;
    while (out.size() < 400) {
      n -= 1;
      if (mpz_fdiv_ui(n.get_mpz_t(), 4) == 1 && mpz_probab_prime_p(n.get_mpz_t(), 30)) out.push_back(n.get_ui());
    }
    return out;
  }();
  return list;
}

// Dense univariate arithmetic; no trailing zeros, the zero polynomial is empty.

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

u64 eval(const Field& F, const Dense& a, u64 x) {
  u64 r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

Dense mul(const Field& F, const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

// a = q b + r.
void divrem(const Field& F, Dense a, const Dense& b, Dense& q, Dense& r) {
  q.clear();
  if (deg(a) < deg(b)) {
    r = std::move(a);
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  const u64 inv = F.inv(b.back());
  for (int k = deg(a); k >= deg(b); --k) {
    const u64 f = F.mul(a[k], inv);
    q[k - deg(b)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= deg(b); ++j) a[k - deg(b) + j] = F.sub(a[k - deg(b) + j], F.mul(f, b[j]));
  }
  a.resize(b.size() - 1);
  trim(a);
  r = std::move(a);
}

Dense monic(const Field& F, Dense a) {
  if (a.empty() || a.back() == 1) return a;
  const u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

Dense ugcd(const Field& F, Dense a, Dense b) {
  while (!b.empty()) {
    Dense q, r;
    divrem(F, std::move(a), b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, std::move(a));
}

// Sparse multivariate images, keyed in lexicographic order (rho first).

Exp lm(const MPoly& a) { return a.rbegin()->first; }

MPoly monic(const Field& F, MPoly a) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.rbegin()->second);
  for (auto& [e, c] : a) c = F.mul(c, inv);
  return a;
}

// Groups by the exponents of every variable but x; values are dense in x.
std::map<Exp, Dense> split(const MPoly& a, int x) {
  std::map<Exp, Dense> out;
  for (const auto& [e, c] : a) {
    Exp key = e;
    key[x] = 0;
    Dense& d = out[key];
    if (d.size() <= e[x]) d.resize(e[x] + 1, 0);
    d[e[x]] = c;
  }
  return out;
}

MPoly join(const std::map<Exp, Dense>& s, int x) {
  MPoly out;
  for (const auto& [key, d] : s)
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d[k]) {
        Exp e = key;
        e[x] = static_cast<std::uint16_t>(k);
        out[e] = d[k];
      }
  return out;
}

Dense content(const Field& F, const std::map<Exp, Dense>& s) {
  Dense c;
  for (const auto& [key, d] : s) {
    c = ugcd(F, c, d);
    if (deg(c) == 0) break;
  }
  return c;
}

std::map<Exp, Dense> divide_by(const Field& F, std::map<Exp, Dense> s, const Dense& c) {
  if (deg(c) == 0) return s;
  for (auto& [key, d] : s) {
    Dense q, r;
    divrem(F, d, c, q, r);
    d = std::move(q);
  }
  return s;
}

MPoly eval_at(const Field& F, const std::map<Exp, Dense>& s, u64 alpha) {
  MPoly out;
  for (const auto& [key, d] : s)
    if (u64 v = eval(F, d, alpha)) out[key] = v;
  return out;
}

bool divides(const Field& F, MPoly a, const MPoly& d) {
  const Exp ld = lm(d);
  const u64 inv = F.inv(d.rbegin()->second);
  while (!a.empty()) {
    const auto [ea, ca] = *a.rbegin();
    Exp q;
    for (int k = 0; k < kNumVars; ++k) {
      if (ea[k] < ld[k]) return false;
      q[k] = static_cast<std::uint16_t>(ea[k] - ld[k]);
    }
    const u64 f = F.mul(ca, inv);
    for (const auto& [e, c] : d) {
      Exp m;
      for (int k = 0; k < kNumVars; ++k) m[k] = static_cast<std::uint16_t>(e[k] + q[k]);
      auto it = a.find(m);
      const u64 v = F.sub(it == a.end() ? 0 : it->second, F.mul(f, c));
      if (v == 0) {
        if (it != a.end()) a.erase(it);
      } else if (it == a.end()) {
        a.emplace(m, v);
      } else {
        it->second = v;
      }
    }
  }
  return true;
}

std::vector<int> active(const MPoly& a, const MPoly& b) {
  std::vector<int> out;
  for (int k = 0; k < kNumVars; ++k) {
    auto uses = [k](const MPoly& p) {
      return std::any_of(p.begin(), p.end(), [k](const auto& t) { return t.first[k] > 0; });
    };
    if (uses(a) || uses(b)) out.push_back(k);
  }
  return out;
}

MPoly times_dense(const Field& F, const MPoly& a, const Dense& c, int x) {
  std::map<Exp, Dense> s = split(a, x);
  for (auto& [key, d] : s) d = mul(F, d, c);
  return join(s, x);
}

std::optional<MPoly> brown(const Field& F, const MPoly& A, const MPoly& B) {
  if (A.empty()) return monic(F, B);
  if (B.empty()) return monic(F, A);
  const std::vector<int> vars = active(A, B);
  if (vars.empty()) return MPoly{{Exp{}, 1}};
  const int x = vars.back();
  const auto sa = split(A, x), sb = split(B, x);
  if (vars.size() == 1) return join(std::map<Exp, Dense>{{Exp{}, ugcd(F, sa.begin()->second, sb.begin()->second)}}, x);
  const Dense ca = content(F, sa), cb = content(F, sb);
  const Dense c = ugcd(F, ca, cb);
  const auto pa = divide_by(F, sa, ca), pb = divide_by(F, sb, cb);
  const Dense& la = pa.rbegin()->second;
  const Dense& lb = pb.rbegin()->second;
  const Dense g = ugcd(F, la, lb);
  int da = 0, db = 0;
  for (const auto& [key, d] : pa) da = std::max(da, deg(d));
  for (const auto& [key, d] : pb) db = std::max(db, deg(d));
  const int needed = std::min(da, db) + deg(g) + 1;

  const MPoly ppa = join(pa, x), ppb = join(pb, x);
  MPoly H;
  Dense q{1};
  Exp lead{};
  int points = 0;
  for (u64 alpha = 1; alpha < F.p && alpha < 4096; ++alpha) {
    const u64 ga = eval(F, g, alpha);
    if (ga == 0 || eval(F, la, alpha) == 0 || eval(F, lb, alpha) == 0) continue;
    std::optional<MPoly> C = brown(F, eval_at(F, pa, alpha), eval_at(F, pb, alpha));
    if (!C) return std::nullopt;
    const Exp lc = lm(*C);
    if (lc == Exp{}) return join(std::map<Exp, Dense>{{Exp{}, c}}, x);
    for (auto& [e, v] : *C) v = F.mul(v, ga);
    bool stable = false;
    if (points == 0 || lc < lead) {
      H = *C;
      q = {F.sub(0, alpha), 1};
      lead = lc;
      points = 1;
    } else if (lead < lc) {
      continue;
    } else {
      MPoly diff = *C;
      for (const auto& [key, v] : eval_at(F, split(H, x), alpha)) {
        const u64 r = F.sub(diff.count(key) ? diff[key] : 0, v);
        if (r == 0)
          diff.erase(key);
        else
          diff[key] = r;
      }
      stable = diff.empty();
      const u64 scale = F.inv(eval(F, q, alpha));
      for (const auto& [key, v] : diff) {
        const u64 f = F.mul(v, scale);
        for (std::size_t k = 0; k < q.size(); ++k) {
          Exp e = key;
          e[x] = static_cast<std::uint16_t>(e[x] + k);
          const u64 nv = F.add(H.count(e) ? H[e] : 0, F.mul(f, q[k]));
          if (nv == 0)
            H.erase(e);
          else
            H[e] = nv;
        }
      }
      q = mul(F, q, Dense{F.sub(0, alpha), 1});
      ++points;
    }
    if (!stable && points < needed) continue;
    const auto sh = split(H, x);
    const MPoly P = monic(F, join(divide_by(F, sh, content(F, sh)), x));
    if (divides(F, ppa, P) && divides(F, ppb, P)) return monic(F, times_dense(F, P, c, x));
  }
  return std::nullopt;
}

mpz_class lcm_of_denominators(const Poly& a) {
  mpz_class l = 1;
  for (const auto& [m, c] : a.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return l;
}

// Image of a Gaussian-integer polynomial with i mapped to omega.
MPoly image(const Field& F, const Poly& a, u64 omega) {
  MPoly out;
  for (const auto& [m, c] : a.terms()) {
    const u64 re = mpz_fdiv_ui(c.re().get_num_mpz_t(), F.p);
    const u64 im = mpz_fdiv_ui(c.im().get_num_mpz_t(), F.p);
    if (u64 v = F.add(re, F.mul(im, omega))) out[m.exp] = v;
  }
  return out;
}

Exp lex_leading(const Poly& a) {
  Exp best{};
  for (const auto& [m, c] : a.terms()) best = std::max(best, m.exp);
  return best;
}

bool reconstruct(const mpz_class& value, const mpz_class& modulus, mpq_class& out) {
  mpz_class bound = sqrt(modulus / 2);
  mpz_class r0 = modulus, r1 = value, s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (abs(s1) > bound || s1 == 0) return false;
  out = mpq_class(r1, s1);
  out.canonicalize();
  return mpz_class(gcd(r1, s1)) == 1;
}

bool try_divide(const Poly& a, const Poly& b) {
  try {
    divide_exact(a, b);
    return true;
  } catch (const InvariantBreach&) {
    return false;
  }
}

}  // namespace

Poly modular_gcd(const Poly& a0, const Poly& b0) {
  const Poly a = a0 * GaussRat(mpq_class(lcm_of_denominators(a0)), 0);
  const Poly b = b0 * GaussRat(mpq_class(lcm_of_denominators(b0)), 0);
  const Exp la = lex_leading(a), lb = lex_leading(b);

  std::map<Exp, std::pair<mpz_class, mpz_class>> acc;
  mpz_class modulus = 1;
  Exp lead{};
  bool have = false;
  for (u64 p : primes()) {
    const Field F{p};
    const u64 omega = F.sqrt_minus_one();
    const MPoly a1 = image(F, a, omega), b1 = image(F, b, omega);
    const MPoly a2 = image(F, a, p - omega), b2 = image(F, b, p - omega);
    if (!a1.count(la) || !b1.count(lb) || !a2.count(la) || !b2.count(lb)) continue;
    const std::optional<MPoly> g1 = brown(F, a1, b1), g2 = brown(F, a2, b2);
    if (!g1 || !g2 || lm(*g1) != lm(*g2)) continue;
    const Exp l = lm(*g1);
    if (have && lead < l) continue;
    if (!have || l < lead) {
      acc.clear();
      modulus = 1;
      lead = l;
      have = true;
    }
    const u64 half = F.inv(2), half_omega = F.inv(F.mul(2, omega));
    std::map<Exp, std::pair<u64, u64>> parts;
    auto at = [](const MPoly& m, const Exp& e) {
      auto it = m.find(e);
      return it == m.end() ? u64{0} : it->second;
    };
    for (const MPoly* g : {&*g1, &*g2})
      for (const auto& [e, v] : *g) parts[e];
    for (const auto& [e, v] : acc) parts[e];
    for (auto& [e, pr] : parts) {
      const u64 c1 = at(*g1, e), c2 = at(*g2, e);
      pr = {F.mul(F.add(c1, c2), half), F.mul(F.sub(c1, c2), half_omega)};
    }
    const u64 minv = F.inv(mpz_fdiv_ui(modulus.get_mpz_t(), p));
    auto lift = [&](mpz_class& x, u64 r) {
      const u64 old = mpz_fdiv_ui(x.get_mpz_t(), p);
      x += modulus * mpz_class(static_cast<unsigned long>(F.mul(F.sub(r, old), minv)));
    };
    for (const auto& [e, pr] : parts) {
      auto& slot = acc[e];
      lift(slot.first, pr.first);
      lift(slot.second, pr.second);
    }
    modulus *= static_cast<unsigned long>(p);

    std::vector<Poly::Term> terms;
    bool ok = true;
    for (const auto& [e, pr] : acc) {
      mpq_class re, im;
      if (!reconstruct(pr.first, modulus, re) || !reconstruct(pr.second, modulus, im)) {
        ok = false;
        break;
      }
      if (sgn(re) == 0 && sgn(im) == 0) continue;
      Monomial m;
      m.exp = e;
      terms.emplace_back(m, GaussRat(re, im));
    }
    if (!ok) continue;
    const Poly g = Poly::from_terms(std::move(terms));
    if (g.is_zero()) continue;
    if (try_divide(a, g) && try_divide(b, g)) return make_monic(g);
  }
  throw InvariantBreach("modular gcd did not converge");
}

}  // namespace nccalc::detail
