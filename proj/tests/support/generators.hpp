#pragma once

#include "nccalc/aext.hpp"
#include "nccalc/classical.hpp"
#include "nccalc/context.hpp"
#include "nccalc/whcalc.hpp"

#include <array>
#include <random>
#include <vector>

namespace testgen {

using namespace nccalc;

// Affine form c0 + ct t + cx x + cy y + cz z with small integer coefficients.
struct Linear {
  std::array<long, 5> c{};
};

// Ordered product of affine forms; the same data feeds the algebra and the oracles.
struct LinearProduct {
  std::vector<Linear> factors;
};

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long small(long lo = -3, long hi = 3) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& rng() { return rng_; }

  Linear linear() {
    Linear l;
    for (auto& v : l.c) v = small();
    if (l.c[1] == 0 && l.c[2] == 0 && l.c[3] == 0 && l.c[4] == 0) l.c[2 + small(0, 2)] = 1;
    return l;
  }

  LinearProduct product(unsigned max_degree, unsigned min_degree = 1) {
    LinearProduct p;
    const unsigned d = static_cast<unsigned>(small(min_degree, max_degree));
    for (unsigned k = 0; k < d; ++k) p.factors.push_back(linear());
    return p;
  }

  // Element of A: product of affine forms, optionally scaled by a central factor.
  AElem element(unsigned max_degree) {
    AElem a = to_aelem(product(max_degree));
    if (coin(0.3)) a = central() * a;
    if (coin(0.3)) a += to_aelem(product(max_degree > 1 ? max_degree - 1 : 1));
    return a;
  }

  // Rational function of rho and t without poles at the default oracle points.
  RatFun central() {
    const RatFun r = rho();
    switch (small(0, 4)) {
      case 0:
        return RatFun(small(1, 3)) * r + RatFun(small());
      case 1:
        return RatFun(1) / (r * r + RatFun(2 * small(1, 2) + 1));
      case 2:
        return r.pow(static_cast<int>(small(-3, 3)));
      case 3:
        return (r + t_sym()) / (r * r + RatFun(2));
      default:
        return t_sym() * r + RatFun(small(1, 3));
    }
  }

  ClassPoly class_poly(unsigned max_degree) {
    ClassPoly p;
    const int terms = static_cast<int>(small(1, 4));
    for (int k = 0; k < terms; ++k) {
      const unsigned d = static_cast<unsigned>(small(0, max_degree));
      std::array<unsigned, 3> e{};
      for (unsigned s = 0; s < d; ++s) ++e[small(0, 2)];
      RatFun c(small());
      if (coin(0.2)) c = c * t_sym();
      p = p + ClassPoly::monomial(Mono3::of(e[0], e[1], e[2]), c);
    }
    return p;
  }

  std::uint8_t mask() { return static_cast<std::uint8_t>(small(0, 15)); }

  Form form(unsigned max_degree) {
    Form w;
    const int terms = static_cast<int>(small(1, 3));
    for (int k = 0; k < terms; ++k) w = w + Form::term(mask(), element(max_degree));
    return w;
  }

  static AElem to_aelem(const Linear& l) {
    AElem a(l.c[0]);
    const Gen gens[] = {Gen::t, Gen::x, Gen::y, Gen::z};
    for (int k = 0; k < 4; ++k) a += RatFun(l.c[k + 1]) * AElem::gen(gens[k]);
    return a;
  }

  static AElem to_aelem(const LinearProduct& p) {
    AElem out(1);
    for (const auto& f : p.factors) out = out * to_aelem(f);
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
