#pragma once

#include "nccalc/matrix.hpp"
#include "nccalc/ratfun.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace nccalc {

/// Generators of U(u(2)_h); declaration order is the PBW order.
enum class Gen : std::uint8_t { t = 0, x = 1, y = 2, z = 3 };

/// x^a y^b z^c.
struct Mono3 {
  std::array<std::uint16_t, 3> e{};

  static Mono3 of(unsigned a, unsigned b, unsigned c) {
    return Mono3{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)}};
  }
  /// The letter x, y or z.
  static Mono3 letter(Gen g);
  unsigned degree() const { return e[0] + e[1] + e[2]; }
  bool is_one() const { return degree() == 0; }
  friend Mono3 operator*(const Mono3& a, const Mono3& b) {
    return of(a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]);
  }
  friend bool operator==(const Mono3&, const Mono3&) = default;
};

/// t^a x^b y^c z^d.
struct UMono {
  std::uint16_t t = 0;
  Mono3 xyz;

  unsigned degree() const { return t + xyz.degree(); }
  friend bool operator==(const UMono&, const UMono&) = default;
};

/// Graded order, larger first: degree, then exponents lexicographically.
struct Mono3Order {
  bool operator()(const Mono3& a, const Mono3& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.e > b.e;
  }
};

struct UMonoOrder {
  bool operator()(const UMono& a, const UMono& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.t != b.t) return a.t > b.t;
    return a.xyz.e > b.xyz.e;
  }
};

/// Element of U(u(2)_h) in PBW normal form t^a x^b y^c z^d, coefficients
/// rational in hbar (and g).
class UPoly {
 public:
  using Terms = std::map<UMono, RatFun, UMonoOrder>;

  UPoly() = default;
  UPoly(RatFun c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(RatFun(c)) {}  // NOLINT(google-explicit-constructor)
  static UPoly gen(Gen g);
  static UPoly monomial(const UMono& m, RatFun c = RatFun(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  void add_term(const UMono& m, const RatFun& c);

  UPoly operator-() const;
  friend UPoly operator+(UPoly a, const UPoly& b);
  friend UPoly operator-(UPoly a, const UPoly& b);
  /// Noncommutative product, normalized.
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const RatFun& c, UPoly a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  Terms terms_;
};

/// PBW normal form of the product of the letters, left to right.
UPoly pbw_normalize(const std::vector<Gen>& word);
UPoly u_mul(const UPoly& p, const UPoly& q);

/// Normal form of (x^a y^b z^c) * g for a spatial letter g.
UPoly mono_times_letter(const Mono3& m, Gen g);
/// Normal form of m1 * m2 (spatial monomials).
UPoly mono_times_mono(const Mono3& m1, const Mono3& m2);

/// x^2 + y^2 + z^2.
UPoly casimir();

using UMat = Matrix<UPoly>;

/// N = [[t - i z, -i x - y], [-i x + y, t + i z]].
UMat gen_matrix_N();
/// N^2 - (2t + h) N + (t^2 + Cas + h t) I.
UMat ch_residual();
/// P N1 P N1 - N1 P N1 P - h (P N1 - N1 P), with N1 = N (x) I on V (x) V.
UMat braid_residual();
/// The flip on V (x) V, basis index 2a + b.
UMat flip_matrix();

}  // namespace nccalc
