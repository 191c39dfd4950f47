#pragma once

#include "nccalc/gauss_rat.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nccalc {

/// The commuting symbols of the coefficient field. Declaration order is the
/// variable priority used by the monomial order (rho > t > hbar > g).
enum class Var : std::uint8_t { rho = 0, t = 1, hbar = 2, g = 3 };
inline constexpr int kNumVars = 4;

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  static Monomial of(Var v, unsigned power = 1) {
    Monomial m;
    m.exp[static_cast<int>(v)] = static_cast<std::uint16_t>(power);
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  unsigned operator[](Var v) const { return exp[static_cast<int>(v)]; }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order; true when a is strictly larger than b.
bool monomial_greater(const Monomial& a, const Monomial& b);

/// Sparse polynomial over Q(i) in the symbols of Var. Terms are kept sorted
/// in decreasing monomial order, without zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, GaussRat>;
  using Point = std::array<std::complex<double>, kNumVars>;

  Poly() = default;
  Poly(GaussRat c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(Var v) { return monomial(Monomial::of(v), 1); }
  static Poly monomial(const Monomial& m, GaussRat c);
  /// Takes arbitrary terms; sorts and merges them.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].second.is_one(); }
  GaussRat constant_term() const;
  const Term& leading() const { return terms_.front(); }
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussRat& c);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned n) const;
  Poly substitute(Var v, const Poly& value) const;
  Poly derivative(Var v) const;
  /// result[k] is the coefficient of v^k (free of v).
  std::vector<Poly> coefficients_in(Var v) const;
  /// Multiplies every term by the given monomial.
  Poly shifted(const Monomial& m) const;

  std::complex<double> evaluate(const Point& point) const;
  /// Sum of |term| at the point; the scale against which a value is "zero".
  double magnitude(const Point& point) const;

  std::string to_string(const std::array<std::string, kNumVars>& names) const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws InvariantBreach when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor in Q(i)[rho, t, hbar, g], normalized so that the
/// leading coefficient is 1. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Scales p so that its leading coefficient is 1 (0 stays 0).
Poly make_monic(const Poly& p);

}  // namespace nccalc
