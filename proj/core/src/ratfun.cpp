#include "nccalc/ratfun.hpp"

#include "nccalc/errors.hpp"

#include <cmath>

namespace nccalc {

namespace {

// Normalizes den to be monic; assumes num/den already reduced.
void normalize_unit(Poly& num, Poly& den) {
  const GaussRat& lc = den.leading().second;
  if (lc.is_one()) return;
  GaussRat inv = lc.inverse();
  num *= inv;
  den *= inv;
}

}  // namespace

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(1) {}

RatFun::RatFun(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.is_one()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = divide_exact(num, g);
    den_ = divide_exact(den, g);
  }
  normalize_unit(num_, den_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFun r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (b.den_.is_one() || a.den_.is_one()) {
    // (p/q) + c = (p + c q)/q is already reduced.
    const RatFun& frac = a.den_.is_one() ? b : a;
    const RatFun& poly = a.den_.is_one() ? a : b;
    r.num_ = frac.num_ + poly.num_ * frac.den_;
    r.den_ = frac.den_;
    if (r.num_.is_zero()) r.den_ = Poly(1);
    return r;
  }
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  Poly ad = divide_exact(a.den_, g), bd = divide_exact(b.den_, g);
  Poly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RatFun();
  // Only factors of g can be shared with the new numerator.
  Poly h = gcd(num, g);
  if (!h.is_one()) {
    num = divide_exact(num, h);
    g = divide_exact(g, h);
  }
  r.num_ = std::move(num);
  r.den_ = ad * bd * g;
  normalize_unit(r.num_, r.den_);
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  RatFun r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // Cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den).
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = g1.is_one() ? a.num_ : divide_exact(a.num_, g1);
  Poly bd = g1.is_one() ? b.den_ : divide_exact(b.den_, g1);
  Poly bn = g2.is_one() ? b.num_ : divide_exact(b.num_, g2);
  Poly ad = g2.is_one() ? a.den_ : divide_exact(a.den_, g2);
  r.num_ = an * bn;
  r.den_ = ad * bd;
  normalize_unit(r.num_, r.den_);
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  normalize_unit(r.num_, r.den_);
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFun r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

RatFun RatFun::substitute(Var v, const RatFun& value) const {
  if (!depends_on(v)) return *this;
  auto horner = [&](const Poly& p) {
    auto coeffs = p.coefficients_in(v);
    RatFun acc(coeffs.back());
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * value + RatFun(coeffs[k]);
    return acc;
  };
  if (value.is_polynomial()) {
    const Poly& w = value.num_;
    if (w.degree(v) == 1 && w.coefficients_in(v)[1].is_one()) {
      // v -> v + c with c free of v is an automorphism, so the result stays reduced.
      RatFun r;
      r.num_ = num_.substitute(v, w);
      r.den_ = den_.substitute(v, w);
      normalize_unit(r.num_, r.den_);
      return r;
    }
    return RatFun(num_.substitute(v, w), den_.substitute(v, w));
  }
  return horner(num_) / horner(den_);
}

RatFun RatFun::derivative(Var v) const {
  if (!depends_on(v)) return RatFun();
  if (den_.is_one()) return RatFun(num_.derivative(v));
  return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::complex<double> RatFun::evaluate(const Poly::Point& point) const {
  std::complex<double> n = num_.evaluate(point);
  if (den_.is_one()) return n;
  std::complex<double> d = den_.evaluate(point);
  if (std::abs(d) <= 1e-10 * den_.magnitude(point))
    throw SingularInverse("central denominator vanishes at the evaluation point");
  return n / d;
}

std::string RatFun::to_string(const std::array<std::string, kNumVars>& names) const {
  std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  auto wrap = [](const Poly& p, std::string s) {
    bool simple = p.is_monomial() && p.leading().second.is_real() && sgn(p.leading().second.re()) > 0 &&
                  p.leading().second.re().get_den() == 1 &&
                  (p.leading().second.is_one() || p.leading().first.is_one());
    return simple ? s : "(" + s + ")";
  };
  std::string d = wrap(den_, den_.to_string(names));
  if (d.front() != '(' && d.find('*') != std::string::npos) d = "(" + d + ")";
  return wrap(num_, n) + "/" + d;
}

}  // namespace nccalc
