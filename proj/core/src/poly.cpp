#include "nccalc/poly.hpp"

#include "nccalc/errors.hpp"
#include "modgcd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace nccalc {

bool Monomial::divides(const Monomial& other) const {
  for (int k = 0; k < kNumVars; ++k)
    if (exp[k] > other.exp[k]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kNumVars; ++k) m.exp[k] = static_cast<std::uint16_t>(a.exp[k] + b.exp[k]);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < kNumVars; ++k) m.exp[k] = static_cast<std::uint16_t>(a.exp[k] - b.exp[k]);
  return m;
}

bool monomial_greater(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

namespace {

std::vector<Poly::Term> merge_sorted(std::vector<Poly::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return monomial_greater(a.first, b.first); });
  std::vector<Poly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

template <bool Subtract>
std::vector<Poly::Term> merge_add(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && monomial_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || monomial_greater(b[j].first, a[i].first)) {
      out.push_back(b[j++]);
      if constexpr (Subtract) out.back().second = -out.back().second;
    } else {
      GaussRat c = a[i].second;
      if constexpr (Subtract)
        c -= b[j].second;
      else
        c += b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(GaussRat c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
}

Poly Poly::monomial(const Monomial& m, GaussRat c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = merge_sorted(std::move(terms));
  return p;
}

GaussRat Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return GaussRat(0);
}

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[v]);
  return d;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_add<false>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_add<true>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b * a.terms_[0].second;
  if (b.is_constant()) return a * b.terms_[0].second;
  if (b.is_monomial() && b.terms_[0].second.is_one()) return a.shifted(b.terms_[0].first);
  if (a.is_monomial() && a.terms_[0].second.is_one()) return b.shifted(a.terms_[0].first);
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.emplace_back(s.first * t.first, s.second * t.second);
  return Poly::from_terms(std::move(prod));
}

Poly Poly::shifted(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<Poly> out(degree(v) + 1);
  const int k = static_cast<int>(v);
  for (const auto& t : terms_) {
    Monomial m = t.first;
    unsigned e = m.exp[k];
    m.exp[k] = 0;
    out[e].terms_.emplace_back(m, t.second);
  }
  return out;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  if (!depends_on(v)) return *this;
  auto coeffs = coefficients_in(v);
  // Horner in v.
  Poly result = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) result = result * value + coeffs[k];
  return result;
}

Poly Poly::derivative(Var v) const {
  const int k = static_cast<int>(v);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first.exp[k] == 0) continue;
    Monomial m = t.first;
    GaussRat c = t.second * GaussRat(static_cast<long>(m.exp[k]));
    --m.exp[k];
    out.emplace_back(m, std::move(c));
  }
  return from_terms(std::move(out));
}

std::complex<double> Poly::evaluate(const Point& point) const {
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.second.to_complex();
    for (int k = 0; k < kNumVars; ++k)
      for (unsigned e = 0; e < t.first.exp[k]; ++e) v *= point[k];
    sum += v;
  }
  return sum;
}

double Poly::magnitude(const Point& point) const {
  double sum = 0;
  for (const auto& t : terms_) {
    double v = std::abs(t.second.to_complex());
    for (int k = 0; k < kNumVars; ++k) v *= std::pow(std::abs(point[k]), t.first.exp[k]);
    sum += v;
  }
  return sum;
}

namespace {

std::string monomial_string(const Monomial& m, const std::array<std::string, kNumVars>& names) {
  std::string out;
  for (int k = 0; k < kNumVars; ++k) {
    if (m.exp[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (m.exp[k] > 1) out += "^" + std::to_string(m.exp[k]);
  }
  return out;
}

}  // namespace

std::string Poly::to_string(const std::array<std::string, kNumVars>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_string(m, names);
    bool negative = false;
    std::string body;
    if (c.is_real() || c.is_imaginary()) {
      mpq_class q = c.is_real() ? c.re() : c.im();
      negative = sgn(q) < 0;
      q = abs(q);
      std::vector<std::string> factors;
      mpz_class num = q.get_num();
      mpz_class den = q.get_den();
      if (num != 1 || (mono.empty() && c.is_real())) factors.push_back(num.get_str());
      if (c.is_imaginary()) factors.push_back("i");
      if (!mono.empty()) factors.push_back(mono);
      for (std::size_t f = 0; f < factors.size(); ++f) body += (f ? "*" : "") + factors[f];
      if (den != 1) body += "/" + den.get_str();
    } else {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero() || p.leading().second.is_one()) return p;
  return p * p.leading().second.inverse();
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) return a * b.leading().second.inverse();
  std::vector<Poly::Term> quotient;
  Poly rest = a;
  const auto& [lm, lc] = b.leading();
  const GaussRat lc_inv = lc.inverse();
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading();
    if (!lm.divides(rm)) throw InvariantBreach("divide_exact: divisor does not divide dividend");
    Poly::Term q{rm / lm, rc * lc_inv};
    rest -= b.shifted(q.first) * q.second;
    quotient.push_back(std::move(q));
  }
  return Poly::from_terms(std::move(quotient));
}

namespace {

Poly monomial_gcd_with(const Monomial& m, const Poly& p) {
  Monomial g = m;
  for (const auto& t : p.terms())
    for (int k = 0; k < kNumVars; ++k) g.exp[k] = std::min(g.exp[k], t.first.exp[k]);
  return Poly::monomial(g, 1);
}

Poly content_in(const Poly& p, Var v) {
  Poly c;
  for (const auto& coeff : p.coefficients_in(v)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

// Images modulo a prime p = 1 (mod 4), where i maps to a square root of -1.
constexpr std::uint64_t kPrime = 998244353;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

bool rat_mod(const mpq_class& q, std::uint64_t& out) {
  const unsigned long d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (d == 0) return false;
  out = mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), inv_mod(d));
  return true;
}

using ModPoly = std::vector<std::uint64_t>;

bool image_in(const Poly& a, Var v, const std::array<std::uint64_t, kNumVars>& point, ModPoly& out) {
  static const std::uint64_t imag = pow_mod(3, (kPrime - 1) / 4);
  const int iv = static_cast<int>(v);
  out.assign(a.degree(v) + 1, 0);
  for (const auto& [m, c] : a.terms()) {
    std::uint64_t re = 0, im = 0;
    if (!rat_mod(c.re(), re) || !rat_mod(c.im(), im)) return false;
    std::uint64_t val = (re + mul_mod(im, imag)) % kPrime;
    for (int k = 0; k < kNumVars; ++k)
      if (k != iv && m.exp[k]) val = mul_mod(val, pow_mod(point[k], m.exp[k]));
    out[m.exp[iv]] = (out[m.exp[iv]] + val) % kPrime;
  }
  return out.back() != 0;
}

int mod_degree(const ModPoly& a) {
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
    if (a[k]) return k;
  return -1;
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
  while (mod_degree(b) >= 0) {
    const int db = mod_degree(b);
    const std::uint64_t inv = inv_mod(b[db]);
    for (int da = mod_degree(a); da >= db; da = mod_degree(a)) {
      const std::uint64_t f = mul_mod(a[da], inv);
      for (int k = 0; k <= db; ++k) a[da - db + k] = (a[da - db + k] + kPrime - mul_mod(f, b[k])) % kPrime;
    }
    std::swap(a, b);
  }
  return mod_degree(a);
}

// Upper bound on the degree in v of gcd(a, b), or -1 when every sampled
// specialization was unusable.
int gcd_degree_bound(const Poly& a, const Poly& b, Var v) {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::array<std::uint64_t, kNumVars> point{};
    for (auto& x : point) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      x = (state >> 33) % (kPrime - 1) + 1;
    }
    ModPoly ia, ib;
    if (image_in(a, v, point, ia) && image_in(b, v, point, ib)) return mod_gcd_degree(ia, ib);
  }
  return -1;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial()) return monomial_gcd_with(a.leading().first, b);
  if (b.is_monomial()) return monomial_gcd_with(b.leading().first, a);
  if (a == b) return make_monic(a);

  const Poly ma = monomial_gcd_with(a.leading().first, a), mb = monomial_gcd_with(b.leading().first, b);
  if (!ma.is_one() || !mb.is_one())
    return monomial_gcd_with(ma.leading().first, mb) * gcd(divide_exact(a, ma), divide_exact(b, mb));

  for (int k = 0; k < kNumVars; ++k) {
    Var v = static_cast<Var>(k);
    bool in_a = a.depends_on(v), in_b = b.depends_on(v);
    if (in_a && !in_b) return gcd(content_in(a, v), b);
    if (in_b && !in_a) return gcd(a, content_in(b, v));
  }

  // Both depend on the same variables; split off the content in the main one.
  Var v = Var::rho;
  for (int k = 0; k < kNumVars; ++k)
    if (a.depends_on(static_cast<Var>(k))) {
      v = static_cast<Var>(k);
      break;
    }

  if (gcd_degree_bound(a, b, v) == 0) return gcd(content_in(a, v), content_in(b, v));
  return detail::modular_gcd(a, b);
}

}  // namespace nccalc
