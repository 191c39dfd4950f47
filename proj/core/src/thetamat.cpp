#include "nccalc/thetamat.hpp"

#include "nccalc/context.hpp"
#include "nccalc/scalars.hpp"

#include <map>

namespace nccalc {

namespace {

struct ThetaCache {
  std::map<std::array<std::uint16_t, 3>, ThetaMat> mono;
};

RatFun i_hbar() { return RatFun(GaussRat::i()) * hbar(); }

// L(alpha): [[0,-a1,-a2,-a3],[a1,0,-a3,a2],[a2,a3,0,-a1],[a3,-a2,a1,0]].
template <class T>
Matrix<T> pattern(const T& a1, const T& a2, const T& a3) {
  Matrix<T> m(4, 4);
  m(0, 1) = -a1, m(0, 2) = -a2, m(0, 3) = -a3;
  m(1, 0) = a1, m(1, 2) = -a3, m(1, 3) = a2;
  m(2, 0) = a2, m(2, 1) = a3, m(2, 3) = -a1;
  m(3, 0) = a3, m(3, 1) = -a2, m(3, 2) = a1;
  return m;
}

ThetaMat scalar_matrix(const AElem& a) {
  ThetaMat m(4, 4);
  for (int k = 0; k < 4; ++k) m(k, k) = a;
  return m;
}

ThetaMat scale(const RatFun& c, const ThetaMat& m) { return m.map([&](const AElem& e) { return c * e; }); }

const ThetaMat& theta_hat_mono(const Mono3& m) {
  auto& memo = cache<ThetaCache>().mono;
  if (auto it = memo.find(m.e); it != memo.end()) return it->second;
  ThetaMat out;
  if (m.is_one()) {
    out = ThetaMat::identity(4);
  } else {
    int k = 2;
    while (m.e[k] == 0) --k;
    Mono3 prefix = m;
    --prefix.e[k];
    out = theta_hat_mono(prefix) * theta_hat_gen(static_cast<Gen>(k + 1));
  }
  return memo.emplace(m.e, std::move(out)).first->second;
}

AElem det3(const ThetaMat& m, const std::array<int, 3>& r, const std::array<int, 3>& c) {
  auto e = [&](int i, int j) -> const AElem& { return m(r[i], c[j]); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

std::array<int, 3> others(int skip) {
  std::array<int, 3> out{};
  int n = 0;
  for (int k = 0; k < 4; ++k)
    if (k != skip) out[n++] = k;
  return out;
}

}  // namespace

ThetaMat a_matrix() {
  return pattern(-AElem::gen(Gen::x), -AElem::gen(Gen::y), -AElem::gen(Gen::z));
}

ThetaMat CentralForm::matrix() const {
  return scalar_matrix(AElem(alpha)) + scale(beta, a_matrix());
}

CentralForm theta_hat_central(const CenterFun& f) {
  CenterFun ft = shift_t(f);
  if (!ft.depends_on(Var::rho)) return {ft, CenterFun()};
  CenterFun fp = shift_rho(ft, 1), fm = shift_rho(ft, -1);
  CenterFun two_rho = RatFun(2) * rho();
  CenterFun alpha = ((rho() + hbar()) * fp + (rho() - hbar()) * fm) / two_rho;
  CenterFun beta = RatFun(GaussRat(0, -1)) * (fp - fm) / two_rho;
  return {alpha, beta};
}

ThetaMat theta_hat_linear(const std::array<RatFun, 4>& alpha) {
  AElem a = alpha[0] * AElem::gen(Gen::t) + alpha[1] * AElem::gen(Gen::x) + alpha[2] * AElem::gen(Gen::y) +
            alpha[3] * AElem::gen(Gen::z);
  const RatFun ih = i_hbar();
  ThetaMat l = pattern(AElem(alpha[1]), AElem(alpha[2]), AElem(alpha[3]));
  return scalar_matrix(a + AElem(ih * alpha[0])) + scale(ih, l);
}

ThetaMat theta_hat_gen(Gen g) {
  std::array<RatFun, 4> alpha{};
  alpha[static_cast<int>(g)] = RatFun(1);
  return theta_hat_linear(alpha);
}

ThetaMat theta_hat(const AElem& a) {
  ThetaMat out(4, 4);
  for (const auto& [m, c] : a.terms()) {
    const ThetaMat& tm = theta_hat_mono(m);
    CentralForm cf = theta_hat_central(c);
    out = out + scale(cf.alpha, tm);
    if (!cf.beta.is_zero()) out = out + scale(cf.beta, a_matrix() * tm);
  }
  return out;
}

std::array<AElem, 4> deriv_extract(const ThetaMat& m) {
  const RatFun inv = i_hbar().inverse();
  return {inv * m(0, 0), inv * m(1, 0), inv * m(2, 0), inv * m(3, 0)};
}

std::array<SkewExpr, 4> deriv_extract(const SkewMat& m) {
  const SkewExpr inv(i_hbar().inverse());
  return {inv * m(0, 0), inv * m(1, 0), inv * m(2, 0), inv * m(3, 0)};
}

ThetaMat theta_hat_rho_power(int p) {
  const CenterFun up = rho() + hbar(), down = rho() - hbar();
  const CenterFun two_rho = RatFun(2) * rho();
  CentralForm cf{(up.pow(p + 1) + down.pow(p + 1)) / two_rho,
                 RatFun(GaussRat(0, -1)) * (up.pow(p) - down.pow(p)) / two_rho};
  return cf.matrix();
}

std::optional<CentralForm> as_central_form(const ThetaMat& m) {
  if (m.rows() != 4 || m.cols() != 4 || !m(0, 0).is_central()) return std::nullopt;
  CentralForm cf{m(0, 0).central_part(), CenterFun()};
  for (int k = 1; k < 4; ++k) {
    const AElem& e = m(k, 0);
    if (e.is_zero()) continue;
    const Mono3 letter = Mono3::letter(static_cast<Gen>(k));
    if (e.terms().size() != 1 || !(e.terms().begin()->first == letter)) return std::nullopt;
    cf.beta = -e.terms().begin()->second;
    break;
  }
  if (!(cf.matrix() == m)) return std::nullopt;
  return cf;
}

CentralForm central_inverse(const CentralForm& m) {
  const RatFun two_i_hbar = RatFun(GaussRat(0, 2)) * hbar();
  const RatFun a_sq = hbar() * hbar() - rho() * rho();
  const RatFun shifted = m.alpha - two_i_hbar * m.beta;
  const RatFun det = m.alpha * shifted - m.beta * m.beta * a_sq;
  if (det.is_zero()) throw NonInvertibleCentral();
  return {shifted / det, -m.beta / det};
}

ThetaMat central_inverse(const ThetaMat& m) {
  auto cf = as_central_form(m);
  if (!cf) throw DomainError("matrix is not of the form alpha I + beta A");
  return central_inverse(*cf).matrix();
}

bool entries_commute(const ThetaMat& m) {
  std::vector<const AElem*> distinct;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const AElem& e = m(i, j);
      if (e.is_central()) continue;
      bool seen = false;
      for (const AElem* d : distinct)
        if (*d == e) seen = true;
      if (!seen) distinct.push_back(&e);
    }
  for (std::size_t a = 0; a < distinct.size(); ++a)
    for (std::size_t b = a + 1; b < distinct.size(); ++b)
      if (!commutator(*distinct[a], *distinct[b]).is_zero()) return false;
  return true;
}

AElem theta_det_commuting(const ThetaMat& m) {
  if (!entries_commute(m)) throw NonCommutingEntries();
  AElem det;
  const std::array<int, 3> rows = others(0);
  for (int c = 0; c < 4; ++c) {
    if (m(0, c).is_zero()) continue;
    AElem term = m(0, c) * det3(m, rows, others(c));
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

AElem theta_det_norm_form(const AElem& a) {
  auto d = deriv_extract(theta_hat(a));
  AElem sum = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3];
  return hbar().pow(4) * (sum * sum);
}

SkewMat commuting_inverse(const ThetaMat& m) {
  AElem det = theta_det_commuting(m);
  if (det.is_zero()) throw SingularDeterminant();
  SkewExpr det_inv = SkewExpr::inverse(SkewExpr(det));
  SkewMat out(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      AElem cof = det3(m, others(j), others(i));
      if ((i + j) % 2) cof = -cof;
      out(i, j) = SkewExpr(cof) * det_inv;
    }
  return out;
}

SkewMat theta_invert(const AElem& a) {
  if (a.is_zero()) throw CannotInvert("zero element");
  auto to_skew = [](const ThetaMat& m) { return m.map([](const AElem& e) { return SkewExpr(e); }); };
  if (a.is_central()) return to_skew(central_inverse(theta_hat_central(a.central_part())).matrix());
  ThetaMat m = theta_hat(a);
  if (auto cf = as_central_form(m)) return to_skew(central_inverse(*cf).matrix());
  if (entries_commute(m)) return commuting_inverse(m);
  throw CannotInvert("entries of Theta-hat do not commute and it lies outside K(t,rho)[A]");
}

std::array<SkewExpr, 4> deriv_of_inverse(const AElem& a) { return deriv_extract(theta_invert(a)); }

namespace {

SkewMat theta_of_inverse(const SkewExpr& e) {
  switch (e.kind()) {
    case SkewExpr::Kind::atom:
      return theta_invert(e.as_atom());
    case SkewExpr::Kind::inverse:
      return theta_hat(e.left());
    case SkewExpr::Kind::product:
      return theta_of_inverse(e.right()) * theta_of_inverse(e.left());
    case SkewExpr::Kind::sum:
      break;
  }
  throw CannotInvert("Theta-hat of the inverse of a sum of fractions");
}

}  // namespace

SkewMat theta_hat(const SkewExpr& e) {
  switch (e.kind()) {
    case SkewExpr::Kind::atom:
      return theta_hat(e.as_atom()).map([](const AElem& a) { return SkewExpr(a); });
    case SkewExpr::Kind::sum:
      return theta_hat(e.left()) + theta_hat(e.right());
    case SkewExpr::Kind::product:
      return theta_hat(e.left()) * theta_hat(e.right());
    case SkewExpr::Kind::inverse:
      return theta_of_inverse(e.left());
  }
  throw InvariantBreach("unknown tree node");
}

std::array<SkewExpr, 4> deriv_skew(const SkewExpr& e) { return deriv_extract(theta_hat(e)); }

}  // namespace nccalc
