#include "nccalc/reporacle.hpp"

#include "nccalc/context.hpp"

#include <cmath>
#include <sstream>

namespace nccalc {

namespace {

constexpr double kRelationTol = 1e-12;

CMat power(const CMat& m, unsigned k, std::vector<CMat>& memo) {
  if (memo.empty()) memo.push_back(CMat::Identity(m.rows(), m.cols()));
  while (memo.size() <= k) memo.push_back(memo.back() * m);
  return memo[k];
}

std::string complex_label(Complex c) {
  std::ostringstream os;
  if (c.imag() == 0)
    os << c.real();
  else if (c.real() == 0)
    os << c.imag() << "i";
  else
    os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

Rep finish(Rep r) {
  if (r.hval == Complex(0)) throw DomainError("representation needs h != 0");
  r.hbar = r.hval / Complex(0, 2);
  const int d = r.dim();
  r.t = r.t0 * CMat::Identity(d, d);
  CMat cas = r.x * r.x + r.y * r.y + r.z * r.z;
  r.rho = std::sqrt(cas(0, 0) + r.hbar * r.hbar);
  return r;
}

}  // namespace

std::string Rep::label() const {
  std::string j = two_j % 2 ? std::to_string(two_j) + "/2" : std::to_string(two_j / 2);
  return "j=" + j + " h=" + complex_label(hval) + " t0=" + complex_label(t0);
}

double relation_defect(const Rep& r) {
  const Complex h = r.hval;
  double d = 0;
  auto scale = [](const CMat& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); };
  d = std::max(d, (r.x * r.y - r.y * r.x - h * r.z).cwiseAbs().maxCoeff() / scale(r.z));
  d = std::max(d, (r.y * r.z - r.z * r.y - h * r.x).cwiseAbs().maxCoeff() / scale(r.x));
  d = std::max(d, (r.z * r.x - r.x * r.z - h * r.y).cwiseAbs().maxCoeff() / scale(r.y));
  const int n = r.dim();
  CMat cas = r.x * r.x + r.y * r.y + r.z * r.z + r.hbar * r.hbar * CMat::Identity(n, n);
  CMat rho2 = r.rho * r.rho * CMat::Identity(n, n);
  d = std::max(d, (cas - rho2).cwiseAbs().maxCoeff() / scale(cas));
  return d;
}

Rep rep_from_matrices(int two_j, Complex t0, Complex hval, Complex g, CMat x, CMat y, CMat z) {
  Rep r;
  r.two_j = two_j;
  r.t0 = t0;
  r.hval = hval;
  r.g = g;
  r.x = std::move(x);
  r.y = std::move(y);
  r.z = std::move(z);
  r = finish(std::move(r));
  if (relation_defect(r) > kRelationTol) throw RelationViolation("generator images violate the defining relations");
  return r;
}

Rep make_rep(int two_j, Complex t0, Complex hval, Complex g) {
  if (two_j < 1) throw DomainError("spin must be at least 1/2");
  const int d = two_j + 1;
  const double j = two_j / 2.0;
  CMat jz = CMat::Zero(d, d), jp = CMat::Zero(d, d);
  // Basis index k has m = j - k.
  for (int k = 0; k < d; ++k) {
    double m = j - k;
    jz(k, k) = m;
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  CMat jm = jp.adjoint();
  CMat jx = (jp + jm) / 2.0;
  CMat jy = (jp - jm) / Complex(0, 2);
  const Complex i(0, 1);
  return rep_from_matrices(two_j, t0, hval, g, i * hval * jx, -i * hval * jy, i * hval * jz);
}

Rep corrupted_rep(const Rep& r) {
  Rep c = r;
  c.y = -c.y;
  return c;
}

std::vector<Rep> default_reps() {
  std::vector<Complex> hvals;
  if (const auto& hb = current_context().hbar_value())
    hvals.push_back(Complex(0, 2) * hb->to_complex());
  else
    hvals = {Complex(1), Complex(1.0 / 3.0), Complex(0, 0.5)};
  std::vector<Rep> reps;
  for (int two_j : {1, 2, 3})
    for (Complex hv : hvals)
      for (double t0 : {0.0, 1.0}) reps.push_back(make_rep(two_j, t0, hv));
  return reps;
}

Complex rep_eval(const RatFun& f, const Rep& r) { return f.evaluate(r.point()); }

CMat rep_eval(const UPoly& p, const Rep& r) {
  const int n = r.dim();
  CMat out = CMat::Zero(n, n);
  std::vector<CMat> px, py, pz;
  for (const auto& [m, c] : p.terms()) {
    Complex s = rep_eval(c, r) * std::pow(r.t0, static_cast<int>(m.t));
    out += s * power(r.x, m.xyz.e[0], px) * power(r.y, m.xyz.e[1], py) * power(r.z, m.xyz.e[2], pz);
  }
  return out;
}

CMat rep_eval(const AElem& a, const Rep& r) {
  const int n = r.dim();
  CMat out = CMat::Zero(n, n);
  std::vector<CMat> px, py, pz;
  for (const auto& [m, c] : a.terms())
    out += rep_eval(c, r) * power(r.x, m.e[0], px) * power(r.y, m.e[1], py) * power(r.z, m.e[2], pz);
  return out;
}

CMat numeric_inverse(const CMat& m) {
  Eigen::FullPivLU<CMat> lu(m);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible()) throw SingularInverse("matrix is numerically singular");
  return lu.inverse();
}

CMat rep_eval(const SkewExpr& e, const Rep& r) {
  switch (e.kind()) {
    case SkewExpr::Kind::atom: return rep_eval(e.as_atom(), r);
    case SkewExpr::Kind::sum: return rep_eval(e.left(), r) + rep_eval(e.right(), r);
    case SkewExpr::Kind::product: return rep_eval(e.left(), r) * rep_eval(e.right(), r);
    case SkewExpr::Kind::inverse: return numeric_inverse(rep_eval(e.left(), r));
  }
  throw InvariantBreach("unknown node kind");
}

namespace {

template <class T>
CMat block_eval(const Matrix<T>& m, const Rep& r) {
  const int n = r.dim();
  CMat out = CMat::Zero(n * m.rows(), n * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.block(i * n, j * n, n, n) = rep_eval(m(i, j), r);
  return out;
}

}  // namespace

CMat rep_eval(const Matrix<UPoly>& m, const Rep& r) { return block_eval(m, r); }
CMat rep_eval(const Matrix<AElem>& m, const Rep& r) { return block_eval(m, r); }
CMat rep_eval(const Matrix<SkewExpr>& m, const Rep& r) { return block_eval(m, r); }

double relative_error(const CMat& lhs, const CMat& rhs) {
  double scale = 1.0;
  if (lhs.size()) scale = std::max(scale, lhs.cwiseAbs().maxCoeff());
  if (rhs.size()) scale = std::max(scale, rhs.cwiseAbs().maxCoeff());
  if (lhs.size() == 0) return 0;
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

}  // namespace nccalc
