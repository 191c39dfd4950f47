#include "nccalc/checks.hpp"

#include "nccalc/context.hpp"
#include "nccalc/reporacle.hpp"
#include "nccalc/thetamat.hpp"
#include "nccalc/whcalc.hpp"

#include <random>

namespace nccalc {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long small() { return std::uniform_int_distribution<long>(-3, 3)(rng_); }

  AElem linear() {
    AElem out(small());
    for (Gen g : {Gen::t, Gen::x, Gen::y, Gen::z}) out += RatFun(small()) * AElem::gen(g);
    if (std::bernoulli_distribution(0.3)(rng_)) out += AElem(RatFun(small()) * rho());
    return out;
  }

  AElem product(unsigned max_degree) {
    const unsigned d = std::uniform_int_distribution<unsigned>(1, max_degree)(rng_);
    AElem out(1);
    for (unsigned k = 0; k < d; ++k) out = out * linear();
    return out;
  }

  std::uint8_t mask() { return static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, 15)(rng_)); }

 private:
  std::mt19937_64 rng_;
};

SuiteResult suite_ch() {
  SuiteResult r{"ch", true, 1, ""};
  const UMat res = ch_residual();
  for (std::size_t i = 0; i < res.rows(); ++i)
    for (std::size_t j = 0; j < res.cols(); ++j) r.passed &= res(i, j).is_zero();
  const CheckReport num = check_identity(res, Matrix<UPoly>(res.rows(), res.cols()), default_reps(), 1e-12);
  r.passed &= num.pass;
  r.cases += static_cast<std::size_t>(num.checked);
  r.detail = "exact residual zero, numeric in " + std::to_string(num.checked) + " reps";
  return r;
}

SuiteResult suite_braid() {
  SuiteResult r{"braid", true, 1, "exact residual zero"};
  const UMat res = braid_residual();
  for (std::size_t i = 0; i < res.rows(); ++i)
    for (std::size_t j = 0; j < res.cols(); ++j) r.passed &= res(i, j).is_zero();
  return r;
}

SuiteResult suite_theta_mult(std::uint64_t seed) {
  Sampler s(seed);
  SuiteResult r{"theta-mult", true, 0, ""};
  for (int k = 0; k < 60; ++k) {
    const AElem a = s.product(3), b = s.product(3);
    r.passed &= theta_hat(a * b) == theta_hat(a) * theta_hat(b);
    ++r.cases;
  }
  r.detail = std::to_string(r.cases) + " random pairs";
  return r;
}

SuiteResult suite_drham(std::uint64_t seed) {
  Sampler s(seed);
  SuiteResult r{"drham", true, 0, ""};
  for (int k = 0; k < 60; ++k) {
    Form w = Form::term(s.mask(), s.product(3));
    w = w + Form::term(s.mask(), s.product(2));
    r.passed &= d_op(d_op(w)).is_zero();
    ++r.cases;
  }
  r.detail = std::to_string(r.cases) + " random forms";
  return r;
}

SuiteResult suite_evaluators(std::uint64_t seed) {
  Sampler s(seed);
  SuiteResult r{"evaluators", true, 0, ""};
  for (int k = 0; k < 60; ++k) {
    const AElem a = s.product(4);
    const Derivs via_coprod = deriv_all_coprod(a);
    const auto via_theta = deriv_extract(theta_hat(a));
    r.passed &= deriv(DGen::t, a) == via_coprod[0];
    r.passed &= deriv_shifted_t(a) == via_theta[0];
    for (int u = 1; u < 4; ++u) {
      const AElem d = deriv(static_cast<DGen>(u), a);
      r.passed &= d == via_coprod[u] && d == via_theta[u];
    }
    ++r.cases;
  }
  r.detail = std::to_string(r.cases) + " random products";
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ch", "braid", "theta-mult", "drham", "evaluators"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "ch") return suite_ch();
  if (name == "braid") return suite_braid();
  if (name == "theta-mult") return suite_theta_mult(seed);
  if (name == "drham") return suite_drham(seed);
  if (name == "evaluators") return suite_evaluators(seed);
  throw DomainError("unknown check suite '" + name + "'");
}

std::vector<SuiteResult> run_checks(const std::string& which, std::uint64_t seed) {
  if (which != "all") return {run_suite(which, seed)};
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, seed));
  return out;
}

}  // namespace nccalc
