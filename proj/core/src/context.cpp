#include "nccalc/context.hpp"

#include "nccalc/errors.hpp"

#include <vector>

namespace nccalc {

namespace {

std::vector<std::unique_ptr<Context>>& stack() {
  thread_local std::vector<std::unique_ptr<Context>> contexts = [] {
    std::vector<std::unique_ptr<Context>> v;
    v.push_back(std::make_unique<Context>());
    return v;
  }();
  return contexts;
}

}  // namespace

Context::Context(std::optional<GaussRat> hbar_value) : hbar_value_(std::move(hbar_value)) {
  if (hbar_value_ && hbar_value_->is_zero()) throw DomainError("hbar must be nonzero");
}

Context& current_context() { return *stack().back(); }

HbarScope::HbarScope(std::optional<GaussRat> hbar_value) {
  stack().push_back(std::make_unique<Context>(std::move(hbar_value)));
}

HbarScope::~HbarScope() { stack().pop_back(); }

RatFun hbar() {
  const auto& v = current_context().hbar_value();
  return v ? RatFun(*v) : RatFun::variable(Var::hbar);
}

RatFun h() { return hbar() * RatFun(GaussRat(0, 2)); }

RatFun rho() { return RatFun::variable(Var::rho); }
RatFun t_sym() { return RatFun::variable(Var::t); }
RatFun g_sym() { return RatFun::variable(Var::g); }

}  // namespace nccalc
