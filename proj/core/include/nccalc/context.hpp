#pragma once

#include "nccalc/ratfun.hpp"

#include <any>
#include <map>
#include <memory>
#include <optional>
#include <typeindex>

namespace nccalc {

/// Session state: the value of hbar (formal or a fixed Gaussian rational)
/// and memo tables that depend on it.
class Context {
 public:
  explicit Context(std::optional<GaussRat> hbar_value = std::nullopt);

  const std::optional<GaussRat>& hbar_value() const { return hbar_value_; }
  bool hbar_is_formal() const { return !hbar_value_.has_value(); }

  template <class T>
  T& cache() {
    auto it = caches_.find(std::type_index(typeid(T)));
    if (it == caches_.end()) it = caches_.emplace(std::type_index(typeid(T)), std::make_shared<T>()).first;
    return *std::static_pointer_cast<T>(it->second);
  }

 private:
  std::optional<GaussRat> hbar_value_;
  std::map<std::type_index, std::shared_ptr<void>> caches_;
};

/// The innermost active context of the calling thread. A formal-hbar
/// context is always present at the bottom.
Context& current_context();

/// Activates a fresh context for the lifetime of the scope (per thread).
/// Throws DomainError when hbar is specialized to 0.
class HbarScope {
 public:
  explicit HbarScope(std::optional<GaussRat> hbar_value);
  ~HbarScope();
  HbarScope(const HbarScope&) = delete;
  HbarScope& operator=(const HbarScope&) = delete;
};

template <class T>
T& cache() {
  return current_context().template cache<T>();
}

RatFun hbar();
/// h = 2 i hbar.
RatFun h();
RatFun rho();
RatFun t_sym();
RatFun g_sym();

}  // namespace nccalc
