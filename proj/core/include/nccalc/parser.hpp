#pragma once

#include "nccalc/skew.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nccalc {

/// Expression tree. Products keep the written order.
struct Ast {
  enum class Kind { number, symbol, add, sub, mul, div, pow, neg, inv };
  Kind kind = Kind::number;
  std::size_t offset = 0;
  long value = 0;          // number literal or exponent
  std::string name;        // symbol
  std::vector<Ast> args;
};

/// expr   := term (('+'|'-') term)*
/// term   := factor (('*'|'/') factor)*
/// factor := '-' factor | primary ('^' integer)?
/// primary:= symbol | integer | '(' expr ')' | 'inv(' expr ')'
/// Symbols: t x y z rho hbar h i g, with h = 2 i hbar. a/b means a*inv(b).
Ast parse(std::string_view src);

/// Value in the skew field; inverses of non-central operands stay lazy.
SkewExpr eval_skew(const Ast& ast);
/// Value in U(u(2)_h); DomainError for rho and for division by a non-constant.
UPoly eval_pbw(const Ast& ast);

}  // namespace nccalc
