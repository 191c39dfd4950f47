#include "nccalc/parser.hpp"

#include "nccalc/context.hpp"

#include <cctype>
#include <charconv>

namespace nccalc {

namespace {

const std::vector<std::string> kPrimaryStart{"symbol", "integer", "(", "inv(", "-"};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Ast run() {
    Ast e = expr();
    skip();
    if (pos_ != src_.size()) fail({"+", "-", "*", "/", "^", "end of input"}, "unexpected input");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    throw ParseError(pos_, std::move(expected), what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ast node(Ast::Kind k, std::size_t at, std::vector<Ast> args) {
    Ast a;
    a.kind = k;
    a.offset = at;
    a.args = std::move(args);
    return a;
  }

  Ast expr() {
    Ast lhs = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+'))
        lhs = node(Ast::Kind::add, at, {std::move(lhs), term()});
      else if (accept('-'))
        lhs = node(Ast::Kind::sub, at, {std::move(lhs), term()});
      else
        return lhs;
    }
  }

  Ast term() {
    Ast lhs = factor();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*'))
        lhs = node(Ast::Kind::mul, at, {std::move(lhs), factor()});
      else if (accept('/'))
        lhs = node(Ast::Kind::div, at, {std::move(lhs), factor()});
      else
        return lhs;
    }
  }

  Ast factor() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) return node(Ast::Kind::neg, at, {factor()});
    Ast base = primary();
    skip();
    const std::size_t caret = pos_;
    if (!accept('^')) return base;
    skip();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail({"integer"}, "exponent must be a nonnegative integer (use inv for negative powers)");
    Ast p = node(Ast::Kind::pow, caret, {std::move(base)});
    p.value = integer();
    return p;
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    long v = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail({"integer"}, "integer literal out of range");
    }
    return v;
  }

  Ast primary() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= src_.size()) fail(kPrimaryStart, "unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Ast a = node(Ast::Kind::number, at, {});
      a.value = integer();
      return a;
    }
    if (c == '(') {
      ++pos_;
      Ast e = expr();
      if (!accept(')')) fail({")"}, "missing closing parenthesis");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
      const std::string word(src_.substr(pos_, end - pos_));
      if (word == "inv") {
        pos_ = end;
        if (!accept('(')) fail({"("}, "inv requires a parenthesized argument");
        Ast e = expr();
        if (!accept(')')) fail({")"}, "missing closing parenthesis");
        return node(Ast::Kind::inv, at, {std::move(e)});
      }
      static const char* symbols[] = {"t", "x", "y", "z", "rho", "hbar", "h", "i", "g"};
      for (const char* s : symbols)
        if (word == s) {
          pos_ = end;
          Ast a = node(Ast::Kind::symbol, at, {});
          a.name = word;
          return a;
        }
      fail({"t", "x", "y", "z", "rho", "hbar", "h", "i", "g", "inv("}, "unknown symbol '" + word + "'");
    }
    fail(kPrimaryStart, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

SkewExpr symbol_value(const std::string& s) {
  if (s == "t") return AElem::gen(Gen::t);
  if (s == "x") return AElem::gen(Gen::x);
  if (s == "y") return AElem::gen(Gen::y);
  if (s == "z") return AElem::gen(Gen::z);
  if (s == "rho") return rho();
  if (s == "hbar") return hbar();
  if (s == "h") return h();
  if (s == "g") return g_sym();
  return RatFun(GaussRat::i());
}

template <class T>
T repeat(const T& base, long n) {
  T out(1);
  for (long k = 0; k < n; ++k) out = out * base;
  return out;
}

constexpr long kMaxExponent = 256;

}  // namespace

Ast parse(std::string_view src) { return Parser(src).run(); }

SkewExpr eval_skew(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::number:
      return RatFun(a.value);
    case Ast::Kind::symbol:
      return symbol_value(a.name);
    case Ast::Kind::add:
      return eval_skew(a.args[0]) + eval_skew(a.args[1]);
    case Ast::Kind::sub:
      return eval_skew(a.args[0]) - eval_skew(a.args[1]);
    case Ast::Kind::mul:
      return eval_skew(a.args[0]) * eval_skew(a.args[1]);
    case Ast::Kind::div:
      return eval_skew(a.args[0]) * SkewExpr::inverse(eval_skew(a.args[1]));
    case Ast::Kind::neg:
      return -eval_skew(a.args[0]);
    case Ast::Kind::inv:
      return SkewExpr::inverse(eval_skew(a.args[0]));
    case Ast::Kind::pow:
      if (a.value > kMaxExponent) throw DomainError("exponent too large");
      return repeat(eval_skew(a.args[0]), a.value);
  }
  throw InvariantBreach("unknown expression node");
}

UPoly eval_pbw(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::number:
      return RatFun(a.value);
    case Ast::Kind::symbol:
      if (a.name == "rho") throw DomainError("rho is not an element of the enveloping algebra");
      if (a.name == "t" || a.name == "x" || a.name == "y" || a.name == "z") {
        const Gen g = a.name == "t" ? Gen::t : a.name == "x" ? Gen::x : a.name == "y" ? Gen::y : Gen::z;
        return UPoly::gen(g);
      }
      return symbol_value(a.name).as_atom().central_part();
    case Ast::Kind::add:
      return eval_pbw(a.args[0]) + eval_pbw(a.args[1]);
    case Ast::Kind::sub:
      return eval_pbw(a.args[0]) - eval_pbw(a.args[1]);
    case Ast::Kind::mul:
      return eval_pbw(a.args[0]) * eval_pbw(a.args[1]);
    case Ast::Kind::neg:
      return -eval_pbw(a.args[0]);
    case Ast::Kind::div:
    case Ast::Kind::inv: {
      const UPoly d = eval_pbw(a.args.back());
      const bool scalar = d.terms().size() == 1 && d.terms().begin()->first.degree() == 0 &&
                          !d.terms().begin()->second.is_zero() && d.terms().begin()->second.is_polynomial() &&
                          d.terms().begin()->second.num().is_constant();
      if (!scalar) throw DomainError("only division by nonzero constants is allowed in the enveloping algebra");
      const RatFun inv = d.terms().begin()->second.inverse();
      return a.kind == Ast::Kind::inv ? UPoly(inv) : inv * eval_pbw(a.args[0]);
    }
    case Ast::Kind::pow:
      if (a.value > kMaxExponent) throw DomainError("exponent too large");
      return repeat(eval_pbw(a.args[0]), a.value);
  }
  throw InvariantBreach("unknown expression node");
}

}  // namespace nccalc
