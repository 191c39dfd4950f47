#include "nccalc/printer.hpp"

#include "nccalc/context.hpp"

namespace nccalc {

namespace {

const std::array<std::string, kNumVars> kHNames{"rho", "t", "h", "g"};
const std::array<std::string, kNumVars> kClassNames{"r", "t", "hbar", "g"};

bool is_atomic(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == ' ' || ((c == '+' || c == '-') && k > 0))) return false;
  }
  return true;
}

bool leads_negative(const RatFun& f) {
  if (f.is_zero()) return false;
  const GaussRat& c = f.num().leading().second;
  return c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

std::string ratfun_string(const RatFun& f, const std::array<std::string, kNumVars>& names) {
  if (leads_negative(f) && f.num().is_monomial() && !f.den().is_one())
    return "-" + ratfun_string(-f, names);
  return f.to_string(names);
}

std::string scalar_string(const RatFun& f) {
  if (f.depends_on(Var::hbar) && !f.depends_on(Var::rho)) {
    const RatFun in_h = f.substitute(Var::hbar, RatFun(GaussRat(0, mpq_class(-1, 2))) * RatFun::variable(Var::hbar));
    return ratfun_string(in_h, kHNames);
  }
  return ratfun_string(f, kSymbolNames);
}

std::string power(const std::string& s, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? s : s + "^" + std::to_string(e);
}

std::string join_factors(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

std::string mono3_string(const Mono3& m) {
  return join_factors({power("x", m.e[0]), power("y", m.e[1]), power("z", m.e[2])});
}

template <class Terms, class MonoFn, class CoeffFn>
std::string sum_string(const Terms& terms, MonoFn mono_of, CoeffFn coeff_of) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const std::string mono = mono_of(m);
    std::string cs = coeff_of(c);
    const bool negative = cs.size() > 1 && cs[0] == '-' && is_atomic(cs.substr(1));
    if (negative) cs.erase(0, 1);
    std::string body;
    if (mono.empty())
      body = is_atomic(cs) || first ? cs : "(" + cs + ")";
    else if (cs == "1")
      body = mono;
    else
      body = (is_atomic(cs) ? cs : "(" + cs + ")") + "*" + mono;
    if (first)
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string wrap(const std::string& s) { return is_atomic(s) ? s : "(" + s + ")"; }

}  // namespace

std::string print(const RatFun& f) { return scalar_string(f); }

std::string print(const AElem& a) { return sum_string(a.terms(), mono3_string, scalar_string); }

std::string print(const UPoly& p) {
  return sum_string(
      p.terms(), [](const UMono& m) { return join_factors({power("t", m.t), mono3_string(m.xyz)}); }, scalar_string);
}

std::string print(const ClassPoly& p) {
  return sum_string(p.terms(), mono3_string, [](const RatFun& c) { return ratfun_string(c, kClassNames); });
}

std::string print(const DPoly& d) {
  static const char* names[4] = {"dt", "dx", "dy", "dz"};
  return sum_string(
      d.terms(),
      [](const DMono& m) {
        std::string out;
        for (int k = 0; k < 4; ++k) {
          const std::string p = power(names[k], m[k]);
          if (p.empty()) continue;
          out += (out.empty() ? "" : "*") + p;
        }
        return out;
      },
      scalar_string);
}

std::string print(const SkewExpr& e) {
  switch (e.kind()) {
    case SkewExpr::Kind::atom:
      return print(e.as_atom());
    case SkewExpr::Kind::sum:
      return print(e.left()) + " + " + print(e.right());
    case SkewExpr::Kind::product:
      return wrap(print(e.left())) + "*" + wrap(print(e.right()));
    case SkewExpr::Kind::inverse:
      return "inv(" + print(e.left()) + ")";
  }
  return {};
}

namespace {

template <class M>
std::string matrix_string(const M& m) {
  std::string out = "[";
  for (int r = 0; r < 4; ++r) {
    if (r) out += ";\n ";
    for (int c = 0; c < 4; ++c) out += (c ? ", " : "") + print(m(r, c));
  }
  return out + "]";
}

}  // namespace

std::string print(const ThetaMat& m) { return matrix_string(m); }
std::string print(const SkewMat& m) { return matrix_string(m); }

std::vector<std::pair<std::string, std::string>> print_terms(const AElem& a) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [m, c] : a.terms()) {
    const std::string mono = mono3_string(m);
    out.emplace_back(scalar_string(c), mono.empty() ? "1" : mono);
  }
  if (out.empty()) out.emplace_back("0", "1");
  return out;
}

}  // namespace nccalc
