#include "nccalc/checks.hpp"
#include "nccalc/context.hpp"
#include "nccalc/ncmaxwell.hpp"
#include "nccalc/parser.hpp"
#include "nccalc/printer.hpp"
#include "nccalc/scalars.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

using nlohmann::json;
using namespace nccalc;

namespace {

enum ExitCode { kOk = 0, kParse = 1, kDomain = 2, kBreach = 3 };

struct Options {
  std::string hbar = "formal";
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string expr;
  std::string wrt = "x";
  std::string suite = "all";
  bool pbw = false;
};

// Output of one command: text lines and the JSON result payload.
struct Output {
  std::string text;
  json result;
};

json element_json(const AElem& a) {
  json terms = json::array();
  for (const auto& [coeff, mono] : print_terms(a)) terms.push_back({{"coeff", coeff}, {"mono", mono}});
  return terms.size() == 1 ? terms[0] : terms;
}

json skew_json(const SkewExpr& e) {
  if (e.is_atom()) return element_json(e.as_atom());
  return json{{"expr", print(e)}};
}

template <class M>
json matrix_json(const M& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(print(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

SkewExpr parse_expr(const std::string& src) { return eval_skew(parse(src)); }

const AElem& require_atom(const SkewExpr& e, const char* what) {
  if (!e.is_atom()) throw DomainError(std::string(what) + " needs an element of the algebra, not a fraction");
  return e.as_atom();
}

Output cmd_norm(const Options& o) {
  if (o.pbw) {
    const UPoly p = eval_pbw(parse(o.expr));
    return {print(p), json{{"expr", print(p)}}};
  }
  const SkewExpr e = parse_expr(o.expr);
  return {print(e), skew_json(e)};
}

Output cmd_deriv(const Options& o) {
  const SkewExpr e = parse_expr(o.expr);
  static const std::map<std::string, int> slots{{"ttilde", 0}, {"t", 0}, {"x", 1}, {"y", 2}, {"z", 3}};
  const auto it = slots.find(o.wrt);
  if (it == slots.end()) throw DomainError("unknown derivative '" + o.wrt + "'");
  if (e.is_atom()) {
    const AElem& a = e.as_atom();
    const AElem d = o.wrt == "ttilde" ? deriv_shifted_t(a) : deriv(static_cast<DGen>(it->second), a);
    return {print(d), element_json(d)};
  }
  SkewExpr d = deriv_skew(e)[it->second];
  if (o.wrt == "t") d = d - SkewExpr(RatFun(2) / h()) * e;
  return {print(d), skew_json(d)};
}

Output cmd_theta(const Options& o) {
  const SkewExpr e = parse_expr(o.expr);
  if (e.is_atom()) {
    const ThetaMat m = theta_hat(e.as_atom());
    return {print(m), matrix_json(m)};
  }
  const SkewMat m = theta_hat(e);
  return {print(m), matrix_json(m)};
}

Output cmd_inv(const Options& o) {
  const SkewExpr e = parse_expr(o.expr);
  const AElem& a = require_atom(e, "inv");
  const SkewMat m = theta_invert(a);
  const auto d = deriv_extract(m);
  const SkewExpr a_inv = SkewExpr::inverse(SkewExpr(a));
  const SkewExpr dt = d[0] - SkewExpr(RatFun(2) / h()) * a_inv;
  std::string text = "theta_inverse:\n" + print(m) + "\n";
  const char* names[] = {"d_ttilde", "d_x", "d_y", "d_z"};
  json derivs;
  for (int k = 0; k < 4; ++k) {
    text += std::string(names[k]) + ": " + print(d[k]) + "\n";
    derivs[names[k]] = skew_json(d[k]);
  }
  text += "d_t: " + print(dt);
  derivs["d_t"] = skew_json(dt);
  return {text, json{{"theta_inverse", matrix_json(m)}, {"derivatives", derivs}}};
}

Output cmd_monopole(const Options& o) {
  const SkewExpr e = parse_expr(o.expr);
  const AElem& a = require_atom(e, "monopole");
  if (!a.is_central()) throw DomainError("the profile must be a function of rho");
  const CenterFun f = a.central_part();
  const CenterFun res = monopole_residual(f);
  const VecField field = radial_field(f);
  const AElem dv = div(field);
  const VecField rt = rot(field);
  const std::string rot_text = "(" + print(rt[0]) + "," + print(rt[1]) + "," + print(rt[2]) + ")";
  return {"residual: " + print(res) + "  div: " + print(dv) + "  rot: " + rot_text,
          json{{"residual", print(res)},
               {"div", print(dv)},
               {"rot", json::array({print(rt[0]), print(rt[1]), print(rt[2])})}}};
}

Output cmd_check(const Options& o) {
  const auto results = run_checks(o.suite, o.seed);
  std::string text;
  json arr = json::array();
  bool ok = true;
  for (const auto& r : results) {
    text += r.name + ": " + (r.passed ? "pass" : "FAIL") + " (" + r.detail + ")\n";
    arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    ok &= r.passed;
  }
  text += ok ? "all suites passed" : "some suites failed";
  if (!ok) throw InvariantBreach(text);
  return {text, arr};
}

Output cmd_limit(const Options& o) {
  const SkewExpr e = parse_expr(o.expr);
  const AElem& a = require_atom(e, "limit");
  ClassPoly lim;
  for (const auto& [m, c] : a.terms()) lim.add_term(m, limit_h0(c));
  lim = lim.reduce_radius();
  return {print(lim), json{{"expr", print(lim)}}};
}

std::optional<GaussRat> parse_hbar(const std::string& s) {
  if (s == "formal") return std::nullopt;
  return GaussRat::parse(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential calculus on the quantized u(2) algebra"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--hbar", o.hbar, "Value of hbar: 'formal' or a Gaussian rational p/q, ip/q");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized suites");

  std::map<CLI::App*, Output (*)(const Options&)> handlers;
  auto add = [&](const char* name, const char* help, Output (*fn)(const Options&), bool takes_expr = true) {
    CLI::App* sub = app.add_subcommand(name, help)->fallthrough();
    if (takes_expr) sub->add_option("expr", o.expr, "Expression")->required();
    handlers[sub] = fn;
    return sub;
  };
  add("norm", "Normal form", cmd_norm)->add_flag("--pbw", o.pbw, "Normalize in the enveloping algebra");
  add("deriv", "Quantum partial derivative", cmd_deriv)
      ->add_option("--wrt", o.wrt, "t, ttilde, x, y or z")
      ->check(CLI::IsMember({"t", "ttilde", "x", "y", "z"}));
  add("theta", "Theta-hat matrix", cmd_theta);
  add("inv", "Theta-hat of the inverse and derivatives of the inverse", cmd_inv);
  CLI::App* mono = app.add_subcommand("monopole", "Check a radial profile f(rho) for div = 0, rot = 0")->fallthrough();
  mono->add_option("--profile", o.expr, "Profile expression in rho")->required();
  handlers[mono] = cmd_monopole;
  add("check", "Run identity suites", cmd_check, false)
      ->add_option("suite", o.suite, "ch, braid, theta-mult, drham, evaluators or all");
  add("limit", "Classical limit hbar -> 0", cmd_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const bool as_json = o.format == "json";
  json doc{{"command", command}, {"input", o.expr}, {"result", nullptr}, {"errors", json::array()}};
  int code = kOk;
  std::string text;
  try {
    HbarScope scope(parse_hbar(o.hbar));
    Output out = handlers.at(chosen)(o);
    text = out.text;
    doc["result"] = out.result;
  } catch (const ParseError& e) {
    code = kParse;
    doc["errors"].push_back({{"kind", "parse"}, {"message", e.what()}, {"offset", e.offset()}, {"expected", e.expected()}});
    std::string exp;
    for (const auto& s : e.expected()) exp += (exp.empty() ? "" : ", ") + s;
    text = std::string("parse error: ") + e.what() + "\nexpected one of: " + exp;
  } catch (const InvariantBreach& e) {
    code = kBreach;
    doc["errors"].push_back({{"kind", "invariant"}, {"message", e.what()}});
    text = std::string("invariant breach: ") + e.what();
  } catch (const DomainError& e) {
    code = kDomain;
    doc["errors"].push_back({{"kind", "domain"}, {"message", e.what()}});
    text = std::string("domain error: ") + e.what();
  } catch (const Error& e) {
    code = kBreach;
    doc["errors"].push_back({{"kind", "internal"}, {"message", e.what()}});
    text = std::string("error: ") + e.what();
  }
  if (as_json)
    std::cout << doc.dump() << "\n";
  else
    (code == kOk ? std::cout : std::cerr) << text << "\n";
  return code;
}
