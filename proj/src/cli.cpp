#include "oh/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "oh/acceptance.hpp"
#include "oh/expr.hpp"
#include "oh/isotropy.hpp"

namespace oh {
namespace {

using json = nlohmann::ordered_json;

struct Output {
  json result = json::object();
  std::string text;
  int code = 0;
  std::vector<std::string> diagnostics;
};

json ser(const CElement& u) {
  json a = json::array();
  for (const auto& [i, f] : u.terms()) a.push_back(json::array({i, to_string(f)}));
  return a;
}

json ser(const PsiFraction<Cyclotomic>& f) { return {{"num", to_string(f.num)}, {"psi_pow", f.psi_pow}}; }

json ser(const LocElement<Cyclotomic>& u) {
  json a = json::array();
  for (const auto& [i, f] : u.terms()) a.push_back(json::array({i, ser(f)}));
  return a;
}

json ser(const CAut& rho) {
  return {{"a", scalar_to_string(rho.a)}, {"r", to_string(rho.r)}, {"text", to_string(rho)}};
}

json ser(const CDeriv& D) {
  return {{"w", ser(D.w)}, {"H", ser(D.H.element())}, {"s", to_string(D.s)}, {"text", to_string(D)}};
}

CAlgebra make_ctx(const std::string& h_text, bool need_normalized) {
  if (h_text.empty()) throw UsageError("--h is required for this command");
  const CPoly h = parse_poly(h_text);
  if (h.is_zero()) throw UsageError("h must be a nonzero polynomial");
  CAlgebra ctx(h);
  if (need_normalized && !ctx.is_normalized())
    throw UsageError("h must be monic of degree >= 1 with no x^(N-1) term; transform it with `oh --h \"" + h_text +
                     "\" normalize` first");
  return ctx;
}

CAut valid_aut(const std::string& text, const CAlgebra& ctx) {
  const CAut rho = parse_automorphism(text, ctx);
  require_valid(ctx, rho);
  return rho;
}

Output element_output(const CElement& u) {
  Output o;
  o.result["element"] = ser(u);
  o.text = to_string(u) + "\n";
  return o;
}

struct Args {
  std::string h;
  bool json_mode = false;
  std::string a, b, rho, D, Dx, Dt, g;
  int n = 1;
  DescribeBounds bounds;
};

Output cmd_normalize(const Args& args) {
  if (args.h.empty()) throw UsageError("--h is required for this command");
  const CPoly h = parse_poly(args.h);
  const auto nz = normalize_h(h);
  Output o;
  o.result = {{"h_star", to_string(nz.h_star)},
              {"alpha", scalar_to_string(nz.iso.alpha)},
              {"beta", scalar_to_string(nz.iso.beta)},
              {"gamma", scalar_to_string(nz.iso.gamma)}};
  o.text = "h_star=" + to_string(nz.h_star) + "\nalpha=" + scalar_to_string(nz.iso.alpha) +
           "\nbeta=" + scalar_to_string(nz.iso.beta) + "\ngamma=" + scalar_to_string(nz.iso.gamma) + "\n";
  return o;
}

Output cmd_aut(const Args& args) {
  const CAlgebra ctx = make_ctx(args.h, true);
  const AutGroupInfo info = aut_group(ctx);
  Output o;
  o.result = {{"torsion", group_name(info.order)},
              {"order", info.order},
              {"exponents", json(std::vector<int>(info.exponents.exponents().begin(), info.exponents.exponents().end()))},
              {"generator", info.generator}};
  o.text = "torsion=" + group_name(info.order) + "\n";
  return o;
}

Output cmd_mul(const Args& args, bool comm) {
  const CAlgebra ctx = make_ctx(args.h, false);
  const CElement u = parse_element(args.a, ctx), v = parse_element(args.b, ctx);
  return element_output(comm ? commutator(ctx, u, v) : ore_mul(ctx, u, v));
}

template <typename K>
std::string scaled_direction(const Poly<K>& d) {
  const std::string body = to_string(d);
  if (support(d).size() == 1 && body.find('-') == std::string::npos) return body == "1" ? "c" : "c*" + body;
  return "c*(" + body + ")";
}

template <typename K>
std::string r_text(const Poly<K>& base, const std::optional<Poly<K>>& dir) {
  if (!dir) return to_string(base);
  if (base.is_zero()) return scaled_direction(*dir);
  return to_string(base) + " + " + scaled_direction(*dir);
}

Output cmd_apply(const Args& args) {
  const CAlgebra ctx = make_ctx(args.h, true);
  const ExprPtr rho_expr = parse(args.rho);
  const CElement u = parse_element(args.a, ctx);
  if (auto r = symbolic_shift(rho_expr)) {
    const auto img = apply_symbolic(ctx, *r, u);
    Output o;
    json a = json::array();
    for (const auto& [i, lu] : img) a.push_back(json::array({i, to_string(SymbolicElement<Cyclotomic>{{0, lu}})}));
    o.result["element"] = a;
    const auto con = aut_constraint(ctx);
    o.result["constraint"] = json(std::vector<int>(con.exponents().begin(), con.exponents().end()));
    o.text = to_string(img) + "\n";
    return o;
  }
  const CAut rho = to_automorphism(rho_expr, ctx);
  require_valid(ctx, rho);
  return element_output(apply(ctx, rho, u));
}

Output cmd_power(const Args& args) {
  const CAlgebra ctx = make_ctx(args.h, true);
  if (args.n < 1) throw UsageError("n must be a positive integer");
  const CAut p = power(ctx, valid_aut(args.rho, ctx), args.n);
  Output o;
  o.result["automorphism"] = ser(p);
  o.text = to_string(p) + "\n";
  return o;
}

Output cmd_conjugate(const Args& args) {
  const CAlgebra ctx = make_ctx(args.h, true);
  const CDeriv c = conjugate(ctx, valid_aut(args.rho, ctx), parse_derivation(args.D, ctx));
  Output o;
  o.result["derivation"] = ser(c);
  o.text = to_string(c) + "\n";
  return o;
}

Output cmd_decompose(const Args& args) {
  const CAlgebra ctx = make_ctx(args.h, false);
  const CDeriv D = decompose_images(ctx, parse_element(args.Dx, ctx), parse_element(args.Dt, ctx));
  Output o;
  o.result["derivation"] = ser(D);
  o.result["inner"] = D.H.is_zero() && D.s.is_zero();
  o.text = to_string(D) + "\n";
  return o;
}

Output cmd_check(const Args& args) {
  const CAlgebra ctx = make_ctx(args.h, true);
  const CDeriv D = parse_derivation(args.D, ctx);
  const auto rep = check(ctx, D, valid_aut(args.rho, ctx));
  Output o;
  o.result = {{"member", rep.is_member},
              {"delta", ser(rep.delta)},
              {"dS_delta", rep.dS_delta ? ser(*rep.dS_delta) : json(nullptr)},
              {"required_rhs", to_string(rep.required_rhs)},
              {"constant", rep.constant ? json(scalar_to_string(*rep.constant)) : json(nullptr)}};
  o.text = std::string("member=") + (rep.is_member ? "true" : "false") + "\n";
  o.code = rep.is_member ? 0 : 1;
  return o;
}

Output cmd_describe(const Args& args) {
  const CAlgebra ctx = make_ctx(args.h, true);
  const CDeriv D = parse_derivation(args.D, ctx);
  const IsotropyDescription d = describe(ctx, D, args.bounds);
  Output o;
  o.text = summary(d) + "\n";
  json params = json::array();
  for (const auto& p : d.params) {
    json e = {{"a", scalar_to_string(p.a)}, {"r", to_string(p.r)}};
    e["direction"] = p.direction ? json(to_string(*p.direction)) : json(nullptr);
    params.push_back(e);
    if (d.r_rule != RRule::Free) {
      o.text += "a=" + scalar_to_string(p.a) + " r=" + r_text(p.r, p.direction) + "\n";
    }
  }
  json sym = nullptr;
  if (d.symbolic) {
    sym = {{"r", to_string(d.symbolic->r)}};
    sym["direction"] = d.symbolic->direction ? json(to_string(*d.symbolic->direction)) : json(nullptr);
    o.text += "r=" + r_text(d.symbolic->r, d.symbolic->direction) + "\n";
  }
  o.result = {{"torsion_kind", to_string(d.torsion)},
              {"order", d.order},
              {"candidate_exponents", json(std::vector<int>(d.candidate.exponents().begin(), d.candidate.exponents().end()))},
              {"r_rule", to_string(d.r_rule)},
              {"certified", d.certified},
              {"params", params},
              {"symbolic", sym},
              {"summary", summary(d)}};
  o.diagnostics = d.notes;
  return o;
}

Output cmd_lnd_exp(const Args& args) {
  const CPoly g = parse_poly(args.g);
  const CAut rho = CAut::sigma(g);
  Output o;
  o.result["automorphism"] = ser(rho);
  o.text = to_string(rho) + "\n";
  return o;
}

Output cmd_selftest() {
  Output o;
  json list = json::array();
  bool all = true;
  for (const auto& r : run_library_criteria()) {
    all = all && r.pass;
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    o.text += format_result(r) + "\n";
  }
  o.result["criteria"] = list;
  o.code = all ? 0 : 1;
  return o;
}

std::string render_json(const Output& o) {
  json j = {{"ok", o.code == 0}, {"result", o.result}, {"diagnostics", o.diagnostics}};
  return j.dump() + "\n";
}

}  // namespace

RunResult run(const std::vector<std::string>& argv) {
  Args args;
  CLI::App app{"Exact arithmetic in A_h = k[x][t; h d/dx]: automorphisms, derivations, isotropy groups", "oh"};
  app.fallthrough();
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.add_option("--h", args.h, "defining polynomial h(x)");
  app.add_flag("--json", args.json_mode, "structured output");

  auto* normalize = app.add_subcommand("normalize", "normal form h* with the transporting isomorphism");
  auto* aut = app.add_subcommand("aut", "torsion part of Aut(A_h)");
  auto* mul = app.add_subcommand("mul", "normal-form product A*B");
  mul->add_option("A", args.a)->required();
  mul->add_option("B", args.b)->required();
  auto* comm = app.add_subcommand("comm", "commutator [A,B]");
  comm->add_option("A", args.a)->required();
  comm->add_option("B", args.b)->required();
  auto* applyc = app.add_subcommand("apply", "image of E under an automorphism (tau(sym) allowed)");
  applyc->add_option("--rho", args.rho)->required();
  applyc->add_option("E", args.a)->required();
  auto* powerc = app.add_subcommand("power", "rho^n in sigma;tau form");
  powerc->add_option("--rho", args.rho)->required();
  powerc->add_option("n", args.n)->required();
  auto* conj = app.add_subcommand("conjugate", "rho D rho^-1 in (w, H, s) form");
  conj->add_option("--rho", args.rho)->required();
  conj->add_option("--D", args.D)->required();
  auto* decomp = app.add_subcommand("decompose", "(w, H, s) of the derivation with the given images");
  decomp->add_option("--Dx", args.Dx)->required();
  decomp->add_option("--Dt", args.Dt)->required();
  auto* iso = app.add_subcommand("isotropy", "isotropy group of a derivation");
  iso->require_subcommand(1);
  auto* icheck = iso->add_subcommand("check", "is rho in Aut_D(A_h)?");
  icheck->add_option("--D", args.D)->required();
  icheck->add_option("--rho", args.rho)->required();
  auto* idesc = iso->add_subcommand("describe", "structure of Aut_D(A_h)");
  idesc->add_option("--D", args.D)->required();
  idesc->add_option("--order-bound", args.bounds.order_bound, "largest root-of-unity order to enumerate");
  idesc->add_option("--rdeg-bound", args.bounds.rdeg_bound, "degree of sampled r when r is free");
  auto* lnd = app.add_subcommand("lnd", "locally nilpotent derivations");
  lnd->require_subcommand(1);
  auto* lexp = lnd->add_subcommand("exp", "exp(D_g) = sigma_g");
  lexp->add_option("g", args.g)->required();
  auto* selftest = app.add_subcommand("selftest", "run the built-in acceptance suites 1-8");

  RunResult res;
  const bool json_requested = std::find(argv.begin(), argv.end(), "--json") != argv.end();
  auto fail = [&](int code, const std::string& msg) {
    res.code = code;
    if (json_requested) {
      Output o;
      o.code = code;
      o.diagnostics.push_back(msg);
      o.result = nullptr;
      res.out = render_json(o);
    } else {
      res.err = "error: " + msg + "\n";
    }
    return res;
  };

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    return fail(2, e.what());
  }

  try {
    Output o;
    if (normalize->parsed()) o = cmd_normalize(args);
    else if (aut->parsed()) o = cmd_aut(args);
    else if (mul->parsed()) o = cmd_mul(args, false);
    else if (comm->parsed()) o = cmd_mul(args, true);
    else if (applyc->parsed()) o = cmd_apply(args);
    else if (powerc->parsed()) o = cmd_power(args);
    else if (conj->parsed()) o = cmd_conjugate(args);
    else if (decomp->parsed()) o = cmd_decompose(args);
    else if (icheck->parsed()) o = cmd_check(args);
    else if (idesc->parsed()) o = cmd_describe(args);
    else if (lexp->parsed()) o = cmd_lnd_exp(args);
    else if (selftest->parsed()) o = cmd_selftest();
    res.code = o.code;
    if (args.json_mode) {
      res.out = render_json(o);
    } else {
      res.out = o.text;
      for (const auto& d : o.diagnostics) res.err += "note: " + d + "\n";
    }
    return res;
  } catch (const SyntaxError& e) {
    return fail(2, e.what());
  } catch (const UsageError& e) {
    return fail(2, e.what());
  } catch (const Error& e) {
    return fail(1, e.what());
  }
}

}  // namespace oh
