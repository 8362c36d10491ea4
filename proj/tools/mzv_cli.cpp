// mzv — command-line front end for the word algebra of multiple zeta values.
//
// Subcommands: product, map, decompose, eval, regeval, relation, verify.
// Global flags: --limit, --tol, --max-weight, --json (flags beat the
// MZV_LIMIT / MZV_TOL environment variables, which beat the defaults).
// Exit codes: 0 success or PASS, 1 FAIL verdict, 2 usage or parse errors.
// Results go to stdout, diagnostics to stderr; identical invocations print
// identical bytes.

#include "mzv/errors.hpp"
#include "mzv/evaluation.hpp"
#include "mzv/expr_io.hpp"
#include "mzv/linmaps.hpp"
#include "mzv/products.hpp"
#include "mzv/regularization.hpp"
#include "mzv/relations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

struct Options {
  long limit = mzv::default_eval_limit;
  double tol = 1e-3;
  int max_weight = 24;
  bool json = false;
};

std::string fmt_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_bound(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

mzv::ProductKind kind_from(const std::string& op) {
  if (op == "h") return mzv::ProductKind::harmonic;
  if (op == "sh") return mzv::ProductKind::shuffle;
  if (op == "nh") return mzv::ProductKind::n_harmonic;
  return mzv::ProductKind::n_shuffle;
}

void guard_weight(const Options& o, std::size_t weight) {
  if (weight > static_cast<std::size_t>(o.max_weight))
    throw mzv::AlgebraError("input weight " + std::to_string(weight) +
                            " exceeds --max-weight " + std::to_string(o.max_weight) +
                            "; raise the cap explicitly if you mean it");
}

mzv::Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (true) {
    std::size_t start = i;
    long v = 0;
    bool digits = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 64) throw mzv::ParseError(start, "composition part exceeds the 64-letter capacity");
      digits = true;
      ++i;
    }
    if (!digits) throw mzv::ParseError(i, "expected a positive integer in the composition");
    if (v < 1) throw mzv::ParseError(start, "composition parts must be >= 1");
    parts.push_back(static_cast<int>(v));
    if (i == text.size()) break;
    if (text[i] != ',') throw mzv::ParseError(i, "expected ',' between composition parts");
    ++i;
  }
  return mzv::Composition(parts);
}

ordered_json composition_json(const mzv::Composition& c) {
  return ordered_json(c.parts());
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// ---- subcommand bodies -----------------------------------------------------

int run_product(const Options& o, const std::string& op, const std::string& e1,
                const std::string& e2) {
  mzv::NcPoly p = mzv::parse_expr(e1), q = mzv::parse_expr(e2);
  guard_weight(o, mzv::max_weight(p) + mzv::max_weight(q));
  mzv::NcPoly r = mzv::product(kind_from(op), p, q);
  if (o.json)
    emit(ordered_json{{"op", op}, {"result", mzv::poly_to_json(r)}});
  else
    std::cout << mzv::format_expr(r) << "\n";
  return 0;
}

int run_map(const Options& o, const std::string& name, const std::string& e) {
  mzv::NcPoly p = mzv::parse_expr(e);
  guard_weight(o, mzv::max_weight(p));
  mzv::NcPoly r;
  if (name == "S1")
    r = mzv::apply_substitution(mzv::subst_y_to_x_plus_y(), p);
  else if (name == "S2")
    r = mzv::apply_substitution(mzv::subst_y_to_y_minus_x(), p);
  else if (name == "S")
    r = mzv::to_strict_basis(p);
  else
    r = mzv::to_nonstrict_basis(p);
  if (o.json)
    emit(ordered_json{{"map", name}, {"result", mzv::poly_to_json(r)}});
  else
    std::cout << mzv::format_expr(r) << "\n";
  return 0;
}

int run_decompose(const Options& o, const std::string& op, const std::string& e) {
  mzv::NcPoly p = mzv::parse_expr(e);
  guard_weight(o, mzv::max_weight(p));
  mzv::Decomposition d = mzv::decompose(p, kind_from(op));
  if (o.json) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : d.coeffs) coeffs.push_back(mzv::poly_to_json(c));
    emit(ordered_json{{"op", op}, {"coefficients", coeffs}});
  } else {
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
      std::cout << "T^" << i << ": " << mzv::format_expr(d.coeffs[i]) << "\n";
  }
  return 0;
}

int run_eval(const Options& o, bool nonstrict, const std::string& e) {
  mzv::NcPoly p = mzv::parse_expr(e);
  guard_weight(o, mzv::max_weight(p));
  mzv::NumericValue v =
      nonstrict ? mzv::eval_nonstrict(p, o.limit) : mzv::eval_strict(p, o.limit);
  if (o.json)
    emit(ordered_json{
        {"approx", v.approx}, {"tail_bound", v.tail_bound}, {"terms_used", v.terms_used}});
  else
    std::cout << fmt_value(v.approx) << " ± " << fmt_bound(v.tail_bound) << "\n";
  return 0;
}

int run_regeval(const Options& o, const std::string& op, const std::string& e) {
  mzv::NcPoly p = mzv::parse_expr(e);
  guard_weight(o, mzv::max_weight(p));
  mzv::RegValue rv = mzv::eval_regularized(p, kind_from(op), o.limit);
  if (o.json) {
    ordered_json coeffs = ordered_json::array();
    for (std::size_t i = 0; i < rv.coefficients.size(); ++i) {
      const auto& c = rv.coefficients[i];
      coeffs.push_back(ordered_json{{"power", i},
                                    {"approx", c.approx},
                                    {"tail_bound", c.tail_bound},
                                    {"terms_used", c.terms_used}});
    }
    emit(ordered_json{{"op", op}, {"coefficients", coeffs}});
  } else {
    for (std::size_t i = 0; i < rv.coefficients.size(); ++i)
      std::cout << "T^" << i << ": " << fmt_value(rv.coefficients[i].approx) << " ± "
                << fmt_bound(rv.coefficients[i].tail_bound) << "\n";
  }
  return 0;
}

// family/--comp/--comp2/--reg handling shared by `relation` and `verify`
mzv::RelationInstance build_instance(const Options& o, const std::string& family,
                                     const std::string& comp, const std::string& comp2,
                                     const std::string& reg) {
  const bool pair_family = family == "fds" || family == "nfds" || family == "eds" ||
                           family == "neds";
  if (comp.empty()) throw mzv::AlgebraError(family + " needs --comp");
  if (pair_family && comp2.empty()) throw mzv::AlgebraError(family + " needs --comp2");
  if (!pair_family && !comp2.empty())
    throw mzv::AlgebraError(family + " takes only --comp, not --comp2");

  mzv::Composition a = parse_composition(comp);
  if (pair_family) {
    mzv::Composition b = parse_composition(comp2);
    guard_weight(o, static_cast<std::size_t>(a.weight() + b.weight()));
    const bool nonstrict = family[0] == 'n';
    if (family == "fds" || family == "nfds") return mzv::finite_double_shuffle(a, b, nonstrict);
    const mzv::RegSide side = reg == "sh" ? mzv::RegSide::shuffle : mzv::RegSide::harmonic;
    return mzv::extended_double_shuffle(a, b, nonstrict, side);
  }
  guard_weight(o, static_cast<std::size_t>(a.weight()) + 1);
  if (family == "hoffman") return mzv::hoffman(a, false);
  if (family == "nhoffman") return mzv::hoffman(a, true);
  return mzv::y_nshuffle_identity(a);
}

ordered_json instance_json(const mzv::RelationInstance& r) {
  ordered_json params = ordered_json::array();
  for (const auto& c : r.parameters) params.push_back(composition_json(c));
  ordered_json elements = ordered_json::array();
  for (std::size_t i = 0; i < r.elements.size(); ++i)
    elements.push_back(ordered_json{{"power", i}, {"poly", mzv::poly_to_json(r.elements[i])}});
  ordered_json j{{"family", std::string(to_string(r.family))},
                 {"parameters", params},
                 {"description", r.description},
                 {"elements", elements}};
  if (r.family == mzv::RelationFamily::extended_double_shuffle_mzv ||
      r.family == mzv::RelationFamily::extended_double_shuffle_nmzv)
    j["side"] = r.side == mzv::RegSide::harmonic ? "h" : "sh";
  return j;
}

int run_relation(const Options& o, const std::string& family, const std::string& comp,
                 const std::string& comp2, const std::string& reg) {
  mzv::RelationInstance r = build_instance(o, family, comp, comp2, reg);
  if (o.json) {
    emit(instance_json(r));
    return 0;
  }
  std::cout << r.description << "\n";
  if (r.elements.size() == 1) {
    std::cout << "element: " << mzv::format_expr(r.elements[0]) << "\n";
  } else {
    for (std::size_t i = 0; i < r.elements.size(); ++i)
      std::cout << "T^" << i << ": " << mzv::format_expr(r.elements[i]) << "\n";
  }
  return 0;
}

ordered_json report_json(const mzv::VerifyReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks)
    checks.push_back(ordered_json{{"power", c.t_power},
                                  {"approx", c.approx},
                                  {"tail_bound", c.tail_bound},
                                  {"pass", c.pass}});
  return ordered_json{{"pass", rep.pass},
                      {"exact", rep.exact},
                      {"limit", rep.limit},
                      {"tol", rep.tol},
                      {"checks", checks}};
}

void print_report_text(const mzv::VerifyReport& rep) {
  std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  if (rep.exact) {
    std::cout << "  exact symbolic comparison\n";
    return;
  }
  for (const auto& c : rep.checks)
    std::cout << "  T^" << c.t_power << ": approx=" << fmt_bound(c.approx)
              << " bound=" << fmt_bound(c.tail_bound) << " tol=" << fmt_bound(rep.tol)
              << (c.pass ? "" : "  <-- exceeded") << "\n";
}

// all compositions of weight <= w, in a fixed enumeration order
std::vector<mzv::Composition> compositions_up_to(int w, bool admissible) {
  std::vector<mzv::Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (!cur.empty() && (!admissible || cur.front() >= 2)) out.emplace_back(cur);
    for (int k = 1; k <= remaining; ++k) {
      cur.push_back(k);
      self(self, remaining - k);
      cur.pop_back();
    }
  };
  rec(rec, w);
  return out;
}

int run_verify_all(const Options& o, const std::string& family_filter, bool perturb) {
  if (o.max_weight > 12)
    throw mzv::AlgebraError(
        "refusing --all above --max-weight 12; batch cost grows explosively, pass a bound");
  const int W = o.max_weight;
  std::vector<mzv::RelationInstance> batch;
  auto want = [&](const char* f) { return family_filter.empty() || family_filter == f; };

  const auto admissibles = compositions_up_to(W, true);
  if (want("fds") || want("nfds"))
    for (const auto& a : admissibles)
      for (const auto& b : admissibles) {
        if (a.weight() + b.weight() > W) continue;
        if (b.parts() < a.parts()) continue;  // products commute; keep one of each pair
        if (want("fds")) batch.push_back(mzv::finite_double_shuffle(a, b, false));
        if (want("nfds")) batch.push_back(mzv::finite_double_shuffle(a, b, true));
      }
  if (want("eds") || want("neds")) {
    const std::vector<mzv::Composition> firsts{mzv::Composition{1}, mzv::Composition{1, 1}};
    for (const auto& a : firsts)
      for (const auto& b : admissibles) {
        if (a.weight() + b.weight() > W) continue;
        if (want("eds")) batch.push_back(mzv::extended_double_shuffle(a, b, false));
        if (want("neds")) batch.push_back(mzv::extended_double_shuffle(a, b, true));
      }
  }
  for (const auto& c : compositions_up_to(W - 1, true)) {
    if (want("hoffman")) batch.push_back(mzv::hoffman(c, false));
    if (want("nhoffman")) batch.push_back(mzv::hoffman(c, true));
  }
  if (want("lemma32"))
    for (const auto& c : compositions_up_to(W - 1, false))
      batch.push_back(mzv::y_nshuffle_identity(c));

  const mzv::NcPoly bump = mzv::NcPoly::from_word(mzv::word_from_composition(mzv::Composition{4}));
  std::size_t passed = 0;
  ordered_json results = ordered_json::array();
  for (auto& inst : batch) {
    if (perturb) inst = mzv::perturbed(inst, bump);
    mzv::VerifyReport rep = mzv::verify(inst, o.limit, o.tol);
    passed += rep.pass ? 1 : 0;
    if (o.json) {
      ordered_json r = instance_json(inst);
      r.erase("elements");
      r["report"] = report_json(rep);
      results.push_back(std::move(r));
    } else {
      std::string params;
      for (std::size_t i = 0; i < inst.parameters.size(); ++i)
        params += (i ? " " : "") + std::string(i == 0 ? "comp=" : "comp2=") +
                  inst.parameters[i].str();
      std::cout << (rep.pass ? "PASS" : "FAIL") << " " << to_string(inst.family) << " "
                << params << "\n";
    }
  }
  const bool all_pass = passed == batch.size();
  if (o.json)
    emit(ordered_json{{"pass", all_pass},
                      {"passed", passed},
                      {"total", batch.size()},
                      {"results", results}});
  else
    std::cout << "summary: " << passed << "/" << batch.size() << " passed\n";
  return all_pass ? 0 : 1;
}

int run_verify(const Options& o, const std::string& family, const std::string& comp,
               const std::string& comp2, const std::string& reg, bool all, bool perturb) {
  if (all) return run_verify_all(o, family, perturb);
  if (family.empty()) throw mzv::AlgebraError("verify needs --family (or --all)");
  mzv::RelationInstance r = build_instance(o, family, comp, comp2, reg);
  if (perturb)
    r = mzv::perturbed(
        r, mzv::NcPoly::from_word(mzv::word_from_composition(mzv::Composition{4})));
  mzv::VerifyReport rep = mzv::verify(r, o.limit, o.tol);
  if (o.json) {
    ordered_json j = instance_json(r);
    j.erase("elements");
    j["report"] = report_json(rep);
    emit(j);
  } else {
    print_report_text(rep);
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact word algebra for multiple zeta values, strict and non-strict"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--limit", opt.limit, "summation truncation for numeric subcommands")
      ->envname("MZV_LIMIT")
      ->check(CLI::Range(1L, std::numeric_limits<long>::max()))
      ->capture_default_str();
  app.add_option("--tol", opt.tol, "additive tolerance on top of the rigorous tail bound")
      ->envname("MZV_TOL")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-weight", opt.max_weight,
                 "refuse inputs above this total weight (and bound verify --all)")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  app.add_flag("--json", opt.json, "machine-readable output");

  const std::vector<std::string> ops{"h", "sh", "nh", "nsh"};

  auto* sc_product = app.add_subcommand("product", "expand one of the four bilinear products");
  std::string prod_op;
  std::vector<std::string> prod_exprs;
  sc_product->add_option("--op", prod_op, "h|sh|nh|nsh")->required()->check(CLI::IsMember(ops));
  sc_product->add_option("exprs", prod_exprs, "two expressions")->expected(2)->required();
  sc_product->fallthrough();

  auto* sc_map = app.add_subcommand("map", "apply a letter substitution or basis change");
  std::string map_name, map_expr;
  sc_map->add_option("--name", map_name, "S1|S2|S|Sinv")
      ->required()
      ->check(CLI::IsMember({"S1", "S2", "S", "Sinv"}));
  sc_map->add_option("expr", map_expr, "expression")->required();
  sc_map->fallthrough();

  auto* sc_decompose =
      app.add_subcommand("decompose", "expand an element over powers of y for a product");
  std::string dec_op, dec_expr;
  sc_decompose->add_option("--op", dec_op, "h|sh|nh|nsh")->required()->check(CLI::IsMember(ops));
  sc_decompose->add_option("expr", dec_expr, "expression")->required();
  sc_decompose->fallthrough();

  auto* sc_eval = app.add_subcommand("eval", "truncated numeric value with a rigorous bound");
  bool eval_nonstrict = false;
  std::string eval_expr;
  sc_eval->add_flag("--nonstrict", eval_nonstrict, "use the non-strict nested sums");
  sc_eval->add_option("expr", eval_expr, "expression")->required();
  sc_eval->fallthrough();

  auto* sc_regeval = app.add_subcommand("regeval", "regularized value as coefficients of T");
  std::string reg_op, reg_expr;
  sc_regeval->add_option("--op", reg_op, "h|sh|nh|nsh")->required()->check(CLI::IsMember(ops));
  sc_regeval->add_option("expr", reg_expr, "expression")->required();
  sc_regeval->fallthrough();

  const std::vector<std::string> families{"fds",     "nfds",     "eds",    "neds",
                                          "hoffman", "nhoffman", "lemma32"};

  auto* sc_relation = app.add_subcommand("relation", "generate a relation instance");
  std::string rel_family, rel_comp, rel_comp2, rel_reg = "h";
  sc_relation->add_option("--family", rel_family, "relation family")
      ->required()
      ->check(CLI::IsMember(families));
  sc_relation->add_option("--comp", rel_comp, "composition, e.g. 2,1")->required();
  sc_relation->add_option("--comp2", rel_comp2, "second composition (pair families)");
  sc_relation->add_option("--reg", rel_reg, "h|sh: which expansion the extended families use")
      ->check(CLI::IsMember({"h", "sh"}));
  sc_relation->fallthrough();

  auto* sc_verify = app.add_subcommand("verify", "check relation instances numerically");
  std::string ver_family, ver_comp, ver_comp2, ver_reg = "h";
  bool ver_all = false, ver_perturb = false;
  sc_verify->add_option("--family", ver_family, "relation family")->check(CLI::IsMember(families));
  sc_verify->add_option("--comp", ver_comp, "composition, e.g. 2,1");
  sc_verify->add_option("--comp2", ver_comp2, "second composition (pair families)");
  sc_verify->add_option("--reg", ver_reg, "h|sh: which expansion the extended families use")
      ->check(CLI::IsMember({"h", "sh"}));
  sc_verify->add_flag("--all", ver_all, "verify every instance up to --max-weight");
  sc_verify->add_flag("--perturb", ver_perturb,
                      "negative control: corrupt the element by +1*z(4) first");
  sc_verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << "\n";
    CLI::App* scope = &app;
    for (CLI::App* sub : app.get_subcommands()) scope = sub;
    std::cerr << scope->help() << std::flush;
    return 2;
  }

  try {
    if (sc_product->parsed()) return run_product(opt, prod_op, prod_exprs.at(0), prod_exprs.at(1));
    if (sc_map->parsed()) return run_map(opt, map_name, map_expr);
    if (sc_decompose->parsed()) return run_decompose(opt, dec_op, dec_expr);
    if (sc_eval->parsed()) return run_eval(opt, eval_nonstrict, eval_expr);
    if (sc_regeval->parsed()) return run_regeval(opt, reg_op, reg_expr);
    if (sc_relation->parsed()) return run_relation(opt, rel_family, rel_comp, rel_comp2, rel_reg);
    if (sc_verify->parsed())
      return run_verify(opt, ver_family, ver_comp, ver_comp2, ver_reg, ver_all, ver_perturb);
  } catch (const mzv::AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand guarantees one branch above
}
