// twy: command-line front end for the relation, projection and invariant checks.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or resource error.

#include "twy/twy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace twy;
using ojson = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string config;
  std::optional<std::string> spec;
  std::optional<int> n, m, order, jobs;
  std::optional<std::string> c, suite, format;
  bool perturb = false;
  std::string output;
  // value commands
  std::string expr;
  std::string weight;
  std::string kind = "p";
  int degree = 1;
  std::string monomial_order = "hc";
};

void add_common(CLI::App* sub, Flags& f, bool suites) {
  sub->add_option("--config", f.config, "key=value file; flags override it");
  sub->add_option("--spec", f.spec, "algebra: gl:<n>, o:<N> or sp:<N>");
  sub->add_option("--n", f.n, "rank override for the family of --spec");
  sub->add_option("--c", f.c, "stability parameter: a rational p/q or 'sym'");
  sub->add_option("--format", f.format, "json or text");
  sub->add_option("--output", f.output, "write the result to this file instead of stdout");
  if (!suites) return;
  sub->add_option("--m", f.m, "centralizer index m");
  sub->add_option("--order", f.order, "truncation order K");
  sub->add_option("--jobs", f.jobs, "worker threads (default: TWY_JOBS or hardware concurrency)");
  sub->add_option("--suite", f.suite, "'all' or a comma-separated list of suites");
  sub->add_flag("--perturb", f.perturb, "inject the control perturbation; checks are expected to fail");
}

SuiteConfig make_config(const Flags& f) {
  SuiteConfig cfg;
  if (!f.config.empty()) load_config_file(cfg, f.config);
  if (f.spec) cfg.spec = *f.spec;
  if (f.n) cfg.n = *f.n;
  if (f.m) cfg.m = *f.m;
  if (f.order) cfg.K = *f.order;
  if (f.c) apply_config_value(cfg, "c", *f.c);
  if (f.suite) cfg.suite = *f.suite;
  if (f.format) apply_config_value(cfg, "format", *f.format);
  if (f.jobs) cfg.jobs = *f.jobs;
  if (f.perturb) cfg.perturb = true;
  return cfg;
}

void write_out(const Flags& f, const std::string& text) {
  if (f.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.output, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + f.output + "'");
  out << text;
}

int run_checks(const Flags& f, const std::optional<std::string>& forced_suite) {
  SuiteConfig cfg = make_config(f);
  if (forced_suite) cfg.suite = *forced_suite;
  Report rep = run_suite(cfg);
  write_out(f, emit_report(rep, cfg.format));
  return rep.all_pass() ? kExitPass : kExitFail;
}

std::string value_output(const SuiteConfig& cfg, ojson j) {
  if (cfg.format == ReportFormat::Json) return j.dump(2) + "\n";
  std::string s;
  for (auto& [k, v] : j.items()) s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return s;
}

ojson header(const AlgebraSpec& spec) {
  ojson j;
  j["version"] = kReportVersion;
  j["spec"] = spec.to_string();
  return j;
}

UEAElement parse_element(const std::string& text, const UeaPtr& ctx) {
  if (text.empty()) throw ConfigError("--expr is required");
  auto e = parse_expr(text);
  validate_expr(*e, ctx->spec());
  return expr_to_element(*e, ctx);
}

int cmd_normal_form(const Flags& f) {
  SuiteConfig cfg = make_config(f);
  const AlgebraSpec spec = cfg.algebra();
  MonomialOrder order;
  if (f.monomial_order == "hc") order = MonomialOrder::hc();
  else if (f.monomial_order == "verma") order = MonomialOrder::verma();
  else throw ConfigError("--monomial-order must be hc or verma");
  auto ctx = Uea::get(spec, order);
  if (f.expr.empty()) throw ConfigError("--expr is required");
  auto e = parse_expr(f.expr);
  validate_expr(*e, spec);
  ojson j = header(spec);
  j["expr"] = print_expr(*e);
  j["order"] = f.monomial_order;
  j["normal_form"] = expr_to_element(*e, ctx).to_string();
  write_out(f, value_output(cfg, j));
  return kExitPass;
}

int cmd_hc_image(const Flags& f) {
  SuiteConfig cfg = make_config(f);
  const AlgebraSpec spec = cfg.algebra();
  auto ctx = Uea::get(spec, MonomialOrder::hc());
  UEAElement a = parse_element(f.expr, ctx);
  if (!is_weight_zero(a)) throw ConfigError("hc-image needs an element of weight zero");
  MultiPoly img = hc_omega(a);
  ojson j = header(spec);
  j["expr"] = print_expr(*parse_expr(f.expr));
  j["hc_image"] = img.to_string();
  j["shifted_symmetric"] = !wprime_violation(img, spec);
  write_out(f, value_output(cfg, j));
  return kExitPass;
}

int cmd_eigenvalue(const Flags& f) {
  SuiteConfig cfg = make_config(f);
  const AlgebraSpec spec = cfg.algebra();
  auto ctx = Uea::get(spec, MonomialOrder::hc());
  UEAElement a = parse_element(f.expr, ctx);
  if (!is_weight_zero(a)) throw ConfigError("eigenvalue needs an element of weight zero");
  auto [c, dev] = parse_weight(f.weight.empty() ? "c=sym" : f.weight);
  auto w = weight_point(spec, c, dev);
  ojson j = header(spec);
  j["expr"] = print_expr(*parse_expr(f.expr));
  j["weight"] = ojson::object();
  for (auto& [v, p] : w) j["weight"][v.name()] = p.to_string();
  j["eigenvalue"] = highest_weight_eigenvalue(a, w).to_string();
  write_out(f, value_output(cfg, j));
  return kExitPass;
}

int cmd_symfun(const Flags& f) {
  SuiteConfig cfg = make_config(f);
  const AlgebraSpec spec = cfg.algebra();
  const MultiPoly c = cfg.c_poly();
  if (f.degree < 1) throw ConfigError("--degree must be positive");
  SymKind kind;
  try {
    kind = parse_sym_kind(f.kind);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  MultiPoly g = sym_generator(spec, kind, f.degree, c);
  ojson j = header(spec);
  j["kind"] = f.kind;
  j["degree"] = f.degree;
  j["c"] = cfg.c_string();
  j["value"] = g.to_string();
  if (spec.n >= 2) {
    MultiPoly low = sym_generator(spec.with_rank(spec.n - 1), kind, f.degree, c);
    MultiPoly pr = project_pi(g, spec, c);
    j["projection"] = pr.to_string();
    j["coherent"] = pr == low;
  }
  write_out(f, value_output(cfg, j));
  return kExitPass;
}

int cmd_invariants(const Flags& f) {
  SuiteConfig cfg = make_config(f);
  const AlgebraSpec spec = cfg.algebra();
  const int m = cfg.m, K = cfg.K;
  const int need = witness_min_rank(spec, m, K);
  WitnessPoint w = witness_point(spec.with_rank(std::max(spec.n, need)), m, K);
  auto vals = witness_values(w);
  auto pt = default_parameter_point(w);
  const int rank = witness_jacobian_rank(w, vals, pt);
  ojson j = header(w.spec);
  j["m"] = m;
  j["K"] = K;
  j["parameters"] = ojson::array();
  for (Var v : w.parameters) j["parameters"].push_back(v.name());
  j["entries"] = ojson::object();
  for (auto& [v, p] : w.entries)
    if (!p.is_zero()) j["entries"][v.name()] = p.to_string();
  j["generators"] = ojson::array();
  for (std::size_t t = 0; t < vals.size(); ++t)
    j["generators"].push_back({{"gen", w.generators[t].to_string()}, {"value", vals[t].to_string()}});
  ojson point = ojson::object();
  for (auto& [v, r] : pt) point[v.name()] = r.to_string();
  j["point"] = point;
  j["jacobian_rank"] = rank;
  j["full_rank"] = rank == static_cast<int>(vals.size());
  ojson warnings = ojson::array();
  for (int M = 1; M <= K; ++M)
    if (auto d = degree_warning(w.spec, m, M)) warnings.push_back(*d);
  j["warnings"] = warnings;
  write_out(f, value_output(cfg, j));
  return rank == static_cast<int>(vals.size()) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for centralizer constructions of Yangians and twisted Yangians"};
  app.require_subcommand(1);
  Flags f;

  auto* rel = app.add_subcommand("check-relations", "run verification suites and print a report");
  add_common(rel, f, true);
  auto* proj = app.add_subcommand("check-projection", "projection coherence from rank n down to rank 1");
  add_common(proj, f, true);
  auto* qd = app.add_subcommand("qdet", "centrality and shifted symmetry of quantum determinant coefficients");
  add_common(qd, f, true);
  auto* hc = app.add_subcommand("hc-image", "Harish-Chandra image of a weight-zero element");
  add_common(hc, f, false);
  hc->add_option("--expr", f.expr, "element, e.g. \"E[1,1]*E[2,2] - c\"")->required();
  auto* ev = app.add_subcommand("eigenvalue", "eigenvalue on the highest weight vector");
  add_common(ev, f, false);
  ev->add_option("--expr", f.expr, "weight-zero element")->required();
  ev->add_option("--weight", f.weight, "\"c=<rational|sym>; dev=[i:value,...]\"");
  auto* sf = app.add_subcommand("symfun", "symmetric-function generators and their projection");
  add_common(sf, f, false);
  sf->add_option("--kind", f.kind, "p, e or h");
  sf->add_option("--degree", f.degree, "degree of the generator");
  auto* inv = app.add_subcommand("invariants", "witness point and Jacobian rank for the trace and corner invariants");
  add_common(inv, f, false);
  inv->add_option("--m", f.m, "corner block size m");
  inv->add_option("--order", f.order, "largest power K");
  auto* nf = app.add_subcommand("normal-form", "PBW normal form of an expression");
  add_common(nf, f, false);
  nf->add_option("--expr", f.expr, "expression")->required();
  nf->add_option("--monomial-order", f.monomial_order, "hc or verma");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rel) return run_checks(f, std::nullopt);
    if (*proj) return run_checks(f, std::string("projection"));
    if (*qd) return run_checks(f, std::string("qdet"));
    if (*hc) return cmd_hc_image(f);
    if (*ev) return cmd_eigenvalue(f);
    if (*sf) return cmd_symfun(f);
    if (*inv) return cmd_invariants(f);
    if (*nf) return cmd_normal_form(f);
  } catch (const ParseError& e) {
    std::cerr << "twy: expression error at line " << e.loc().line << ", column " << e.loc().col << ": " << e.message()
              << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "twy: resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "twy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "twy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "twy: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
