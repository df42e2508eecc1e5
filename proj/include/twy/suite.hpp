#pragma once

// Suite orchestration: configuration (flags, key=value files, TWY_JOBS),
// task generation per suite, a worker pool and deterministic merging.

#include "twy/invariants.hpp"
#include "twy/relations.hpp"
#include "twy/report.hpp"
#include "twy/series_matrix.hpp"
#include "twy/symfun.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace twy {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::string spec = "gl:2";
  std::optional<int> n;       // rank override, same family
  int m = 1;
  int K = 3;
  std::optional<Rational> c;  // nullopt: symbolic c
  std::string suite = "all";
  ReportFormat format = ReportFormat::Json;
  int jobs = 0;               // 0: TWY_JOBS, else hardware concurrency
  bool perturb = false;

  AlgebraSpec algebra() const {
    AlgebraSpec s;
    try {
      s = AlgebraSpec::parse(spec);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (n) {
      if (*n < 1) throw ConfigError("n must be positive");
      s = s.with_rank(*n);
    }
    return s;
  }
  MultiPoly c_poly() const { return c ? MultiPoly(*c) : MultiPoly::var(Var::c()); }
  std::string c_string() const { return c ? c->to_string() : "c"; }
};

inline int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int r = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError(key + " must be an integer, got '" + v + "'");
  }
}

inline std::optional<Rational> parse_c(const std::string& v) {
  if (v == "c" || v == "sym" || v == "symbolic") return std::nullopt;
  try {
    return Rational::parse(v);
  } catch (const std::exception&) {
    throw ConfigError("c must be a rational p/q or 'sym', got '" + v + "'");
  }
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError(key + " must be true or false, got '" + v + "'");
}

inline void apply_config_value(SuiteConfig& cfg, const std::string& key, const std::string& v) {
  if (key == "spec") cfg.spec = v;
  else if (key == "n") cfg.n = parse_int(key, v);
  else if (key == "m") cfg.m = parse_int(key, v);
  else if (key == "order" || key == "K") cfg.K = parse_int(key, v);
  else if (key == "c") cfg.c = parse_c(v);
  else if (key == "suite") cfg.suite = v;
  else if (key == "format") {
    try {
      cfg.format = parse_report_format(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "jobs") cfg.jobs = parse_int(key, v);
  else if (key == "perturb") cfg.perturb = parse_bool(key, v);
  else throw ConfigError("unknown config key '" + key + "'");
}

/// key = value lines; '#' starts a comment.
inline void load_config_text(SuiteConfig& cfg, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    try {
      apply_config_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

inline void load_config_file(SuiteConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  load_config_text(cfg, ss.str());
}

inline int default_jobs() {
  if (const char* e = std::getenv("TWY_JOBS")) {
    try {
      int j = std::stoi(e);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// "c=<rational|sym>; dev=[i:value,...]" with row indices as in weight_point.
inline std::pair<MultiPoly, std::map<int, MultiPoly>> parse_weight(const std::string& text) {
  MultiPoly c = MultiPoly::var(Var::c());
  std::map<int, MultiPoly> dev;
  std::stringstream in(text);
  std::string part;
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  while (std::getline(in, part, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("weight: expected key=value in '" + part + "'");
    std::string key = trim(part.substr(0, eq)), val = trim(part.substr(eq + 1));
    if (key == "c") {
      auto r = parse_c(val);
      c = r ? MultiPoly(*r) : MultiPoly::var(Var::c());
    } else if (key == "dev") {
      if (val.size() < 2 || val.front() != '[' || val.back() != ']') throw ConfigError("weight: dev must look like [i:value,...]");
      std::stringstream items(val.substr(1, val.size() - 2));
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("weight: deviation '" + item + "' needs i:value");
        const int i = parse_int("deviation row", trim(item.substr(0, colon)));
        auto v = parse_c(trim(item.substr(colon + 1)));
        if (!v) throw ConfigError("weight: deviation values must be rational");
        dev[i] = MultiPoly(*v);
      }
    } else {
      throw ConfigError("weight: unknown key '" + key + "'");
    }
  }
  return {c, dev};
}

// ---------------------------------------------------------------------------
// Suites.

struct SuiteTask {
  std::string label;
  std::function<std::vector<CheckReport>()> run;
};

enum class Applies { Gl, Twisted, Any };

struct SuiteInfo {
  const char* name;
  Applies applies;
  int min_rank;
  int max_size;  // largest matrix size N
  int max_K;
  int min_K;
};

inline const std::vector<SuiteInfo>& suite_table() {
  static const std::vector<SuiteInfo> t{
      {"lie", Applies::Any, 1, 12, 99, 0},
      {"ternary", Applies::Gl, 1, 4, 6, 2},
      {"ternary-phi", Applies::Gl, 1, 4, 6, 2},
      {"recursion", Applies::Any, 1, 7, 6, 1},
      {"first-commutators", Applies::Any, 1, 5, 5, 1},
      {"qdet", Applies::Gl, 1, 3, 5, 1},
      {"reflection", Applies::Twisted, 1, 5, 4, 2},
      {"phi-tensor", Applies::Twisted, 1, 5, 3, 2},
      {"projection", Applies::Any, 2, 7, 4, 1},
      {"centralizer", Applies::Any, 2, 7, 4, 1},
      {"chi", Applies::Twisted, 2, 17, 8, 1},
      {"symfun", Applies::Any, 2, 17, 8, 1},
      {"eigenvalue", Applies::Any, 1, 7, 99, 0},
      {"invariants", Applies::Any, 2, 9, 4, 1},
      {"membership", Applies::Any, 2, 7, 99, 0},
  };
  return t;
}

inline const SuiteInfo& suite_info(const std::string& name) {
  for (const auto& s : suite_table())
    if (name == s.name) return s;
  std::string known;
  for (const auto& s : suite_table()) known += std::string(known.empty() ? "" : ", ") + s.name;
  throw ConfigError("unknown suite '" + name + "' (known: all, " + known + ")");
}

inline bool suite_applies(const SuiteInfo& s, const AlgebraSpec& spec) {
  if (s.applies == Applies::Gl && !spec.is_gl()) return false;
  if (s.applies == Applies::Twisted && spec.is_gl()) return false;
  return spec.n >= s.min_rank;
}

/// Suites selected by cfg.suite ("all" or a comma-separated list).
inline std::vector<std::string> selected_suites(const SuiteConfig& cfg, const AlgebraSpec& spec) {
  std::vector<std::string> r;
  if (cfg.suite == "all") {
    for (const auto& s : suite_table())
      if (suite_applies(s, spec)) r.emplace_back(s.name);
    return r;
  }
  std::stringstream in(cfg.suite);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto& s = suite_info(name);
    if (!suite_applies(s, spec))
      throw ConfigError("suite '" + name + "' does not apply to " + spec.to_string() +
                        (spec.n < s.min_rank ? " (rank too small)" : ""));
    r.push_back(name);
  }
  return r;
}

inline void validate_config(const SuiteConfig& cfg, const AlgebraSpec& spec, const std::vector<std::string>& suites) {
  if (cfg.K < 1) throw ConfigError("order K must be positive");
  if (cfg.jobs < 0) throw ConfigError("jobs must be nonnegative");
  for (const auto& name : suites) {
    const auto& s = suite_info(name);
    if (name == "centralizer" || name == "invariants") {
      if (cfg.m < (spec.has_zero_index() ? -1 : 0)) throw ConfigError("m out of range");
      if (cfg.m >= spec.n) throw ConfigError("suite '" + name + "' needs m < n");
    }
    if (cfg.K < s.min_K)
      throw ConfigError("suite '" + name + "' needs K >= " + std::to_string(s.min_K) + " for a nonempty window");
    if (spec.matrix_size() > s.max_size || cfg.K > s.max_K)
      throw ResourceError("suite '" + name + "' at " + spec.to_string() + " with K=" + std::to_string(cfg.K) +
                          " exceeds the desk-scale limit (matrix size <= " + std::to_string(s.max_size) +
                          ", K <= " + std::to_string(s.max_K) + ")");
  }
}

namespace detail {

inline UeaPtr hc_ctx(const AlgebraSpec& s) { return Uea::get(s, MonomialOrder::hc()); }

/// One task per first index, sharing the pair products.
template <class Instance>
void add_four_index_tasks(std::vector<SuiteTask>& out, const std::string& label, std::shared_ptr<const UeaMatrix> M,
                          Instance inst) {
  auto P = std::make_shared<PairProducts<UEAElement>>(*M);
  for (int i : M->labels())
    out.push_back({label + " i=" + std::to_string(i), [M, P, inst, i] {
                     std::vector<CheckReport> r;
                     for (int j : M->labels())
                       for (int k : M->labels())
                         for (int l : M->labels()) r.push_back(inst(*P, i, j, k, l));
                     return r;
                   }});
}

inline std::vector<CheckReport> tag(std::vector<CheckReport> rs, const std::string& key, const std::string& value) {
  for (auto& r : rs) r.instance.insert(r.instance.begin(), {key, value});
  return rs;
}

inline void add_suite_tasks(std::vector<SuiteTask>& out, const std::string& name, const SuiteConfig& cfg,
                            const AlgebraSpec& spec) {
  const MultiPoly c = cfg.c_poly();
  const int K = cfg.K;
  const bool perturb = cfg.perturb;
  auto ctx = hc_ctx(spec);

  if (name == "lie") {
    out.push_back({name, [spec] { return check_lie_axioms(spec); }});
  } else if (name == "ternary" || name == "ternary-phi") {
    auto T = std::make_shared<const UeaMatrix>(name == "ternary" ? build_T_eta(ctx, K) : build_T_phi(ctx, c, K));
    const std::string b = name == "ternary" ? "eta" : "phi";
    add_four_index_tasks(out, name, T, [perturb, b](const PairProducts<UEAElement>& P, int i, int j, int k, int l) {
      auto r = ternary_instance(P, i, j, k, l, perturb);
      r.instance.insert(r.instance.begin(), {"builder", b});
      return r;
    });
  } else if (name == "reflection" || name == "phi-tensor") {
    std::shared_ptr<const UeaMatrix> S;
    std::string b;
    if (name == "reflection") {
      S = std::make_shared<const UeaMatrix>(build_S_eta(ctx, K));
      b = "eta";
    } else {
      S = std::make_shared<const UeaMatrix>(perturb ? build_Sigma(ctx, c, K) : build_phi_tensor(ctx, c, K));
      b = "phi";
    }
    ReflectionControls ctl{name == "reflection" && perturb};
    // The tensor model agrees with phi exactly up to K = 2; beyond that only
    // modulo central elements, so residuals are evaluated on M(lambda).
    const bool module = name == "phi-tensor" && K > 2;
    Reducer<UEAElement> reduce;
    if (module) reduce = [](const UEAElement& a) { return verma_module_reduce(a); };
    auto mark = [module](CheckReport r, const std::string& b) {
      if (!b.empty()) r.instance.insert(r.instance.begin(), {"builder", b});
      if (module) r.instance.insert(r.instance.begin() + 1, {"mode", "module"});
      return r;
    };
    add_four_index_tasks(out, name, S, [spec, ctl, b, reduce, mark](const PairProducts<UEAElement>& P, int i, int j, int k, int l) {
      return mark(reflection_instance(P, spec, i, j, k, l, ctl, reduce), b);
    });
    const bool sign = name == "reflection" && perturb ? !spec.orthogonal() : spec.orthogonal();
    out.push_back({name + " symmetry", [S, spec, sign, b, reduce, mark] {
                     auto rs = check_symmetry(*S, spec, sign, reduce);
                     for (auto& r : rs) r = mark(std::move(r), b);
                     return rs;
                   }});
  } else if (name == "recursion") {
    out.push_back({name, [ctx, spec, c, K, perturb] {
                     if (spec.is_gl())
                       return tag(check_recursion(build_T_phi(ctx, c, K), ctx, -c, Rational(spec.n + (perturb ? 1 : 0))),
                                  "builder", "phi");
                     return tag(check_recursion(build_Sigma(ctx, c, K), ctx, c, kappa(spec) + Rational(perturb ? 1 : 0)),
                                "builder", "sigma");
                   }});
  } else if (name == "first-commutators") {
    out.push_back({name + " eta", [ctx, spec, K] {
                     if (spec.is_gl()) return tag(check_first_commutators_gl(build_T_eta(ctx, K)), "builder", "eta");
                     return tag(check_first_commutators_twisted(build_S_eta(ctx, K), spec), "builder", "eta");
                   }});
    out.push_back({name + " image", [ctx, spec, c, K] {
                     if (spec.is_gl()) return tag(check_first_commutators_gl(build_T_phi(ctx, c, K)), "builder", "phi");
                     return tag(check_first_commutators_twisted(build_Sigma(ctx, c, K), spec), "builder", "sigma");
                   }});
  } else if (name == "qdet") {
    out.push_back({name + " eta", [ctx, K] { return check_qdet(build_T_eta(ctx, K), "eta"); }});
    out.push_back({name + " phi", [ctx, c, K] { return check_qdet(build_T_phi(ctx, c, K), "phi"); }});
  } else if (name == "projection") {
    for (int r = spec.n; r >= 2; --r)
      out.push_back({name + " rank " + std::to_string(r),
                     [top = spec.with_rank(r), c, K, perturb] { return check_projection_coherence(top, c, K, perturb); }});
  } else if (name == "centralizer") {
    const int m = cfg.m;
    out.push_back({name, [ctx, spec, c, K, m] {
                     auto M = spec.is_gl() ? build_T_phi(ctx, c, K) : build_Sigma(ctx, c, K);
                     return check_centralizer_images(M, m, spec.is_gl() ? "phi" : "sigma");
                   }});
  } else if (name == "chi") {
    out.push_back({name, [spec, c, K] {
                     std::vector<CheckReport> rs;
                     for (int r = 2; r <= spec.n; ++r) {
                       const AlgebraSpec s = spec.with_rank(r);
                       auto hi = chi_series(s, c, K), lo = chi_series(s.with_rank(r - 1), c, K);
                       std::string bad;
                       for (int k = 0; k <= K && bad.empty(); ++k)
                         if (!(project_pi(hi[k], s, c) == lo[k])) bad = "u^-" + std::to_string(k);
                       rs.push_back(make_report("chi-projection", bad.empty(), bad).with("spec", s.to_string()));
                     }
                     return rs;
                   }});
  } else if (name == "symfun") {
    out.push_back({name + " newton", [spec, c, K] {
                     auto v = newton_violation(spec, c, K);
                     return std::vector<CheckReport>{
                         make_report("newton", !v, v.value_or("")).with("spec", spec.to_string()).with("K", K)};
                   }});
    out.push_back({name + " coherence", [spec, c, K] {
                     std::vector<CheckReport> rs;
                     for (SymKind kind : {SymKind::P, SymKind::E, SymKind::H}) {
                       const char* kn = kind == SymKind::P ? "p" : kind == SymKind::E ? "e" : "h";
                       for (int m = 1; m <= K; ++m) {
                         auto bad = coherence_violation(spec.family, 1, spec.n, c,
                                                        [&](const AlgebraSpec& s) { return sym_generator(s, kind, m, c); });
                         rs.push_back(make_report("symfun-coherence", !bad,
                                                  bad ? "fails at rank " + std::to_string(*bad) : "")
                                          .with("spec", spec.to_string()).with("kind", kn).with("m", m));
                       }
                     }
                     return rs;
                   }});
  } else if (name == "eigenvalue") {
    out.push_back({name, [ctx, spec] {
                     std::mt19937_64 rng(2024);
                     std::vector<UEAElement> zs;
                     for (int M = 1; M <= 3; ++M) zs.push_back(gelfand_invariant(ctx, M));
                     zs.push_back(zs[1] * zs[1] - zs[0] * zs[2]);
                     std::vector<CheckReport> rs;
                     for (int t = 0; t < 5; ++t) {
                       std::map<Var, MultiPoly> w;
                       std::string ws;
                       for (int k = 1; k <= spec.n; ++k) {
                         const int v = static_cast<int>(rng() % 13) - 6;
                         w[weight_var(spec, k)] = MultiPoly(v);
                         ws += (k > 1 ? "," : "") + std::to_string(v);
                       }
                       for (std::size_t z = 0; z < zs.size(); ++z) {
                         const bool ok = highest_weight_eigenvalue(zs[z], w) == verma_eigenvalue(zs[z], w);
                         rs.push_back(make_report("eigenvalue-bridge", ok, ok ? "" : "Harish-Chandra value differs from the Verma action")
                                          .with("spec", spec.to_string()).with("weight", "[" + ws + "]").with("element", static_cast<int>(z)));
                       }
                     }
                     return rs;
                   }});
  } else if (name == "invariants") {
    const int m = cfg.m;
    out.push_back({name + " stability", [spec, K] {
                     std::vector<CheckReport> rs;
                     for (const auto& [g, ok] : stability_results(spec, stability_generators(spec, K)))
                       rs.push_back(make_report("invariant-stability", ok, ok ? "" : "difference leaves the graded ideal")
                                        .with("spec", spec.to_string()).with("gen", g.to_string()));
                     return rs;
                   }});
    out.push_back({name + " parity", [spec, K] {
                     std::vector<CheckReport> rs;
                     if (spec.is_gl()) return rs;
                     auto X = matrix_powers(symbolic_matrix(spec), K);
                     for (int M = 1; M <= K; ++M) {
                       const auto& XM = X[static_cast<std::size_t>(M - 1)];
                       std::string bad;
                       if (parity_allowed(spec, trace_gen(M)) == evaluate_gen(spec, XM, trace_gen(M)).is_zero())
                         bad = "trace";
                       for (int i : spec.index_set())
                         for (int j : spec.index_set()) {
                           auto g = corner_gen(M, i, j);
                           auto [sg, partner] = parity_partner(spec, g);
                           auto v = evaluate_gen(spec, XM, g);
                           if (bad.empty() && !(v == evaluate_gen(spec, XM, partner) * Rational(sg))) bad = g.to_string();
                           if (bad.empty() && !parity_allowed(spec, g) && !v.is_zero() && !parity_allowed(spec, partner))
                             bad = g.to_string();
                         }
                       rs.push_back(make_report("invariant-parity", bad.empty(), bad).with("spec", spec.to_string()).with("M", M));
                     }
                     return rs;
                   }});
    out.push_back({name + " witness", [spec, m, K] {
                     const int need = witness_min_rank(spec, m, K);
                     auto w = witness_point(spec.with_rank(std::max(need, spec.n)), m, K);
                     auto vals = witness_values(w);
                     const int rank = witness_jacobian_rank(w, vals, default_parameter_point(w));
                     const bool ok = rank == static_cast<int>(vals.size()) && !witness_consistency(w);
                     return std::vector<CheckReport>{
                         make_report("witness-jacobian", ok,
                                     ok ? "" : "rank " + std::to_string(rank) + " of " + std::to_string(vals.size()))
                             .with("spec", w.spec.to_string()).with("m", m).with("K", K)};
                   }});
    if (spec.n <= 3)
      out.push_back({name + " adjoint", [spec, m, K] {
                       std::vector<CheckReport> rs;
                       for (int M = 1; M <= K; ++M) {
                         std::vector<InvariantGen> gens{trace_gen(M)};
                         for (int i : spec.index_set())
                           for (int j : spec.index_set())
                             if (in_corner(spec, m, i) && in_corner(spec, m, j)) gens.push_back(corner_gen(M, i, j));
                         for (const auto& g : gens) {
                           auto v = adjoint_violation(spec, m, invariant_gen(spec, g, m));
                           rs.push_back(make_report("invariant-adjoint", !v,
                                                    v ? "moved by (" + std::to_string(v->i) + "," + std::to_string(v->j) + ")" : "")
                                            .with("spec", spec.to_string()).with("m", m).with("gen", g.to_string()));
                         }
                       }
                       return rs;
                     }});
  } else if (name == "membership") {
    for (int r = 2; r <= spec.n; ++r)
      out.push_back({name + " rank " + std::to_string(r),
                     [s = spec.with_rank(r), c] { return check_membership_agreement(s, c, 100, 1); }});
  } else {
    throw ConfigError("unknown suite '" + name + "'");
  }
}

}  // namespace detail

inline std::vector<SuiteTask> build_tasks(const SuiteConfig& cfg) {
  const AlgebraSpec spec = cfg.algebra();
  auto suites = selected_suites(cfg, spec);
  validate_config(cfg, spec, suites);
  std::vector<SuiteTask> out;
  for (const auto& s : suites) {
    std::vector<SuiteTask> part;
    detail::add_suite_tasks(part, s, cfg, spec);
    for (auto& t : part) {
      auto run = std::move(t.run);
      out.push_back({t.label, [run, s] { return detail::tag(run(), "suite", s); }});
    }
  }
  return out;
}

/// Runs tasks on a pool of the given size; results are concatenated in task
/// order, so the output does not depend on the pool size.
inline std::vector<CheckReport> run_tasks(const std::vector<SuiteTask>& tasks, int jobs) {
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      try {
        results[t] = tasks[t].run();
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<CheckReport> merged;
  for (auto& r : results)
    for (auto& x : r) merged.push_back(std::move(x));
  return merged;
}

inline Report run_suite(const SuiteConfig& cfg) {
  const AlgebraSpec spec = cfg.algebra();
  auto tasks = build_tasks(cfg);
  Report rep;
  rep.params = ReportParams{spec.to_string(), spec.n, cfg.m, cfg.K, cfg.c_string()};
  rep.checks = run_tasks(tasks, cfg.jobs > 0 ? cfg.jobs : default_jobs());
  return rep;
}

}  // namespace twy
