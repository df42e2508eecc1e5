// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "twy/twy.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace twy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

SuiteConfig config(const std::string& spec, const std::string& suite, int K, int m = 1) {
  SuiteConfig cfg;
  cfg.spec = spec;
  cfg.suite = suite;
  cfg.K = K;
  cfg.m = m;
  cfg.jobs = default_jobs();
  return cfg;
}

std::string first_failure(const Report& rep) {
  for (const auto& r : rep.checks)
    if (!r.pass) return text_line(r);
  return {};
}

std::string instance(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.instance)
    if (k == key) return v;
  return {};
}

/// Runs cfg and requires every check to pass; returns the report.
Report expect_pass(Outcome& o, const SuiteConfig& cfg, double limit = 0) {
  auto t0 = Clock::now();
  Report rep;
  try {
    rep = run_suite(cfg);
  } catch (const std::exception& e) {
    o.fail(cfg.spec + " " + cfg.suite + ": " + e.what());
    return rep;
  }
  const double dt = seconds_since(t0);
  o.checks += rep.checks.size();
  if (rep.checks.empty()) o.fail(cfg.spec + " " + cfg.suite + ": no checks ran");
  if (!rep.all_pass()) o.fail(cfg.spec + " K=" + std::to_string(cfg.K) + ": " + first_failure(rep));
  if (limit > 0 && dt > limit) {
    std::ostringstream s;
    s << cfg.spec << " " << cfg.suite << " took " << dt << " s, limit " << limit << " s";
    o.fail(s.str());
  }
  return rep;
}

/// Runs the perturbed cfg and requires at least one failing check.
void expect_control_fails(Outcome& o, SuiteConfig cfg) {
  cfg.perturb = true;
  Report rep = run_suite(cfg);
  o.checks += rep.checks.size();
  if (rep.all_pass()) o.fail("control " + cfg.spec + " " + cfg.suite + " did not fail");
  for (const auto& r : rep.checks)
    if (!r.pass && r.witness.empty()) o.fail("control failure without witness: " + text_line(r));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return "<missing " + path + ">";
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

Outcome lie_axioms() {
  Outcome o;
  auto t0 = Clock::now();
  for (const char* s : {"gl:3", "o:4", "o:5", "o:6", "sp:4"}) expect_pass(o, config(s, "lie", 1));
  if (seconds_since(t0) > 60) o.fail("over one minute");
  return o;
}

Outcome ternary_eta() {
  Outcome o;
  expect_pass(o, config("gl:2", "ternary", 4), 60);
  expect_pass(o, config("gl:3", "ternary", 4), 900);
  return o;
}

Outcome phi_gl2() {
  Outcome o;
  expect_pass(o, config("gl:2", "ternary-phi", 3));
  // r = 1 is phi(t1_kl) = E_kl - delta_kl c
  Report rec = expect_pass(o, config("gl:2", "recursion", 4));
  if (rec.checks.size() != 4) o.fail("expected recursion reports for M = 1..4");
  return o;
}

Outcome projection_gl() {
  Outcome o;
  Report rep = expect_pass(o, config("gl:3", "projection", 4));
  bool r3 = false, r2 = false;
  for (const auto& r : rep.checks) {
    r3 = r3 || instance(r, "spec") == "gl:3";
    r2 = r2 || instance(r, "spec") == "gl:2";
  }
  if (!r3 || !r2) o.fail("missing a projection step");
  expect_control_fails(o, config("gl:3", "projection", 4));
  return o;
}

Outcome qdet_center() {
  Outcome o;
  for (const char* s : {"gl:2", "gl:3"}) expect_pass(o, config(s, "qdet", 4));
  return o;
}

Outcome twisted_relations() {
  Outcome o;
  for (const char* s : {"o:3", "o:4", "o:5", "sp:2", "sp:4"}) expect_pass(o, config(s, "reflection", 3));
  expect_control_fails(o, config("sp:2", "reflection", 3));
  return o;
}

Outcome sigma_coherence() {
  Outcome o;
  expect_pass(o, config("sp:4", "projection", 3));
  Report b = expect_pass(o, config("o:5", "projection", 3));
  bool zero = false;
  for (const auto& r : b.checks) zero = zero || instance(r, "i") == "0";
  if (!zero) o.fail("no 0-index instance in o:5");
  expect_control_fails(o, config("sp:4", "projection", 3));
  return o;
}

Outcome chi_compat() {
  Outcome o;
  for (const char* s : {"sp:8", "o:8", "o:9"})
    for (int K = 1; K <= 6; ++K) expect_pass(o, config(s, "chi", K));
  return o;
}

Outcome phi_tensor() {
  Outcome o;
  for (const char* s : {"sp:2", "o:3"}) {
    Report rep = expect_pass(o, config(s, "phi-tensor", 2));
    for (const auto& r : rep.checks)
      if (!instance(r, "mode").empty()) o.fail("K=2 must be checked exactly");
  }
  return o;
}

Outcome centralizer() {
  Outcome o;
  for (const char* s : {"gl:3", "o:5", "sp:4"}) expect_pass(o, config(s, "centralizer", 3, 1));
  return o;
}

Outcome symmetric_functions() {
  Outcome o;
  for (const char* s : {"gl:6", "sp:12", "o:12", "o:13"}) expect_pass(o, config(s, "symfun", 6));
  for (const char* s : {"gl:3", "sp:6", "o:6", "o:7"}) {
    Report rep = expect_pass(o, config(s, "eigenvalue", 1));
    std::set<std::string> weights;
    for (const auto& r : rep.checks) weights.insert(instance(r, "weight"));
    if (weights.size() < 2) o.fail(std::string(s) + ": weights are not varied");
  }
  return o;
}

Outcome invariant_theory() {
  Outcome o;
  for (const char* fam : {"gl:", "sp:", "o:"}) {
    for (int n = 2; n <= 4; ++n) {
      const std::string s = fam == std::string("gl:") ? "gl:" + std::to_string(n) : fam + std::to_string(2 * n);
      expect_pass(o, config(s, "invariants", 4, 1));
    }
  }
  for (int n = 2; n <= 4; ++n) expect_pass(o, config("o:" + std::to_string(2 * n + 1), "invariants", 4, 1));
  for (const char* s : {"gl:2", "sp:4", "o:4", "o:5"}) {
    Report rep = expect_pass(o, config(s, "invariants", 2, 1));
    bool witness = false;
    for (const auto& r : rep.checks) witness = witness || r.name == "witness-jacobian";
    if (!witness) o.fail("no witness report for " + std::string(s));
  }
  return o;
}

Outcome membership() {
  Outcome o;
  std::map<std::string, int> per_family;
  for (const char* s : {"gl:3", "sp:6", "o:6", "o:7"}) {
    Report rep = expect_pass(o, config(s, "membership", 1));
    for (const auto& r : rep.checks)
      if (r.name == "membership-agreement") ++per_family[std::string(s).substr(0, 2) + s[std::string(s).size() - 1]];
  }
  for (const auto& [f, k] : per_family)
    if (k < 100) o.fail(f + ": only " + std::to_string(k) + " samples");
  return o;
}

Outcome determinism() {
  Outcome o;
  for (auto [s, K] : {std::pair{"gl:2", 3}, std::pair{"sp:4", 2}, std::pair{"o:5", 2}}) {
    std::string first;
    for (int jobs : {1, 2, 4, 8}) {
      auto cfg = config(s, "all", K);
      cfg.jobs = jobs;
      std::string out = emit_report(run_suite(cfg), ReportFormat::Json);
      ++o.checks;
      if (first.empty()) first = out;
      else if (out != first) o.fail(std::string(s) + ": jobs=" + std::to_string(jobs) + " differs from jobs=1");
    }
  }
  const std::string dir = TWY_GOLDEN_DIR;
  auto golden = [&](SuiteConfig cfg, const std::string& file) {
    ++o.checks;
    if (emit_report(run_suite(cfg), ReportFormat::Json) != slurp(dir + "/" + file)) o.fail("golden mismatch: " + file);
  };
  golden(config("gl:2", "all", 3), "gl2_K3.json");
  golden(config("sp:4", "all", 2), "sp4_K2.json");
  auto ctl = config("gl:2", "ternary", 3);
  ctl.perturb = true;
  golden(ctl, "gl2_K3_ternary_perturbed.json");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Lie axioms for gl(3), o(4), o(5), o(6), sp(4)", lie_axioms},
      {"ternary relation for eta at gl(2), gl(3), K=4", ternary_eta},
      {"phi at gl(2) with symbolic c, K=3; first coefficients and recursion M<=4", phi_gl2},
      {"projection coherence gl(3)->gl(2)->gl(1), K=4; perturbed control fails", projection_gl},
      {"qdet centrality and shifted symmetry at gl(2), gl(3), K=4", qdet_center},
      {"reflection and symmetry for S_eta at o(3..5), sp(2), sp(4), K=3; wrong sign fails", twisted_relations},
      {"Sigma coherence sp(4)->sp(2), o(5)->o(3), k<=3", sigma_coherence},
      {"chi compatibility for n<=4, K<=6", chi_compat},
      {"tensor-model phi at sp(2), o(3), K=2", phi_tensor},
      {"centralizer property at (gl(3),1), (o(5),1), (sp(4),1), orders<=3", centralizer},
      {"Newton identities, symmetric-function coherence, eigenvalue bridge", symmetric_functions},
      {"invariant stability M,n<=4, witness Jacobian rank, parity table", invariant_theory},
      {"left/right membership and multiplicativity on >=100 samples per family", membership},
      {"byte-identical reports across worker counts; golden files", determinism},
  };
  int failed = 0;
  auto total0 = Clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    char head[64];
    std::snprintf(head, sizeof head, "%s %2zu ", o.pass ? "PASS" : "FAIL", k + 1);
    std::cout << head << criteria[k].first << " [" << o.checks << " checks, " << std::fixed;
    std::cout.precision(2);
    std::cout << seconds_since(t0) << " s]";
    if (!o.pass) std::cout << " :: " << o.detail;
    std::cout << std::endl;
    failed += !o.pass;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed in "
            << seconds_since(total0) << " s" << std::endl;
  return failed ? 1 : 0;
}
