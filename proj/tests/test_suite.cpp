#include "twy/suite.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace twy;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SuiteConfig config(const std::string& spec, int K, const std::string& suite = "all", int jobs = 1) {
  SuiteConfig cfg;
  cfg.spec = spec;
  cfg.K = K;
  cfg.suite = suite;
  cfg.jobs = jobs;
  return cfg;
}

}  // namespace

TEST_CASE("empty and single-check reports") {
  CHECK(emit_report(Report{}, ReportFormat::Json) == "{\"checks\":[]}\n");
  Report one;
  one.checks.push_back(CheckReport{"ternary", {{"i", "1"}}, true, ""});
  auto j = nlohmann::ordered_json::parse(emit_report(one, ReportFormat::Json));
  CHECK(j["checks"][0]["pass"] == true);
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK(emit_report(one, ReportFormat::Text) == "PASS ternary i=1\n1/1 checks passed\n");
}

TEST_CASE("report keys keep their order") {
  Report rep;
  rep.params = ReportParams{"gl:2", 2, 1, 3, "1/2"};
  rep.checks.push_back(CheckReport{"x", {{"z", "1"}, {"a", "2"}}, false, "u^1: 3/4"});
  const std::string s = emit_report(rep, ReportFormat::Json);
  CHECK(s.find("\"version\"") < s.find("\"spec\""));
  CHECK(s.find("\"spec\"") < s.find("\"params\""));
  CHECK(s.find("\"z\"") < s.find("\"a\""));
  CHECK(s.find("\"c\": \"1/2\"") != std::string::npos);
  CHECK(s.find("\"witness\": \"u^1: 3/4\"") != std::string::npos);
}

TEST_CASE("config text mirrors the flags") {
  SuiteConfig cfg;
  load_config_text(cfg, "# reference\nspec = sp:4\norder=2\nc = 1/3\nsuite=projection,chi\n\njobs = 2\nperturb = yes\n");
  CHECK(cfg.spec == "sp:4");
  CHECK(cfg.K == 2);
  REQUIRE(cfg.c);
  CHECK(*cfg.c == Rational(1, 3));
  CHECK(cfg.suite == "projection,chi");
  CHECK(cfg.jobs == 2);
  CHECK(cfg.perturb);
  load_config_text(cfg, "c = sym");
  CHECK_FALSE(cfg.c);
  CHECK_THROWS_AS(load_config_text(cfg, "colour = red"), ConfigError);
  CHECK_THROWS_AS(load_config_text(cfg, "order"), ConfigError);
  CHECK_THROWS_AS(load_config_text(cfg, "order = two"), ConfigError);
  CHECK_THROWS_AS(load_config_file(cfg, "/nonexistent/twy.cfg"), ConfigError);
}

TEST_CASE("weight strings") {
  auto [c, dev] = parse_weight("c=2; dev=[1:3, 2:-1/2]");
  CHECK(c == MultiPoly(Rational(2)));
  CHECK(dev.size() == 2);
  CHECK(dev.at(2) == MultiPoly(Rational(-1, 2)));
  auto [cs, none] = parse_weight("c=sym");
  CHECK(cs == MultiPoly::var(Var::c()));
  CHECK(none.empty());
  CHECK_THROWS_AS(parse_weight("dev=1:2"), ConfigError);
  CHECK_THROWS_AS(parse_weight("mu=2"), ConfigError);
  CHECK_THROWS_AS(parse_weight("dev=[1:c]"), ConfigError);
}

TEST_CASE("suite selection and limits") {
  auto gl2 = AlgebraSpec::parse("gl:2");
  auto all = selected_suites(config("gl:2", 3), gl2);
  CHECK(std::find(all.begin(), all.end(), "ternary") != all.end());
  CHECK(std::find(all.begin(), all.end(), "reflection") == all.end());
  CHECK_THROWS_AS(selected_suites(config("gl:2", 3, "reflection"), gl2), ConfigError);
  CHECK_THROWS_AS(selected_suites(config("gl:2", 3, "nope"), gl2), ConfigError);
  CHECK_THROWS_AS(build_tasks(config("gl:2", 1, "ternary")), ConfigError);
  CHECK_THROWS_AS(build_tasks(config("gl:9", 2, "ternary")), ResourceError);
  CHECK_THROWS_AS(build_tasks(config("gl:2", 7, "ternary")), ResourceError);
  auto bad_m = config("gl:2", 2, "centralizer");
  bad_m.m = 2;
  CHECK_THROWS_AS(build_tasks(bad_m), ConfigError);
  CHECK_NOTHROW(build_tasks(config("sp:2", 2)));
}

TEST_CASE("the ternary control fails with witnesses") {
  auto cfg = config("gl:2", 3, "ternary");
  cfg.perturb = true;
  Report rep = run_suite(cfg);
  CHECK_FALSE(rep.all_pass());
  for (const auto& r : rep.checks)
    if (!r.pass) CHECK(r.witness.find("u^") != std::string::npos);
  cfg.perturb = false;
  CHECK(run_suite(cfg).all_pass());
}

TEST_CASE("reports do not depend on the number of workers") {
  for (auto [spec, K] : {std::pair{"gl:2", 3}, std::pair{"o:5", 2}, std::pair{"sp:4", 2}}) {
    INFO(spec);
    std::string first;
    for (int jobs : {1, 2, 4, 7}) {
      auto cfg = config(spec, K, "all", jobs);
      std::string s = emit_report(run_suite(cfg), ReportFormat::Json);
      if (first.empty()) first = s;
      else CHECK(s == first);
    }
  }
}

TEST_CASE("golden reports") {
  const std::string dir = TWY_GOLDEN_DIR;
  CHECK(emit_report(run_suite(config("gl:2", 3, "all", 3)), ReportFormat::Json) == slurp(dir + "/gl2_K3.json"));
  CHECK(emit_report(run_suite(config("sp:4", 2, "all", 2)), ReportFormat::Json) == slurp(dir + "/sp4_K2.json"));
  auto ctl = config("gl:2", 3, "ternary", 2);
  ctl.perturb = true;
  CHECK(emit_report(run_suite(ctl), ReportFormat::Json) == slurp(dir + "/gl2_K3_ternary_perturbed.json"));
}
