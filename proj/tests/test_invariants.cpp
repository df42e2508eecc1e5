#include "twy/invariants.hpp"

#include <catch_amalgamated.hpp>

using namespace twy;

namespace {

MultiPoly x(int i, int j) { return MultiPoly::var(Var::x(i, j)); }
AlgebraSpec sp(const char* s) { return AlgebraSpec::parse(s); }

MultiPoly power_sum(int K, int M, Rational k) {
  MultiPoly r;
  for (int a = 1; a <= K; ++a) r += MultiPoly::var(Var::y(a)).pow(static_cast<unsigned>(M)) * k;
  return r;
}

// Variables of f of a given kind.
std::set<Var> vars_of(const MultiPoly& f, VarKind k) {
  std::set<Var> r;
  for (Var v : f.variables())
    if (v.kind() == k) r.insert(v);
  return r;
}

}  // namespace

TEST_CASE("invariant_gen small values") {
  CHECK(invariant_gen(sp("gl:2"), trace_gen(1), 0) == x(1, 1) + x(2, 2));
  CHECK(invariant_gen(sp("o:4"), trace_gen(1), 0).is_zero());
  CHECK(invariant_gen(sp("sp:2"), trace_gen(1), 0).is_zero());
  CHECK(invariant_gen(sp("o:5"), trace_gen(3), 0).is_zero());
  CHECK(invariant_gen(sp("gl:2"), trace_gen(2), 0) ==
        x(1, 1) * x(1, 1) + x(2, 2) * x(2, 2) + x(1, 2) * x(2, 1) * Rational(2));
  // sp(2): x = [[x_{-1,-1}, x_{-1,1}], [x_{1,-1}, -x_{-1,-1}]]
  CHECK(invariant_gen(sp("sp:2"), corner_gen(1, 1, -1), 1) == x(1, -1));
  CHECK(invariant_gen(sp("sp:2"), trace_gen(2), 0) ==
        (x(-1, -1) * x(-1, -1) + x(-1, 1) * x(1, -1)) * Rational(2));
}

TEST_CASE("invariant_gen rejects corners outside the block") {
  CHECK_THROWS_AS(invariant_gen(sp("gl:3"), corner_gen(1, 1, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(invariant_gen(sp("o:5"), corner_gen(1, 0, -2), 1), std::invalid_argument);
  CHECK_NOTHROW(invariant_gen(sp("o:5"), corner_gen(1, 0, -1), 1));
  CHECK_THROWS_AS(invariant_gen(sp("gl:2"), trace_gen(0), 0), std::invalid_argument);
}

TEST_CASE("matrix_entry enforces x^t = -x") {
  for (const char* s : {"o:3", "o:4", "sp:4", "o:5"}) {
    auto spec = sp(s);
    for (int i : spec.index_set())
      for (int j : spec.index_set())
        CHECK(matrix_entry(spec, -j, -i) == matrix_entry(spec, i, j) * Rational(-theta(spec, i, j)));
  }
}

TEST_CASE("stability modulo the graded ideal") {
  CHECK(stability_check(sp("gl:3"), trace_gen(2)));
  CHECK(stability_check(sp("o:5"), trace_gen(2)));
  for (const char* s : {"gl:2", "gl:3", "o:4", "o:5", "sp:4", "o:6", "sp:6"}) {
    auto spec = sp(s);
    for (int M = 1; M <= 4; ++M) {
      INFO(s << " M=" << M);
      CHECK(stability_check(spec, trace_gen(M)));
      for (int i : spec.with_rank(spec.n - 1).index_set())
        for (int j : spec.with_rank(spec.n - 1).index_set()) CHECK(stability_check(spec, corner_gen(M, i, j)));
    }
  }
  CHECK_THROWS_AS(stability_check(sp("gl:1"), trace_gen(1)), std::invalid_argument);
  CHECK_THROWS_AS(stability_check(sp("gl:3"), corner_gen(1, 1, 3)), std::invalid_argument);
}

TEST_CASE("the graded ideal test rejects a non-member") {
  auto spec = sp("gl:3");
  CHECK(graded_ideal_violation(spec, x(1, 1) * x(1, 3)) == std::nullopt);
  CHECK(graded_ideal_violation(spec, x(1, 1) * x(3, 1)));
  // tr(x^2) at rank 3 is not congruent to tr(x^2) at rank 2 plus x_33^2 alone
  CHECK(graded_ideal_violation(spec, invariant_gen(spec, trace_gen(2), 0) - x(1, 1) * x(1, 1)));
}

TEST_CASE("parity table: excluded generators vanish or are signed partners") {
  for (const char* s : {"o:5", "o:4", "sp:4", "o:6", "sp:6"}) {
    auto spec = sp(s);
    auto X = matrix_powers(symbolic_matrix(spec), 4);
    for (int M = 1; M <= 4; ++M) {
      auto tr = evaluate_gen(spec, X[static_cast<std::size_t>(M - 1)], trace_gen(M));
      CHECK(parity_allowed(spec, trace_gen(M)) == !tr.is_zero());
      for (int i : spec.index_set())
        for (int j : spec.index_set()) {
          auto g = corner_gen(M, i, j);
          auto v = evaluate_gen(spec, X[static_cast<std::size_t>(M - 1)], g);
          auto [sg, partner] = parity_partner(spec, g);
          INFO(s << " " << g.to_string());
          CHECK(v == evaluate_gen(spec, X[static_cast<std::size_t>(M - 1)], partner) * Rational(sg));
          if (!parity_allowed(spec, g)) {
            // either vanishes (self-partner with sign -1) or the partner is allowed
            CHECK((v.is_zero() || parity_allowed(spec, partner)));
            if (partner == g) CHECK(v.is_zero());
          }
        }
    }
  }
}

TEST_CASE("degree warning") {
  CHECK_FALSE(degree_warning(sp("gl:3"), 0, 7));
  CHECK_FALSE(degree_warning(sp("o:9"), 1, 2));
  CHECK(degree_warning(sp("o:9"), 1, 3));
}

TEST_CASE("independence generator lists") {
  CHECK(independence_generators(sp("gl:5"), 1, 2).size() == 4);
  // sp, m = 1: M = 1 allows i + j <= 0 (3 corners), M = 2 allows i + j < 0 (1) and tr(x^2)
  CHECK(independence_generators(sp("sp:20"), 1, 2).size() == 5);
  // o, m = 1, K = 2: M = 1 corners i + j < 0 (1); M = 2 corners i + j <= 0 (3), trace
  CHECK(independence_generators(sp("o:20"), 1, 2).size() == 5);
  // B includes the zero label
  CHECK(independence_generators(sp("o:21"), 1, 1).size() == 3);
}

TEST_CASE("witness point needs a large enough rank") {
  const int need = witness_min_rank(sp("gl:1"), 1, 2);
  CHECK(need == 1 + 2 + 1);
  CHECK_NOTHROW(witness_point(AlgebraSpec{Family::A, need}, 1, 2));
  try {
    witness_point(AlgebraSpec{Family::A, need - 1}, 1, 2);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("need n >= " + std::to_string(need)) != std::string::npos);
  }
}

TEST_CASE("witness evaluation is triangular") {
  for (auto [fam, m, K] : {std::tuple{Family::A, 1, 2}, std::tuple{Family::A, 2, 3}, std::tuple{Family::C, 1, 2},
                           std::tuple{Family::C, 1, 3}, std::tuple{Family::D, 1, 3}, std::tuple{Family::B, 1, 3},
                           std::tuple{Family::B, 0, 4}, std::tuple{Family::B, -1, 4}}) {
    AlgebraSpec base{fam, 1};
    const int n = witness_min_rank(base, m, K);
    auto w = witness_point(AlgebraSpec{fam, n}, m, K);
    INFO(w.spec.to_string() << " m=" << m << " K=" << K);
    CHECK_FALSE(witness_consistency(w));
    auto vals = witness_values(w);
    REQUIRE(vals.size() == w.generators.size());
    for (std::size_t t = 0; t < vals.size(); ++t) {
      const auto& g = w.generators[t];
      INFO(g.to_string() << " = " << vals[t].to_string());
      // second route: substitute the witness into the coordinate polynomial
      CHECK(invariant_gen(w.spec, g, m).substitute(w.entries) == vals[t]);
      if (g.kind == InvariantKind::Trace) {
        MultiPoly rest = vals[t] - power_sum(K, g.M, Rational(fam == Family::A ? 1 : 2));
        CHECK(vars_of(rest, VarKind::Y).empty());
      } else {
        MultiPoly rest = vals[t] - MultiPoly::var(Var::z(g.i, g.j, g.M));
        CHECK(vars_of(rest, VarKind::Y).empty());
        for (Var v : vars_of(rest, VarKind::Z)) CHECK(v.m() < g.M);
      }
    }
  }
}

TEST_CASE("Jacobian rank certifies independence") {
  for (auto [fam, m, K] : {std::tuple{Family::A, 1, 2}, std::tuple{Family::C, 1, 2}, std::tuple{Family::D, 1, 2},
                           std::tuple{Family::B, 1, 2}, std::tuple{Family::A, 2, 3}}) {
    auto w = witness_point(AlgebraSpec{fam, witness_min_rank(AlgebraSpec{fam, 1}, m, K)}, m, K);
    auto vals = witness_values(w);
    auto pt = default_parameter_point(w);
    INFO(w.spec.to_string());
    CHECK(witness_jacobian_rank(w, vals, pt) == static_cast<int>(vals.size()));
    auto dup = vals;
    dup.push_back(vals.back());
    CHECK(witness_jacobian_rank(w, dup, pt) == static_cast<int>(vals.size()));
  }
}

TEST_CASE("generators are killed by the coadjoint action of g_m(n)") {
  for (auto [s, m] : {std::pair{"gl:3", 1}, std::pair{"gl:3", 2}, std::pair{"o:5", 1}, std::pair{"o:6", 1},
                      std::pair{"sp:6", 1}, std::pair{"o:7", 0}, std::pair{"sp:4", 1}}) {
    auto spec = sp(s);
    for (int M = 1; M <= 3; ++M) {
      INFO(s << " m=" << m << " M=" << M);
      CHECK_FALSE(adjoint_violation(spec, m, invariant_gen(spec, trace_gen(M), m)));
      for (int i : spec.index_set())
        for (int j : spec.index_set())
          if (in_corner(spec, m, i) && in_corner(spec, m, j))
            CHECK_FALSE(adjoint_violation(spec, m, invariant_gen(spec, corner_gen(M, i, j), m)));
    }
  }
  // a single entry outside the corner is not invariant
  CHECK(adjoint_violation(sp("gl:3"), 1, x(1, 2)));
  CHECK(adjoint_violation(sp("o:5"), 0, x(-2, -1)));
}
