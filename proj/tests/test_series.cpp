#include "twy/series.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using twy::BiSeries;
using twy::DenFactor;
using twy::MultiPoly;
using twy::Rational;
using twy::RationalTerm;
using twy::TruncSeries;
using twy::Var;

namespace {

using PS = TruncSeries<MultiPoly>;
const MultiPoly c = MultiPoly::var(Var::c());

PS series_of(std::vector<MultiPoly> v) { return PS(std::move(v)); }

PS random_series(std::mt19937_64& rng, int K, bool invertible) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<MultiPoly> v;
  for (int k = 0; k <= K; ++k) v.push_back(MultiPoly(Rational(d(rng), 1 + (d(rng) & 3))) + c * d(rng));
  if (invertible) v[0] = MultiPoly(Rational(1 + (d(rng) & 3)));
  return PS(v);
}

}  // namespace

TEST_CASE("geometric series inverse") {
  auto s = series_of({1, -c, 0, 0});
  CHECK(twy::series_invert(s) == series_of({1, c, c * c, c * c * c}));
  CHECK(twy::series_invert(PS::one(5, MultiPoly())) == PS::one(5, MultiPoly()));
  auto t = series_of({1, -1, 1});
  CHECK(twy::series_invert(t) == series_of({1, 1, 0}));
  CHECK_THROWS_AS(twy::series_invert(series_of({c, 1})), std::domain_error);
  CHECK_THROWS_AS(twy::series_invert(series_of({0, 1})), std::domain_error);
}

TEST_CASE("inverse round trip on random invertible series") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    auto s = random_series(rng, 5, true);
    CHECK(s * twy::series_invert(s) == PS::one(5, MultiPoly()));
  }
}

TEST_CASE("shift of the formal parameter") {
  MultiPoly n(3);
  auto s = series_of({0, 1, 0, 0});
  CHECK(twy::series_shift(s, n) == series_of({0, 1, -n, n * n}));
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    auto x = random_series(rng, 5, false), y = random_series(rng, 5, false);
    MultiPoly a = c + Rational(it % 5, 3);
    CHECK(twy::series_shift(x, MultiPoly()) == x);
    CHECK(twy::series_shift(twy::series_shift(x, a), -a) == x);
    CHECK(twy::series_shift(x * y, a) == twy::series_shift(x, a) * twy::series_shift(y, a));
  }
}

TEST_CASE("negating the argument flips odd coefficients") {
  auto s = series_of({1, c, 2, c});
  CHECK(s.negate_argument() == series_of({1, -c, 2, -c}));
}

TEST_CASE("clearing a (u - v) denominator") {
  const int K = 3;
  auto x = series_of({1, c, 2, 5});
  auto diff = BiSeries<MultiPoly>::outer(x, x) - BiSeries<MultiPoly>::outer_swapped(x, x);
  CHECK(diff.is_zero());
  std::vector<RationalTerm<MultiPoly>> lhs{{diff, {DenFactor::UMinusV}, Rational(1)}};
  std::vector<RationalTerm<MultiPoly>> rhs{{diff.scaled(Rational(0)), {}, Rational(1)}};
  auto [l, r] = twy::clear_denominators(lhs, rhs, {DenFactor::UMinusV});
  CHECK(l.lo() == -1);
  CHECK(l.hi() == K - 1);
  CHECK((l - r).is_zero());
}

TEST_CASE("cleared identity 1/(u-v) (x(u) - x(v)) = known numerator") {
  // x(u) = 1/u: (1/u - 1/v) / (u - v) = -1/(uv), cleared: 1/u - 1/v = -(u-v)/(uv)
  auto x = series_of({0, 1, 0, 0, 0});
  auto one = series_of({1, 0, 0, 0, 0});
  auto lhs = BiSeries<MultiPoly>::outer(x, one) - BiSeries<MultiPoly>::outer(one, x);
  BiSeries<MultiPoly> uvinv(0, 4, MultiPoly());
  uvinv.at(1, 1) = MultiPoly(-1);
  auto [l, r] = twy::clear_denominators<MultiPoly>({{lhs, {DenFactor::UMinusV}, Rational(1)}}, {{uvinv, {}, Rational(1)}},
                                                   {DenFactor::UMinusV});
  CHECK((l - r).is_zero());
  // perturbation: flipping a sign leaves a residual
  auto [l2, r2] = twy::clear_denominators<MultiPoly>({{lhs, {DenFactor::UMinusV}, Rational(1)}}, {{uvinv, {}, Rational(-1)}},
                                                     {DenFactor::UMinusV});
  CHECK_FALSE((l2 - r2).is_zero());
}

TEST_CASE("empty safe window is an error") {
  auto x = series_of({1, 0});
  auto b = BiSeries<MultiPoly>::outer(x, x);
  std::vector<RationalTerm<MultiPoly>> lhs{{b, {}, Rational(1)}};
  CHECK_THROWS_AS(twy::clear_denominators(lhs, lhs, {DenFactor::UMinusV, DenFactor::UPlusV}), std::invalid_argument);
}
