#pragma once

// Verification of the defining relations on evaluation images: the ternary
// relation for T(u), the reflection and symmetry relations for S(u), the
// quantum determinant, first-coefficient commutators, recursions, projection
// coherence and the centralizer property. Every check returns one report
// per instance; a failing report carries the first nonzero residual.

#include "twy/lie.hpp"
#include "twy/pbw.hpp"
#include "twy/series.hpp"
#include "twy/series_matrix.hpp"
#include "twy/symfun.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace twy {

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> instance;
  bool pass = true;
  std::string witness;

  CheckReport& with(std::string key, const std::string& value) {
    instance.emplace_back(std::move(key), value);
    return *this;
  }
  CheckReport& with(std::string key, int value) { return with(std::move(key), std::to_string(value)); }
};

inline CheckReport make_report(std::string name, bool pass, std::string witness = {}) {
  CheckReport r;
  r.name = std::move(name);
  r.pass = pass;
  r.witness = std::move(witness);
  return r;
}

inline std::string clip(std::string s, std::size_t n = 160) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

inline bool all_pass(const std::vector<CheckReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckReport& r) { return r.pass; });
}

/// Lazily computed products X_p^{(a)} X_q^{(b)} of coefficients of two
/// entries of a series matrix, shared by all relation instances.
template <class R>
class PairProducts {
 public:
  explicit PairProducts(const SeriesMatrix<R>& m)
      : m_(m), K_(m.order()), NN_(m.size() * m.size()), once_(new std::once_flag[NN_ * NN_]), slots_(NN_ * NN_) {}

  std::size_t entry_index(int i, int j) const { return m_.position(i) * m_.size() + m_.position(j); }
  const TruncSeries<R>& series(std::size_t p) const { return m_.entry(p / m_.size(), p % m_.size()); }

  /// Block of products, indexed [a * (K+1) + b].
  const std::vector<R>& block(std::size_t p, std::size_t q) const {
    const std::size_t s = p * NN_ + q;
    std::call_once(once_[s], [&] {
      const auto& x = series(p);
      const auto& y = series(q);
      std::vector<R> out;
      out.reserve(static_cast<std::size_t>((K_ + 1) * (K_ + 1)));
      for (int a = 0; a <= K_; ++a)
        for (int b = 0; b <= K_; ++b) out.push_back(x[a] * y[b]);
      slots_[s] = std::move(out);
    });
    return slots_[s];
  }

  /// X_p(u) X_q(v).
  BiSeries<R> uv(std::size_t p, std::size_t q) const {
    const auto& B = block(p, q);
    BiSeries<R> r(0, K_, B.front());
    for (int a = 0; a <= K_; ++a)
      for (int b = 0; b <= K_; ++b) r.at(a, b) = B[static_cast<std::size_t>(a * (K_ + 1) + b)];
    return r;
  }
  /// X_p(v) X_q(u).
  BiSeries<R> vu(std::size_t p, std::size_t q) const {
    const auto& B = block(p, q);
    BiSeries<R> r(0, K_, B.front());
    for (int a = 0; a <= K_; ++a)
      for (int b = 0; b <= K_; ++b) r.at(a, b) = B[static_cast<std::size_t>(b * (K_ + 1) + a)];
    return r;
  }

  const SeriesMatrix<R>& matrix() const { return m_; }

 private:
  const SeriesMatrix<R>& m_;
  int K_;
  std::size_t NN_;
  std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<std::vector<R>> slots_;
};

template <class R>
std::string bi_witness(const BiSeries<R>& res) {
  auto at = res.first_nonzero();
  if (!at) return {};
  return "u^" + std::to_string(-at->first) + " v^" + std::to_string(-at->second) + ": " + clip(to_string(res.at(at->first, at->second)));
}

// ---------------------------------------------------------------------------
// Ternary relation  (u - v)[t_ij(u), t_kl(v)] = t_kj(u) t_il(v) - t_kj(v) t_il(u).

template <class R>
CheckReport ternary_instance(const PairProducts<R>& P, int i, int j, int k, int l, bool flip_sign = false) {
  const auto ij = P.entry_index(i, j), kl = P.entry_index(k, l), kj = P.entry_index(k, j), il = P.entry_index(i, l);
  std::vector<RationalTerm<R>> lhs{{P.uv(ij, kl) - P.vu(kl, ij), {}, Rational(1)}};
  std::vector<RationalTerm<R>> rhs{{P.uv(kj, il), {DenFactor::UMinusV}, Rational(1)},
                                   {P.vu(kj, il), {DenFactor::UMinusV}, Rational(flip_sign ? 1 : -1)}};
  auto [L, Rr] = clear_denominators(lhs, rhs, {DenFactor::UMinusV});
  auto res = L - Rr;
  auto r = make_report("ternary", res.is_zero(), bi_witness(res));
  r.with("i", i).with("j", j).with("k", k).with("l", l);
  return r;
}

template <class R>
std::vector<CheckReport> check_ternary(const SeriesMatrix<R>& T, bool flip_sign = false) {
  if (T.order() < 1) throw std::invalid_argument("check_ternary: need K >= 1 for a nonempty window");
  PairProducts<R> P(T);
  std::vector<CheckReport> out;
  for (int i : T.labels())
    for (int j : T.labels())
      for (int k : T.labels())
        for (int l : T.labels()) out.push_back(ternary_instance(P, i, j, k, l, flip_sign));
  return out;
}

// ---------------------------------------------------------------------------
// Reflection relation for S(u) with (u - v)(u + v) cleared.

struct ReflectionControls {
  bool flip_theta = false;  // negate the 1/(u^2 - v^2) term
};

/// Applied to every residual coefficient before the zero test; empty means exact.
template <class R>
using Reducer = std::function<R(const R&)>;

template <class R>
CheckReport reflection_instance(const PairProducts<R>& P, const AlgebraSpec& spec, int i, int j, int k, int l,
                                ReflectionControls ctl = {}, const Reducer<R>& reduce = {}) {
  auto e = [&](int a, int b) { return P.entry_index(a, b); };
  auto th = [&](int a, int b) { return Rational(theta(spec, a, b)); };
  const Rational t3 = th(i, -j) * Rational(ctl.flip_theta ? -1 : 1);
  std::vector<RationalTerm<R>> lhs{{P.uv(e(i, j), e(k, l)) - P.vu(e(k, l), e(i, j)), {}, Rational(1)}};
  std::vector<RationalTerm<R>> rhs{
      {P.uv(e(k, j), e(i, l)), {DenFactor::UMinusV}, Rational(1)},
      {P.vu(e(k, j), e(i, l)), {DenFactor::UMinusV}, Rational(-1)},
      {P.uv(e(i, -k), e(-j, l)), {DenFactor::UPlusV}, -th(k, -j)},
      {P.vu(e(k, -i), e(-l, j)), {DenFactor::UPlusV}, th(i, -l)},
      {P.uv(e(k, -i), e(-j, l)), {DenFactor::UMinusV, DenFactor::UPlusV}, t3},
      {P.vu(e(k, -i), e(-j, l)), {DenFactor::UMinusV, DenFactor::UPlusV}, -t3},
  };
  auto [L, Rr] = clear_denominators(lhs, rhs, {DenFactor::UMinusV, DenFactor::UPlusV});
  auto res = L - Rr;
  if (reduce)
    for (int a = res.lo(); a <= res.hi(); ++a)
      for (int b = res.lo(); b <= res.hi(); ++b) res.at(a, b) = reduce(res.at(a, b));
  auto r = make_report("reflection", res.is_zero(), bi_witness(res));
  r.with("i", i).with("j", j).with("k", k).with("l", l);
  return r;
}

template <class R>
std::vector<CheckReport> check_reflection(const SeriesMatrix<R>& S, const AlgebraSpec& spec, ReflectionControls ctl = {}) {
  if (spec.is_gl()) throw std::invalid_argument("check_reflection: o(N) and sp(N) only");
  if (S.order() < 2) throw std::invalid_argument("check_reflection: need K >= 2 for a nonempty window");
  PairProducts<R> P(S);
  std::vector<CheckReport> out;
  for (int i : S.labels())
    for (int j : S.labels())
      for (int k : S.labels())
        for (int l : S.labels()) out.push_back(reflection_instance(P, spec, i, j, k, l, ctl));
  return out;
}

// ---------------------------------------------------------------------------
// Symmetry relation  theta_ij s_{-j,-i}(-u) = s_ij(u) +- (s_ij(u) - s_ij(-u))/(2u),
// multiplied by 2u; '+' is the orthogonal sign.

template <class R>
CheckReport symmetry_instance(const SeriesMatrix<R>& S, const AlgebraSpec& spec, int i, int j, bool orthogonal_sign,
                              const Reducer<R>& reduce = {}) {
  const auto& sij = S.at(i, j);
  TruncSeries<R> x = S.at(-j, -i).negate_argument().scaled(Rational(theta(spec, i, j))) - sij;
  TruncSeries<R> y = sij - sij.negate_argument();
  auto w = multiply_u({Rational(0), Rational(2)}, x);
  const Rational sg(orthogonal_sign ? 1 : -1);
  std::optional<int> bad;
  std::string residual;
  for (int a = w.lo; a <= w.hi; ++a) {
    R v = w.at(a);
    if (a >= 0) v = v - y[a] * sg;
    if (reduce) v = reduce(v);
    if (!v.is_zero()) {
      bad = a;
      residual = to_string(v);
      break;
    }
  }
  auto r = make_report("symmetry", !bad, bad ? "u^" + std::to_string(-*bad) + ": " + clip(residual) : "");
  r.with("i", i).with("j", j);
  return r;
}

template <class R>
std::vector<CheckReport> check_symmetry(const SeriesMatrix<R>& S, const AlgebraSpec& spec,
                                        std::optional<bool> orthogonal_sign = std::nullopt, const Reducer<R>& reduce = {}) {
  if (spec.is_gl()) throw std::invalid_argument("check_symmetry: o(N) and sp(N) only");
  if (S.order() < 1) throw std::invalid_argument("check_symmetry: need K >= 1 for a nonempty window");
  const bool sg = orthogonal_sign.value_or(spec.orthogonal());
  std::vector<CheckReport> out;
  for (int i : S.labels())
    for (int j : S.labels()) out.push_back(symmetry_instance(S, spec, i, j, sg, reduce));
  return out;
}

// ---------------------------------------------------------------------------
// Quantum determinant  sum_p sgn(p) t_{p(1)1}(u) t_{p(2)2}(u-1) ... t_{p(n)n}(u-n+1).

inline UeaSeries qdet(const UeaMatrix& T) {
  const std::size_t n = T.size();
  std::vector<std::vector<UeaSeries>> shifted(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t col = 0; col < n; ++col)
      shifted[a].push_back(series_shift(T.entry(a, col), Rational(-static_cast<std::int64_t>(col))));
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  UeaSeries total(T.order(), T.entry(0, 0)[0]);
  do {
    int inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (p[a] > p[b]) ++inv;
    UeaSeries term = shifted[p[0]][0];
    for (std::size_t col = 1; col < n; ++col) term = term * shifted[p[col]][col];
    total = inv % 2 ? total - term : total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Coefficients 1..K of qdet commute with every generator; their
/// Harish-Chandra images are shifted-symmetric.
inline std::vector<CheckReport> check_qdet(const UeaMatrix& T, const std::string& builder) {
  UeaSeries q = qdet(T);
  const UeaPtr& ctx = q[0].context();
  std::vector<CheckReport> out;
  for (int r = 1; r <= q.order(); ++r) {
    std::string bad;
    for (const auto& e : ctx->algebra().basis())
      if (!commutator(q[r], UEAElement::generator(ctx, e.i, e.j)).is_zero()) {
        bad = "fails to commute with " + ctx->algebra().name(*ctx->algebra().find(e.i, e.j));
        break;
      }
    out.push_back(make_report("qdet-central", bad.empty(), bad).with("builder", builder).with("r", r));
    std::string sym;
    if (bad.empty()) {
      auto v = wprime_violation(hc_omega(q[r]), ctx->spec());
      if (v) sym = "image moved by " + *v;
    } else {
      sym = "not central";
    }
    out.push_back(make_report("qdet-hc-symmetric", sym.empty(), sym).with("builder", builder).with("r", r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// First-coefficient commutators.

/// [t1_kl, t_ij(u)] = delta_il t_kj(u) - delta_kj t_il(u) for all index tuples.
inline std::vector<CheckReport> check_first_commutators_gl(const UeaMatrix& T) {
  std::vector<CheckReport> out;
  const auto& L = T.labels();
  for (int k : L)
    for (int l : L)
      for (int i : L)
        for (int j : L) {
          std::string bad;
          for (int r = 0; r <= T.order() && bad.empty(); ++r) {
            UEAElement lhs = commutator(T.coefficient(1, k, l), T.coefficient(r, i, j));
            UEAElement rhs(lhs.context());
            if (i == l) rhs = rhs + T.coefficient(r, k, j);
            if (k == j) rhs = rhs - T.coefficient(r, i, l);
            if (!(lhs - rhs).is_zero()) bad = "u^-" + std::to_string(r) + ": " + clip((lhs - rhs).to_string());
          }
          out.push_back(make_report("first-commutator", bad.empty(), bad).with("k", k).with("l", l).with("i", i).with("j", j));
        }
  return out;
}

/// [s1_kl, s_ij(u)] = delta_il s_kj - delta_kj s_il - theta_{i,-l} delta_{k,-i} s_{-l,j}
///                    + theta_{k,-j} delta_{-j,l} s_{i,-k}.
inline std::vector<CheckReport> check_first_commutators_twisted(const UeaMatrix& S, const AlgebraSpec& spec) {
  std::vector<CheckReport> out;
  const auto& L = S.labels();
  for (int k : L)
    for (int l : L)
      for (int i : L)
        for (int j : L) {
          std::string bad;
          for (int r = 0; r <= S.order() && bad.empty(); ++r) {
            UEAElement lhs = commutator(S.coefficient(1, k, l), S.coefficient(r, i, j));
            UEAElement rhs(lhs.context());
            if (i == l) rhs = rhs + S.coefficient(r, k, j);
            if (k == j) rhs = rhs - S.coefficient(r, i, l);
            if (k == -i) rhs = rhs - S.coefficient(r, -l, j) * theta(spec, i, -l);
            if (-j == l) rhs = rhs + S.coefficient(r, i, -k) * theta(spec, k, -j);
            if (!(lhs - rhs).is_zero()) bad = "u^-" + std::to_string(r) + ": " + clip((lhs - rhs).to_string());
          }
          out.push_back(make_report("first-commutator", bad.empty(), bad).with("k", k).with("l", l).with("i", i).with("j", j));
        }
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient recursions  M^(1) = X + first,  M^(r) = M^(r-1) (X - step).

inline std::vector<CheckReport> check_recursion(const UeaMatrix& M, const UeaPtr& ctx, const MultiPoly& first,
                                                const Rational& step) {
  const auto X = generator_matrix(ctx);
  const auto& L = M.labels();
  const std::size_t N = L.size();
  std::vector<CheckReport> out;
  for (int r = 1; r <= M.order(); ++r) {
    std::string bad;
    for (std::size_t a = 0; a < N && bad.empty(); ++a)
      for (std::size_t b = 0; b < N && bad.empty(); ++b) {
        UEAElement expect(ctx);
        if (r == 1) {
          expect = X[a][b];
          if (a == b) expect = expect + UEAElement::scalar(ctx, first);
        } else {
          ElementAccumulator acc(ctx);
          for (std::size_t k = 0; k < N; ++k) {
            UEAElement y = X[k][b];
            if (k == b) y = y - UEAElement::scalar(ctx, MultiPoly(step));
            acc.add(M.entry(a, k)[r - 1] * y);
          }
          expect = acc.finish();
        }
        if (!(M.entry(a, b)[r] - expect).is_zero())
          bad = "entry (" + std::to_string(L[a]) + "," + std::to_string(L[b]) + ")";
      }
    out.push_back(make_report("recursion", bad.empty(), bad).with("r", r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer property: coefficients with |i|, |j| <= m commute with g_m(n).

inline std::vector<CheckReport> check_centralizer_images(const UeaMatrix& M, int m, const std::string& builder) {
  std::vector<CheckReport> out;
  for (int i : M.labels())
    for (int j : M.labels()) {
      if (std::abs(i) > m || std::abs(j) > m) continue;
      for (int r = 1; r <= M.order(); ++r) {
        auto v = centralizer_violation(M.coefficient(r, i, j), m);
        std::string w = v ? "fails against (" + std::to_string(v->i) + "," + std::to_string(v->j) + ")" : "";
        out.push_back(make_report("centralizer", !v, w).with("builder", builder).with("m", m).with("i", i).with("j", j).with("r", r));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Projection coherence from rank n to rank n-1.

/// Image matrix used by the coherence checks: phi_n for gl, Sigma otherwise.
/// With perturb set, the rank-n builder gets the wrong shift (n+1 for gl,
/// kappa_n + 1 otherwise).
inline UeaMatrix coherence_builder(const UeaPtr& ctx, const MultiPoly& c, int K, bool perturb) {
  const AlgebraSpec& s = ctx->spec();
  if (s.is_gl()) return build_T_phi(ctx, c, K, perturb ? std::optional<Rational>(Rational(s.n + 1)) : std::nullopt);
  return build_Sigma(ctx, c, K, perturb ? std::optional<Rational>(kappa(s) + Rational(1)) : std::nullopt);
}

inline std::vector<CheckReport> check_projection_coherence(const AlgebraSpec& top, const MultiPoly& c, int K,
                                                           bool perturb = false) {
  if (top.n < 2) throw std::invalid_argument("check_projection_coherence: rank must be at least 2");
  const int n = top.n;
  auto ctx = Uea::get(top, MonomialOrder::hc());
  auto low = Uea::get(top.with_rank(n - 1), MonomialOrder::hc());
  UeaMatrix Mn = coherence_builder(ctx, c, K, perturb);
  UeaMatrix Ml = coherence_builder(low, c, K, false);
  const std::string tag = top.to_string();
  std::vector<CheckReport> out;
  const int col = n;
  for (int i : Mn.labels())
    for (int r = 1; r <= K; ++r) {
      auto v = ideal_violation(Mn.coefficient(r, i, col), c);
      out.push_back(make_report("coherence-boundary", !v, v ? "monomial " + clip(*v) : "")
                        .with("spec", tag).with("i", i).with("r", r));
    }
  for (int i : Ml.labels())
    for (int j : Ml.labels())
      for (int r = 1; r <= K; ++r) {
        UEAElement a = Mn.coefficient(r, i, j);
        UEAElement b = reexpress(Ml.coefficient(r, i, j), ctx);
        auto v = ideal_violation(a - b, c);
        out.push_back(make_report("coherence-difference", !v, v ? "monomial " + clip(*v) : "")
                          .with("spec", tag).with("i", i).with("j", j).with("r", r));
        std::string bad;
        if (!in_zero_weight_top(a)) bad = "coefficient does not commute with the top Cartan generator";
        else if (!(pi_projection(a, c) == reexpress(Ml.coefficient(r, i, j), Uea::get(top.with_rank(n - 1), MonomialOrder::hc()))))
          bad = "projection differs";
        out.push_back(make_report("coherence-projection", bad.empty(), bad).with("spec", tag).with("i", i).with("j", j).with("r", r));
      }
  if (!top.is_gl()) {
    // Full images chi_n Sigma_n and chi_{n-1} Sigma_{n-1}; the central
    // chi_n is read through lambda_{-n} = c, its value modulo I(n).
    auto chi_n = chi_series(top, c, K);
    auto chi_l = chi_series(top.with_rank(n - 1), c, K);
    bool chi_ok = true;
    for (int r = 0; r <= K; ++r) chi_ok = chi_ok && project_pi(chi_n[r], top, c) == chi_l[r];
    out.push_back(make_report("coherence-chi", chi_ok, chi_ok ? "" : "chi_n does not project to chi_{n-1}").with("spec", tag));
    const Var top_var = weight_var(top, n);
    UeaMatrix Pn = scalar_multiply(chi_n, Mn);
    UeaMatrix Pl = scalar_multiply(chi_l, Ml);
    for (int i : Ml.labels())
      for (int j : Ml.labels())
        for (int r = 1; r <= K; ++r) {
          UEAElement a = Pn.coefficient(r, i, j).map_coefficients([&](const MultiPoly& k) { return k.substitute(top_var, c); });
          auto v = ideal_violation(a - reexpress(Pl.coefficient(r, i, j), ctx), c);
          out.push_back(make_report("coherence-phi", !v, v ? "monomial " + clip(*v) : "")
                            .with("spec", tag).with("i", i).with("j", j).with("r", r));
        }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor-model image phi_n = (u+c+kappa)/(u+kappa) chi_n(u) (1 - F/(u+kappa))^{-1}.

inline UeaMatrix build_phi_tensor(const UeaPtr& ctx, const MultiPoly& c, int K) {
  return scalar_multiply(chi_series(ctx->spec(), c, K), build_Sigma(ctx, c, K));
}

// ---------------------------------------------------------------------------
// Left and right ideals agree on A(n)^0, and pi_{n,c} is multiplicative there.

/// Weight of the canonical generator (i, j) under the top Cartan generator.
inline int top_weight(const AlgebraSpec& spec, int i, int j) {
  auto eps = [&](int a) { return (a == spec.n) - (!spec.is_gl() && a == -spec.n); };
  return eps(i) - eps(j);
}

/// Deterministic pseudo-random elements of A(n)^0: sums of generator
/// products of total top weight zero. Every other sample is replaced by
/// x - pi(x), which lies in the ideal.
inline std::vector<UEAElement> zero_weight_samples(const UeaPtr& ctx, const MultiPoly& c, int count, std::uint64_t seed) {
  const AlgebraSpec& spec = ctx->spec();
  const auto& basis = ctx->algebra().basis();
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto coef = [&] { return static_cast<std::int64_t>(rng() % 7) - 3; };
  auto monomial = [&]() {
    for (;;) {
      const std::size_t k = 1 + pick(3);
      UEAElement m = UEAElement::scalar(ctx, MultiPoly(1));
      int w = 0;
      for (std::size_t t = 0; t + 1 < k; ++t) {
        const auto& g = basis[pick(basis.size())];
        w += top_weight(spec, g.i, g.j);
        m = m * UEAElement::generator(ctx, g.i, g.j);
      }
      std::vector<GenIndex> last;
      for (const auto& g : basis)
        if (top_weight(spec, g.i, g.j) == -w) last.push_back(g);
      if (last.empty()) continue;
      const auto& g = last[pick(last.size())];
      return m * UEAElement::generator(ctx, g.i, g.j);
    }
  };
  std::vector<UEAElement> out;
  for (int s = 0; s < count; ++s) {
    UEAElement x = UEAElement::scalar(ctx, c * coef() + MultiPoly(coef()));
    const std::size_t terms = 1 + pick(3);
    for (std::size_t t = 0; t < terms; ++t) x = x + monomial() * Rational(coef() == 0 ? 1 : coef());
    if (s % 2) x = x - reexpress(pi_projection(x, c), ctx);
    out.push_back(x);
  }
  return out;
}

inline std::vector<CheckReport> check_membership_agreement(const AlgebraSpec& spec, const MultiPoly& c, int count,
                                                           std::uint64_t seed = 1) {
  if (spec.n < 2) throw std::invalid_argument("check_membership_agreement: rank must be at least 2");
  auto ctx = Uea::get(spec, MonomialOrder::hc());
  auto xs = zero_weight_samples(ctx, c, count, seed);
  const std::string tag = spec.to_string();
  std::vector<CheckReport> out;
  for (std::size_t s = 0; s < xs.size(); ++s) {
    const bool l = ideal_membership(xs[s], c, IdealSide::Left);
    const bool r = ideal_membership(xs[s], c, IdealSide::Right);
    const bool zero_pi = pi_projection(xs[s], c).is_zero();
    std::string bad;
    if (l != r) bad = std::string("left ") + (l ? "member" : "non-member") + ", right " + (r ? "member" : "non-member");
    else if (l != zero_pi) bad = "membership disagrees with pi(x) = 0";
    out.push_back(make_report("membership-agreement", bad.empty(), bad)
                      .with("spec", tag).with("sample", static_cast<int>(s)).with("member", l ? "yes" : "no"));
    const auto& y = xs[(s + 1) % xs.size()];
    const bool mult = pi_projection(xs[s] * y, c) == pi_projection(xs[s], c) * pi_projection(y, c);
    out.push_back(make_report("pi-multiplicative", mult, mult ? "" : "pi(xy) != pi(x) pi(y)")
                      .with("spec", tag).with("sample", static_cast<int>(s)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lie algebra axioms.

inline std::vector<CheckReport> check_lie_axioms(const AlgebraSpec& spec) {
  auto v = lie_axiom_violation(*LieAlgebra::make(spec));
  return {make_report("lie-axioms", !v, v.value_or("")).with("spec", spec.to_string())};
}

}  // namespace twy
