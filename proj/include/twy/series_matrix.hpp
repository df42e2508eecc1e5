#pragma once

// Square matrices of truncated series in u^{-1} with labelled rows and
// columns, and the builders for the evaluation images T(u), S(u), Sigma(u).

#include "twy/lie.hpp"
#include "twy/pbw.hpp"
#include "twy/series.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twy {

template <class R>
class SeriesMatrix {
 public:
  SeriesMatrix(std::vector<int> labels, std::vector<TruncSeries<R>> entries)
      : labels_(std::move(labels)), e_(std::move(entries)) {
    if (e_.size() != labels_.size() * labels_.size()) throw std::invalid_argument("SeriesMatrix: entry count");
    if (e_.empty()) throw std::invalid_argument("SeriesMatrix: empty");
    for (std::size_t a = 0; a < labels_.size(); ++a) pos_[labels_[a]] = a;
    for (auto& s : e_)
      if (s.order() != e_.front().order()) throw std::invalid_argument("SeriesMatrix: mixed truncation orders");
  }

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  int order() const { return e_.front().order(); }
  std::size_t position(int label) const {
    auto it = pos_.find(label);
    if (it == pos_.end()) throw std::out_of_range("SeriesMatrix: no label " + std::to_string(label));
    return it->second;
  }
  bool has_label(int label) const { return pos_.count(label) != 0; }

  const TruncSeries<R>& at(int i, int j) const { return entry(position(i), position(j)); }
  const TruncSeries<R>& entry(std::size_t a, std::size_t b) const { return e_.at(a * size() + b); }
  TruncSeries<R>& entry(std::size_t a, std::size_t b) { return e_.at(a * size() + b); }
  /// Coefficient of u^{-k} in entry (i, j).
  const R& coefficient(int k, int i, int j) const { return at(i, j)[k]; }

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
    a.require_same_shape(b);
    SeriesMatrix r = a;
    for (std::size_t x = 0; x < r.e_.size(); ++x) r.e_[x] = a.e_[x] + b.e_[x];
    return r;
  }
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    a.require_same_shape(b);
    SeriesMatrix r = a;
    for (std::size_t x = 0; x < r.e_.size(); ++x) r.e_[x] = a.e_[x] - b.e_[x];
    return r;
  }
  /// Product in the same variable u; coefficient order is preserved.
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    a.require_same_shape(b);
    const std::size_t N = a.size();
    std::vector<TruncSeries<R>> out;
    out.reserve(N * N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        TruncSeries<R> acc(a.order(), a.entry(0, 0)[0]);
        for (std::size_t k = 0; k < N; ++k) acc = acc + a.entry(i, k) * b.entry(k, j);
        out.push_back(std::move(acc));
      }
    return SeriesMatrix(a.labels_, std::move(out));
  }
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    return a.labels_ == b.labels_ && a.e_ == b.e_;
  }

  template <class F>
  SeriesMatrix map_entries(F&& f) const {
    std::vector<TruncSeries<R>> out;
    out.reserve(e_.size());
    for (auto& s : e_) out.push_back(f(s));
    return SeriesMatrix(labels_, std::move(out));
  }

 private:
  void require_same_shape(const SeriesMatrix& o) const {
    if (labels_ != o.labels_ || order() != o.order()) throw std::invalid_argument("SeriesMatrix: shape mismatch");
  }

  std::vector<int> labels_;
  std::map<int, std::size_t> pos_;
  std::vector<TruncSeries<R>> e_;
};

using UeaSeries = TruncSeries<UEAElement>;
using UeaMatrix = SeriesMatrix<UEAElement>;
using ScalarSeries = TruncSeries<MultiPoly>;

/// Entrywise product with a central scalar series.
inline UeaMatrix scalar_multiply(const ScalarSeries& chi, const UeaMatrix& m) {
  const int K = std::min(chi.order(), m.order());
  return m.map_entries([&](const UeaSeries& s) {
    UeaSeries r(K, s[0]);
    for (int a = 0; a <= K; ++a) {
      if (chi[a].is_zero()) continue;
      for (int b = 0; a + b <= K; ++b)
        if (!s[b].is_zero()) r[a + b] = r[a + b] + s[b] * chi[a];
    }
    return r;
  });
}

/// kappa_n = (N - 1)/2 in the orthogonal case, (N + 1)/2 in the symplectic case.
inline Rational kappa(const AlgebraSpec& spec) {
  if (spec.is_gl()) throw std::invalid_argument("kappa: defined for o(N) and sp(N) only");
  return Rational(spec.matrix_size() + (spec.orthogonal() ? -1 : 1), 2);
}

/// The series 1 + x u^{-1}.
inline ScalarSeries linear_scalar_series(int K, const MultiPoly& x) {
  ScalarSeries s = ScalarSeries::one(K, MultiPoly());
  if (K >= 1) s[1] = x;
  return s;
}

/// (1 - X/u)^{-1} = sum_M X^M u^{-M} for the generator matrix X.
inline UeaMatrix build_T_eta(const UeaPtr& ctx, int K) {
  auto P = generator_matrix_powers(ctx, K);
  const auto labels = ctx->spec().index_set();
  const std::size_t N = labels.size();
  std::vector<UeaSeries> out;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::vector<UEAElement> coeffs;
      for (int M = 0; M <= K; ++M) coeffs.push_back(P[static_cast<std::size_t>(M)][a][b]);
      out.emplace_back(std::move(coeffs));
    }
  return UeaMatrix(labels, std::move(out));
}

/// (u+s-c)/(u+s) (1 - E/(u+s))^{-1}; the shift s defaults to the rank n.
inline UeaMatrix build_T_phi(const UeaPtr& ctx, const MultiPoly& c, int K, std::optional<Rational> shift = std::nullopt) {
  if (!ctx->spec().is_gl()) throw std::invalid_argument("build_T_phi: gl only");
  const Rational s = shift.value_or(Rational(ctx->spec().n));
  ScalarSeries pref = series_shift(linear_scalar_series(K, -c), MultiPoly(s));
  UeaMatrix T = build_T_eta(ctx, K).map_entries([&](const UeaSeries& x) { return series_shift(x, s); });
  return scalar_multiply(pref, T);
}

/// 1 + F/(u + 1/2) for o(N), 1 + F/(u - 1/2) for sp(N). The sign can be
/// forced to the other family's convention for control runs.
inline UeaMatrix build_S_eta(const UeaPtr& ctx, int K, std::optional<bool> orthogonal_sign = std::nullopt) {
  if (ctx->spec().is_gl()) throw std::invalid_argument("build_S_eta: o(N) and sp(N) only");
  const bool orth = orthogonal_sign.value_or(ctx->spec().orthogonal());
  const Rational step = orth ? Rational(-1, 2) : Rational(1, 2);
  const auto labels = ctx->spec().index_set();
  std::vector<UeaSeries> out;
  for (int i : labels)
    for (int j : labels) {
      UEAElement f = UEAElement::generator(ctx, i, j);
      UeaSeries s(K, f);
      if (i == j) s[0] = UEAElement::scalar(ctx, MultiPoly(1));
      Rational w(1);
      for (int k = 1; k <= K; ++k, w *= step) s[k] = f * w;
      out.push_back(std::move(s));
    }
  return UeaMatrix(labels, std::move(out));
}

/// (u+c+kappa)/(u+kappa) (1 - F/(u+kappa))^{-1}.
inline UeaMatrix build_Sigma(const UeaPtr& ctx, const MultiPoly& c, int K, std::optional<Rational> kappa_override = std::nullopt) {
  const Rational k = kappa_override.value_or(kappa(ctx->spec()));
  ScalarSeries pref = series_shift(linear_scalar_series(K, c), MultiPoly(k));
  UeaMatrix T = build_T_eta(ctx, K).map_entries([&](const UeaSeries& x) { return series_shift(x, k); });
  return scalar_multiply(pref, T);
}

/// (A^t)_{ij} = theta_{ij} A_{-j,-i}.
template <class R>
SeriesMatrix<R> transpose_t(const SeriesMatrix<R>& m, const AlgebraSpec& spec) {
  if (spec.is_gl()) throw std::invalid_argument("transpose_t: needs the o(N)/sp(N) labelling");
  const auto& labels = m.labels();
  std::vector<TruncSeries<R>> out;
  for (int i : labels)
    for (int j : labels) out.push_back(m.at(-j, -i).scaled(Rational(theta(spec, i, j))));
  return SeriesMatrix<R>(labels, std::move(out));
}

/// gamma_n(u): 1 for o(N), (2u+1)/(2u-2n+1) for sp(2n).
inline ScalarSeries gamma_series(const AlgebraSpec& spec, int K) {
  if (spec.is_gl()) throw std::invalid_argument("gamma_series: o(N) and sp(N) only");
  ScalarSeries one = ScalarSeries::one(K, MultiPoly());
  if (spec.orthogonal()) return one;
  // (1 + u^{-1}/2) / (1 - (2n-1) u^{-1}/2)
  ScalarSeries num = linear_scalar_series(K, MultiPoly(Rational(1, 2)));
  ScalarSeries den = linear_scalar_series(K, MultiPoly(Rational(-(2 * spec.n - 1), 2)));
  return num * series_invert(den);
}

}  // namespace twy
