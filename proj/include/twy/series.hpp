#pragma once

// Truncated power series in u^{-1} (and in two variables u^{-1}, v^{-1})
// over an arbitrary, possibly noncommutative, coefficient ring.
//
// A coefficient ring R must provide +, -, *, is_zero(), and the free
// functions zero_like(const R&) / one_like(const R&) / scalar_inverse(const R&).

#include "twy/multipoly.hpp"
#include "twy/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twy {

/// Binomial coefficient C(n, k) as an exact rational (n, k >= 0).
inline Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

template <class R>
class TruncSeries {
 public:
  /// Zero series with slots 0..order, built from a prototype zero element.
  TruncSeries(int order, const R& proto) : c_(static_cast<std::size_t>(check_order(order)) + 1, zero_like(proto)) {}
  explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least a constant slot");
  }
  /// The constant series v.
  static TruncSeries constant(int order, const R& v) {
    TruncSeries s(order, v);
    s.c_[0] = v;
    return s;
  }
  static TruncSeries one(int order, const R& proto) { return constant(order, one_like(proto)); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  R& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<R>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  bool is_zero() const {
    for (auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// s(-u): the coefficient of u^{-k} picks up (-1)^k.
  TruncSeries negate_argument() const {
    TruncSeries r = *this;
    for (int k = 1; k <= order(); k += 2) r.c_[static_cast<std::size_t>(k)] = -r.c_[static_cast<std::size_t>(k)];
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int K = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) out.push_back(a[k] + b[k]);
    return TruncSeries(std::move(out));
  }
  friend TruncSeries operator-(const TruncSeries& a) {
    std::vector<R> out;
    for (auto& x : a.c_) out.push_back(-x);
    return TruncSeries(std::move(out));
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
  /// Cauchy product truncated to the smaller order; factor order is kept.
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int K = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
      R acc = zero_like(a[0]);
      for (int i = 0; i <= k; ++i) {
        if (a[i].is_zero() || b[k - i].is_zero()) continue;
        acc = acc + a[i] * b[k - i];
      }
      out.push_back(std::move(acc));
    }
    return TruncSeries(std::move(out));
  }
  /// Right multiplication of every coefficient by a scalar.
  template <class S>
  TruncSeries scaled(const S& s) const {
    std::vector<R> out;
    for (auto& x : c_) out.push_back(x * s);
    return TruncSeries(std::move(out));
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) return false;
    for (int k = 0; k <= a.order(); ++k)
      if (!(a[k] == b[k])) return false;
    return true;
  }

 private:
  static int check_order(int K) {
    if (K < 0) throw std::invalid_argument("negative truncation order");
    return K;
  }
  std::vector<R> c_;
};

/// Multiplicative inverse up to the truncation order. The constant term
/// must be an invertible scalar.
template <class R>
TruncSeries<R> series_invert(const TruncSeries<R>& s) {
  auto inv = scalar_inverse(s[0]);
  if (!inv) throw std::domain_error("series_invert: constant term is not an invertible scalar");
  TruncSeries<R> r(s.order(), s[0]);
  r[0] = *inv;
  for (int k = 1; k <= s.order(); ++k) {
    R acc = zero_like(s[0]);
    for (int j = 1; j <= k; ++j) {
      if (s[j].is_zero() || r[k - j].is_zero()) continue;
      acc = acc + s[j] * r[k - j];
    }
    r[k] = -(*inv * acc);
  }
  return r;
}

/// Expansion of s(u + a) in powers of u^{-1}:
/// (u+a)^{-M} = sum_j C(M-1+j, j) (-a)^j u^{-M-j}.
template <class R, class S>
TruncSeries<R> series_shift(const TruncSeries<R>& s, const S& a) {
  const int K = s.order();
  std::vector<S> neg_pow{one_like(a)};
  for (int j = 1; j <= K; ++j) neg_pow.push_back(neg_pow.back() * (-a));
  TruncSeries<R> r(K, s[0]);
  r[0] = s[0];
  for (int M = 1; M <= K; ++M) {
    if (s[M].is_zero()) continue;
    for (int j = 0; M + j <= K; ++j) {
      S w = neg_pow[static_cast<std::size_t>(j)] * binomial(M - 1 + j, j);
      if (w.is_zero()) continue;
      r[M + j] = r[M + j] + s[M] * w;
    }
  }
  return r;
}

/// Coefficients of u^{-a} v^{-b} on the square window lo <= a, b <= hi.
/// Negative exponents stand for positive powers of u or v.
template <class R>
class BiSeries {
 public:
  BiSeries(int lo, int hi, const R& proto) : lo_(lo), hi_(hi) {
    if (hi < lo) throw std::invalid_argument("empty BiSeries window");
    auto w = static_cast<std::size_t>(hi - lo + 1);
    c_.assign(w * w, zero_like(proto));
  }

  /// X(u) Y(v): coefficient (a, b) is X_a Y_b.
  static BiSeries outer(const TruncSeries<R>& x, const TruncSeries<R>& y) {
    int K = std::min(x.order(), y.order());
    BiSeries r(0, K, x[0]);
    for (int a = 0; a <= K; ++a)
      for (int b = 0; b <= K; ++b) r.at(a, b) = x[a] * y[b];
    return r;
  }
  /// X(v) Y(u): coefficient (a, b) is X_b Y_a.
  static BiSeries outer_swapped(const TruncSeries<R>& x, const TruncSeries<R>& y) {
    int K = std::min(x.order(), y.order());
    BiSeries r(0, K, x[0]);
    for (int a = 0; a <= K; ++a)
      for (int b = 0; b <= K; ++b) r.at(a, b) = x[b] * y[a];
    return r;
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const R& at(int a, int b) const { return c_.at(index(a, b)); }
  R& at(int a, int b) { return c_.at(index(a, b)); }
  /// Coefficient, or zero outside [0, hi] for a series window.
  R get_or_zero(int a, int b) const {
    if (a < lo_ || b < lo_ || a > hi_ || b > hi_) {
      if (a < 0 || b < 0) return zero_like(c_.front());
      throw std::out_of_range("BiSeries coefficient beyond truncation");
    }
    return at(a, b);
  }

  friend BiSeries operator+(const BiSeries& x, const BiSeries& y) {
    x.require_same_window(y);
    BiSeries r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = x.c_[i] + y.c_[i];
    return r;
  }
  friend BiSeries operator-(const BiSeries& x, const BiSeries& y) {
    x.require_same_window(y);
    BiSeries r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = x.c_[i] - y.c_[i];
    return r;
  }
  template <class S>
  BiSeries scaled(const S& s) const {
    BiSeries r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
  }

  bool is_zero() const {
    for (auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }
  /// First nonzero coefficient in (a, b) lexicographic order.
  std::optional<std::pair<int, int>> first_nonzero() const {
    for (int a = lo_; a <= hi_; ++a)
      for (int b = lo_; b <= hi_; ++b)
        if (!at(a, b).is_zero()) return std::pair{a, b};
    return std::nullopt;
  }

 private:
  std::size_t index(int a, int b) const {
    if (a < lo_ || a > hi_ || b < lo_ || b > hi_) throw std::out_of_range("BiSeries index outside window");
    auto w = static_cast<std::size_t>(hi_ - lo_ + 1);
    return static_cast<std::size_t>(a - lo_) * w + static_cast<std::size_t>(b - lo_);
  }
  void require_same_window(const BiSeries& o) const {
    if (lo_ != o.lo_ || hi_ != o.hi_) throw std::invalid_argument("BiSeries window mismatch");
  }

  int lo_, hi_;
  std::vector<R> c_;
};

/// Polynomial in the formal variables u, v: (power of u, power of v) -> coefficient.
using UVPoly = std::map<std::pair<int, int>, Rational>;

enum class DenFactor { UMinusV, UPlusV };

inline UVPoly uv_factor(DenFactor f) {
  return f == DenFactor::UMinusV ? UVPoly{{{1, 0}, Rational(1)}, {{0, 1}, Rational(-1)}}
                                 : UVPoly{{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}};
}
inline UVPoly uv_multiply(const UVPoly& a, const UVPoly& b) {
  UVPoly r;
  for (auto& [pa, ca] : a)
    for (auto& [pb, cb] : b) {
      auto& slot = r[{pa.first + pb.first, pa.second + pb.second}];
      slot += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}
inline int uv_degree(const UVPoly& p) {
  int d = 0;
  for (auto& [pw, c] : p) d = std::max(d, pw.first + pw.second);
  return d;
}

/// P(u, v) * X restricted to the window [-d, K-d], where d bounds the
/// degree of the cleared denominator; only coefficients that are fully
/// determined by the truncated X are produced.
template <class R>
BiSeries<R> multiply_uv(const UVPoly& p, const BiSeries<R>& x, int d) {
  if (x.lo() != 0) throw std::invalid_argument("multiply_uv expects a plain series window");
  const int K = x.hi();
  if (K - d < -d) throw std::invalid_argument("empty window");
  BiSeries<R> r(-d, K - d, x.at(0, 0));
  for (int a = -d; a <= K - d; ++a)
    for (int b = -d; b <= K - d; ++b) {
      R acc = zero_like(x.at(0, 0));
      for (auto& [pw, c] : p) {
        int sa = a + pw.first, sb = b + pw.second;
        if (sa < 0 || sb < 0) continue;
        const R& v = x.at(sa, sb);
        if (v.is_zero()) continue;
        acc = acc + v * c;
      }
      r.at(a, b) = std::move(acc);
    }
  return r;
}

/// One summand X / D_t of a relation with rational prefactor.
template <class R>
struct RationalTerm {
  BiSeries<R> series;
  std::vector<DenFactor> denominator;
  Rational coefficient{1};
};

/// Multiplies both sides of  sum(lhs) = sum(rhs)  by the common denominator
/// and returns the two polynomial-coefficient sides on the safe window
/// a, b <= K - deg(denominator). Throws when that window is empty (K < deg).
template <class R>
std::pair<BiSeries<R>, BiSeries<R>> clear_denominators(const std::vector<RationalTerm<R>>& lhs,
                                                       const std::vector<RationalTerm<R>>& rhs,
                                                       const std::vector<DenFactor>& denominator) {
  const int d = static_cast<int>(denominator.size());
  auto side = [&](const std::vector<RationalTerm<R>>& terms) -> std::optional<BiSeries<R>> {
    std::optional<BiSeries<R>> acc;
    for (auto& t : terms) {
      if (t.series.hi() < d) throw std::invalid_argument("clear_denominators: truncation order below denominator degree");
      std::vector<DenFactor> rest = denominator;
      for (auto f : t.denominator) {
        auto it = std::find(rest.begin(), rest.end(), f);
        if (it == rest.end()) throw std::invalid_argument("clear_denominators: term denominator does not divide the common one");
        rest.erase(it);
      }
      UVPoly mult{{{0, 0}, t.coefficient}};
      for (auto f : rest) mult = uv_multiply(mult, uv_factor(f));
      auto part = multiply_uv(mult, t.series, d);
      acc = acc ? *acc + part : part;
    }
    return acc;
  };
  auto l = side(lhs), r = side(rhs);
  if (!l && !r) throw std::invalid_argument("clear_denominators: no terms");
  if (!l) l = r->scaled(Rational(0));
  if (!r) r = l->scaled(Rational(0));
  return {*l, *r};
}

/// Coefficients of u^{-a} on the window lo <= a <= hi (a < 0 are positive powers).
template <class R>
struct LaurentWindow {
  int lo, hi;
  std::vector<R> c;
  const R& at(int a) const { return c.at(static_cast<std::size_t>(a - lo)); }
  bool is_zero() const {
    for (auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
  std::optional<int> first_nonzero() const {
    for (int a = lo; a <= hi; ++a)
      if (!at(a).is_zero()) return a;
    return std::nullopt;
  }
};

/// p(u) * s on the window [-deg p, K - deg p]; p given by coefficients of u^0, u^1, ...
template <class R>
LaurentWindow<R> multiply_u(const std::vector<Rational>& p, const TruncSeries<R>& s) {
  const int d = static_cast<int>(p.size()) - 1;
  const int K = s.order();
  if (K < d) throw std::invalid_argument("multiply_u: truncation order below denominator degree");
  LaurentWindow<R> r{-d, K - d, {}};
  for (int a = -d; a <= K - d; ++a) {
    R acc = zero_like(s[0]);
    for (int q = 0; q <= d; ++q) {
      int sa = a + q;
      if (sa < 0 || p[static_cast<std::size_t>(q)].is_zero() || s[sa].is_zero()) continue;
      acc = acc + s[sa] * p[static_cast<std::size_t>(q)];
    }
    r.c.push_back(std::move(acc));
  }
  return r;
}

}  // namespace twy
