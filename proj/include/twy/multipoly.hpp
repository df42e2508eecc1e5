#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// fixed family of commuting indeterminates (c, weight variables, witness
// parameters, matrix entries).

#include "twy/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace twy {

enum class VarKind : std::uint8_t {
  C = 0,        // the stability parameter c
  Lambda = 1,   // weight coordinate lambda_i
  Ell = 2,      // rho-shifted weight l_i = lambda_i + rho_i
  Shifted = 3,  // gl shifted coordinate lambda_i - i
  Y = 4,        // witness diagonal parameter y_k
  Z = 5,        // witness chain parameter z_{ijM}
  X = 6,        // matrix entry x_{ij}
  T = 7,        // auxiliary generating-function variable
};

/// An indeterminate, packed into a totally ordered 64-bit key so that term
/// order never depends on creation order.
class Var {
 public:
  constexpr Var() = default;
  static constexpr Var make(VarKind k, int a = 0, int b = 0, int c = 0) {
    return Var((static_cast<std::uint64_t>(k) << 48) | (pack(a) << 32) | (pack(b) << 16) | pack(c));
  }
  static constexpr Var c() { return make(VarKind::C); }
  static constexpr Var lambda(int i) { return make(VarKind::Lambda, i); }
  static constexpr Var ell(int i) { return make(VarKind::Ell, i); }
  static constexpr Var shifted(int i) { return make(VarKind::Shifted, i); }
  static constexpr Var y(int k) { return make(VarKind::Y, k); }
  static constexpr Var z(int i, int j, int m) { return make(VarKind::Z, i, j, m); }
  static constexpr Var x(int i, int j) { return make(VarKind::X, i, j); }
  static constexpr Var t() { return make(VarKind::T); }
  static constexpr Var from_key(std::uint64_t k) { return Var(k); }

  constexpr std::uint64_t key() const { return key_; }
  constexpr VarKind kind() const { return static_cast<VarKind>((key_ >> 48) & 0xff); }
  constexpr int a() const { return unpack(key_ >> 32); }
  constexpr int b() const { return unpack(key_ >> 16); }
  constexpr int m() const { return unpack(key_); }

  std::string name() const {
    auto idx = [](int v) { return std::to_string(v); };
    switch (kind()) {
      case VarKind::C: return "c";
      case VarKind::Lambda: return "lambda[" + idx(a()) + "]";
      case VarKind::Ell: return "l[" + idx(a()) + "]";
      case VarKind::Shifted: return "s[" + idx(a()) + "]";
      case VarKind::Y: return "y[" + idx(a()) + "]";
      case VarKind::Z: return "z[" + idx(a()) + "," + idx(b()) + "," + idx(m()) + "]";
      case VarKind::X: return "x[" + idx(a()) + "," + idx(b()) + "]";
      case VarKind::T: return "t";
    }
    return "?";
  }

  friend constexpr auto operator<=>(const Var&, const Var&) = default;

 private:
  constexpr explicit Var(std::uint64_t k) : key_(k) {}
  static constexpr std::uint64_t pack(int v) { return static_cast<std::uint64_t>(v + 0x8000) & 0xffff; }
  static constexpr int unpack(std::uint64_t v) { return static_cast<int>(v & 0xffff) - 0x8000; }
  std::uint64_t key_ = 0;
};

/// Power product of indeterminates, sorted by variable key, exponents >= 1.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;
  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t e = 1) {
    if (e) f_.emplace_back(v, e);
  }

  const std::vector<Factor>& factors() const { return f_; }
  bool empty() const { return f_.empty(); }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto& [v, e] : f_) d += e;
    return d;
  }
  std::uint32_t exponent(Var v) const {
    for (auto& [w, e] : f_)
      if (w == v) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.f_.reserve(a.f_.size() + b.f_.size());
    auto i = a.f_.begin(), j = b.f_.begin();
    while (i != a.f_.end() && j != b.f_.end()) {
      if (i->first < j->first) r.f_.push_back(*i++);
      else if (j->first < i->first) r.f_.push_back(*j++);
      else {
        r.f_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    r.f_.insert(r.f_.end(), i, a.f_.end());
    r.f_.insert(r.f_.end(), j, b.f_.end());
    return r;
  }

  /// Removes variable v, returning its exponent.
  std::uint32_t extract(Var v) {
    for (auto it = f_.begin(); it != f_.end(); ++it)
      if (it->first == v) {
        auto e = it->second;
        f_.erase(it);
        return e;
      }
    return 0;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.f_ < b.f_;
  }

  std::string to_string() const {
    std::string s;
    for (auto& [v, e] : f_) {
      if (!s.empty()) s += "*";
      s += v.name();
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto& [v, e] : f_) {
      h ^= v.key() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::vector<Factor> f_;
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& r) {  // NOLINT(google-explicit-constructor)
    if (!r.is_zero()) t_.emplace_back(Monomial{}, r);
  }
  MultiPoly(std::int64_t v) : MultiPoly(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int v) : MultiPoly(Rational(v)) {}           // NOLINT(google-explicit-constructor)
  MultiPoly(Monomial m, const Rational& r) {
    if (!r.is_zero()) t_.emplace_back(std::move(m), r);
  }
  static MultiPoly var(Var v) { return MultiPoly(Monomial(v), Rational(1)); }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.empty()); }
  Rational constant_term() const {
    if (!t_.empty() && t_[0].first.empty()) return t_[0].second;
    return Rational(0);
  }
  /// Value of a constant polynomial; nullopt otherwise.
  std::optional<Rational> as_constant() const {
    if (!is_constant()) return std::nullopt;
    return constant_term();
  }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
  }
  std::uint32_t degree_in(Var v) const {
    std::uint32_t d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.exponent(v));
    return d;
  }
  std::set<Var> variables() const {
    std::set<Var> s;
    for (auto& [m, c] : t_)
      for (auto& [v, e] : m.factors()) s.insert(v);
    return s;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.empty()) return b;
    if (b.t_.empty()) return a;
    MultiPoly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    auto i = a.t_.begin(), j = b.t_.begin();
    while (i != a.t_.end() && j != b.t_.end()) {
      if (i->first < j->first) r.t_.push_back(*i++);
      else if (j->first < i->first) r.t_.push_back(*j++);
      else {
        Rational s = i->second + j->second;
        if (!s.is_zero()) r.t_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    r.t_.insert(r.t_.end(), i, a.t_.end());
    r.t_.insert(r.t_.end(), j, b.t_.end());
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
    if (s.is_zero()) return {};
    if (s.is_one()) return a;
    MultiPoly r = a;
    for (auto& [m, c] : r.t_) c *= s;
    return r;
  }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) { return a * s; }
  friend MultiPoly operator*(const MultiPoly& a, int s) { return a * Rational(s); }
  friend MultiPoly operator*(int s, const MultiPoly& a) { return a * Rational(s); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.empty() || b.t_.empty()) return {};
    if (a.is_constant()) return b * a.t_[0].second;
    if (b.is_constant()) return a * b.t_[0].second;
    std::vector<Term> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) prod.emplace_back(ma * mb, ca * cb);
    return from_unsorted(std::move(prod));
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const {
    MultiPoly r(1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  /// Replaces every occurrence of v by the polynomial p.
  MultiPoly substitute(Var v, const MultiPoly& p) const {
    if (degree_in(v) == 0) return *this;
    std::vector<MultiPoly> powers{MultiPoly(1)};
    MultiPoly r;
    for (auto& [m, c] : t_) {
      Monomial rest = m;
      auto e = rest.extract(v);
      while (powers.size() <= e) powers.push_back(powers.back() * p);
      r += MultiPoly(std::move(rest), c) * powers[e];
    }
    return r;
  }
  MultiPoly substitute(const std::map<Var, MultiPoly>& sub) const {
    MultiPoly r;
    for (auto& [m, c] : t_) {
      MultiPoly term(c);
      Monomial keep;
      for (auto& [v, e] : m.factors()) {
        auto it = sub.find(v);
        if (it == sub.end()) keep = keep * Monomial(v, e);
        else term *= it->second.pow(e);
      }
      r += term * MultiPoly(keep, Rational(1));
    }
    return r;
  }
  MultiPoly evaluate(const std::map<Var, Rational>& point) const {
    std::map<Var, MultiPoly> sub;
    for (auto& [v, x] : point) sub.emplace(v, MultiPoly(x));
    return substitute(sub);
  }
  MultiPoly derivative(Var v) const {
    std::vector<Term> out;
    for (auto& [m, c] : t_) {
      Monomial rest = m;
      auto e = rest.extract(v);
      if (e == 0) continue;
      out.emplace_back(rest * Monomial(v, e - 1), c * Rational(static_cast<std::int64_t>(e)));
    }
    return from_unsorted(std::move(out));
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
    return std::lexicographical_compare(a.t_.begin(), a.t_.end(), b.t_.begin(), b.t_.end(),
                                        [](const Term& x, const Term& y) {
                                          if (x.first < y.first) return true;
                                          if (y.first < x.first) return false;
                                          return x.second < y.second;
                                        });
  }

  /// Human-readable form, highest-degree terms first; "0" for zero.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = c.sign() < 0 ? -c : c;
      if (s.empty()) s += c.sign() < 0 ? "-" : "";
      else s += c.sign() < 0 ? " - " : " + ";
      if (m.empty()) s += a.to_string();
      else if (a.is_one()) s += m.to_string();
      else s += a.to_string() + "*" + m.to_string();
    }
    return s;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto& [m, c] : t_) h ^= m.hash() * 31 + c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  static MultiPoly from_unsorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    MultiPoly r;
    r.t_.reserve(terms.size());
    for (auto& t : terms) {
      if (!r.t_.empty() && r.t_.back().first == t.first) r.t_.back().second += t.second;
      else {
        if (!r.t_.empty() && r.t_.back().second.is_zero()) r.t_.pop_back();
        r.t_.push_back(std::move(t));
      }
    }
    if (!r.t_.empty() && r.t_.back().second.is_zero()) r.t_.pop_back();
    return r;
  }

 private:
  std::vector<Term> t_;
};

inline MultiPoly zero_like(const MultiPoly&) { return {}; }
inline MultiPoly one_like(const MultiPoly&) { return MultiPoly(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

/// Inverse of a scalar that must be a nonzero rational constant.
inline std::optional<MultiPoly> scalar_inverse(const MultiPoly& p) {
  auto c = p.as_constant();
  if (!c || c->is_zero()) return std::nullopt;
  return MultiPoly(c->inverse());
}
inline std::optional<Rational> scalar_inverse(const Rational& r) {
  if (r.is_zero()) return std::nullopt;
  return r.inverse();
}

inline std::string to_string(const MultiPoly& p) { return p.to_string(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace twy

template <>
struct std::hash<twy::MultiPoly> {
  std::size_t operator()(const twy::MultiPoly& p) const noexcept { return p.hash(); }
};
