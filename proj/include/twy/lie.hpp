#pragma once

// Classical Lie algebras gl(n), o(2n+1), sp(2n), o(2n) in the matrix-unit
// realization: index sets, canonical bases, theta signs, brackets and rho.

#include "twy/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twy {

enum class Family { A, B, C, D };

struct AlgebraSpec {
  Family family = Family::A;
  int n = 1;

  /// "gl:<rank>", "o:<N>", "sp:<N>" with N the matrix size.
  static AlgebraSpec parse(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("spec must look like gl:3, o:5 or sp:4");
    std::string fam(s.substr(0, colon));
    std::string num(s.substr(colon + 1));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("spec size must be a positive integer: '" + std::string(s) + "'");
    int N = std::stoi(num);
    if (N < 1) throw std::invalid_argument("spec size must be positive");
    if (fam == "gl") return {Family::A, N};
    if (fam == "o") {
      if (N < 2) throw std::invalid_argument("o:N needs N >= 2");
      return N % 2 ? AlgebraSpec{Family::B, (N - 1) / 2} : AlgebraSpec{Family::D, N / 2};
    }
    if (fam == "sp") {
      if (N % 2) throw std::invalid_argument("sp:N needs even N");
      return {Family::C, N / 2};
    }
    throw std::invalid_argument("unknown family '" + fam + "'");
  }

  std::string to_string() const {
    switch (family) {
      case Family::A: return "gl:" + std::to_string(n);
      case Family::B: return "o:" + std::to_string(2 * n + 1);
      case Family::C: return "sp:" + std::to_string(2 * n);
      case Family::D: return "o:" + std::to_string(2 * n);
    }
    return "?";
  }

  bool is_gl() const { return family == Family::A; }
  bool orthogonal() const { return family == Family::B || family == Family::D; }
  bool symplectic() const { return family == Family::C; }
  bool has_zero_index() const { return family == Family::B; }

  /// Size N of the defining matrices.
  int matrix_size() const {
    switch (family) {
      case Family::A: return n;
      case Family::B: return 2 * n + 1;
      default: return 2 * n;
    }
  }

  /// Row/column labels in increasing order.
  std::vector<int> index_set() const {
    std::vector<int> r;
    if (family == Family::A) {
      for (int i = 1; i <= n; ++i) r.push_back(i);
      return r;
    }
    for (int i = -n; i <= n; ++i)
      if (i != 0 || family == Family::B) r.push_back(i);
    return r;
  }
  bool in_index_set(int i) const {
    if (family == Family::A) return i >= 1 && i <= n;
    if (i == 0) return family == Family::B;
    return i >= -n && i <= n;
  }

  int dimension() const {
    switch (family) {
      case Family::A: return n * n;
      case Family::B:
      case Family::C: return n * (2 * n + 1);
      case Family::D: return n * (2 * n - 1);
    }
    return 0;
  }

  /// Same family, rank shifted by delta.
  AlgebraSpec with_rank(int r) const { return {family, r}; }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

struct GenIndex {
  int i = 0, j = 0;
  friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

enum class TriClass { Lower, Cartan, Upper };

inline int sgn(int x) { return (x > 0) - (x < 0); }

/// 1 for the orthogonal families, sgn(i) sgn(j) for sp. gl has no theta;
/// it is reported as 1.
inline int theta(const AlgebraSpec& spec, int i, int j) {
  if (spec.symplectic()) {
    int s = sgn(i) * sgn(j);
    return s == 0 ? 1 : s;
  }
  return 1;
}

/// Sparse linear combination of canonical basis elements (by basis position).
using BasisVec = std::vector<std::pair<int, Rational>>;
/// Sparse combination of gl matrix units E_{ab}.
using GlVec = std::map<GenIndex, Rational>;

class LieAlgebra {
 public:
  static std::shared_ptr<const LieAlgebra> make(AlgebraSpec spec) {
    return std::shared_ptr<const LieAlgebra>(new LieAlgebra(spec));
  }

  const AlgebraSpec& spec() const { return spec_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<GenIndex>& basis() const { return basis_; }
  const GenIndex& element(int b) const { return basis_.at(static_cast<std::size_t>(b)); }

  /// Position of (i, j) if it is a canonical basis element.
  std::optional<int> find(int i, int j) const {
    auto it = pos_.find({i, j});
    if (it == pos_.end()) return std::nullopt;
    return it->second;
  }

  /// Rewrites F_{ij} as coefficient * (canonical element), or nullopt for zero.
  std::optional<std::pair<Rational, int>> canonicalize(int i, int j) const {
    if (!spec_.in_index_set(i) || !spec_.in_index_set(j))
      throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + spec_.to_string());
    if (auto p = find(i, j)) return std::pair{Rational(1), *p};
    if (spec_.is_gl()) return std::nullopt;
    if (i + j == 0) return std::nullopt;  // F_{i,-i} = 0 in the orthogonal case
    // F_{ij} = -theta_{ij} F_{-j,-i}
    auto p = find(-j, -i);
    if (!p) throw std::logic_error("canonicalize: partner not canonical");
    return std::pair{Rational(-theta(spec_, i, j)), *p};
  }

  /// Matrix-unit expansion of canonical element b.
  const GlVec& expand(int b) const { return expand_.at(static_cast<std::size_t>(b)); }
  /// Matrix-unit expansion of F_{ij} (or E_{ij} for gl).
  GlVec expand_f(int i, int j) const {
    if (spec_.is_gl()) return {{{i, j}, Rational(1)}};
    GlVec r;
    r[{i, j}] += Rational(1);
    r[{-j, -i}] -= Rational(theta(spec_, i, j));
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
  }

  TriClass tri_class(int b) const {
    const auto& g = element(b);
    return g.i < g.j ? TriClass::Upper : (g.i == g.j ? TriClass::Cartan : TriClass::Lower);
  }

  /// Cached structure constants [X_p, X_q].
  const BasisVec& bracket(int p, int q) const {
    return table_.at(static_cast<std::size_t>(p) * basis_.size() + static_cast<std::size_t>(q));
  }

  /// Expresses an element of the matrix realization in the canonical basis.
  /// Throws if the matrix does not lie in the algebra.
  BasisVec from_gl(const GlVec& z) const {
    BasisVec r;
    for (int b = 0; b < dim(); ++b) {
      const auto& g = element(b);
      auto it = z.find(g);
      if (it == z.end() || it->second.is_zero()) continue;
      r.emplace_back(b, it->second / lead_[static_cast<std::size_t>(b)]);
    }
    GlVec back;
    for (auto& [b, c] : r)
      for (auto& [e, x] : expand(b)) back[e] += c * x;
    std::erase_if(back, [](const auto& kv) { return kv.second.is_zero(); });
    GlVec zz = z;
    std::erase_if(zz, [](const auto& kv) { return kv.second.is_zero(); });
    if (back != zz) throw std::logic_error("from_gl: matrix is not in " + spec_.to_string());
    return r;
  }

  static GlVec gl_bracket(const GlVec& x, const GlVec& y) {
    GlVec r;
    for (auto& [e1, a] : x)
      for (auto& [e2, b] : y) {
        if (e1.j == e2.i) r[{e1.i, e2.j}] += a * b;
        if (e2.j == e1.i) r[{e2.i, e1.j}] -= a * b;
      }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
  }

  std::string name(int b) const {
    const auto& g = element(b);
    return std::string(spec_.is_gl() ? "E[" : "F[") + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
  }

 private:
  explicit LieAlgebra(AlgebraSpec spec) : spec_(spec) {
    if (spec.n < 1) throw std::invalid_argument("rank must be positive");
    auto idx = spec.index_set();
    for (int i : idx)
      for (int j : idx) {
        bool canon = spec.is_gl() || i + j < 0 || (spec.symplectic() && i + j == 0);
        if (canon) basis_.push_back({i, j});
      }
    for (std::size_t b = 0; b < basis_.size(); ++b) pos_[basis_[b]] = static_cast<int>(b);
    for (auto& g : basis_) {
      expand_.push_back(expand_f(g.i, g.j));
      lead_.push_back(expand_.back().at(g));
    }
    if (static_cast<int>(basis_.size()) != spec.dimension()) throw std::logic_error("canonical basis has wrong size");
    table_.resize(basis_.size() * basis_.size());
    for (int p = 0; p < dim(); ++p)
      for (int q = 0; q < dim(); ++q)
        table_[static_cast<std::size_t>(p) * basis_.size() + static_cast<std::size_t>(q)] =
            from_gl(gl_bracket(expand(p), expand(q)));
  }

  AlgebraSpec spec_;
  std::vector<GenIndex> basis_;
  std::map<GenIndex, int> pos_;
  std::vector<GlVec> expand_;
  std::vector<Rational> lead_;
  std::vector<BasisVec> table_;
};

/// Bracket of two arbitrary generators F_{ij}, F_{kl} in the canonical basis.
inline BasisVec bracket(const LieAlgebra& g, GenIndex x, GenIndex y) {
  auto cx = g.canonicalize(x.i, x.j), cy = g.canonicalize(y.i, y.j);
  if (!cx || !cy) return {};
  BasisVec r;
  for (auto [b, k] : g.bracket(cx->second, cy->second)) r.emplace_back(b, k * cx->first * cy->first);
  return r;
}

/// rho_{-i}, i = 1..n, for the orthogonal and symplectic families.
inline std::vector<Rational> rho(const AlgebraSpec& spec) {
  std::vector<Rational> r;
  for (int i = 1; i <= spec.n; ++i) {
    switch (spec.family) {
      case Family::A: throw std::invalid_argument("rho: gl uses the shifted coordinates lambda_i - i instead");
      case Family::B: r.emplace_back(2 * i - 1, 2); break;
      case Family::C: r.emplace_back(i); break;
      case Family::D: r.emplace_back(i - 1); break;
    }
  }
  return r;
}

/// Value rho_{-i} for one index i >= 1.
inline Rational rho_at(const AlgebraSpec& spec, int i) {
  switch (spec.family) {
    case Family::B: return Rational(2 * i - 1, 2);
    case Family::C: return Rational(i);
    case Family::D: return Rational(i - 1);
    default: throw std::invalid_argument("rho: gl uses the shifted coordinates lambda_i - i instead");
  }
}

/// First failure of antisymmetry or the Jacobi identity over all basis
/// triples, as "antisymmetry p q" or "jacobi p q r".
inline std::optional<std::string> lie_axiom_violation(const LieAlgebra& g) {
  const int d = g.dim();
  auto reduce = [](const BasisVec& v) {
    std::map<int, Rational> m;
    for (auto& [b, k] : v) m[b] += k;
    std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
    return m;
  };
  auto apply = [&](const BasisVec& x, int r, BasisVec& out) {
    for (auto& [p, a] : x)
      for (auto& [e, k] : g.bracket(p, r)) out.emplace_back(e, a * k);
  };
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      BasisVec sum = g.bracket(p, q);
      for (auto& t : g.bracket(q, p)) sum.push_back(t);
      if (!reduce(sum).empty()) return "antisymmetry " + g.name(p) + " " + g.name(q);
      for (int r = 0; r < d; ++r) {
        BasisVec t;
        apply(g.bracket(p, q), r, t);
        apply(g.bracket(q, r), p, t);
        apply(g.bracket(r, p), q, t);
        if (!reduce(t).empty()) return "jacobi " + g.name(p) + " " + g.name(q) + " " + g.name(r);
      }
    }
  return std::nullopt;
}

}  // namespace twy
