#pragma once

// Polynomial invariants on matrix space: tr(x^M) and (x^M)_{ij}, their
// stability modulo the graded ideal, the parity table for o(N) and sp(N),
// block-cyclic witness points and Jacobian-rank independence certificates.

#include "twy/lie.hpp"
#include "twy/linalg.hpp"
#include "twy/multipoly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twy {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

inline bool is_coordinate(const AlgebraSpec& spec, int i, int j) {
  return spec.is_gl() || i + j < 0 || (spec.symplectic() && i + j == 0);
}

/// Entry x_{ij} in independent coordinates. For o(N), sp(N) the coordinates
/// are x_{ab} with (a, b) canonical and x_{-j,-i} = -theta_{ij} x_{ij}.
inline MultiPoly matrix_entry(const AlgebraSpec& spec, int i, int j) {
  if (!spec.in_index_set(i) || !spec.in_index_set(j))
    throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + spec.to_string());
  if (is_coordinate(spec, i, j)) return MultiPoly::var(Var::x(i, j));
  if (i + j == 0) return {};
  return MultiPoly::var(Var::x(-j, -i)) * Rational(-theta(spec, i, j));
}

inline PolyMatrix symbolic_matrix(const AlgebraSpec& spec) {
  auto idx = spec.index_set();
  PolyMatrix x(idx.size(), std::vector<MultiPoly>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) x[a][b] = matrix_entry(spec, idx[a], idx[b]);
  return x;
}

inline PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t N = a.size();
  PolyMatrix r(N, std::vector<MultiPoly>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

/// x, x^2, ..., x^K.
inline std::vector<PolyMatrix> matrix_powers(const PolyMatrix& x, int K) {
  std::vector<PolyMatrix> r;
  if (K < 1) return r;
  r.push_back(x);
  for (int M = 2; M <= K; ++M) r.push_back(matmul(r.back(), x));
  return r;
}

enum class InvariantKind { Trace, Corner };

struct InvariantGen {
  InvariantKind kind = InvariantKind::Trace;
  int M = 1;
  int i = 0, j = 0;

  std::string to_string() const {
    if (kind == InvariantKind::Trace) return "tr(x^" + std::to_string(M) + ")";
    return "(x^" + std::to_string(M) + ")[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  friend bool operator==(const InvariantGen&, const InvariantGen&) = default;
};

inline InvariantGen trace_gen(int M) { return {InvariantKind::Trace, M, 0, 0}; }
inline InvariantGen corner_gen(int M, int i, int j) { return {InvariantKind::Corner, M, i, j}; }

/// Labels of g_m(n)'s complement block: 1..m for gl, -m..m otherwise.
inline bool in_corner(const AlgebraSpec& spec, int m, int i) {
  if (spec.is_gl()) return i >= 1 && i <= m;
  return std::abs(i) <= m && spec.in_index_set(i);
}

inline MultiPoly evaluate_gen(const AlgebraSpec& spec, const PolyMatrix& xM, const InvariantGen& g) {
  auto idx = spec.index_set();
  if (g.kind == InvariantKind::Trace) {
    MultiPoly t;
    for (std::size_t a = 0; a < idx.size(); ++a) t += xM[a][a];
    return t;
  }
  auto pos = [&](int v) { return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), v) - idx.begin()); };
  return xM[pos(g.i)][pos(g.j)];
}

/// tr(x^M) or (x^M)_{ij} in independent coordinates; a corner needs both
/// indices in the m-block.
inline MultiPoly invariant_gen(const AlgebraSpec& spec, const InvariantGen& g, int m) {
  if (g.M < 1) throw std::invalid_argument("invariant_gen: M must be positive");
  if (g.kind == InvariantKind::Corner && (!in_corner(spec, m, g.i) || !in_corner(spec, m, g.j)))
    throw std::invalid_argument("invariant_gen: corner " + g.to_string() + " needs indices in the m = " +
                                std::to_string(m) + " block");
  auto x = symbolic_matrix(spec);
  return evaluate_gen(spec, matrix_powers(x, g.M).back(), g);
}

/// Whether a coordinate lies in the graded ideal of rank n: x_{in} for gl,
/// x_{-n,k} (the partners of x_{kn}) otherwise.
inline bool is_column_n(const AlgebraSpec& spec, Var v) {
  if (v.kind() != VarKind::X) return false;
  return spec.is_gl() ? v.b() == spec.n : v.a() == -spec.n;
}

/// First monomial of f with no column-n coordinate, if any.
inline std::optional<std::string> graded_ideal_violation(const AlgebraSpec& spec, const MultiPoly& f) {
  for (const auto& [mono, k] : f.terms()) {
    bool hit = false;
    for (const auto& [v, e] : mono.factors()) hit = hit || is_column_n(spec, v);
    if (!hit) return mono.to_string();
  }
  return std::nullopt;
}

/// Traces and all corners with indices of rank n-1, for M = 1..K.
inline std::vector<InvariantGen> stability_generators(const AlgebraSpec& spec, int K) {
  std::vector<InvariantGen> gens;
  const auto low = spec.with_rank(spec.n - 1).index_set();
  for (int M = 1; M <= K; ++M) {
    gens.push_back(trace_gen(M));
    for (int i : low)
      for (int j : low) gens.push_back(corner_gen(M, i, j));
  }
  return gens;
}

/// For each generator, whether gen at rank n minus gen at rank n-1 lies in
/// the graded ideal I'(n). Powers are computed once per rank.
inline std::vector<std::pair<InvariantGen, bool>> stability_results(const AlgebraSpec& spec,
                                                                    const std::vector<InvariantGen>& gens) {
  if (spec.n < 2) throw std::invalid_argument("stability_check: rank must be at least 2");
  const AlgebraSpec low = spec.with_rank(spec.n - 1);
  int top = 1;
  for (const auto& g : gens) {
    if (g.M < 1) throw std::invalid_argument("stability_check: M must be positive");
    if (g.kind == InvariantKind::Corner && (!in_corner(spec, spec.n - 1, g.i) || !in_corner(spec, spec.n - 1, g.j)))
      throw std::invalid_argument("stability_check: corner " + g.to_string() + " needs indices of rank n - 1");
    top = std::max(top, g.M);
  }
  auto hi = matrix_powers(symbolic_matrix(spec), top);
  auto lo = matrix_powers(symbolic_matrix(low), top);
  std::vector<std::pair<InvariantGen, bool>> r;
  for (const auto& g : gens) {
    const auto M = static_cast<std::size_t>(g.M - 1);
    r.emplace_back(g, !graded_ideal_violation(spec, evaluate_gen(spec, hi[M], g) - evaluate_gen(low, lo[M], g)));
  }
  return r;
}

inline bool stability_check(const AlgebraSpec& spec, const InvariantGen& g) {
  return stability_results(spec, {g}).front().second;
}

// ---------------------------------------------------------------------------
// Parity restrictions for o(N), sp(N):  p_ij^(M) = (-1)^M theta_ij p_{-j,-i}^(M),
// and tr(x^M) = 0 for odd M.

inline bool parity_allowed(const AlgebraSpec& spec, const InvariantGen& g) {
  if (spec.is_gl()) return true;
  const bool odd = g.M % 2;
  if (g.kind == InvariantKind::Trace) return !odd;
  const int s = g.i + g.j;
  if (spec.orthogonal()) return odd ? s < 0 : s <= 0;
  return odd ? s <= 0 : s < 0;
}

/// Sign and partner with p_gen = sign * p_partner.
inline std::pair<int, InvariantGen> parity_partner(const AlgebraSpec& spec, const InvariantGen& g) {
  if (spec.is_gl() || g.kind == InvariantKind::Trace) return {1, g};
  const int sg = (g.M % 2 ? -1 : 1) * theta(spec, g.i, g.j);
  return {sg, corner_gen(g.M, -g.j, -g.i)};
}

/// The bound deg < n - m under which traces and corners generate the
/// orthogonal invariants; nullopt when the request is inside it.
inline std::optional<std::string> degree_warning(const AlgebraSpec& spec, int m, int M) {
  if (spec.is_gl() || M < spec.n - m) return std::nullopt;
  return "degree " + std::to_string(M) + " is not below n - m = " + std::to_string(spec.n - m) +
         "; generation by traces and corners is not asserted here";
}

/// Generators whose independence is certified: traces for M = 1..K (even M
/// only for o, sp) and parity-allowed corners (i, j, M) in the m-block.
inline std::vector<InvariantGen> independence_generators(const AlgebraSpec& spec, int m, int K) {
  std::vector<InvariantGen> r;
  std::vector<int> block;
  for (int i = spec.is_gl() ? 1 : -m; i <= m; ++i)
    if (spec.is_gl() || i != 0 || spec.has_zero_index()) block.push_back(i);
  for (int M = 1; M <= K; ++M) {
    if (parity_allowed(spec, trace_gen(M))) r.push_back(trace_gen(M));
    for (int i : block)
      for (int j : block)
        if (parity_allowed(spec, corner_gen(M, i, j))) r.push_back(corner_gen(M, i, j));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Witness points.

struct WitnessPoint {
  AlgebraSpec spec;
  int m = 0;
  int K = 0;
  std::vector<InvariantGen> generators;
  std::vector<Var> parameters;
  PolyMatrix matrix;                  // rows/columns in index_set order
  std::map<Var, MultiPoly> entries;   // independent coordinates -> values
};

/// Smallest rank hosting the disjoint chains and the K diagonal slots.
inline int witness_min_rank(const AlgebraSpec& spec, int m, int K) {
  int need = std::max(m, 0) + K;
  for (const auto& g : independence_generators(spec, m, K))
    if (g.kind == InvariantKind::Corner) need += g.M - 1;
  return std::max(need, 1);
}

/// Block-cyclic operator: each corner generator (i, j, M) gets a chain
/// e_j -> z e_{a_{M-1}} -> ... -> e_{a_1} -> e_i through its own block of
/// fresh labels; the last K labels carry y_1..y_K on the diagonal. For o, sp
/// the operator is A - A^t, which for i + j = 0 halves the final link.
inline WitnessPoint witness_point(const AlgebraSpec& top, int m, int K) {
  if (K < 1) throw std::invalid_argument("witness_point: K must be positive");
  if (m < (top.has_zero_index() ? -1 : 0)) throw std::invalid_argument("witness_point: m out of range");
  const int need = witness_min_rank(top, m, K);
  if (top.n < need)
    throw std::invalid_argument("witness_point: rank " + std::to_string(top.n) + " too small, need n >= " +
                                std::to_string(need));
  WitnessPoint w{top, m, K, independence_generators(top, m, K), {}, {}, {}};
  auto idx = top.index_set();
  auto pos = [&](int v) { return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), v) - idx.begin()); };
  PolyMatrix A(idx.size(), std::vector<MultiPoly>(idx.size()));
  auto put = [&](int r, int s, const MultiPoly& v) { A[pos(r)][pos(s)] += v; };

  for (int k = 1; k <= K; ++k) w.parameters.push_back(Var::y(k));
  int next = std::max(m, 0) + 1;
  for (const auto& g : w.generators) {
    if (g.kind != InvariantKind::Corner) continue;
    const Var zv = Var::z(g.i, g.j, g.M);
    w.parameters.push_back(zv);
    const MultiPoly z = MultiPoly::var(zv);
    const Rational last(!top.is_gl() && g.i + g.j == 0 ? Rational(1, 2) : Rational(1));
    if (g.M == 1) {
      put(g.i, g.j, z * last);
      continue;
    }
    std::vector<int> a;
    for (int t = 0; t < g.M - 1; ++t) a.push_back(next++);
    put(a.back(), g.j, z);
    for (int t = g.M - 2; t >= 1; --t) put(a[static_cast<std::size_t>(t - 1)], a[static_cast<std::size_t>(t)], MultiPoly(1));
    put(g.i, a.front(), MultiPoly(last));
  }
  for (int k = 1; k <= K; ++k) put(top.n - K + k, top.n - K + k, MultiPoly::var(Var::y(k)));

  w.matrix = A;
  if (!top.is_gl())
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        w.matrix[a][b] = A[a][b] - A[pos(-idx[b])][pos(-idx[a])] * Rational(theta(top, idx[a], idx[b]));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (is_coordinate(top, idx[a], idx[b])) w.entries[Var::x(idx[a], idx[b])] = w.matrix[a][b];
  return w;
}

/// The witness satisfies x^t = -x (o, sp) and each entry matches its
/// independent-coordinate expression; returns the first bad entry.
inline std::optional<std::string> witness_consistency(const WitnessPoint& w) {
  auto idx = w.spec.index_set();
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (!(matrix_entry(w.spec, idx[a], idx[b]).substitute(w.entries) == w.matrix[a][b]))
        return "entry (" + std::to_string(idx[a]) + "," + std::to_string(idx[b]) + ")";
  return std::nullopt;
}

/// Generator values on the witness, computed from powers of the witness matrix.
inline std::vector<MultiPoly> witness_values(const WitnessPoint& w) {
  int top = 1;
  for (const auto& g : w.generators) top = std::max(top, g.M);
  auto P = matrix_powers(w.matrix, top);
  std::vector<MultiPoly> r;
  for (const auto& g : w.generators) r.push_back(evaluate_gen(w.spec, P[static_cast<std::size_t>(g.M - 1)], g));
  return r;
}

/// Default evaluation point: y_k = k, z = 1.
inline std::map<Var, Rational> default_parameter_point(const WitnessPoint& w) {
  std::map<Var, Rational> p;
  for (Var v : w.parameters) p[v] = v.kind() == VarKind::Y ? Rational(v.a()) : Rational(1);
  return p;
}

/// Rank of the Jacobian of polys (in the witness parameters) at a point.
inline int witness_jacobian_rank(const WitnessPoint& w, const std::vector<MultiPoly>& polys,
                                 const std::map<Var, Rational>& point) {
  return jacobian_rank(polys, w.parameters, point);
}

// ---------------------------------------------------------------------------
// Coadjoint action on polynomial functions: F_kl acts on x_v through the
// bracket and extends as a derivation.

inline MultiPoly adjoint_derivation(const LieAlgebra& g, int k, int l, const MultiPoly& f) {
  MultiPoly r;
  for (Var v : f.variables()) {
    if (v.kind() != VarKind::X) continue;
    MultiPoly image;
    for (auto [b, coef] : bracket(g, {k, l}, {v.a(), v.b()})) {
      const auto& e = g.element(b);
      image += MultiPoly::var(Var::x(e.i, e.j)) * coef;
    }
    if (!image.is_zero()) r += f.derivative(v) * image;
  }
  return r;
}

/// First generator F_kl of g_m(n) that does not kill f.
inline std::optional<GenIndex> adjoint_violation(const AlgebraSpec& spec, int m, const MultiPoly& f) {
  auto g = LieAlgebra::make(spec);
  for (const auto& e : g->basis()) {
    if (in_corner(spec, m, e.i) || in_corner(spec, m, e.j)) continue;
    if (!adjoint_derivation(*g, e.i, e.j, f).is_zero()) return e;
  }
  return std::nullopt;
}

}  // namespace twy
