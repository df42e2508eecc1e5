#pragma once

// Shifted symmetric functions on weights that differ from the constant
// weight (c, c, ...) in finitely many places: power sums, elementary and
// complete generators, the projections lambda_n = c, W'-invariance, and the
// central series chi_n(u).

#include "twy/lie.hpp"
#include "twy/multipoly.hpp"
#include "twy/series.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twy {

enum class SymKind { P, E, H };

inline SymKind parse_sym_kind(const std::string& s) {
  if (s == "p") return SymKind::P;
  if (s == "e") return SymKind::E;
  if (s == "h") return SymKind::H;
  throw std::invalid_argument("generator kind must be p, e or h");
}

/// Weight variable of row k: lambda_k for gl, lambda_{-k} otherwise.
inline Var weight_var(const AlgebraSpec& spec, int k) { return Var::lambda(spec.is_gl() ? k : -k); }

/// Per-row pair (x_k, y_k) such that every generator is built from
/// prod (1 + x_k t)/(1 + y_k t):  gl: (lambda_k - k, c - k);
/// o/sp: (l_{-k}^2, (c + rho_{-k})^2).
inline std::vector<std::pair<MultiPoly, MultiPoly>> sym_alphabet(const AlgebraSpec& spec, const MultiPoly& c) {
  std::vector<std::pair<MultiPoly, MultiPoly>> r;
  for (int k = 1; k <= spec.n; ++k) {
    MultiPoly lam = MultiPoly::var(weight_var(spec, k));
    if (spec.is_gl()) {
      r.emplace_back(lam - MultiPoly(k), c - MultiPoly(k));
    } else {
      MultiPoly rho(rho_at(spec, k));
      MultiPoly l = lam + rho, lc = c + rho;
      r.emplace_back(l * l, lc * lc);
    }
  }
  return r;
}

/// E(t) = prod (1 + x t)/(1 + y t) to order K in t.
inline TruncSeries<MultiPoly> sym_E_series(const AlgebraSpec& spec, const MultiPoly& c, int K) {
  TruncSeries<MultiPoly> r = TruncSeries<MultiPoly>::one(K, MultiPoly());
  for (auto& [x, y] : sym_alphabet(spec, c)) {
    TruncSeries<MultiPoly> num = TruncSeries<MultiPoly>::one(K, MultiPoly()), den = num;
    if (K >= 1) {
      num[1] = x;
      den[1] = y;
    }
    r = r * num * series_invert(den);
  }
  return r;
}

/// H(t) = prod (1 - y t)/(1 - x t) to order K in t.
inline TruncSeries<MultiPoly> sym_H_series(const AlgebraSpec& spec, const MultiPoly& c, int K) {
  TruncSeries<MultiPoly> r = TruncSeries<MultiPoly>::one(K, MultiPoly());
  for (auto& [x, y] : sym_alphabet(spec, c)) {
    TruncSeries<MultiPoly> num = TruncSeries<MultiPoly>::one(K, MultiPoly()), den = num;
    if (K >= 1) {
      num[1] = -y;
      den[1] = -x;
    }
    r = r * num * series_invert(den);
  }
  return r;
}

/// p_m = sum_k (x_k^m - y_k^m).
inline MultiPoly sym_power_sum(const AlgebraSpec& spec, const MultiPoly& c, int m) {
  if (m < 1) throw std::invalid_argument("generator degree m must be >= 1");
  MultiPoly r;
  for (auto& [x, y] : sym_alphabet(spec, c)) r += x.pow(static_cast<unsigned>(m)) - y.pow(static_cast<unsigned>(m));
  return r;
}

/// Generator p_m, e_m or h_m at the rank of spec.
inline MultiPoly sym_generator(const AlgebraSpec& spec, SymKind kind, int m, const MultiPoly& c) {
  if (m < 1) throw std::invalid_argument("generator degree m must be >= 1");
  switch (kind) {
    case SymKind::P: return sym_power_sum(spec, c, m);
    case SymKind::E: return sym_E_series(spec, c, m)[m];
    case SymKind::H: return sym_H_series(spec, c, m)[m];
  }
  return {};
}

/// First violated identity among
///   m e_m = sum_r (-1)^{r-1} p_r e_{m-r},   m h_m = sum_r p_r h_{m-r},
///   sum_r (-1)^r e_{m-r} h_r = 0,
/// for 1 <= m <= K.
inline std::optional<std::string> newton_violation(const AlgebraSpec& spec, const MultiPoly& c, int K) {
  auto E = sym_E_series(spec, c, K), H = sym_H_series(spec, c, K);
  std::vector<MultiPoly> p{MultiPoly()};
  for (int m = 1; m <= K; ++m) p.push_back(sym_power_sum(spec, c, m));
  for (int m = 1; m <= K; ++m) {
    MultiPoly se, sh, eh;
    for (int r = 1; r <= m; ++r) {
      MultiPoly term = p[static_cast<std::size_t>(r)] * E[m - r];
      se += r % 2 ? term : -term;
      sh += p[static_cast<std::size_t>(r)] * H[m - r];
    }
    for (int r = 0; r <= m; ++r) {
      MultiPoly term = E[m - r] * H[r];
      eh += r % 2 ? -term : term;
    }
    if (!(E[m] * Rational(m) - se).is_zero()) return "e-Newton identity fails at m=" + std::to_string(m);
    if (!(H[m] * Rational(m) - sh).is_zero()) return "h-Newton identity fails at m=" + std::to_string(m);
    if (!eh.is_zero()) return "E(t)H(-t) = 1 fails at m=" + std::to_string(m);
  }
  return std::nullopt;
}

/// pi_{n,c} on polynomials: lambda_n = c (gl) or lambda_{-n} = c.
inline MultiPoly project_pi(const MultiPoly& f, const AlgebraSpec& spec, const MultiPoly& c) {
  if (spec.n < 1) throw std::invalid_argument("project_pi: rank must be positive");
  return f.substitute(weight_var(spec, spec.n), c);
}

/// Rewrites f in the shifted coordinates: s_k = lambda_k - k (gl) or
/// l_{-k} = lambda_{-k} + rho_{-k}.
inline MultiPoly to_shifted_coordinates(const MultiPoly& f, const AlgebraSpec& spec) {
  std::map<Var, MultiPoly> sub;
  for (int k = 1; k <= spec.n; ++k) {
    if (spec.is_gl()) sub[Var::lambda(k)] = MultiPoly::var(Var::shifted(k)) + MultiPoly(k);
    else sub[Var::lambda(-k)] = MultiPoly::var(Var::ell(-k)) - MultiPoly(rho_at(spec, k));
  }
  return f.substitute(sub);
}

/// Generator of W' that moves f, if any: adjacent transpositions of the
/// shifted coordinates, plus a single sign flip (B, C) or a paired flip (D).
inline std::optional<std::string> wprime_violation(const MultiPoly& f, const AlgebraSpec& spec) {
  MultiPoly g = to_shifted_coordinates(f, spec);
  auto coord = [&](int k) { return spec.is_gl() ? Var::shifted(k) : Var::ell(-k); };
  for (int k = 1; k < spec.n; ++k) {
    std::map<Var, MultiPoly> swap{{coord(k), MultiPoly::var(coord(k + 1))}, {coord(k + 1), MultiPoly::var(coord(k))}};
    if (!(g.substitute(swap) == g)) return "transposition (" + std::to_string(k) + "," + std::to_string(k + 1) + ")";
  }
  if (spec.is_gl()) return std::nullopt;
  if (spec.family == Family::D) {
    if (spec.n >= 2) {
      std::map<Var, MultiPoly> flip{{coord(1), -MultiPoly::var(coord(1))}, {coord(2), -MultiPoly::var(coord(2))}};
      if (!(g.substitute(flip) == g)) return "sign flip of rows 1,2";
    }
    return std::nullopt;
  }
  if (!(g.substitute(coord(1), -MultiPoly::var(coord(1))) == g)) return "sign flip of row 1";
  return std::nullopt;
}

inline bool wprime_invariance_check(const MultiPoly& f, const AlgebraSpec& spec) { return !wprime_violation(f, spec); }

/// 1 + u^{-1} + (1/4 - a^2) u^{-2}, i.e. ((u + 1/2)^2 - a^2) / u^2.
inline TruncSeries<MultiPoly> half_shift_quadratic(int K, const MultiPoly& a) {
  TruncSeries<MultiPoly> s = TruncSeries<MultiPoly>::one(K, MultiPoly());
  if (K >= 1) s[1] = MultiPoly(1);
  if (K >= 2) s[2] = MultiPoly(Rational(1, 4)) - a * a;
  return s;
}

/// chi_n(u) = (u+rho_1-c+1/2)/(u+rho_1+1/2) prod_i ((u+1/2)^2 - l_i^2)/((u+1/2)^2 - (rho_i-c)^2),
/// with l_i^2 = l_{-i}^2, (rho_i - c)^2 = (c + rho_{-i})^2, rho_1 = -rho_{-1}.
inline TruncSeries<MultiPoly> chi_series(const AlgebraSpec& spec, const MultiPoly& c, int K) {
  if (spec.is_gl()) throw std::invalid_argument("chi_series: o(N) and sp(N) only");
  const Rational rho1 = -rho_at(spec, 1);
  TruncSeries<MultiPoly> num = TruncSeries<MultiPoly>::one(K, MultiPoly()), den = num;
  if (K >= 1) {
    num[1] = MultiPoly(rho1 + Rational(1, 2)) - c;
    den[1] = MultiPoly(rho1 + Rational(1, 2));
  }
  TruncSeries<MultiPoly> r = num * series_invert(den);
  for (int i = 1; i <= spec.n; ++i) {
    MultiPoly rho(rho_at(spec, i));
    MultiPoly l = MultiPoly::var(Var::lambda(-i)) + rho;
    r = r * half_shift_quadratic(K, l) * series_invert(half_shift_quadratic(K, c + rho));
  }
  return r;
}

/// prod_i ((u+1/2)^2 - l_i^2)/((u+1/2)^2 - rho_i^2): the image of the
/// normalized Sklyanin determinant under the Harish-Chandra map.
inline TruncSeries<MultiPoly> hc_sdet_rhs(const AlgebraSpec& spec, int K) {
  if (spec.is_gl()) throw std::invalid_argument("hc_sdet_rhs: o(N) and sp(N) only");
  TruncSeries<MultiPoly> r = TruncSeries<MultiPoly>::one(K, MultiPoly());
  for (int i = 1; i <= spec.n; ++i) {
    MultiPoly rho(rho_at(spec, i));
    MultiPoly l = MultiPoly::var(Var::lambda(-i)) + rho;
    r = r * half_shift_quadratic(K, l) * series_invert(half_shift_quadratic(K, rho));
  }
  return r;
}

/// Weight with lambda = c except at the listed rows (row k means lambda_k
/// for gl and lambda_{-k} otherwise).
inline std::map<Var, MultiPoly> weight_point(const AlgebraSpec& spec, const MultiPoly& c,
                                             const std::map<int, MultiPoly>& deviations) {
  std::map<Var, MultiPoly> w;
  for (int k = 1; k <= spec.n; ++k) w[weight_var(spec, k)] = c;
  for (auto& [k, v] : deviations) {
    if (k < 1 || k > spec.n) throw std::out_of_range("weight deviation row " + std::to_string(k) + " outside rank");
    w[weight_var(spec, k)] = v;
  }
  return w;
}

/// Coherence of a family f_n (n = n0..n1): project_pi(f_n) = f_{n-1}.
/// Returns the first rank where it fails.
template <class F>
std::optional<int> coherence_violation(Family family, int n0, int n1, const MultiPoly& c, F&& f) {
  for (int n = n0 + 1; n <= n1; ++n) {
    AlgebraSpec s{family, n};
    if (!(project_pi(f(s), s, c) == f(s.with_rank(n - 1)))) return n;
  }
  return std::nullopt;
}

}  // namespace twy
