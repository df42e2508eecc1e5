#pragma once

// Exact rank computations over Q.

#include "twy/multipoly.hpp"
#include "twy/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace twy {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by Gaussian elimination.
inline int matrix_rank(RationalMatrix m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational f = m[r][col] / p[col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * p[c];
    }
    ++rank;
  }
  return rank;
}

/// Jacobian d(polys)/d(vars) at a rational point; variables missing from the
/// point stay symbolic and must not survive evaluation.
inline RationalMatrix jacobian_at(const std::vector<MultiPoly>& polys, const std::vector<Var>& vars,
                                  const std::map<Var, Rational>& point) {
  RationalMatrix J;
  for (const auto& f : polys) {
    J.emplace_back();
    for (Var v : vars) {
      MultiPoly d = f.derivative(v).evaluate(point);
      auto k = d.as_constant();
      if (!k) throw std::invalid_argument("jacobian_at: point leaves free variables in " + d.to_string());
      J.back().push_back(*k);
    }
  }
  return J;
}

inline int jacobian_rank(const std::vector<MultiPoly>& polys, const std::vector<Var>& vars,
                         const std::map<Var, Rational>& point) {
  return matrix_rank(jacobian_at(polys, vars, point));
}

}  // namespace twy
