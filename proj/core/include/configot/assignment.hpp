#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "configot/summation.hpp"

namespace configot {

/// Output of the dense assignment solver: an optimal permutation together
/// with dual potentials certifying it (u_i + v_j <= c_ij everywhere, with
/// equality on matched pairs).
struct AssignmentResult {
  std::vector<std::size_t> col_of_row;  // sigma: row i matched to column sigma(i)
  std::vector<double> row_potentials;   // u
  std::vector<double> col_potentials;   // v
  double cost = 0.0;                    // sum of matched entries
};

namespace detail {

/// Shortest-augmenting-path assignment (Jonker-Volgenant style), O(n^3).
/// Cost entries are pulled through the callable, so small instances can skip
/// materializing the matrix. Ties are broken toward lower column indices,
/// which makes the result deterministic.
template <class CostFn>
AssignmentResult solve_assignment_impl(std::size_t n, const CostFn& cost) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based arrays; index 0 is the virtual column holding the row being
  // inserted.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      double delta = kInf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  AssignmentResult out;
  out.col_of_row.assign(n, 0);
  out.row_potentials.assign(n, 0.0);
  out.col_potentials.assign(n, 0.0);
  for (std::size_t j = 1; j <= n; ++j) {
    out.col_of_row[p[j] - 1] = j - 1;
    out.col_potentials[j - 1] = v[j];
  }
  for (std::size_t i = 1; i <= n; ++i) out.row_potentials[i - 1] = u[i];
  return out;
}

/// Among minimum-cost assignments, fixes rows in order to the smallest
/// usable column (O(n^2) re-solves of shrinking subproblems). Callers cap n.
void lexicographic_refine(std::size_t n, const std::vector<double>& flat,
                          std::vector<std::size_t>& col_of_row);

double matched_cost_sum(std::size_t n, const std::vector<std::size_t>& col_of_row,
                        const std::vector<double>& flat);

}  // namespace detail

/// Solves the n x n assignment problem for the callable cost(i, j).
/// For n <= lexicographic_limit the permutation is additionally refined to
/// the lexicographically smallest optimum, making tie handling reproducible;
/// above the limit the deterministic solver output stands.
template <class CostFn>
AssignmentResult solve_assignment(std::size_t n, const CostFn& cost,
                                  std::size_t lexicographic_limit = 10) {
  AssignmentResult res = detail::solve_assignment_impl(n, cost);
  if (n > 1 && n <= lexicographic_limit) {
    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = cost(i, j);
    detail::lexicographic_refine(n, flat, res.col_of_row);
    res.cost = detail::matched_cost_sum(n, res.col_of_row, flat);
  } else {
    std::vector<double> matched(n);
    for (std::size_t i = 0; i < n; ++i) matched[i] = cost(i, res.col_of_row[i]);
    res.cost = pairwise_sum(matched);
  }
  return res;
}

AssignmentResult solve_assignment(const std::vector<std::vector<double>>& cost,
                                  std::size_t lexicographic_limit = 10);

}  // namespace configot
