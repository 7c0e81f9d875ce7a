#include "configot/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "configot/summation.hpp"

namespace configot {

namespace detail {

namespace {

// Optimal value of the assignment problem restricted to the given rows and
// columns of the flat n x n matrix.
double restricted_value(std::size_t n, const std::vector<double>& flat,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  const std::size_t m = rows.size();
  if (m == 0) return 0.0;
  auto sub = [&](std::size_t i, std::size_t j) { return flat[rows[i] * n + cols[j]]; };
  const AssignmentResult r = solve_assignment_impl(m, sub);
  std::vector<double> matched(m);
  for (std::size_t i = 0; i < m; ++i) matched[i] = sub(i, r.col_of_row[i]);
  return pairwise_sum(matched);
}

}  // namespace

double matched_cost_sum(std::size_t n, const std::vector<std::size_t>& col_of_row,
                        const std::vector<double>& flat) {
  std::vector<double> matched(n);
  for (std::size_t i = 0; i < n; ++i) matched[i] = flat[i * n + col_of_row[i]];
  return pairwise_sum(matched);
}

void lexicographic_refine(std::size_t n, const std::vector<double>& flat,
                          std::vector<std::size_t>& col_of_row) {
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  double target = restricted_value(n, flat, rows, cols);

  std::vector<std::size_t> result(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t row = rows.front();
    bool fixed = false;
    for (std::size_t ci = 0; ci < cols.size() && !fixed; ++ci) {
      const std::size_t col = cols[ci];
      std::vector<std::size_t> rrows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> rcols;
      rcols.reserve(cols.size() - 1);
      for (std::size_t c : cols)
        if (c != col) rcols.push_back(c);
      const double rest = restricted_value(n, flat, rrows, rcols);
      const double candidate = flat[row * n + col] + rest;
      if (candidate <= target + 1e-12 * (1.0 + std::abs(target))) {
        result[row] = col;
        rows = std::move(rrows);
        cols = std::move(rcols);
        target = rest;
        fixed = true;
      }
    }
    if (!fixed) return;  // numeric trouble; keep the solver's permutation
  }
  col_of_row = std::move(result);
}

}  // namespace detail

AssignmentResult solve_assignment(const std::vector<std::vector<double>>& cost,
                                  std::size_t lexicographic_limit) {
  const std::size_t n = cost.size();
  for (const auto& row : cost) {
    if (row.size() != n) throw std::invalid_argument("solve_assignment: matrix must be square");
  }
  return solve_assignment(
      n, [&](std::size_t i, std::size_t j) { return cost[i][j]; }, lexicographic_limit);
}

}  // namespace configot
