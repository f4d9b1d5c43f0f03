// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/assignment.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace openshell {

Eigen::VectorXi min_cost_assignment(const RealMatrix& cost) {
  const int n = static_cast<int>(cost.rows());
  if (cost.cols() != n || n == 0)
    throw std::invalid_argument("assignment needs a nonempty square matrix");
  const Real inf = std::numeric_limits<Real>::infinity();

  // 1-indexed arrays; column 0 is the virtual root of each augmenting path.
  std::vector<Real> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      int j1 = 0;
      Real delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Real cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  Eigen::VectorXi result(n);
  for (int j = 1; j <= n; ++j) result[match[j] - 1] = j - 1;
  return result;
}

}  // namespace openshell
