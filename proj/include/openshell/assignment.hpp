// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "openshell/types.hpp"

namespace openshell {

// Minimum-cost perfect assignment on a square cost matrix, O(n^3) via
// row-by-row dual updates (Jonker-Volgenant style). Returns row -> column.
Eigen::VectorXi min_cost_assignment(const RealMatrix& cost);

inline Eigen::VectorXi max_score_assignment(const RealMatrix& score) {
  return min_cost_assignment(-score);
}

}  // namespace openshell
