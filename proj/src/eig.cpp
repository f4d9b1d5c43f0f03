// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/eig.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace openshell {

namespace {

bool complex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Indices that sort `values` by (Re, Im) ascending.
std::vector<Index> sort_order(const ComplexVector& values) {
  std::vector<Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return complex_less(values[a], values[b]);
  });
  return order;
}

struct RawDecomposition {
  ComplexVector values;
  ComplexMatrix vectors;  // unit-norm columns, sorted like `values`
};

RawDecomposition solve_sorted(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, true);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigensolver failed to converge");
  const auto order = sort_order(solver.eigenvalues());
  RawDecomposition out;
  out.values.resize(m.rows());
  out.vectors.resize(m.rows(), m.cols());
  for (Index j = 0; j < m.rows(); ++j) {
    out.values[j] = solver.eigenvalues()[order[j]];
    out.vectors.col(j) = solver.eigenvectors().col(order[j]).normalized();
  }
  return out;
}

// Within a block of (near-)equal eigenvalues the sorted order of the two
// decompositions need not pair matching vectors; reassign left candidates
// greedily by overlap with the right vectors. conj(y)^H r = y^T r.
void repair_block_pairing(const ComplexMatrix& right, ComplexMatrix& left_raw,
                          Index begin, Index end) {
  const Index n = end - begin;
  RealMatrix overlap(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      overlap(a, b) = std::abs(left_raw.col(begin + b)
                                   .cwiseProduct(right.col(begin + a))
                                   .sum());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  ComplexMatrix reordered(left_raw.rows(), n);
  for (Index a = 0; a < n; ++a) {
    Index best = -1;
    for (Index b = 0; b < n; ++b)
      if (!used[b] && (best < 0 || overlap(a, b) > overlap(a, best)))
        best = b;
    used[best] = true;
    reordered.col(a) = left_raw.col(begin + best);
  }
  left_raw.middleCols(begin, n) = reordered;
}

}  // namespace

Spectrum eig(const ComplexMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
    throw std::invalid_argument("eig needs a nonempty square matrix");
  if (!matrix.allFinite())
    throw std::invalid_argument("eig needs finite matrix entries");

  const Index n = matrix.rows();
  Spectrum s;
  s.matrix_norm = matrix.norm();

  RawDecomposition right = solve_sorted(matrix);

  // Left pairs from the transpose: if y solves A^T y = lambda y then
  // conj(y) solves A^H L = conj(lambda) L. A complex-symmetric input (the
  // model's matrices are) is its own transpose, so the same factorization
  // serves both sides.
  ComplexMatrix left_raw;
  const bool symmetric =
      ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() == 0.0);
  if (symmetric) {
    left_raw = right.vectors;
  } else {
    RawDecomposition tr = solve_sorted(matrix.transpose());
    left_raw = tr.vectors;
    const Real gap_tol = kPairGapRel * std::max(s.matrix_norm, Real(1));
    Index block_begin = 0;
    for (Index j = 1; j <= n; ++j) {
      const bool boundary =
          (j == n) ||
          std::abs(right.values[j] - right.values[j - 1]) > gap_tol;
      if (boundary) {
        if (j - block_begin > 1)
          repair_block_pairing(right.vectors, left_raw, block_begin, j);
        block_begin = j;
      }
    }
  }

  s.eigenvalues = std::move(right.values);
  s.right = std::move(right.vectors);
  s.left = left_raw.conjugate();
  s.kappa.resize(n);
  s.near_defective.assign(static_cast<std::size_t>(n), false);

  for (Index j = 0; j < n; ++j) {
    const Complex c = s.left.col(j).dot(s.right.col(j));  // <L|R>, unit norms
    const Real overlap = std::abs(c);
    s.kappa[j] = overlap > 0 ? 1.0 / overlap
                             : std::numeric_limits<Real>::infinity();
    if (!(s.kappa[j] < kDefectiveKappa)) {
      s.near_defective[j] = true;  // keep the unit-norm left vector
      continue;
    }
    // Rescale so <L_j|R_j> = 1 exactly.
    s.left.col(j) /= std::conj(c);
  }

  s.max_residual = (matrix * s.right - s.right * s.eigenvalues.asDiagonal())
                       .colwise()
                       .norm()
                       .maxCoeff();
  return s;
}

std::vector<DefectCluster> defectiveness(const Spectrum& spectrum) {
  std::vector<DefectCluster> clusters;
  const Real gap_tol = 1e-6 * std::max(spectrum.matrix_norm, Real(1));
  for (Index j = 0; j < spectrum.size(); ++j) {
    if (!spectrum.near_defective[j]) continue;
    const bool extend =
        !clusters.empty() &&
        std::abs(spectrum.eigenvalues[j] -
                 spectrum.eigenvalues[clusters.back().indices.back()]) <=
            gap_tol;
    if (!extend) clusters.push_back({});
    clusters.back().indices.push_back(j);
  }
  for (auto& cluster : clusters) {
    cluster.max_kappa = 0;
    cluster.max_gap = 0;
    for (std::size_t a = 0; a < cluster.indices.size(); ++a) {
      cluster.max_kappa =
          std::max(cluster.max_kappa, spectrum.kappa[cluster.indices[a]]);
      for (std::size_t b = a + 1; b < cluster.indices.size(); ++b)
        cluster.max_gap = std::max(
            cluster.max_gap,
            std::abs(spectrum.eigenvalues[cluster.indices[a]] -
                     spectrum.eigenvalues[cluster.indices[b]]));
    }
  }
  return clusters;
}

}  // namespace openshell
