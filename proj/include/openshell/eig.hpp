// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense eigendecomposition of general complex matrices with biorthonormal
// left/right eigenvector pairs and defectiveness diagnostics. Right pairs
// come from a Schur-based QR solve of the matrix, left pairs from the solve
// of its transpose; the two spectra are matched by eigenvalue within a
// relative gap tolerance. Near an exceptional point <L|R> -> 0, so pairs
// whose condition number kappa = 1/|<L|R>| exceeds kDefectiveKappa are
// flagged instead of rescaled, and downstream code treats them specially.

#include <vector>

#include "openshell/types.hpp"

namespace openshell {

inline constexpr Real kDefectiveKappa = 1e6;
inline constexpr Real kPairGapRel = 1e-8;  // left/right eigenvalue matching

struct Spectrum {
  // Sorted by real part ascending, ties by imaginary part.
  ComplexVector eigenvalues;
  ComplexMatrix right;          // unit-norm columns
  ComplexMatrix left;           // scaled so <L_j|R_j> = 1, unit-norm if flagged
  RealVector kappa;             // 1/|<L_j|R_j>| for unit-norm pairs
  std::vector<bool> near_defective;
  Real matrix_norm = 0;         // Frobenius norm of the input
  Real max_residual = 0;        // max_j ||A r_j - lambda_j r_j||_2

  Index size() const { return eigenvalues.size(); }
  Real energy(Index j) const { return eigenvalues[j].real(); }
  Real width(Index j) const { return -2.0 * eigenvalues[j].imag(); }

  // All widths, Gamma_j = -2 Im(eigenvalue_j), in spectrum order.
  RealVector widths() const { return -2.0 * eigenvalues.imag(); }
};

// Throws std::invalid_argument on empty or non-finite input and
// NumericalError if the QR iteration fails to converge.
Spectrum eig(const ComplexMatrix& matrix);

struct DefectCluster {
  std::vector<Index> indices;  // spectrum positions, ascending
  Real max_gap = 0;            // largest pairwise eigenvalue distance
  Real max_kappa = 0;
};

// Groups flagged eigenvalues into clusters of mutual proximity. A flagged
// state with no nearby flagged partner forms a singleton cluster.
std::vector<DefectCluster> defectiveness(const Spectrum& spectrum);

}  // namespace openshell
