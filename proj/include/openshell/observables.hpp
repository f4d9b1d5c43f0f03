// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Derived quantities of a decay sweep.
//
// The effective occupation number n_nu(j; gamma) = dGamma_j/dgamma is
// computed by two independent routes: finite differences on the tracked
// width curves, and the Hellmann-Feynman expectation
// Re <L_j|n_nu|R_j> / <L_j|R_j>, which is the exact derivative because the
// matrix depends on gamma only through -(i/2) gamma n_nu. Their agreement is
// a built-in cross-check. The segregation fraction condenses a full set of
// occupations into one order parameter for the superradiance crossover.

#include <vector>

#include "openshell/eig.hpp"
#include "openshell/hamiltonian.hpp"
#include "openshell/sweep.hpp"
#include "openshell/types.hpp"

namespace openshell {

// dGamma_j/dgamma on the tracked curves: quadratic-fit central differences
// on the (nonuniform) interior, one-sided secants at the grid ends.
// Requires at least 3 grid points. Entry (j, k) pairs with grid point k.
RealMatrix occupations_fd(const TrajectorySet& traj);

struct HfOccupations {
  RealVector values;          // NaN where flagged
  std::vector<bool> flagged;  // near-defective eigenpairs
};

// Hellmann-Feynman occupations at one gamma. `doorway_occ` is the 0/1
// occupancy of the decaying orbital per basis determinant.
HfOccupations occupations_hf(const RealVector& doorway_occ,
                             const Spectrum& spectrum);
HfOccupations occupations_hf(const EffectiveHamiltonian& ham,
                             const Spectrum& spectrum);

// Gamma_j / gamma, bounded in [0, 1] up to numerical error; gamma must be
// positive.
RealVector spectroscopic_factors(const Spectrum& spectrum, Real gamma);

enum class SegregationKernel {
  distance,  // exp(-n^2/2s^2) + exp(-(1-n)^2/2s^2)
  literal,   // exp(-n^2/2s^2) + exp(-(1-n^2)^2/2s^2)
};

struct SegregationResult {
  Real xi = 0;
  Index n_excluded = 0;  // flagged or non-finite occupations left out
};

// Fraction of states whose occupation sits near 0 or 1, measured by a
// two-Gaussian kernel of width sigma. Flagged states are excluded and the
// normalization shrinks accordingly.
SegregationResult segregation_fraction(
    const RealVector& occupations, const std::vector<bool>& flagged,
    Real sigma = 0.1, SegregationKernel kernel = SegregationKernel::distance);

}  // namespace openshell
