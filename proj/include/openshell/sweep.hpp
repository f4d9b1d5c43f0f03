// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Decay-strength sweep: diagonalize the effective Hamiltonian on a gamma
// grid and follow each many-body state across grid points so the complex
// energies form continuous trajectories. The Hermitian part and the
// interaction are built once; only the diagonal imaginary part changes with
// gamma. States are matched between consecutive spectra by right-eigenvector
// overlap; matches below kTrackingOverlapMin are recorded as ambiguous but
// never abort the sweep, since near-exceptional crossings are exactly the
// regime of interest.

#include <vector>

#include "openshell/eig.hpp"
#include "openshell/fock_basis.hpp"
#include "openshell/interaction.hpp"
#include "openshell/model.hpp"
#include "openshell/types.hpp"

namespace openshell {

inline constexpr Real kTrackingOverlapMin = 0.5;

struct GammaGrid {
  enum class Scale { linear, logarithmic };

  std::vector<Real> values;  // strictly increasing, first may be 0
  Scale scale = Scale::linear;

  Index size() const { return static_cast<Index>(values.size()); }
  void validate() const;

  static GammaGrid linear(Real lo, Real hi, int n_points);
  // Log-spaced in [lo, hi]; optionally prepended with gamma = 0.
  static GammaGrid logarithmic(Real lo, Real hi, int n_points,
                               bool include_zero = false);
  // 200 log points on [1e-2, 1e2] plus gamma = 0: resolves both the
  // perturbative and the segregated regime.
  static GammaGrid standard();
};

struct MatchResult {
  Eigen::VectorXi perm;   // previous column -> next column
  RealVector overlaps;    // achieved |<R_prev|R_next>| per previous column
  bool used_fallback = false;
};

// Pairs eigenvectors of consecutive spectra by maximal squared overlap:
// greedy on descending overlaps, optimal-assignment fallback if any greedy
// pair falls below kTrackingOverlapMin.
MatchResult match_states(const Spectrum& prev, const Spectrum& next);

struct TrackingAmbiguity {
  Real gamma_lo = 0;
  Real gamma_hi = 0;
  Index state = 0;
  Real overlap = 0;
};

struct TrajectorySet {
  ModelSpec spec;            // gamma field unused; the grid drives it
  GammaGrid grid;
  RealVector doorway_occupancy;     // occupancy of the decaying orbital
  std::vector<Spectrum> spectra;    // one per grid point
  // Tracked views, n_states x n_points; state labels follow the spectrum
  // order (ascending energy) at the first grid point.
  RealMatrix energies;
  RealMatrix widths;
  std::vector<Eigen::VectorXi> permutation;  // state -> spectrum column
  RealMatrix confidence;     // overlap of the segment ending at each point
  std::vector<TrackingAmbiguity> ambiguities;

  Index n_states() const { return energies.rows(); }
  Index n_points() const { return energies.cols(); }
};

// Model-free core: sweep an explicit Hermitian part plus the 0/1 occupancy
// diagonal of the decaying orbital. The two-spin block uses this directly.
TrajectorySet sweep_matrix(const RealMatrix& h, const RealVector& occupancy,
                           const GammaGrid& grid);

TrajectorySet sweep(const ModelSpec& spec, const TwoBodyInteraction& v,
                    const GammaGrid& grid);

}  // namespace openshell
