// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/observables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace openshell {

RealMatrix occupations_fd(const TrajectorySet& traj) {
  const Index n = traj.n_states();
  const Index npts = traj.n_points();
  if (npts < 3)
    throw std::invalid_argument("finite differences need >= 3 grid points");

  const auto& g = traj.grid.values;
  RealMatrix occ(n, npts);
  for (Index k = 0; k < npts; ++k) {
    if (k == 0) {
      occ.col(0) = (traj.widths.col(1) - traj.widths.col(0)) / (g[1] - g[0]);
    } else if (k == npts - 1) {
      occ.col(k) =
          (traj.widths.col(k) - traj.widths.col(k - 1)) / (g[k] - g[k - 1]);
    } else {
      // Derivative of the parabola through three nonuniform points.
      const Real hm = g[k] - g[k - 1];
      const Real hp = g[k + 1] - g[k];
      const Real wm = -hp / (hm * (hm + hp));
      const Real w0 = (hp - hm) / (hm * hp);
      const Real wp = hm / (hp * (hm + hp));
      occ.col(k) = wm * traj.widths.col(k - 1) + w0 * traj.widths.col(k) +
                   wp * traj.widths.col(k + 1);
    }
  }
  return occ;
}

HfOccupations occupations_hf(const RealVector& doorway_occ,
                             const Spectrum& spectrum) {
  const Index n = spectrum.size();
  if (doorway_occ.size() != n)
    throw std::invalid_argument("occupancy/spectrum dimension mismatch");
  HfOccupations out;
  out.values.resize(n);
  out.flagged.assign(static_cast<std::size_t>(n), false);
  const ComplexVector diag = doorway_occ.cast<Complex>();
  for (Index j = 0; j < n; ++j) {
    if (spectrum.near_defective[j]) {
      out.flagged[j] = true;
      out.values[j] = std::numeric_limits<Real>::quiet_NaN();
      continue;
    }
    const auto left = spectrum.left.col(j);
    const auto right = spectrum.right.col(j);
    const Complex numer = left.dot(diag.asDiagonal() * right);
    const Complex denom = left.dot(right);
    out.values[j] = (numer / denom).real();
  }
  return out;
}

HfOccupations occupations_hf(const EffectiveHamiltonian& ham,
                             const Spectrum& spectrum) {
  return occupations_hf(
      occupancy_diagonal(ham.basis, ham.spec.decaying_orbital()), spectrum);
}

RealVector spectroscopic_factors(const Spectrum& spectrum, Real gamma) {
  if (!(gamma > 0))
    throw std::invalid_argument("spectroscopic factors need gamma > 0");
  return spectrum.widths() / gamma;
}

SegregationResult segregation_fraction(const RealVector& occupations,
                                       const std::vector<bool>& flagged,
                                       Real sigma, SegregationKernel kernel) {
  if (!(sigma > 0)) throw std::invalid_argument("sigma must be positive");
  if (!flagged.empty() &&
      flagged.size() != static_cast<std::size_t>(occupations.size()))
    throw std::invalid_argument("flag vector size mismatch");

  const Real two_sigma_sq = 2 * sigma * sigma;
  SegregationResult result;
  Real sum = 0;
  Index included = 0;
  for (Index j = 0; j < occupations.size(); ++j) {
    const Real n = occupations[j];
    const bool skip =
        (!flagged.empty() && flagged[static_cast<std::size_t>(j)]) ||
        !std::isfinite(n);
    if (skip) {
      ++result.n_excluded;
      continue;
    }
    const Real upper_arg =
        kernel == SegregationKernel::distance ? (1 - n) : (1 - n * n);
    sum += std::exp(-n * n / two_sigma_sq) +
           std::exp(-upper_arg * upper_arg / two_sigma_sq);
    ++included;
  }
  result.xi = included > 0 ? sum / included : 0.0;
  return result;
}

}  // namespace openshell
