// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "openshell/assignment.hpp"
#include "openshell/hamiltonian.hpp"

namespace openshell {

void GammaGrid::validate() const {
  if (values.empty()) throw std::invalid_argument("empty gamma grid");
  if (!(values.front() >= 0))
    throw std::invalid_argument("gamma grid must start at >= 0");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k]))
      throw std::invalid_argument("gamma grid must be finite");
    if (k > 0 && !(values[k] > values[k - 1]))
      throw std::invalid_argument("gamma grid must increase strictly");
  }
}

GammaGrid GammaGrid::linear(Real lo, Real hi, int n_points) {
  if (n_points < 1) throw std::invalid_argument("need at least one point");
  GammaGrid grid;
  grid.scale = Scale::linear;
  grid.values.resize(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k)
    grid.values[k] =
        n_points == 1 ? lo : lo + (hi - lo) * k / (n_points - 1);
  grid.validate();
  return grid;
}

GammaGrid GammaGrid::logarithmic(Real lo, Real hi, int n_points,
                                 bool include_zero) {
  if (n_points < 1) throw std::invalid_argument("need at least one point");
  if (!(lo > 0)) throw std::invalid_argument("log grid needs lo > 0");
  GammaGrid grid;
  grid.scale = Scale::logarithmic;
  if (include_zero) grid.values.push_back(0.0);
  const Real llo = std::log(lo), lhi = std::log(hi);
  for (int k = 0; k < n_points; ++k)
    grid.values.push_back(std::exp(
        n_points == 1 ? llo : llo + (lhi - llo) * k / (n_points - 1)));
  grid.validate();
  return grid;
}

GammaGrid GammaGrid::standard() {
  return logarithmic(1e-2, 1e2, 200, /*include_zero=*/true);
}

MatchResult match_states(const Spectrum& prev, const Spectrum& next) {
  const Index n = prev.size();
  if (next.size() != n)
    throw std::invalid_argument("spectra of different dimension");

  const RealMatrix overlap = (prev.right.adjoint() * next.right).cwiseAbs();

  // Greedy pass over descending overlaps.
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](const auto& a, const auto& b) {
                     return overlap(a.first, a.second) >
                            overlap(b.first, b.second);
                   });
  MatchResult result;
  result.perm = Eigen::VectorXi::Constant(n, -1);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  Index assigned = 0;
  for (const auto& [i, j] : pairs) {
    if (result.perm[i] >= 0 || taken[j]) continue;
    result.perm[i] = static_cast<int>(j);
    taken[j] = true;
    if (++assigned == n) break;
  }

  auto min_overlap = [&] {
    Real m = 1.0;
    for (Index i = 0; i < n; ++i) m = std::min(m, overlap(i, result.perm[i]));
    return m;
  };

  if (min_overlap() < kTrackingOverlapMin) {
    result.perm = max_score_assignment(overlap.array().square().matrix());
    result.used_fallback = true;
  }

  result.overlaps.resize(n);
  for (Index i = 0; i < n; ++i) result.overlaps[i] = overlap(i, result.perm[i]);
  return result;
}

TrajectorySet sweep_matrix(const RealMatrix& h, const RealVector& occ,
                           const GammaGrid& grid) {
  grid.validate();
  if (h.rows() != h.cols() || h.rows() != occ.size())
    throw std::invalid_argument("hamiltonian/occupancy dimension mismatch");

  TrajectorySet out;
  out.grid = grid;
  out.doorway_occupancy = occ;

  const Index n = h.rows();
  const Index npts = grid.size();
  out.spectra.reserve(static_cast<std::size_t>(npts));
  ComplexMatrix m = h.cast<Complex>();
  for (Index k = 0; k < npts; ++k) {
    m.diagonal() = h.diagonal().cast<Complex>() -
                   Complex(0.0, 0.5 * grid.values[k]) * occ.cast<Complex>();
    out.spectra.push_back(eig(m));
  }

  out.energies.resize(n, npts);
  out.widths.resize(n, npts);
  out.confidence = RealMatrix::Ones(n, npts);
  out.permutation.assign(static_cast<std::size_t>(npts),
                         Eigen::VectorXi::Zero(n));

  Eigen::VectorXi current(n);
  std::iota(current.begin(), current.end(), 0);  // labels = order at start
  for (Index k = 0; k < npts; ++k) {
    if (k > 0) {
      const MatchResult match = match_states(out.spectra[k - 1], out.spectra[k]);
      Eigen::VectorXi next(n);
      for (Index sid = 0; sid < n; ++sid) {
        const int col_prev = current[sid];
        next[sid] = match.perm[col_prev];
        const Real ov = match.overlaps[col_prev];
        out.confidence(sid, k) = ov;
        if (ov < kTrackingOverlapMin)
          out.ambiguities.push_back(
              {grid.values[k - 1], grid.values[k], sid, ov});
      }
      current = next;
    }
    out.permutation[k] = current;
    for (Index sid = 0; sid < n; ++sid) {
      const Complex e = out.spectra[k].eigenvalues[current[sid]];
      out.energies(sid, k) = e.real();
      out.widths(sid, k) = -2.0 * e.imag();
    }
  }
  return out;
}

TrajectorySet sweep(const ModelSpec& spec, const TwoBodyInteraction& v,
                    const GammaGrid& grid) {
  const FockBasis basis = enumerate_basis(spec.n_particles, spec.n_orbitals);
  const RealMatrix h = hermitian_hamiltonian(spec, v, basis);
  TrajectorySet out = sweep_matrix(
      h, occupancy_diagonal(basis, spec.decaying_orbital()), grid);
  out.spec = spec;
  return out;
}

}  // namespace openshell
