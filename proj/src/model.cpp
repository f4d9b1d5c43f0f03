// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/model.hpp"

#include <cmath>
#include <stdexcept>

namespace openshell {

void ModelSpec::validate() const {
  if (n_orbitals < 1 || n_orbitals > 64)
    throw std::invalid_argument("n_orbitals must be in [1, 64]");
  if (n_particles < 0 || n_particles > n_orbitals)
    throw std::invalid_argument("need 0 <= n_particles <= n_orbitals");
  if (!(delta_eps >= 0) || !std::isfinite(delta_eps))
    throw std::invalid_argument("delta_eps must be finite and >= 0");
  if (!(v_scale >= 0) || !std::isfinite(v_scale))
    throw std::invalid_argument("v_scale must be finite and >= 0");
  if (!(gamma >= 0) || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be finite and >= 0");
  if (decaying_orbital() < 0 || decaying_orbital() >= n_orbitals)
    throw std::invalid_argument("decaying orbital out of range");
}

}  // namespace openshell
