// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "openshell/types.hpp"

namespace openshell {

// All physical parameters of one effective-Hamiltonian instance: N fermions
// on Omega equidistant levels (spacing delta_eps, lowest level at zero), a
// Gaussian random two-body interaction of scale v_scale drawn from `seed`,
// and decay width gamma attached to one orbital.
struct ModelSpec {
  int n_particles = 4;
  int n_orbitals = 8;
  Real delta_eps = 0.5;   // single-particle level spacing
  Real v_scale = 1.0;     // std of independent two-body elements; energy unit
  Real gamma = 0.0;       // decay width of the decaying orbital
  std::uint64_t seed = 42;
  int nu = -1;            // decaying orbital; -1 selects the topmost level

  int decaying_orbital() const { return nu < 0 ? n_orbitals - 1 : nu; }

  void validate() const;

  bool operator==(const ModelSpec&) const = default;
};

}  // namespace openshell
