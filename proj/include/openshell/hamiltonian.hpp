// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Assembly of the effective Hamiltonian over the Fock basis:
//
//   matrix = H - (i/2) W
//
// where H is the shell-model part (equidistant single-particle energies plus
// the antisymmetrized two-body interaction) and W = gamma * n_nu is the decay
// term, diagonal in the determinant basis. H is returned exactly symmetric,
// so the composed matrix is complex symmetric with a purely diagonal
// imaginary part whose entries are 0 or -gamma/2.

#include "openshell/fock_basis.hpp"
#include "openshell/interaction.hpp"
#include "openshell/model.hpp"
#include "openshell/types.hpp"

namespace openshell {

struct EffectiveHamiltonian {
  ComplexMatrix matrix;
  FockBasis basis;
  ModelSpec spec;
};

// Hermitian shell-model matrix over `basis`. Two-body elements enter through
// pairs p < q, r < s with the basis sign convention; the result is
// symmetrized, so h == h.transpose() holds bit-exactly.
RealMatrix hermitian_hamiltonian(const ModelSpec& spec,
                                 const TwoBodyInteraction& v,
                                 const FockBasis& basis);

// Occupancy of `orbital` for each basis determinant (entries 0 or 1).
RealVector occupancy_diagonal(const FockBasis& basis, int orbital);

// Diagonal of W = gamma * n_nu; the full matrix is diagonal, with
// rank C(Omega-1, N-1) and trace gamma * C(Omega-1, N-1).
RealVector w_diagonal(const ModelSpec& spec, const FockBasis& basis);

// h - (i/2) diag(w). Used by the gamma sweep to rebuild the matrix cheaply:
// only the diagonal imaginary part depends on gamma.
ComplexMatrix compose_effective(const RealMatrix& h, const RealVector& w);

EffectiveHamiltonian assemble(const ModelSpec& spec,
                              const TwoBodyInteraction& v,
                              const FockBasis& basis);

}  // namespace openshell
