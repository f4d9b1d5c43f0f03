// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/hamiltonian.hpp"

#include <cassert>
#include <stdexcept>

namespace openshell {

namespace {

void check_consistent(const ModelSpec& spec, const FockBasis& basis) {
  spec.validate();
  if (basis.n_orbitals() != spec.n_orbitals ||
      basis.n_particles() != spec.n_particles)
    throw std::invalid_argument("basis/spec dimension mismatch");
}

void check_consistent(const ModelSpec& spec, const TwoBodyInteraction& v,
                      const FockBasis& basis) {
  check_consistent(spec, basis);
  if (v.n_orbitals() != spec.n_orbitals)
    throw std::invalid_argument("interaction/spec orbital count mismatch");
}

}  // namespace

RealMatrix hermitian_hamiltonian(const ModelSpec& spec,
                                 const TwoBodyInteraction& v,
                                 const FockBasis& basis) {
  check_consistent(spec, v, basis);
  const int n = spec.n_orbitals;
  const Index dim = basis.size();
  RealMatrix h = RealMatrix::Zero(dim, dim);

  for (Index col = 0; col < dim; ++col) {
    const SlaterDeterminant ket = basis[col];

    Real sp_energy = 0.0;
    for (int k = 0; k < n; ++k)
      if (ket.occupied(k)) sp_energy += k * spec.delta_eps;
    h(col, col) += sp_energy;

    // (1/4) sum V_{pq;rs} a+_p a+_q a_r a_s collapses to pairs p<q, r<s for
    // antisymmetrized V. Rightmost operator acts first: a_s, a_r, a+_q, a+_p.
    for (int s = 1; s < n; ++s) {
      if (!ket.occupied(s)) continue;
      const auto after_s = annihilate(ket, s);
      for (int r = 0; r < s; ++r) {
        if (!ket.occupied(r)) continue;
        const auto after_r = annihilate(after_s->det, r);
        const int hole_sign = after_s->sign * after_r->sign;
        const SlaterDeterminant core = after_r->det;
        for (int q = 1; q < n; ++q) {
          if (core.occupied(q)) continue;
          const auto with_q = create(core, q);
          for (int p = 0; p < q; ++p) {
            if (with_q->det.occupied(p)) continue;
            const auto with_p = create(with_q->det, p);
            const Index row = basis.index_of(with_p->det);
            assert(row >= 0);
            h(row, col) += hole_sign * with_q->sign * with_p->sign *
                           v.value(p, q, r, s);
          }
        }
      }
    }
  }

  // Exact arithmetic already gives a symmetric matrix; averaging removes the
  // last-bit asymmetry from differing summation orders of (a,b) and (b,a).
  h = ((h + h.transpose()) * 0.5).eval();
  return h;
}

RealVector occupancy_diagonal(const FockBasis& basis, int orbital) {
  if (orbital < 0 || orbital >= basis.n_orbitals())
    throw std::invalid_argument("orbital index out of range");
  RealVector diag(basis.size());
  for (Index i = 0; i < basis.size(); ++i)
    diag[i] = occupancy(basis[i], orbital);
  return diag;
}

RealVector w_diagonal(const ModelSpec& spec, const FockBasis& basis) {
  check_consistent(spec, basis);
  return spec.gamma * occupancy_diagonal(basis, spec.decaying_orbital());
}

ComplexMatrix compose_effective(const RealMatrix& h, const RealVector& w) {
  if (h.rows() != h.cols() || h.rows() != w.size())
    throw std::invalid_argument("hamiltonian/decay dimension mismatch");
  ComplexMatrix m = h.cast<Complex>();
  m.diagonal() -= Complex(0.0, 0.5) * w.cast<Complex>();
  return m;
}

EffectiveHamiltonian assemble(const ModelSpec& spec,
                              const TwoBodyInteraction& v,
                              const FockBasis& basis) {
  const RealMatrix h = hermitian_hamiltonian(spec, v, basis);
  const RealVector w = w_diagonal(spec, basis);
  return EffectiveHamiltonian{compose_effective(h, w), basis, spec};
}

}  // namespace openshell
