// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Antisymmetrized Gaussian random two-body matrix elements V_{pq;rs}.
//
// Independent elements live on canonical quartets p < q, r < s with
// (p,q) <= (r,s) lexicographically; every other element follows from
// antisymmetry in each index pair and from V_{pq;rs} = V_{rs;pq} (the
// interaction is real symmetric). The sampling stream visits canonical
// quartets in lexicographic order, which pins the seed -> elements map.

#include "openshell/model.hpp"
#include "openshell/types.hpp"

namespace openshell {

class TwoBodyInteraction {
 public:
  // `pair_elements` is the symmetric matrix over orbital-pair ranks.
  TwoBodyInteraction(int n_orbitals, RealMatrix pair_elements);

  static int pair_count(int n_orbitals) {
    return n_orbitals * (n_orbitals - 1) / 2;
  }

  // Rank of the ordered pair p < q in lexicographic order:
  // (0,1), (0,2), ..., (0,n-1), (1,2), ...
  static int pair_rank(int p, int q, int n_orbitals) {
    return p * n_orbitals - p * (p + 1) / 2 + (q - p - 1);
  }

  int n_orbitals() const { return n_orbitals_; }
  const RealMatrix& pair_elements() const { return pair_elements_; }

  // V_{pq;rs} for arbitrary index order; exactly zero when p == q or r == s.
  Real value(int p, int q, int r, int s) const;

 private:
  int n_orbitals_ = 0;
  RealMatrix pair_elements_;
};

// One N(0, v_scale^2) draw per canonical quartet, deterministic in the seed.
TwoBodyInteraction sample_interaction(const ModelSpec& spec);

}  // namespace openshell
