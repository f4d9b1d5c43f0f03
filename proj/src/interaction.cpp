// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/interaction.hpp"

#include <stdexcept>
#include <utility>

#include "openshell/rng.hpp"

namespace openshell {

TwoBodyInteraction::TwoBodyInteraction(int n_orbitals,
                                       RealMatrix pair_elements)
    : n_orbitals_(n_orbitals), pair_elements_(std::move(pair_elements)) {
  const int np = pair_count(n_orbitals);
  if (n_orbitals < 0 || pair_elements_.rows() != np ||
      pair_elements_.cols() != np)
    throw std::invalid_argument("pair-element matrix has wrong shape");
}

Real TwoBodyInteraction::value(int p, int q, int r, int s) const {
  if (p < 0 || q < 0 || r < 0 || s < 0 || p >= n_orbitals_ ||
      q >= n_orbitals_ || r >= n_orbitals_ || s >= n_orbitals_)
    throw std::invalid_argument("orbital index out of range");
  if (p == q || r == s) return 0.0;
  int sign = 1;
  if (p > q) {
    std::swap(p, q);
    sign = -sign;
  }
  if (r > s) {
    std::swap(r, s);
    sign = -sign;
  }
  return sign * pair_elements_(pair_rank(p, q, n_orbitals_),
                               pair_rank(r, s, n_orbitals_));
}

TwoBodyInteraction sample_interaction(const ModelSpec& spec) {
  spec.validate();
  const int n = spec.n_orbitals;
  const int np = TwoBodyInteraction::pair_count(n);
  RealMatrix elements = RealMatrix::Zero(np, np);
  GaussianStream gauss(spec.seed);
  for (int a = 0; a < np; ++a) {
    for (int b = a; b < np; ++b) {
      const Real x = spec.v_scale * gauss.next();
      elements(a, b) = x;
      elements(b, a) = x;
    }
  }
  return TwoBodyInteraction(n, std::move(elements));
}

}  // namespace openshell
