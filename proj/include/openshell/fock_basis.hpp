// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Many-body basis of N spinless fermions in Omega single-particle orbitals,
// stored as occupation bitstrings (bit k set <=> orbital k occupied).
// Orbital 0 is the lowest single-particle level; the decaying orbital sits at
// the top of the ladder. A determinant is a+_{k1}...a+_{kN}|0> with
// k1 < ... < kN, so every operator sign reduces to a popcount below the
// target bit.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "openshell/types.hpp"

namespace openshell {

struct SlaterDeterminant {
  std::uint64_t bits = 0;

  bool occupied(int orbital) const { return (bits >> orbital) & 1ull; }
  int particle_count() const { return std::popcount(bits); }

  auto operator<=>(const SlaterDeterminant&) const = default;
};

// Determinant together with the fermionic phase picked up by an operator.
struct SignedDeterminant {
  SlaterDeterminant det;
  int sign = 1;  // +1 or -1
};

class FockBasis {
 public:
  // Accepts determinants in any order (tests permute them on purpose);
  // enumerate_basis() produces the canonical ascending order.
  FockBasis(int n_particles, int n_orbitals,
            std::vector<SlaterDeterminant> dets);

  int n_particles() const { return n_particles_; }
  int n_orbitals() const { return n_orbitals_; }
  Index size() const { return static_cast<Index>(dets_.size()); }
  const std::vector<SlaterDeterminant>& determinants() const { return dets_; }
  const SlaterDeterminant& operator[](Index i) const { return dets_[i]; }

  // Position of a determinant in this basis, or -1 if absent.
  Index index_of(SlaterDeterminant det) const;

 private:
  int n_particles_ = 0;
  int n_orbitals_ = 0;
  std::vector<SlaterDeterminant> dets_;
  std::unordered_map<std::uint64_t, Index> index_;
};

// Exact binomial coefficient; throws std::overflow_error if it exceeds 64 bits.
std::uint64_t binomial(int n, int k);

// All C(n_orbitals, n_particles) determinants, ascending by bitstring value.
FockBasis enumerate_basis(int n_particles, int n_orbitals);

// Number of determinants with the top orbital occupied: C(Omega-1, N-1).
// Zero particles means zero doorway states.
std::uint64_t count_doorway(int n_particles, int n_orbitals);

int occupancy(SlaterDeterminant det, int orbital);

// a_orbital |det>; empty if the orbital is unoccupied. The sign is
// (-1)^(number of occupied orbitals below `orbital`).
std::optional<SignedDeterminant> annihilate(SlaterDeterminant det, int orbital);

// a+_orbital |det>; empty if the orbital is already occupied. Same phase
// convention as annihilate().
std::optional<SignedDeterminant> create(SlaterDeterminant det, int orbital);

// Display form, highest orbital leftmost: (2,4)-basis member 0b0110 -> "0110".
std::string to_bitstring(SlaterDeterminant det, int n_orbitals);

}  // namespace openshell
