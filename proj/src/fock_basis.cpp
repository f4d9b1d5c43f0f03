// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#include "openshell/fock_basis.hpp"

#include <stdexcept>

namespace openshell {

namespace {

std::uint64_t mask_below(int orbital) {
  return (orbital == 0) ? 0ull : (~0ull >> (64 - orbital));
}

int phase_below(SlaterDeterminant det, int orbital) {
  return (std::popcount(det.bits & mask_below(orbital)) & 1) ? -1 : 1;
}

void check_orbital(int orbital) {
  if (orbital < 0 || orbital >= 64)
    throw std::invalid_argument("orbital index out of range");
}

}  // namespace

FockBasis::FockBasis(int n_particles, int n_orbitals,
                     std::vector<SlaterDeterminant> dets)
    : n_particles_(n_particles), n_orbitals_(n_orbitals),
      dets_(std::move(dets)) {
  if (n_orbitals_ < 0 || n_orbitals_ > 64 || n_particles_ < 0 ||
      n_particles_ > n_orbitals_)
    throw std::invalid_argument("invalid basis dimensions");
  const std::uint64_t valid =
      (n_orbitals_ == 64) ? ~0ull : ((1ull << n_orbitals_) - 1);
  index_.reserve(dets_.size());
  for (Index i = 0; i < size(); ++i) {
    const auto det = dets_[i];
    if (det.particle_count() != n_particles_ || (det.bits & ~valid))
      throw std::invalid_argument("determinant inconsistent with basis");
    if (!index_.emplace(det.bits, i).second)
      throw std::invalid_argument("duplicate determinant");
  }
}

Index FockBasis::index_of(SlaterDeterminant det) const {
  const auto it = index_.find(det.bits);
  return it == index_.end() ? Index{-1} : it->second;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // result * (n-k+i) / i is exact at every step; the intermediate product
  // needs 128 bits even when the result fits.
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) /
             static_cast<unsigned>(i);
    if (result > ~std::uint64_t{0})
      throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

FockBasis enumerate_basis(int n_particles, int n_orbitals) {
  if (n_particles < 0 || n_orbitals < 0 || n_particles > n_orbitals)
    throw std::invalid_argument("invalid dimensions: need 0 <= N <= Omega");
  if (n_orbitals > 64)
    throw std::invalid_argument("more orbitals than machine-word bits");

  std::vector<SlaterDeterminant> dets;
  dets.reserve(binomial(n_orbitals, n_particles));
  if (n_particles == 0) {
    dets.push_back({0});
    return FockBasis(n_particles, n_orbitals, std::move(dets));
  }

  std::uint64_t v =
      (n_particles == 64) ? ~0ull : ((1ull << n_particles) - 1);
  const std::uint64_t last = v << (n_orbitals - n_particles);
  while (true) {
    dets.push_back({v});
    if (v == last) break;
    // Gosper's hack: next-higher value with the same popcount.
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) |
        (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return FockBasis(n_particles, n_orbitals, std::move(dets));
}

std::uint64_t count_doorway(int n_particles, int n_orbitals) {
  if (n_particles < 0 || n_orbitals < 1 || n_particles > n_orbitals)
    throw std::invalid_argument("invalid dimensions: need 0 <= N <= Omega");
  if (n_particles == 0) return 0;
  return binomial(n_orbitals - 1, n_particles - 1);
}

int occupancy(SlaterDeterminant det, int orbital) {
  check_orbital(orbital);
  return det.occupied(orbital) ? 1 : 0;
}

std::optional<SignedDeterminant> annihilate(SlaterDeterminant det,
                                            int orbital) {
  check_orbital(orbital);
  if (!det.occupied(orbital)) return std::nullopt;
  SlaterDeterminant out{det.bits & ~(1ull << orbital)};
  return SignedDeterminant{out, phase_below(det, orbital)};
}

std::optional<SignedDeterminant> create(SlaterDeterminant det, int orbital) {
  check_orbital(orbital);
  if (det.occupied(orbital)) return std::nullopt;
  SlaterDeterminant out{det.bits | (1ull << orbital)};
  return SignedDeterminant{out, phase_below(det, orbital)};
}

std::string to_bitstring(SlaterDeterminant det, int n_orbitals) {
  std::string s(static_cast<std::size_t>(n_orbitals), '0');
  for (int k = 0; k < n_orbitals; ++k)
    if (det.occupied(k)) s[n_orbitals - 1 - k] = '1';
  return s;
}

}  // namespace openshell
