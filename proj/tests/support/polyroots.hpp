// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Test-only eigenvalue oracle, independent of any QR-based solver: build the
// characteristic polynomial with the Faddeev-LeVerrier recurrence, then find
// all roots simultaneously with Durand-Kerner iteration.

#include <complex>
#include <stdexcept>
#include <vector>

#include "openshell/types.hpp"

namespace openshell::testing {

// Coefficients of det(lambda I - A): index k holds the coefficient of
// lambda^(n-k), with coeff[0] = 1.
inline std::vector<Complex> characteristic_polynomial(const ComplexMatrix& a) {
  const Index n = a.rows();
  std::vector<Complex> coeff(static_cast<std::size_t>(n) + 1);
  coeff[0] = Complex(1, 0);
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = (a * m).eval();
    const Complex c = -m.trace() / Complex(static_cast<Real>(k), 0);
    coeff[static_cast<std::size_t>(k)] = c;
    m.diagonal().array() += c;
  }
  return coeff;
}

inline Complex horner(const std::vector<Complex>& coeff, Complex z) {
  Complex acc(0, 0);
  for (const Complex& c : coeff) acc = acc * z + c;
  return acc;
}

// All polynomial roots via Durand-Kerner. Assumes coeff[0] == 1.
inline std::vector<Complex> durand_kerner(const std::vector<Complex>& coeff,
                                          int max_iter = 2000) {
  const std::size_t n = coeff.size() - 1;
  Real bound = 0;
  for (std::size_t k = 1; k <= n; ++k)
    bound = std::max(bound, std::pow(std::abs(coeff[k]), 1.0 / k));
  bound = 2 * bound + 1;

  std::vector<Complex> z(n);
  const Complex seed(0.4, 0.9);
  Complex power(1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    power *= seed;
    z[j] = bound * power;
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    Real shift = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Complex denom(1, 0);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) denom *= z[j] - z[k];
      const Complex delta = horner(coeff, z[j]) / denom;
      z[j] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14 * bound) return z;
  }
  throw std::runtime_error("Durand-Kerner did not converge");
}

inline std::vector<Complex> eigenvalue_oracle(const ComplexMatrix& a) {
  return durand_kerner(characteristic_polynomial(a));
}

}  // namespace openshell::testing
