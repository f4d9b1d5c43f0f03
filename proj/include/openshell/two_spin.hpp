// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Two coupled spin-1/2 molecules with one decaying polarization state: the
// smallest system showing the superradiance transition, in closed form.
//
// The Hamiltonian is alpha * s1.s2 + epsilon * (s1z + s2z) with an extra
// -i gamma/2 on every m-scheme state where molecule 1 points up, so that
// state decays with width gamma and the down state is stable. Total Sz is
// conserved; the Sz = 0 block mixes |+-> and |-+> and carries all of the
// interesting dynamics:
//
//   block = -alpha/4 + (1/2) [ -i gamma   alpha ]
//                            [  alpha     0     ]
//
// with eigenvalues -alpha/4 +- (1/2) sqrt(alpha^2 - (gamma/2)^2) - i gamma/4.
// Below gamma_c = 2|alpha| both widths equal gamma/2 and the level spacing
// shrinks; above it the real parts lock and the widths split as
// gamma/2 +- sqrt((gamma/2)^2 - alpha^2). The whole module is the exact
// oracle for the numerical machinery.

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace openshell {

template <class Scalar = double>
struct TwoSpinParams {
  Scalar alpha = 1;    // spin-spin coupling; singlet ground state for alpha > 0
  Scalar epsilon = 0;  // Zeeman splitting per molecule
  Scalar gamma = 0;    // decay width of molecule 1 in the up state

  void validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(epsilon) ||
        !std::isfinite(gamma))
      throw std::invalid_argument("two-spin parameters must be finite");
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
  }
};

template <class Scalar>
Scalar critical_gamma(Scalar alpha) {
  return 2 * std::abs(alpha);
}

// Full 4x4 matrix in the m-scheme basis {|++>, |+->, |-+>, |-->}.
template <class Scalar>
Eigen::Matrix<std::complex<Scalar>, 4, 4> full_hamiltonian(
    const TwoSpinParams<Scalar>& p) {
  p.validate();
  using C = std::complex<Scalar>;
  const C decay(0, -p.gamma / 2);
  Eigen::Matrix<C, 4, 4> h = Eigen::Matrix<C, 4, 4>::Zero();
  h(0, 0) = C(p.alpha / 4 + p.epsilon, 0) + decay;
  h(1, 1) = C(-p.alpha / 4, 0) + decay;
  h(1, 2) = C(p.alpha / 2, 0);
  h(2, 1) = C(p.alpha / 2, 0);
  h(2, 2) = C(-p.alpha / 4, 0);
  h(3, 3) = C(p.alpha / 4 - p.epsilon, 0);
  return h;
}

// The Sz = 0 block on {|+->, |-+>}; epsilon never enters it.
template <class Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> sz0_block(
    const TwoSpinParams<Scalar>& p) {
  const auto h = full_hamiltonian(p);
  return h.template block<2, 2>(1, 1);
}

// Exact eigenvalues (E_plus, E_minus) of the Sz = 0 block. The square-root
// branch keeps each label continuous on either side of the critical point
// and gives E_plus the larger width above it, matching the exact split
// Gamma_pm = gamma/2 +- sqrt((gamma/2)^2 - alpha^2).
template <class Scalar>
std::pair<std::complex<Scalar>, std::complex<Scalar>> eigenvalues_closed_form(
    const TwoSpinParams<Scalar>& p) {
  p.validate();
  using C = std::complex<Scalar>;
  const Scalar half_gamma = p.gamma / 2;
  const Scalar disc = p.alpha * p.alpha - half_gamma * half_gamma;
  const C base(-p.alpha / 4, -p.gamma / 4);
  if (disc >= 0) {
    const Scalar root = std::sqrt(disc);
    return {base + C(root / 2, 0), base - C(root / 2, 0)};
  }
  const Scalar split = std::sqrt(-disc);
  return {base - C(0, split / 2), base + C(0, split / 2)};
}

// Effective occupation of the radiating state, n_pm = dGamma_pm/dgamma:
// 1/2 on both branches below the critical point; above it
// 1/2 +- (gamma/4)/sqrt((gamma/2)^2 - alpha^2), which leaves [0,1].
// Undefined exactly at the crossing.
template <class Scalar>
std::pair<Scalar, Scalar> occupations_closed_form(
    const TwoSpinParams<Scalar>& p) {
  p.validate();
  const Scalar gc = critical_gamma(p.alpha);
  if (p.gamma == gc)
    throw std::domain_error(
        "occupation derivative undefined at the critical point");
  if (p.gamma < gc) return {Scalar(0.5), Scalar(0.5)};
  const Scalar half_gamma = p.gamma / 2;
  const Scalar split =
      std::sqrt(half_gamma * half_gamma - p.alpha * p.alpha);
  const Scalar shift = p.gamma / (4 * split);
  return {Scalar(0.5) + shift, Scalar(0.5) - shift};
}

}  // namespace openshell
