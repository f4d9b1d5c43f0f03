// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

#include "openshell/eig.hpp"
#include "openshell/rng.hpp"
#include "openshell/two_spin.hpp"
#include "support/polyroots.hpp"

using namespace openshell;

namespace {

ComplexMatrix random_complex(Index n, std::uint64_t seed) {
  GaussianStream g(seed);
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(g.next(), g.next());
  return m;
}

RealMatrix random_symmetric(Index n, std::uint64_t seed) {
  GaussianStream g(seed);
  RealMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) {
      m(i, j) = g.next();
      m(j, i) = m(i, j);
    }
  return m;
}

bool complex_before(Complex a, Complex b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

}  // namespace

TEST_CASE("Hermitian input reduces to the symmetric solver") {
  const RealMatrix h = random_symmetric(20, 11);
  const Spectrum s = eig(h.cast<Complex>());

  CHECK(s.eigenvalues.imag().cwiseAbs().maxCoeff() < 1e-10 * s.matrix_norm);

  Eigen::SelfAdjointEigenSolver<RealMatrix> oracle(h);
  for (Index j = 0; j < 20; ++j)
    CHECK(std::abs(s.eigenvalues[j].real() - oracle.eigenvalues()[j]) <
          1e-10 * s.matrix_norm);
  for (Index j = 0; j < 20; ++j) CHECK_FALSE(s.near_defective[j]);
}

TEST_CASE("two-level block reproduces the closed-form pair") {
  const TwoSpinParams<> p{.alpha = 1.0, .epsilon = 0.0, .gamma = 1.0};
  const Spectrum s = eig(sz0_block(p));
  // -1/4 -+ (1/2) sqrt(3)/2 - i/4
  const Real half_root3 = std::sqrt(3.0) / 2;
  CHECK(std::abs(s.eigenvalues[0] - Complex(-0.25 - half_root3 / 2, -0.25)) <
        1e-12);
  CHECK(std::abs(s.eigenvalues[1] - Complex(-0.25 + half_root3 / 2, -0.25)) <
        1e-12);
}

TEST_CASE("eigenvalues agree with the characteristic-polynomial oracle") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ComplexMatrix m = random_complex(6, seed);
    const Spectrum s = eig(m);
    auto roots = testing::eigenvalue_oracle(m);
    std::sort(roots.begin(), roots.end(), complex_before);
    for (Index j = 0; j < 6; ++j)
      CHECK(std::abs(s.eigenvalues[j] -
                     roots[static_cast<std::size_t>(j)]) < 1e-8);
  }
}

TEST_CASE("residuals, biorthonormality, and the trace identity") {
  for (std::uint64_t seed = 20; seed < 40; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 17);
    const ComplexMatrix m = random_complex(n, seed);
    const Spectrum s = eig(m);

    CHECK(s.max_residual < 1e-10 * s.matrix_norm);
    CHECK(std::abs(s.eigenvalues.sum() - m.trace()) < 1e-9 * s.matrix_norm);

    const ComplexMatrix defect =
        s.left.adjoint() * s.right - ComplexMatrix::Identity(n, n);
    for (Index i = 0; i < n; ++i) {
      if (s.near_defective[i]) continue;
      for (Index j = 0; j < n; ++j) {
        if (s.near_defective[j]) continue;
        CHECK(std::abs(defect(i, j)) < 1e-8);
      }
    }
  }
}

TEST_CASE("sorted spectrum is invariant under permutation similarity") {
  std::mt19937 rng(3);
  const ComplexMatrix m = random_complex(12, 77);
  const Spectrum base = eig(m);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXi p(12);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(p);
    const Spectrum shuffled = eig(perm * m * perm.transpose());
    for (Index j = 0; j < 12; ++j)
      CHECK(std::abs(base.eigenvalues[j] - shuffled.eigenvalues[j]) <
            1e-9 * base.matrix_norm);
  }
}

TEST_CASE("complex-symmetric matrices pair left with conjugated right vectors") {
  GaussianStream g(5);
  const Index n = 16;
  RealMatrix re = random_symmetric(n, 6);
  ComplexMatrix m = re.cast<Complex>();
  for (Index j = 0; j < n; ++j)
    m(j, j) -= Complex(0, 0.5 * (g.next() > 0 ? 1.0 : 0.0));

  const Spectrum s = eig(m);
  for (Index j = 0; j < n; ++j) {
    if (s.near_defective[j]) continue;
    // L_j proportional to conj(R_j): unit-normalized distance after phase fix.
    const ComplexVector l = s.left.col(j).normalized();
    const ComplexVector rc = s.right.col(j).conjugate().normalized();
    const Complex phase = rc.dot(l);
    CHECK((l - phase * rc).norm() < 1e-9);
  }
}

TEST_CASE("defectiveness reports the exceptional-point cluster") {
  const TwoSpinParams<> critical{.alpha = 1.0, .epsilon = 0.0, .gamma = 2.0};
  const Spectrum s = eig(sz0_block(critical));
  CHECK(s.near_defective[0]);
  CHECK(s.near_defective[1]);
  const auto clusters = defectiveness(s);
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].indices.size() == 2);
  CHECK(clusters[0].max_gap < 1e-6);
  CHECK(std::abs(s.eigenvalues[0] - Complex(-0.25, -0.5)) < 1e-6);
  CHECK(std::abs(s.eigenvalues[1] - Complex(-0.25, -0.5)) < 1e-6);
}

TEST_CASE("no clusters for a diagonal matrix") {
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d.diagonal() << Complex(0, 0), Complex(1, -0.5), Complex(2, 0),
      Complex(3, -1);
  const Spectrum s = eig(d);
  CHECK(defectiveness(s).empty());
  for (Index j = 0; j < 4; ++j) CHECK(s.kappa[j] == doctest::Approx(1.0));
}

TEST_CASE("near-critical two-level block flags only past the kappa threshold") {
  // kappa from the closed-form eigenvectors of [[a, b], [b, 0]]:
  // v = (b, mu - a), kappa = |b|^2 + |mu - a|^2 over |b^2 + (mu - a)^2|.
  const auto closed_kappa = [](Real alpha, Real gamma) {
    const Complex a(0, -gamma / 2);
    const Complex b(alpha / 2, 0);
    const auto p =
        TwoSpinParams<>{.alpha = alpha, .epsilon = 0.0, .gamma = gamma};
    const Complex mu = eigenvalues_closed_form(p).first - Complex(-alpha / 4, 0);
    const Complex va = b, vb = mu - a;
    return (std::norm(va) + std::norm(vb)) / std::abs(va * va + vb * vb);
  };

  const Real alpha = 1.0;
  for (const Real gamma : {1.99 * alpha, 1.9999999 * alpha}) {
    const TwoSpinParams<> p{.alpha = alpha, .epsilon = 0.0, .gamma = gamma};
    const Spectrum s = eig(sz0_block(p));
    const Real expected = closed_kappa(alpha, gamma);
    const bool should_flag = expected > kDefectiveKappa;
    CHECK(s.near_defective[0] == should_flag);
    CHECK(s.near_defective[1] == should_flag);
    CHECK(defectiveness(s).empty() == !should_flag);
    if (!should_flag)
      CHECK(s.kappa[0] == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(eig(ComplexMatrix(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(eig(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = Complex(std::numeric_limits<Real>::quiet_NaN(), 0);
  CHECK_THROWS_AS(eig(bad), std::invalid_argument);

  const ComplexMatrix one = ComplexMatrix::Constant(1, 1, Complex(3, 4));
  const Spectrum s = eig(one);
  CHECK(s.eigenvalues[0] == Complex(3, 4));
  CHECK(std::abs(s.right(0, 0)) == doctest::Approx(1.0));
}
