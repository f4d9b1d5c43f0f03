// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace openshell {

// Identifier written into run metadata so result files name their generator.
inline constexpr const char* kRngId = "mt19937_64/box-muller-v1";

// Deterministic standard-normal stream. std::normal_distribution is
// implementation-defined, so the Box-Muller transform is spelled out: draws
// come in pairs (r cos t, r sin t) with r = sqrt(-2 ln u1), t = 2 pi u2,
// u1 = ((x >> 11) + 1) * 2^-53 in (0,1], u2 = (y >> 11) * 2^-53 in [0,1),
// x and y consecutive mt19937_64 outputs.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 =
        (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace openshell
