// Copyright 2026 The openshell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace openshell {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace openshell
