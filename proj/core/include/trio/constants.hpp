// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace trio::constants {

// SI defining constants (exact) and CODATA 2018 values.
inline constexpr double kSpeedOfLight = 299792458.0;    // m/s (exact)
inline constexpr double kBoltzmann = 1.380649e-23;      // J/K (exact)
inline constexpr double kHbar = 1.054571817e-34;        // J*s (CODATA 2018)
inline constexpr double kPi = std::numbers::pi;

}  // namespace trio::constants
