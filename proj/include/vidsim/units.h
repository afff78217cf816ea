/******************************************************************************
 * Copyright 2026 The vidsim Authors                                          *
 *                                                                            *
 * Licensed under the Apache License, Version 2.0 (the "License");            *
 * you may not use this file except in compliance with the License.           *
 * You may obtain a copy of the License at                                    *
 *                                                                            *
 *     http://www.apache.org/licenses/LICENSE-2.0                             *
 *                                                                            *
 * Unless required by applicable law or agreed to in writing, software        *
 * distributed under the License is distributed on an "AS IS" BASIS,          *
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.   *
 * See the License for the specific language governing permissions and       *
 * limitations under the License.                                             *
 ******************************************************************************/

#ifndef VIDSIM_UNITS_H_
#define VIDSIM_UNITS_H_

#include <cmath>
#include <cstdint>

namespace vidsim {

// Simulation clock. All event times are integer microseconds.
using TimeUs = std::int64_t;

inline constexpr TimeUs kUsPerMs = 1000;
inline constexpr TimeUs kUsPerSec = 1000000;
inline constexpr TimeUs kTimeNever = INT64_C(0x3FFFFFFFFFFFFFFF);

inline TimeUs MsToUs(double ms) {
  return static_cast<TimeUs>(std::llround(ms * 1000.0));
}

inline TimeUs SecToUs(double s) {
  return static_cast<TimeUs>(std::llround(s * 1e6));
}

inline double UsToMs(TimeUs t) { return static_cast<double>(t) / 1000.0; }

inline double UsToSec(TimeUs t) { return static_cast<double>(t) / 1e6; }

// Transmission time of `bytes` at `rate_bps`, rounded to the clock grid.
inline TimeUs SerializationTimeUs(std::int64_t bytes, double rate_bps) {
  return static_cast<TimeUs>(
      std::llround(static_cast<double>(bytes) * 8e6 / rate_bps));
}

}  // namespace vidsim

#endif  // VIDSIM_UNITS_H_
