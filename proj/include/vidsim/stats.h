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

#ifndef VIDSIM_STATS_H_
#define VIDSIM_STATS_H_

#include <span>
#include <vector>

namespace vidsim {

/// Percentile by linear interpolation between closest ranks with plotting
/// position i/(n+1): rank h = q*(n+1), clamped to [1, n], interpolating
/// between the surrounding order statistics. Every percentile reported
/// anywhere in this project uses this one estimator.
///
/// `sorted` must be ascending. q in (0, 1).
double PercentileSorted(std::span<const double> sorted, double q);

/// Same estimator without requiring pre-sorted input. Selects the two
/// neighboring order statistics with nth_element instead of a full sort.
double Percentile(std::vector<double> values, double q);

struct SeriesSummary {
  double mean = 0.0;
  double p5 = 0.0;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double p95 = 0.0;
  std::size_t count = 0;
};

SeriesSummary SummarizeSeries(std::vector<double> values);

}  // namespace vidsim

#endif  // VIDSIM_STATS_H_
