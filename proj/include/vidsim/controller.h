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

#ifndef VIDSIM_CONTROLLER_H_
#define VIDSIM_CONTROLLER_H_

#include <span>
#include <utility>
#include <vector>

#include "vidsim/transport.h"
#include "vidsim/units.h"

namespace vidsim {

struct ControllerConfig {
  double lambda = 0.9;        // service-time percentile pinned, in (0,1)
  double target_p_ms = 33.0;  // target value for that percentile
  double update_interval_s = 1.0;
  double tau_ms = 33.0;       // pacer head-age pause threshold
  double ewma_weight = 0.5;   // smoothing gain applied to alpha per update
  double alpha_floor = 0.1;
  bool bitrate_selection_enabled = true;
};

/// Counterfactual bitrate-fraction solve: with observed (service time,
/// target bitrate) pairs and the current CC rate, had frame i been encoded
/// at alpha * cc_rate its service time would have been
/// d_i * alpha * cc_rate / tr_i. Returns the alpha that places the lambda
/// percentile of those counterfactuals at the target P, capped at 1:
///
///   alpha = min(P / Percentile_lambda({d_i * cc_rate / tr_i}), 1)
///
/// An empty sample set returns `current_alpha` unchanged. Any tr_i <= 0
/// throws std::runtime_error.
double ComputeAlpha(std::span<const ServiceTimeSample> samples,
                    double cc_rate_bps, const ControllerConfig& config,
                    double current_alpha);

enum class SafeguardAction { kNoChange, kPause, kResume };

/// Pause when the oldest pacer packet has waited longer than tau (strict);
/// resume only once the pacer queue has drained.
SafeguardAction SafeguardCheck(TimeUs pacer_oldest_age_us, bool paused,
                               bool pacer_empty,
                               const ControllerConfig& config);

/// Periodic alpha update with EWMA smoothing and clamping. Holds the alpha
/// time series for post-run analysis.
class RateController {
 public:
  explicit RateController(const ControllerConfig& config);

  /// Consumes the samples from the last update interval, refreshes alpha,
  /// and returns the commanded target bitrate alpha * cc_rate. With bitrate
  /// selection disabled, alpha pins at 1 and the target is cc_rate itself.
  double OnUpdateTick(std::span<const ServiceTimeSample> samples,
                      double cc_rate_bps, TimeUs now);

  double alpha() const { return alpha_; }
  const ControllerConfig& config() const { return cfg_; }
  const std::vector<std::pair<TimeUs, double>>& alpha_series() const {
    return alpha_series_;
  }

 private:
  ControllerConfig cfg_;
  double alpha_ = 1.0;
  std::vector<std::pair<TimeUs, double>> alpha_series_;
};

}  // namespace vidsim

#endif  // VIDSIM_CONTROLLER_H_
