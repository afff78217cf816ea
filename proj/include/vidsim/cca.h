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

#ifndef VIDSIM_CCA_H_
#define VIDSIM_CCA_H_

#include <cstdint>
#include <deque>
#include <unordered_map>

#include "vidsim/units.h"

namespace vidsim {

enum class CcaAlgorithm { kCopa, kRocc };

struct CcaConfig {
  CcaAlgorithm algorithm = CcaAlgorithm::kCopa;
  int mtu = 1500;

  // Copa, default (delay-sensitive) mode.
  double copa_delta = 0.5;

  // RoCC: cwnd = bytes received in the last (1 + gamma) * rtt_min, plus a
  // small constant headroom.
  double rocc_gamma = 0.5;
  int rocc_headroom_mtu = 4;

  // Pacing rate reported before the first RTT sample.
  double initial_rate_bps = 300000.0;

  double srtt_gain = 1.0 / 8.0;  // EWMA weight per RTT sample
};

struct AckEvent {
  std::int64_t packet_id = 0;
  int bytes_acked = 0;
  TimeUs send_time = 0;
  TimeUs recv_ack_time = 0;
};

/// Window-based delay-controlling congestion control: Copa (default) and
/// RoCC. Event-driven state machine; one instance per simulation.
class CongestionController {
 public:
  explicit CongestionController(const CcaConfig& config);

  /// Registers a transmitted packet and charges it against the window.
  void OnPacketSent(std::int64_t packet_id, int bytes, TimeUs now);

  /// Drives srtt / rtt_min / cwnd from an ACK. An ACK for an unknown or
  /// already-acked packet is counted as a duplicate and otherwise ignored.
  void OnAck(const AckEvent& ack);

  /// Removes a timed-out packet from the in-flight accounting. Copa in
  /// default mode has no multiplicative loss reaction; RoCC is unchanged
  /// beyond the in-flight bookkeeping.
  void OnLoss(std::int64_t packet_id);

  /// True iff inflight + bytes <= cwnd.
  bool CanSend(int bytes) const;

  /// Pacing rate: cwnd divided by smoothed RTT, or the configured initial
  /// rate before the first RTT sample.
  double CcRateBps() const;

  std::int64_t cwnd_bytes() const { return cwnd_bytes_; }
  std::int64_t inflight_bytes() const { return inflight_bytes_; }
  TimeUs srtt_us() const { return srtt_us_; }
  TimeUs rtt_min_us() const { return rtt_min_us_; }
  std::int64_t duplicate_acks() const { return duplicate_acks_; }
  bool has_rtt_sample() const { return srtt_us_ > 0; }

 private:
  void UpdateRttFilters(TimeUs rtt, TimeUs now);
  void CopaOnAck(int bytes_acked, TimeUs now);
  void RoccOnAck(int bytes_acked, TimeUs now);
  TimeUs StandingRtt(TimeUs now) const;

  CcaConfig cfg_;

  std::int64_t cwnd_bytes_ = 0;
  std::int64_t inflight_bytes_ = 0;
  TimeUs srtt_us_ = 0;      // 0 until the first sample
  TimeUs rtt_min_us_ = 0;   // windowed minimum (10 s)
  std::int64_t duplicate_acks_ = 0;

  struct SentInfo {
    int bytes = 0;
    TimeUs send_time = 0;
  };
  std::unordered_map<std::int64_t, SentInfo> unacked_;

  // RTT sample history, trimmed to the rtt_min window. Serves both the
  // 10 s windowed minimum and Copa's standing-RTT (min over srtt/2) scan.
  struct RttSample {
    TimeUs time = 0;
    TimeUs rtt = 0;
  };
  std::deque<RttSample> rtt_history_;

  // Copa state.
  bool copa_slow_start_ = true;
  double copa_velocity_ = 1.0;
  int copa_direction_ = 0;  // +1 up, -1 down
  int copa_same_direction_rtts_ = 0;
  TimeUs copa_last_window_time_ = 0;
  std::int64_t copa_cwnd_at_window_start_ = 0;

  // RoCC received log: (ack time, bytes) kept for (1 + gamma) * rtt_min.
  std::deque<RttSample> rocc_received_;  // .rtt field holds bytes
  std::int64_t rocc_received_sum_ = 0;
};

}  // namespace vidsim

#endif  // VIDSIM_CCA_H_
