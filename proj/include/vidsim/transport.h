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

#ifndef VIDSIM_TRANSPORT_H_
#define VIDSIM_TRANSPORT_H_

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "vidsim/cca.h"
#include "vidsim/link.h"
#include "vidsim/units.h"

namespace vidsim {

/// Service time of one fully transmitted frame: from the instant its first
/// packet reached the front of the pacer (i.e. all earlier frames were fully
/// sent) until its last packet finished leaving at the pacing rate. Queueing
/// behind earlier frames is deliberately excluded.
struct ServiceTimeSample {
  TimeUs d_us = 0;            // frame service time
  double target_bps = 0.0;    // target bitrate that encoded this frame
  std::int64_t frame_id = 0;
  TimeUs completion_time = 0;
};

struct DummyPolicy {
  bool enabled = true;
  int max_size_bytes = 200;
  double frame_eta_fraction = 0.25;      // of the inter-frame interval
  double max_video_bitrate_bps = 12e6;
};

/// Sender-side pacing stage. Holds encoded video packets FIFO, releases them
/// at the congestion controller's rate under the cwnd constraint, measures
/// per-frame service times, and pads with low-priority dummy packets when
/// the queue is empty.
///
/// Pacing model: each released packet occupies the wire for size*8/rate; the
/// next packet may leave when the previous one has fully serialized. A
/// packet arriving at an idle pacer leaves immediately (one-packet burst).
class Pacer {
 public:
  Pacer(int mtu, TimeUs frame_interval_us, const DummyPolicy& dummy);

  /// Fragments a frame into mtu-sized packets (last may be partial) and
  /// appends them FIFO. Returns the packet count. size_bytes must be > 0.
  int EnqueueFrame(std::int64_t frame_id, std::int64_t size_bytes,
                   double target_bps, TimeUs now);

  /// Age of the head-of-queue packet; 0 when empty.
  TimeUs OldestPacketAge(TimeUs now) const;

  bool Empty() const { return queue_.empty() && !backlogged_; }
  bool QueueEmpty() const { return queue_.empty(); }
  std::int64_t queued_bytes() const { return queued_bytes_; }

  enum class SendKind { kNone, kVideo, kDummy };

  struct Decision {
    SendKind kind = SendKind::kNone;
    TimeUs earliest = kTimeNever;
  };

  /// What the pacer would transmit next and the earliest instant it may do
  /// so. Video strictly precedes dummy; dummy is suppressed when the queue
  /// is non-empty, when the next camera frame is closer than
  /// frame_eta_fraction * frame interval, when the delivered video bitrate
  /// has reached the policy ceiling, or when the window has no room.
  Decision NextTransmission(const CongestionController& cca, TimeUs now,
                            TimeUs next_frame_eta_us,
                            double video_rate_bps) const;

  struct SentPacket {
    QueuedPacket pkt;
    std::int64_t frame_id = -1;  // -1 for dummy / backlogged filler
    double frame_target_bps = 0.0;
  };

  /// Releases the head video packet at `now` (which must satisfy the
  /// Decision contract) pacing at `rate_bps`. Records a ServiceTimeSample
  /// when this completes a frame.
  SentPacket CommitVideo(TimeUs now, double rate_bps);

  /// Emits one dummy packet at `now`.
  SentPacket CommitDummy(TimeUs now, double rate_bps);

  /// Drains the service-time samples accumulated since the last call.
  std::vector<ServiceTimeSample> TakeSamples();

  /// Backlogged-source mode: the queue never runs dry; full-mtu packets are
  /// fabricated on demand and no service times are recorded.
  void set_backlogged(bool on) { backlogged_ = on; }

  const DummyPolicy& dummy_policy() const { return dummy_; }

 private:
  struct QueuedVideoPacket {
    std::int64_t packet_id = 0;
    int size = 0;
    std::int64_t frame_id = 0;
    double frame_target_bps = 0.0;
    TimeUs enqueue_time = 0;
    bool last_of_frame = false;
  };

  int mtu_;
  TimeUs frame_interval_us_;
  DummyPolicy dummy_;
  bool backlogged_ = false;

  std::deque<QueuedVideoPacket> queue_;
  std::int64_t queued_bytes_ = 0;
  std::int64_t next_packet_id_ = 0;

  // Wire occupancy of the previously released packet.
  TimeUs busy_until_ = 0;

  // Instant the current head frame's first packet reached the queue front;
  // unset while the queue is empty.
  std::optional<TimeUs> head_frame_front_time_;

  std::vector<ServiceTimeSample> samples_;
};

}  // namespace vidsim

#endif  // VIDSIM_TRANSPORT_H_
