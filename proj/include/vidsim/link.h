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

#ifndef VIDSIM_LINK_H_
#define VIDSIM_LINK_H_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "vidsim/rng.h"
#include "vidsim/units.h"

namespace vidsim {

enum class LinkKind { kTraceDriven, kPiecewiseConstant, kPoissonRate };

enum class PacketKind { kVideo, kDummy };

struct RateSegment {
  TimeUs duration_us = 0;
  double rate_bps = 0.0;  // 0 models an outage
};

/// Immutable description of the bottleneck. Safe to share across
/// concurrently running simulations; all mutable queue state lives in
/// LinkQueue.
struct LinkModel {
  LinkKind kind = LinkKind::kPiecewiseConstant;

  // kTraceDriven: delivery opportunity timestamps, microseconds,
  // non-decreasing. The schedule repeats with period trace_period_us.
  std::vector<TimeUs> trace_us;
  TimeUs trace_period_us = 0;

  // kPiecewiseConstant: segments cycle for the lifetime of the run.
  std::vector<RateSegment> segments;

  // kPoissonRate: constant capacity with a Poisson delivery process.
  double mean_rate_bps = 0.0;
  double loss_prob = 0.0;

  TimeUs owd_us = 25 * kUsPerMs;  // one-way propagation delay
  std::int64_t buffer_bytes = 0;  // 0 = unbounded
  int mtu = 1500;                 // bytes per delivery opportunity

  /// Bytes the link can carry over [from, to). For kPoissonRate this is the
  /// expected value; for the other kinds it is the exact opportunity count
  /// times mtu.
  std::int64_t CapacityBytes(TimeUs from, TimeUs to) const;

  /// Total duration of one cycle of the piecewise schedule.
  TimeUs SegmentsPeriodUs() const;
};

/// Parses a Mahimahi-format trace: one integer millisecond timestamp per
/// line, non-decreasing, each granting one mtu-byte delivery opportunity.
/// Repeated timestamps grant multiple opportunities. The schedule wraps
/// modulo its final timestamp for runs longer than the trace.
///
/// Throws std::runtime_error naming the offending line on malformed or
/// non-monotone input, and on an empty file.
LinkModel LoadTrace(const std::string& path);
LinkModel ParseTraceText(const std::string& text, const std::string& name);

struct QueuedPacket {
  std::int64_t packet_id = 0;
  int size = 0;  // bytes
  TimeUs enqueue_time = 0;
  PacketKind kind = PacketKind::kVideo;
};

/// FIFO bottleneck queue drained at the model's delivery opportunities.
/// Each opportunity carries an mtu-byte budget; consecutive whole packets
/// share the budget and any leftover is forfeited (never carried over).
/// Opportunities that fire while the queue is empty are forfeited.
///
/// Queries must be issued with non-decreasing `now` (single engine clock).
class LinkQueue {
 public:
  LinkQueue(const LinkModel& model, std::uint64_t seed);

  /// Tail-drop enqueue. Returns false (packet dropped) when a finite buffer
  /// is full.
  bool Enqueue(const QueuedPacket& pkt, TimeUs now);

  /// Earliest time at or after `now` at which the head packet can leave.
  /// nullopt when the queue is empty.
  std::optional<TimeUs> NextDeliveryTime(TimeUs now);

  struct Delivered {
    QueuedPacket pkt;
    bool lost = false;  // random loss drawn at delivery
  };

  /// Consumes the delivery opportunity at time `t` (which must be the value
  /// returned by NextDeliveryTime) and dequeues every packet that fits in
  /// its byte budget.
  std::vector<Delivered> DeliverAt(TimeUs t);

  bool Empty() const { return queue_.empty(); }
  std::int64_t queued_bytes() const { return queued_bytes_; }

 private:
  TimeUs NextOpportunityAtOrAfter(TimeUs t);

  const LinkModel& model_;
  std::deque<QueuedPacket> queue_;
  std::int64_t queued_bytes_ = 0;

  // Trace cursor: index of the next unconsumed opportunity within the
  // current cycle.
  std::size_t trace_idx_ = 0;
  std::int64_t trace_cycle_ = 0;

  // Poisson process state: next pending opportunity time.
  TimeUs poisson_next_ = -1;
  Rng rng_;
};

}  // namespace vidsim

#endif  // VIDSIM_LINK_H_
