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

#ifndef VIDSIM_ENCODER_H_
#define VIDSIM_ENCODER_H_

#include <cstdint>
#include <optional>
#include <string>

#include "vidsim/rng.h"
#include "vidsim/units.h"

namespace vidsim {

/// Parametric synthetic encoder. Real codecs track a commanded target
/// bitrate only with a lag of a couple of seconds upward (about half that
/// downward) and show considerable per-frame size variance around the
/// average; this model reproduces that with first-order exponential
/// tracking plus multiplicative lognormal noise.
struct EncoderConfig {
  double fps = 30.0;             // camera rate; frame interval = 1/fps
  double lag_up_s = 0.9;         // time constant, rising target
  double lag_down_s = 0.45;      // time constant, falling target
  double noise_cv = 0.3;         // coefficient of variation of frame sizes
  std::int64_t min_frame_bytes = 100;
  double max_bitrate_bps = 12e6;

  TimeUs FrameIntervalUs() const { return SecToUs(1.0 / fps); }
};

/// Presets: "steady" is noise-free, "low_motion" matches the defaults,
/// "high_motion" roughly doubles the frame-size variance.
EncoderConfig EncoderPreset(const std::string& name);

struct Frame {
  std::int64_t frame_id = 0;
  std::int64_t size_bytes = 0;
  double target_bps = 0.0;  // target in force when this frame was encoded
  TimeUs read_time = 0;
};

class Encoder {
 public:
  Encoder(const EncoderConfig& config, std::uint64_t seed);

  /// Encodes one camera frame at a tick. A zero target signals a pause and
  /// yields nullopt (frame skipped), as does the paused state. A negative
  /// target is a contract violation.
  std::optional<Frame> EncodeTick(double target_bps, TimeUs now);

  void Pause() { paused_ = true; }
  void Resume() { paused_ = false; }
  bool paused() const { return paused_; }

  double effective_bitrate_bps() const { return effective_bps_; }
  std::int64_t ticks() const { return ticks_; }
  std::int64_t encoded_frames() const { return encoded_; }
  std::int64_t skipped_frames() const { return skipped_; }

 private:
  EncoderConfig cfg_;
  Rng rng_;
  bool paused_ = false;
  bool started_ = false;
  double effective_bps_ = 0.0;
  std::int64_t ticks_ = 0;
  std::int64_t encoded_ = 0;
  std::int64_t skipped_ = 0;
  std::int64_t next_frame_id_ = 0;
};

}  // namespace vidsim

#endif  // VIDSIM_ENCODER_H_
