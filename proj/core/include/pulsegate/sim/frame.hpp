// Copyright 2026 The pulsegate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>

#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/schedule.hpp"

namespace pulsegate::sim {

struct FrameState {
  double frequency = 0.0;  // GHz
  double phase = 0.0;      // radians, unreduced

  bool operator==(const FrameState&) const = default;
};

// Frame bookkeeping only. Non-frame instructions leave the frame unchanged.
FrameState apply_frame_instruction(FrameState f, const Instruction& ins);

// Initial frame for a device channel: calibrated qubit frequency, or the
// target qubit frequency for control channels; phase 0.
FrameState initial_frame(const CalibrationSnapshot& calib, Channel c);

// Phase reduced to (-pi, pi] for reporting.
double wrap_phase(double phi);

class FrameTable {
 public:
  explicit FrameTable(const CalibrationSnapshot& calib) : calib_(&calib) {}
  FrameState& operator[](Channel c);
  const std::map<Channel, FrameState>& frames() const { return frames_; }

 private:
  const CalibrationSnapshot* calib_;
  std::map<Channel, FrameState> frames_;
};

}  // namespace pulsegate::sim
