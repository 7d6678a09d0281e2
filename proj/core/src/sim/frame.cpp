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

#include "pulsegate/sim/frame.hpp"

#include <cmath>
#include <numbers>

namespace pulsegate::sim {

FrameState apply_frame_instruction(FrameState f, const Instruction& ins) {
  if (const auto* x = std::get_if<SetFrequency>(&ins)) {
    f.frequency = x->frequency;
  } else if (const auto* x = std::get_if<ShiftFrequency>(&ins)) {
    f.frequency += x->delta;
  } else if (const auto* x = std::get_if<SetPhase>(&ins)) {
    f.phase = x->phase;
  } else if (const auto* x = std::get_if<ShiftPhase>(&ins)) {
    f.phase += x->delta;
  }
  return f;
}

FrameState initial_frame(const CalibrationSnapshot& calib, Channel c) {
  return {calib.channel_frequency(c), 0.0};
}

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(phi, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

FrameState& FrameTable::operator[](Channel c) {
  auto it = frames_.find(c);
  if (it == frames_.end()) it = frames_.emplace(c, initial_frame(*calib_, c)).first;
  return it->second;
}

}  // namespace pulsegate::sim
