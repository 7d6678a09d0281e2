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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pulsegate/core/schedule.hpp"

namespace pulsegate {

struct TimingConstraints {
  double dt = 0.222e-9;  // seconds per sample
  std::int64_t granularity = 16;
  std::int64_t pulse_alignment = 16;
  std::int64_t acquire_alignment = 16;

  // lcm(pulse_alignment, acquire_alignment): the legal start-time grid.
  std::int64_t start_grid() const;
  double dt_ns() const { return dt * 1e9; }

  bool operator==(const TimingConstraints&) const = default;
};

// Channel counts of a device, used to flag channels that do not exist.
struct DeviceShape {
  int num_qubits = 0;
  int num_pairs = 0;
  bool contains(Channel c) const;
};

enum class TimingRule { start_alignment, duration_granularity, negative_start, invalid_channel };

std::string to_string(TimingRule r);

struct TimingViolation {
  std::size_t entry = 0;
  TimingRule rule = TimingRule::start_alignment;
  std::string message;
};

// One violation per entry per failing rule. Never throws.
std::vector<TimingViolation> validate_timing(const Schedule& s, const TimingConstraints& tc,
                                             std::optional<DeviceShape> device = std::nullopt);

struct OverlapViolation {
  std::size_t first = 0;   // entry index, first.start <= second.start
  std::size_t second = 0;
  Channel channel;
  std::string message;
};

// Reports each intersecting pair of positive-length Play/Delay/Acquire
// intervals on a single channel exactly once.
std::vector<OverlapViolation> check_overlap(const Schedule& s);

}  // namespace pulsegate
