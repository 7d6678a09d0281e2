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

#include "pulsegate/core/timing.hpp"

#include <map>
#include <numeric>

namespace pulsegate {

std::int64_t TimingConstraints::start_grid() const {
  return std::lcm(pulse_alignment, acquire_alignment);
}

bool DeviceShape::contains(Channel c) const {
  if (c.index < 0) return false;
  if (c.kind == ChannelKind::control) return c.index < num_pairs;
  return c.index < num_qubits;
}

std::string to_string(TimingRule r) {
  switch (r) {
    case TimingRule::start_alignment:
      return "start_alignment";
    case TimingRule::duration_granularity:
      return "duration_granularity";
    case TimingRule::negative_start:
      return "negative_start";
    case TimingRule::invalid_channel:
      return "invalid_channel";
  }
  return "?";
}

std::vector<TimingViolation> validate_timing(const Schedule& s, const TimingConstraints& tc,
                                             std::optional<DeviceShape> device) {
  std::vector<TimingViolation> out;
  const std::int64_t grid = tc.start_grid();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& e = s[i];
    if (e.start_time < 0) {
      out.push_back({i, TimingRule::negative_start,
                     "start " + std::to_string(e.start_time) + " is negative"});
    }
    if (grid > 0 && e.start_time % grid != 0) {
      out.push_back({i, TimingRule::start_alignment,
                     "start " + std::to_string(e.start_time) + " is not a multiple of " +
                         std::to_string(grid)});
    }
    if (std::holds_alternative<Play>(e.instruction) && tc.granularity > 0 &&
        duration_of(e.instruction) % tc.granularity != 0) {
      out.push_back({i, TimingRule::duration_granularity,
                     "duration " + std::to_string(duration_of(e.instruction)) +
                         " is not a multiple of " + std::to_string(tc.granularity)});
    }
    if (device && !device->contains(e.channel())) {
      out.push_back({i, TimingRule::invalid_channel,
                     "channel " + to_string(e.channel()) + " does not exist on the device"});
    }
  }
  return out;
}

std::vector<OverlapViolation> check_overlap(const Schedule& s) {
  std::map<Channel, std::vector<std::size_t>> by_channel;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& e = s[i];
    if (is_occupying(e.instruction) && duration_of(e.instruction) > 0) {
      by_channel[e.channel()].push_back(i);
    }
  }
  std::vector<OverlapViolation> out;
  for (const auto& [ch, idx] : by_channel) {
    // Entries are sorted by start, so b only needs scanning while it starts
    // before a ends.
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const auto& ea = s[idx[a]];
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const auto& eb = s[idx[b]];
        if (eb.start_time >= ea.end_time()) break;
        out.push_back({idx[a], idx[b], ch,
                       to_string(ch) + ": [" + std::to_string(ea.start_time) + "," +
                           std::to_string(ea.end_time()) + ") overlaps [" +
                           std::to_string(eb.start_time) + "," + std::to_string(eb.end_time()) +
                           ")"});
      }
    }
  }
  return out;
}

}  // namespace pulsegate
