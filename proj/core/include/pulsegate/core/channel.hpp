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

#include <compare>
#include <string>
#include <string_view>

namespace pulsegate {

enum class ChannelKind { drive = 0, control = 1, measure = 2, acquire = 3 };

// A device channel, or a template slot when it appears inside a custom gate
// schedule. Drive, measure and acquire channels are indexed by qubit; control
// channels by position in the device coupling list.
struct Channel {
  ChannelKind kind = ChannelKind::drive;
  int index = 0;

  auto operator<=>(const Channel&) const = default;
  bool operator==(const Channel&) const = default;
};

inline Channel drive(int q) { return {ChannelKind::drive, q}; }
inline Channel control(int p) { return {ChannelKind::control, p}; }
inline Channel measure(int q) { return {ChannelKind::measure, q}; }
inline Channel acquire(int q) { return {ChannelKind::acquire, q}; }

// "d0", "u3", "m1", "a2".
std::string to_string(Channel c);
std::string_view kind_prefix(ChannelKind k);

// Inverse of to_string. Throws InvalidArgument on malformed names.
Channel parse_channel(std::string_view name);

}  // namespace pulsegate
