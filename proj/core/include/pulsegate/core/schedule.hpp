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
#include <set>
#include <string_view>
#include <variant>
#include <vector>

#include "pulsegate/core/channel.hpp"
#include "pulsegate/core/waveform.hpp"

namespace pulsegate {

struct Play {
  Channel channel;
  Waveform waveform;
  bool operator==(const Play&) const = default;
};

// Frequencies in GHz, phases in radians.
struct SetFrequency {
  Channel channel;
  double frequency = 0.0;
  bool operator==(const SetFrequency&) const = default;
};

struct ShiftFrequency {
  Channel channel;
  double delta = 0.0;
  bool operator==(const ShiftFrequency&) const = default;
};

struct SetPhase {
  Channel channel;
  double phase = 0.0;
  bool operator==(const SetPhase&) const = default;
};

struct ShiftPhase {
  Channel channel;
  double delta = 0.0;
  bool operator==(const ShiftPhase&) const = default;
};

struct Delay {
  Channel channel;
  std::int64_t duration = 0;
  bool operator==(const Delay&) const = default;
};

struct Acquire {
  int qubit = 0;
  std::int64_t duration = 0;
  int memory_slot = 0;
  bool operator==(const Acquire&) const = default;
};

using Instruction =
    std::variant<Play, SetFrequency, ShiftFrequency, SetPhase, ShiftPhase, Delay, Acquire>;

enum class InstructionKind {
  play,
  set_frequency,
  shift_frequency,
  set_phase,
  shift_phase,
  delay,
  acquire
};

InstructionKind kind_of(const Instruction& ins);
std::string_view to_string(InstructionKind k);
InstructionKind parse_instruction_kind(std::string_view s);

// Acquire reports acquire(qubit).
Channel channel_of(const Instruction& ins);
Instruction with_channel(const Instruction& ins, Channel c);
std::int64_t duration_of(const Instruction& ins);

// Play, Delay and Acquire hold their channel for an interval.
bool is_occupying(const Instruction& ins);
// SetFrequency, ShiftFrequency, SetPhase, ShiftPhase.
bool is_frame(const Instruction& ins);

struct ScheduleEntry {
  std::int64_t start_time = 0;
  Instruction instruction;

  std::int64_t end_time() const { return start_time + duration_of(instruction); }
  Channel channel() const { return channel_of(instruction); }
  bool operator==(const ScheduleEntry&) const = default;
};

// Pulse program with absolute start times. Entries stay sorted by
// (start_time, channel); entries sharing both keep their insertion order,
// which is what orders a frame change ahead of a Play at the same instant.
class Schedule {
 public:
  Schedule() = default;

  void insert(std::int64_t start_time, Instruction ins);
  void insert(ScheduleEntry e) { insert(e.start_time, std::move(e.instruction)); }

  // Inserts at a specific position; throws InvalidArgument if that would
  // break the sort order.
  void insert_at(std::size_t pos, ScheduleEntry e);

  // Appends every entry of `other`, shifted by `offset`.
  void append(const Schedule& other, std::int64_t offset);

  ScheduleEntry erase(std::size_t pos);

  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const ScheduleEntry& operator[](std::size_t i) const { return entries_[i]; }

  // Replaces entry `pos` keeping its slot when the sort key is unchanged,
  // otherwise re-inserts. Returns the new position.
  std::size_t replace(std::size_t pos, ScheduleEntry e);

  // Latest end time over all entries, 0 when empty.
  std::int64_t duration() const;
  std::set<Channel> channels() const;

  bool operator==(const Schedule&) const = default;

 private:
  std::vector<ScheduleEntry> entries_;
};

}  // namespace pulsegate
