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

#include "pulsegate/core/schedule.hpp"

#include <algorithm>
#include <string>

#include "pulsegate/core/errors.hpp"

namespace pulsegate {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool key_less(const ScheduleEntry& a, const ScheduleEntry& b) {
  if (a.start_time != b.start_time) return a.start_time < b.start_time;
  return a.channel() < b.channel();
}

}  // namespace

InstructionKind kind_of(const Instruction& ins) {
  return static_cast<InstructionKind>(ins.index());
}

std::string_view to_string(InstructionKind k) {
  switch (k) {
    case InstructionKind::play:
      return "play";
    case InstructionKind::set_frequency:
      return "set_frequency";
    case InstructionKind::shift_frequency:
      return "shift_frequency";
    case InstructionKind::set_phase:
      return "set_phase";
    case InstructionKind::shift_phase:
      return "shift_phase";
    case InstructionKind::delay:
      return "delay";
    case InstructionKind::acquire:
      return "acquire";
  }
  return "?";
}

InstructionKind parse_instruction_kind(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(InstructionKind::acquire); ++i) {
    auto k = static_cast<InstructionKind>(i);
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown instruction kind '" + std::string(s) + "'");
}

Channel channel_of(const Instruction& ins) {
  return std::visit(overloaded{[](const Acquire& a) { return acquire(a.qubit); },
                               [](const auto& x) { return x.channel; }},
                    ins);
}

Instruction with_channel(const Instruction& ins, Channel c) {
  return std::visit(overloaded{[&](Acquire a) -> Instruction {
                                 if (c.kind != ChannelKind::acquire) {
                                   throw InvalidArgument("acquire needs an acquire channel");
                                 }
                                 a.qubit = c.index;
                                 return a;
                               },
                               [&](auto x) -> Instruction {
                                 x.channel = c;
                                 return x;
                               }},
                    ins);
}

std::int64_t duration_of(const Instruction& ins) {
  return std::visit(overloaded{[](const Play& p) { return p.waveform.duration(); },
                               [](const Delay& d) { return d.duration; },
                               [](const Acquire& a) { return a.duration; },
                               [](const auto&) -> std::int64_t { return 0; }},
                    ins);
}

bool is_occupying(const Instruction& ins) {
  return std::holds_alternative<Play>(ins) || std::holds_alternative<Delay>(ins) ||
         std::holds_alternative<Acquire>(ins);
}

bool is_frame(const Instruction& ins) { return !is_occupying(ins); }

void Schedule::insert(std::int64_t start_time, Instruction ins) {
  ScheduleEntry e{start_time, std::move(ins)};
  auto it = std::upper_bound(entries_.begin(), entries_.end(), e, key_less);
  entries_.insert(it, std::move(e));
}

void Schedule::insert_at(std::size_t pos, ScheduleEntry e) {
  if (pos > entries_.size()) throw InvalidArgument("insert position out of range");
  if (pos > 0 && key_less(e, entries_[pos - 1])) {
    throw InvalidArgument("insert_at would break schedule order");
  }
  if (pos < entries_.size() && key_less(entries_[pos], e)) {
    throw InvalidArgument("insert_at would break schedule order");
  }
  entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(e));
}

void Schedule::append(const Schedule& other, std::int64_t offset) {
  for (const auto& e : other.entries_) insert(e.start_time + offset, e.instruction);
}

ScheduleEntry Schedule::erase(std::size_t pos) {
  if (pos >= entries_.size()) throw InvalidArgument("entry index out of range");
  ScheduleEntry e = std::move(entries_[pos]);
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(pos));
  return e;
}

std::size_t Schedule::replace(std::size_t pos, ScheduleEntry e) {
  if (pos >= entries_.size()) throw InvalidArgument("entry index out of range");
  const auto& old = entries_[pos];
  if (old.start_time == e.start_time && old.channel() == e.channel()) {
    entries_[pos] = std::move(e);
    return pos;
  }
  erase(pos);
  auto it = std::upper_bound(entries_.begin(), entries_.end(), e, key_less);
  auto idx = static_cast<std::size_t>(it - entries_.begin());
  entries_.insert(it, std::move(e));
  return idx;
}

std::int64_t Schedule::duration() const {
  std::int64_t end = 0;
  for (const auto& e : entries_) end = std::max(end, e.end_time());
  return end;
}

std::set<Channel> Schedule::channels() const {
  std::set<Channel> out;
  for (const auto& e : entries_) out.insert(e.channel());
  return out;
}

}  // namespace pulsegate
