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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pulsegate/core/circuit.hpp"
#include "pulsegate/core/serialize.hpp"

namespace pulsegate::attack {

// Channel attacks rewrite a custom gate's binding; pulse attacks edit
// instruction values.
enum class AttackKind { plunder, block, reorder, timing, frequency, phase, waveform };

inline constexpr AttackKind kAllAttackKinds[] = {
    AttackKind::plunder, AttackKind::block, AttackKind::reorder, AttackKind::timing,
    AttackKind::frequency, AttackKind::phase, AttackKind::waveform};

std::string_view to_string(AttackKind k);
AttackKind parse_attack_kind(std::string_view s);
bool is_channel_attack(AttackKind k);

struct AttackTarget {
  std::optional<std::size_t> op;     // circuit op index
  std::optional<std::size_t> entry;  // schedule entry index
  std::optional<Channel> channel;

  bool operator==(const AttackTarget&) const = default;
};

enum class Artifact { circuit, schedule };

// Ground truth for one tamper. For a circuit, `before`/`after` hold the
// targeted op; for a schedule, the whole schedule.
struct TamperRecord {
  AttackKind kind = AttackKind::plunder;
  Artifact artifact = Artifact::circuit;
  AttackTarget target;
  json before;
  json after;
  json parameters = json::object();
  std::vector<std::string> flags;  // e.g. "overlap", "inserted-instruction"

  bool operator==(const TamperRecord&) const = default;
};

json to_json(const TamperRecord& r);
TamperRecord tamper_record_from_json(const json& j);

// Puts `before` back. Throws InvalidArgument if the record does not fit.
GateCircuit restore(const GateCircuit& tampered, const TamperRecord& r);
Schedule restore(const Schedule& tampered, const TamperRecord& r);

}  // namespace pulsegate::attack
