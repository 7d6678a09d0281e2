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
#include <map>
#include <utility>
#include <vector>

#include "pulsegate/attacks/tamper.hpp"
#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/circuit.hpp"

namespace pulsegate::attack {

template <class T>
struct Tampered {
  T artifact;
  TamperRecord record;
};

// Sends the listed entries of a gate's schedule to `device` by giving them
// a fresh template slot bound there.
struct EntryMove {
  std::vector<std::size_t> entries;
  Channel device;
};

struct ChannelRemap {
  std::map<Channel, Channel> slots;  // template slot -> device channel
  std::vector<EntryMove> moves;
};

// Channel attacks on circuits. `op` must name a custom gate. The gate-level
// view of the circuit is never changed.
Tampered<GateCircuit> qubit_plunder(const GateCircuit& c, std::size_t op,
                                    const ChannelRemap& remap, const CalibrationSnapshot& calib);

// Replaces the gate's pulses with a Delay of `delay` samples on each listed
// drive slot (all declared drive slots when empty). delay 0 leaves nothing.
Tampered<GateCircuit> qubit_block(const GateCircuit& c, std::size_t op, std::int64_t delay,
                                  const CalibrationSnapshot& calib,
                                  const std::vector<Channel>& slots = {});

// Permutes the device channels the gate binds (kind-preserving).
Tampered<GateCircuit> qubit_reorder(const GateCircuit& c, std::size_t op,
                                    const std::map<Channel, Channel>& permutation,
                                    const CalibrationSnapshot& calib);
// Moves entries among the gate's own bound channels.
Tampered<GateCircuit> qubit_reorder(const GateCircuit& c, std::size_t op,
                                    const std::vector<EntryMove>& moves,
                                    const CalibrationSnapshot& calib);

// Pulse attacks on a schedule. `entry` indexes Schedule::entries().
Tampered<Schedule> timing_mismatch(const Schedule& s, std::size_t entry, std::int64_t offset);
// Edits the SetFrequency governing the Play at `entry`, or inserts one
// right before it.
Tampered<Schedule> frequency_mismatch(const Schedule& s, std::size_t entry, double frequency);
Tampered<Schedule> phase_mismatch(const Schedule& s, std::size_t entry, double phase);
Tampered<Schedule> waveform_mismatch(const Schedule& s, std::size_t entry,
                                     const Waveform& waveform);

// The same edits applied to the schedule of custom gate `op`.
Tampered<GateCircuit> timing_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                      std::int64_t offset);
Tampered<GateCircuit> frequency_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                         double frequency);
Tampered<GateCircuit> phase_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                     double phase);
Tampered<GateCircuit> waveform_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                        const Waveform& waveform);

// attack.json: {"kind", "target": {"op", "entry"}, "parameters": {...}}.
// Parameters by kind:
//   plunder   {"remap": {"d0": "d2"}, "moves": [{"entries": [1], "channel": "d1"}]}
//   block     {"delay": 0, "slots": ["d0"]}
//   reorder   {"permutation": {"d0": "d1", "d1": "d0"}} or {"moves": [...]}
//   timing    {"offset": 1}
//   frequency {"frequency": 2.5}
//   phase     {"phase": 3.14159}
//   waveform  {"waveform": {...}} or {"amp_scale": 0.5}
Tampered<GateCircuit> apply_attack(const GateCircuit& c, const json& spec,
                                   const CalibrationSnapshot& calib);
// Pulse attacks only; target.op is ignored.
Tampered<Schedule> apply_attack(const Schedule& s, const json& spec);

}  // namespace pulsegate::attack
