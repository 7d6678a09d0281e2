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

#include "pulsegate/attacks/attacks.hpp"

namespace pulsegate::attack {

// One qubit-flip gadget on a two-qubit device with couplings (0,1), (1,0)
// and a shared drive scale.
// Every gadget declares the identity; arming applies its attack.
struct FlipGadget {
  AttackKind kind = AttackKind::plunder;
  bool armed = false;
  CalibrationSnapshot calib;
  CustomGate gate;        // as bound into `circuit` (pulse edits included)
  GateCircuit circuit;    // gadget followed by measuring q0 -> c0, q1 -> c1
  std::size_t gate_op = 0;
  std::optional<TamperRecord> record;
};

CalibrationSnapshot gadget_device(std::uint64_t seed = 7);

// T1 of `qubit` in samples, rounded up to the granularity.
std::int64_t t1_samples(const CalibrationSnapshot& calib, int qubit);

// Off-grid shift in 1..15 samples that maximizes the frame slip of a drive
// pulse on `qubit`.
std::int64_t timing_offset(const CalibrationSnapshot& calib, int qubit);

// Armed, the block gadget idles for block_t1_multiple * T1 and its circuit
// prepares |1> first; disarmed it runs from |0> like the others.
FlipGadget build_flip_gadget(AttackKind kind, bool armed, std::uint64_t seed = 7,
                             int block_t1_multiple = 10);

}  // namespace pulsegate::attack
