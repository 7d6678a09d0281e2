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
#include <optional>
#include <string>
#include <vector>

#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/circuit.hpp"
#include "pulsegate/core/errors.hpp"
#include "pulsegate/core/schedule.hpp"
#include "pulsegate/core/timing.hpp"

namespace pulsegate::lower {

// permissive binds whatever channels a custom gate names, the way common
// SDKs do; strict refuses any custom gate whose bound channels are not
// exactly its declared qubits.
enum class LoweringMode { permissive, strict };

std::string to_string(LoweringMode m);

// Template slot -> device channel.
using ChannelBinding = std::map<Channel, Channel>;

class LoweringError : public Error {
 public:
  using Error::Error;
};

class UnknownGateError : public LoweringError {
 public:
  using LoweringError::LoweringError;
};

class MissingTemplateError : public LoweringError {
 public:
  using LoweringError::LoweringError;
};

// A slot or override that names no device channel.
class BindingError : public LoweringError {
 public:
  using LoweringError::LoweringError;
};

class BindingMismatchError : public LoweringError {
 public:
  BindingMismatchError(std::string gate, std::vector<int> declared, std::vector<Channel> bound,
                       const std::string& detail);
  const std::string& gate() const { return gate_; }
  const std::vector<int>& declared() const { return declared_; }
  const std::vector<Channel>& bound() const { return bound_; }

 private:
  std::string gate_;
  std::vector<int> declared_;
  std::vector<Channel> bound_;
};

class OverlapError : public LoweringError {
 public:
  explicit OverlapError(std::vector<OverlapViolation> v);
  const std::vector<OverlapViolation>& violations() const { return violations_; }

 private:
  std::vector<OverlapViolation> violations_;
};

class TimingError : public LoweringError {
 public:
  explicit TimingError(std::vector<TimingViolation> v);
  const std::vector<TimingViolation>& violations() const { return violations_; }

 private:
  std::vector<TimingViolation> violations_;
};

// Native gate -> schedule fragment starting at 0.
Schedule lower_gate(const GateOp& op, const CalibrationSnapshot& calib);

// One custom gate instance with absolute channels and relative times.
struct BoundGate {
  std::string name;
  std::vector<int> placement;
  std::vector<int> clbits;
  ChannelBinding binding;  // every slot the schedule uses
  Schedule schedule;
};

// Binding a slot gets when no override names it. Slots past the declared
// range resolve to the device channel with the same index.
Channel default_slot_binding(Channel slot, const std::vector<int>& placement,
                             const CalibrationSnapshot& calib);

BoundGate bind_custom_gate(const CustomGate& gate, const std::vector<int>& placement,
                           const CalibrationSnapshot& calib,
                           const ChannelBinding& binding_override = {},
                           std::optional<std::vector<int>> clbits = std::nullopt);

BoundGate bind_op(const GateOp& op, const CalibrationSnapshot& calib);

enum class BindingIssueKind { undeclared_channel, unused_qubit, clbit_mismatch };

std::string to_string(BindingIssueKind k);

struct BindingIssue {
  BindingIssueKind kind;
  std::size_t entry = 0;  // into BoundGate::schedule, where applicable
  Channel channel;
  int qubit = -1;
  std::string message;
};

// The exact-match rule: no instruction on a channel of an undeclared qubit,
// at least one Play or Acquire touching every declared qubit, and every
// Acquire writing a declared classical bit.
std::vector<BindingIssue> check_binding(const BoundGate& g, const CalibrationSnapshot& calib);

struct OpPlacement {
  std::size_t op = 0;
  std::int64_t start = 0;
  std::int64_t end = 0;
};

struct LoweredCircuit {
  Schedule schedule;
  std::vector<OpPlacement> placements;
};

// ASAP per channel with a barrier over every qubit a gate touches; gate
// starts are rounded up to the alignment grid.
LoweredCircuit lower_circuit_traced(const GateCircuit& c, const CalibrationSnapshot& calib,
                                    LoweringMode mode);
Schedule lower_circuit(const GateCircuit& c, const CalibrationSnapshot& calib,
                       LoweringMode mode);

// Packages native ops on device qubits `qubits` as a custom gate whose
// schedule is rewritten over template slots. Frame changes on channels that
// reach outside `qubits` are dropped.
CustomGate make_custom_gate(const std::string& name, const std::vector<int>& qubits,
                            const std::vector<GateOp>& ops, const CalibrationSnapshot& calib,
                            std::optional<Matrix> unitary = std::nullopt,
                            const std::vector<int>& clbits = {});

}  // namespace pulsegate::lower
