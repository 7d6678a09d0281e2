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

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pulsegate/core/schedule.hpp"

namespace pulsegate {

using Matrix = Eigen::MatrixXcd;

enum class GateKind { X, SX, H, RX, RZ, U3, CX, Z, measure, custom };

std::string_view to_string(GateKind k);
GateKind parse_gate_kind(std::string_view s);

// Number of qubits and angle parameters a native gate takes.
int gate_arity(GateKind k);
int gate_param_count(GateKind k);

// A gate whose implementation is an attached pulse schedule. The schedule
// is written over template slots: dI, mI, aI address the I-th declared qubit,
// uJ the J-th ordered pair of declared qubits (see template_pair), and an
// Acquire's memory_slot J the J-th declared classical bit.
struct CustomGate {
  std::string name;
  std::vector<int> qubits;
  std::vector<int> clbits;
  Schedule schedule;
  // Little-endian over declared qubits: qubits[0] is the least significant bit.
  std::optional<Matrix> unitary;

  bool operator==(const CustomGate& o) const;
};

// Ordered pairs (i, k), i != k, of declared positions enumerated
// lexicographically: slot j = i*(n-1) + (k < i ? k : k-1).
std::pair<int, int> template_pair(int slot, int num_declared);
int template_pair_slot(int i, int k, int num_declared);

struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  std::vector<int> clbits;
  std::vector<double> params;
  std::optional<CustomGate> custom;
  // Template slot -> device channel. Empty for honest circuits.
  std::map<Channel, Channel> binding_override;

  bool operator==(const GateOp&) const = default;
};

GateOp make_op(GateKind kind, std::vector<int> qubits, std::vector<double> params = {});
GateOp make_measure(int qubit, int clbit);
GateOp make_custom_op(CustomGate gate);

struct GateCircuit {
  int num_qubits = 0;
  int num_clbits = 0;
  std::vector<GateOp> ops;

  GateCircuit& add(GateOp op);
  bool operator==(const GateCircuit&) const = default;
};

// Throws InvalidArgument when an op is out of range, has repeated qubits, a
// non-finite parameter, or two measures target the same classical bit.
void validate(const GateCircuit& c);

}  // namespace pulsegate
