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

#include "pulsegate/core/circuit.hpp"

#include <cmath>
#include <set>

#include "pulsegate/core/errors.hpp"

namespace pulsegate {

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::X:
      return "x";
    case GateKind::SX:
      return "sx";
    case GateKind::H:
      return "h";
    case GateKind::RX:
      return "rx";
    case GateKind::RZ:
      return "rz";
    case GateKind::U3:
      return "u3";
    case GateKind::CX:
      return "cx";
    case GateKind::Z:
      return "z";
    case GateKind::measure:
      return "measure";
    case GateKind::custom:
      return "custom";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(GateKind::custom); ++i) {
    auto k = static_cast<GateKind>(i);
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown gate '" + std::string(s) + "'");
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CX:
      return 2;
    case GateKind::custom:
      return -1;
    default:
      return 1;
  }
}

int gate_param_count(GateKind k) {
  switch (k) {
    case GateKind::RX:
    case GateKind::RZ:
      return 1;
    case GateKind::U3:
      return 3;
    default:
      return 0;
  }
}

bool CustomGate::operator==(const CustomGate& o) const {
  if (name != o.name || qubits != o.qubits || clbits != o.clbits || !(schedule == o.schedule)) {
    return false;
  }
  if (unitary.has_value() != o.unitary.has_value()) return false;
  if (!unitary) return true;
  return unitary->rows() == o.unitary->rows() && unitary->cols() == o.unitary->cols() &&
         *unitary == *o.unitary;
}

std::pair<int, int> template_pair(int slot, int n) {
  if (n < 2 || slot < 0 || slot >= n * (n - 1)) {
    throw InvalidArgument("control slot u" + std::to_string(slot) + " is not a declared pair");
  }
  int i = slot / (n - 1);
  int r = slot % (n - 1);
  int k = r < i ? r : r + 1;
  return {i, k};
}

int template_pair_slot(int i, int k, int n) {
  if (i == k || i < 0 || k < 0 || i >= n || k >= n) {
    throw InvalidArgument("not an ordered pair of declared positions");
  }
  return i * (n - 1) + (k < i ? k : k - 1);
}

GateOp make_op(GateKind kind, std::vector<int> qubits, std::vector<double> params) {
  GateOp op;
  op.kind = kind;
  op.qubits = std::move(qubits);
  op.params = std::move(params);
  return op;
}

GateOp make_measure(int qubit, int clbit) {
  GateOp op;
  op.kind = GateKind::measure;
  op.qubits = {qubit};
  op.clbits = {clbit};
  return op;
}

GateOp make_custom_op(CustomGate gate) {
  GateOp op;
  op.kind = GateKind::custom;
  op.qubits = gate.qubits;
  op.clbits = gate.clbits;
  op.custom = std::move(gate);
  return op;
}

GateCircuit& GateCircuit::add(GateOp op) {
  ops.push_back(std::move(op));
  return *this;
}

void validate(const GateCircuit& c) {
  if (c.num_qubits < 0 || c.num_clbits < 0) throw InvalidArgument("negative register size");
  std::set<int> measured;
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const auto& op = c.ops[i];
    const std::string where = "op " + std::to_string(i) + ": ";
    std::set<int> seen;
    for (int q : op.qubits) {
      if (q < 0 || q >= c.num_qubits) throw InvalidArgument(where + "qubit out of range");
      if (!seen.insert(q).second) throw InvalidArgument(where + "repeated qubit");
    }
    for (int b : op.clbits) {
      if (b < 0 || b >= c.num_clbits) throw InvalidArgument(where + "clbit out of range");
    }
    for (double p : op.params) {
      if (!std::isfinite(p)) throw InvalidArgument(where + "non-finite parameter");
    }
    if (op.kind == GateKind::custom) {
      if (!op.custom) throw InvalidArgument(where + "custom op without a gate");
      if (op.custom->qubits.empty()) throw InvalidArgument(where + "custom gate declares no qubits");
      if (op.qubits.size() != op.custom->qubits.size()) {
        throw InvalidArgument(where + "placement does not match declared qubit count");
      }
      continue;
    }
    if (static_cast<int>(op.qubits.size()) != gate_arity(op.kind)) {
      throw InvalidArgument(where + "wrong qubit count for " + std::string(to_string(op.kind)));
    }
    if (static_cast<int>(op.params.size()) != gate_param_count(op.kind)) {
      throw InvalidArgument(where + "wrong parameter count for " +
                            std::string(to_string(op.kind)));
    }
    if (op.kind == GateKind::measure) {
      if (op.clbits.size() != 1) throw InvalidArgument(where + "measure needs one clbit");
      if (!measured.insert(op.clbits[0]).second) {
        throw InvalidArgument(where + "clbit measured twice");
      }
    }
  }
}

}  // namespace pulsegate
