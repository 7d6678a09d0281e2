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

#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate::verify {

namespace {

std::string gate_location(std::size_t i, const GateOp& op) {
  return "op " + std::to_string(i) + " '" + op.custom->name + "'";
}

}  // namespace

VerificationReport verify_channels(const GateCircuit& c, const CalibrationSnapshot& calib) {
  VerificationReport r;
  r.stage = Stage::channel;
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const GateOp& op = c.ops[i];
    if (op.kind != GateKind::custom || !op.custom) continue;
    const std::string where = gate_location(i, op);
    lower::BoundGate g;
    try {
      g = lower::bind_op(op, calib);
    } catch (const Error& e) {
      r.findings.push_back({Severity::error, "binding", where, e.what(), nullptr, nullptr});
      continue;
    }
    for (const auto& issue : lower::check_binding(g, calib)) {
      Finding f;
      f.severity = Severity::error;
      switch (issue.kind) {
        case lower::BindingIssueKind::undeclared_channel: {
          const auto& e = g.schedule[issue.entry];
          f.kind = "plunder";
          f.location = where + " " + to_string(issue.channel) + "@" + std::to_string(e.start_time);
          f.expected = op.qubits;
          f.observed = to_string(issue.channel);
          break;
        }
        case lower::BindingIssueKind::unused_qubit:
          f.kind = "block";
          f.location = where + " qubit " + std::to_string(issue.qubit);
          f.expected = "pulse on qubit " + std::to_string(issue.qubit);
          f.observed = "no Play or Acquire";
          break;
        case lower::BindingIssueKind::clbit_mismatch: {
          const auto& e = g.schedule[issue.entry];
          f.kind = "clbit-mismatch";
          f.location = where + " " + to_string(issue.channel) + "@" + std::to_string(e.start_time);
          f.expected = g.clbits;
          f.observed = std::get<Acquire>(e.instruction).memory_slot;
          break;
        }
      }
      f.explanation = issue.message;
      r.findings.push_back(std::move(f));
    }
  }
  return r;
}

}  // namespace pulsegate::verify
