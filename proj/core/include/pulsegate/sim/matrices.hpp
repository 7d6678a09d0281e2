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

#include <vector>

#include "pulsegate/core/circuit.hpp"

namespace pulsegate::sim {

// Gate-level semantics of native unitary gates. For CX, qubits[0] is the
// control and maps to the low bit.
Matrix native_unitary(GateKind kind, const std::vector<double>& params = {});

// Embeds a k-qubit matrix acting on `positions` (positions[0] = its low bit)
// into an n-qubit space.
Matrix embed(const Matrix& u, const std::vector<int>& positions, int n);

// Product of the native ops, over `qubits` (qubits[0] = low bit). Custom
// ops contribute their declared unitary. Throws on measure or an undeclared
// custom gate.
Matrix circuit_unitary(const std::vector<GateOp>& ops, const std::vector<int>& qubits);

}  // namespace pulsegate::sim
