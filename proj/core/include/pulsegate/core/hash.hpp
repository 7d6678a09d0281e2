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

#include <string>
#include <string_view>

#include "pulsegate/core/serialize.hpp"

namespace pulsegate {

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

template <class T>
std::string content_hash(const T& x) {
  return sha256_hex(canonical_serialize(x));
}

// The circuit as the gate level sees it: op kinds, qubits, clbits,
// parameters, custom gate names, declared registers and declared unitaries.
// Pulse schedules and binding overrides are not part of it.
json gate_level_view(const GateCircuit& c);
std::string gate_level_hash(const GateCircuit& c);

}  // namespace pulsegate
