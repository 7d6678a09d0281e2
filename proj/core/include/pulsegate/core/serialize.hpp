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

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/circuit.hpp"
#include "pulsegate/core/errors.hpp"
#include "pulsegate/core/schedule.hpp"

namespace pulsegate {

using json = nlohmann::json;

// Canonical JSON: object keys sorted, complex numbers as [re, im], times as
// integers, -0.0 written as 0.0.
json to_json(Channel c);
json to_json(const Waveform& w);
json to_json(const ScheduleEntry& e);
json to_json(const Schedule& s);
json to_json(const TimingConstraints& t);
json to_json(const QubitCalibration& q);
json to_json(const PairCalibration& p);
json to_json(const NativeTemplates& t);
json to_json(const CalibrationSnapshot& c);
json to_json(const Matrix& m);
json to_json(const CustomGate& g);
json to_json(const GateOp& op);
json to_json(const GateCircuit& c);

// Decoders throw SchemaError carrying a JSON pointer to the bad node.
// `path` is the pointer of `j` inside its enclosing document.
template <class T>
T from_json(const json& j, const std::string& path = "");

template <>
Channel from_json<Channel>(const json& j, const std::string& path);
template <>
Waveform from_json<Waveform>(const json& j, const std::string& path);
template <>
ScheduleEntry from_json<ScheduleEntry>(const json& j, const std::string& path);
template <>
Schedule from_json<Schedule>(const json& j, const std::string& path);
template <>
TimingConstraints from_json<TimingConstraints>(const json& j, const std::string& path);
template <>
QubitCalibration from_json<QubitCalibration>(const json& j, const std::string& path);
template <>
PairCalibration from_json<PairCalibration>(const json& j, const std::string& path);
template <>
NativeTemplates from_json<NativeTemplates>(const json& j, const std::string& path);
template <>
CalibrationSnapshot from_json<CalibrationSnapshot>(const json& j, const std::string& path);
template <>
Matrix from_json<Matrix>(const json& j, const std::string& path);
template <>
CustomGate from_json<CustomGate>(const json& j, const std::string& path);
template <>
GateOp from_json<GateOp>(const json& j, const std::string& path);
template <>
GateCircuit from_json<GateCircuit>(const json& j, const std::string& path);

// Byte form of to_json: compact, no trailing newline.
std::string canonical_dump(const json& j);

template <class T>
std::string canonical_serialize(const T& x) {
  return canonical_dump(to_json(x));
}

// Parses bytes then decodes. Malformed JSON reports path "".
template <class T>
T deserialize(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  return from_json<T>(j, "");
}

}  // namespace pulsegate
