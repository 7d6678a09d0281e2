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

#include "pulsegate/attacks/tamper.hpp"

namespace pulsegate::attack {

namespace {

constexpr std::string_view kNames[] = {"plunder", "block",  "reorder", "timing",
                                       "frequency", "phase", "waveform"};

std::string_view artifact_name(Artifact a) {
  return a == Artifact::circuit ? "circuit" : "schedule";
}

}  // namespace

std::string_view to_string(AttackKind k) { return kNames[static_cast<int>(k)]; }

AttackKind parse_attack_kind(std::string_view s) {
  for (int i = 0; i < 7; ++i) {
    if (kNames[i] == s) return static_cast<AttackKind>(i);
  }
  throw InvalidArgument("unknown attack kind '" + std::string(s) + "'");
}

bool is_channel_attack(AttackKind k) {
  return k == AttackKind::plunder || k == AttackKind::block || k == AttackKind::reorder;
}

json to_json(const TamperRecord& r) {
  json t = json::object();
  if (r.target.op) t["op"] = *r.target.op;
  if (r.target.entry) t["entry"] = *r.target.entry;
  if (r.target.channel) t["channel"] = to_string(*r.target.channel);
  return {{"kind", to_string(r.kind)},
          {"artifact", artifact_name(r.artifact)},
          {"target", t},
          {"before", r.before},
          {"after", r.after},
          {"parameters", r.parameters},
          {"flags", r.flags}};
}

TamperRecord tamper_record_from_json(const json& j) {
  try {
    TamperRecord r;
    r.kind = parse_attack_kind(j.at("kind").get<std::string>());
    const auto art = j.at("artifact").get<std::string>();
    if (art == "circuit") {
      r.artifact = Artifact::circuit;
    } else if (art == "schedule") {
      r.artifact = Artifact::schedule;
    } else {
      throw SchemaError("/artifact", "unknown artifact '" + art + "'");
    }
    const json& t = j.at("target");
    if (t.contains("op")) r.target.op = t["op"].get<std::size_t>();
    if (t.contains("entry")) r.target.entry = t["entry"].get<std::size_t>();
    if (t.contains("channel")) r.target.channel = parse_channel(t["channel"].get<std::string>());
    r.before = j.at("before");
    r.after = j.at("after");
    r.parameters = j.value("parameters", json::object());
    r.flags = j.value("flags", std::vector<std::string>{});
    return r;
  } catch (const json::exception& e) {
    throw SchemaError("", std::string("bad tamper record: ") + e.what());
  }
}

GateCircuit restore(const GateCircuit& tampered, const TamperRecord& r) {
  if (r.artifact != Artifact::circuit || !r.target.op) {
    throw InvalidArgument("record does not target a circuit op");
  }
  const std::size_t i = *r.target.op;
  if (i >= tampered.ops.size()) throw InvalidArgument("record op index out of range");
  GateCircuit out = tampered;
  out.ops[i] = from_json<GateOp>(r.before, "/before");
  return out;
}

Schedule restore(const Schedule&, const TamperRecord& r) {
  if (r.artifact != Artifact::schedule) throw InvalidArgument("record does not target a schedule");
  return from_json<Schedule>(r.before, "/before");
}

}  // namespace pulsegate::attack
