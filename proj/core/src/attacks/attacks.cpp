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

#include "pulsegate/attacks/attacks.hpp"

#include <algorithm>
#include <set>

#include "pulsegate/lowering/lowering.hpp"

namespace pulsegate::attack {

namespace {

const GateOp& custom_op(const GateCircuit& c, std::size_t op) {
  if (op >= c.ops.size()) throw InvalidArgument("op index " + std::to_string(op) + " out of range");
  const GateOp& g = c.ops[op];
  if (g.kind != GateKind::custom || !g.custom) {
    throw InvalidArgument("op " + std::to_string(op) + " is not a custom gate");
  }
  return g;
}

const ScheduleEntry& entry_at(const Schedule& s, std::size_t entry) {
  if (entry >= s.size()) {
    throw InvalidArgument("entry " + std::to_string(entry) + " out of range");
  }
  return s[entry];
}

Channel effective_binding(const GateOp& op, Channel slot, const CalibrationSnapshot& calib) {
  auto it = op.binding_override.find(slot);
  if (it != op.binding_override.end()) return it->second;
  return lower::default_slot_binding(slot, op.qubits, calib);
}

// First slot index of `kind` that the gate neither declares nor uses.
Channel fresh_slot(const GateOp& op, ChannelKind kind) {
  const int n = static_cast<int>(op.qubits.size());
  int next = kind == ChannelKind::control ? n * (n - 1) : n;
  for (Channel c : op.custom->schedule.channels()) {
    if (c.kind == kind) next = std::max(next, c.index + 1);
  }
  for (const auto& [slot, dev] : op.binding_override) {
    if (slot.kind == kind) next = std::max(next, slot.index + 1);
  }
  return {kind, next};
}

// Returns true when anything moved.
bool apply_moves(GateOp& op, const std::vector<EntryMove>& moves,
                 const CalibrationSnapshot& calib) {
  const Schedule& s = op.custom->schedule;
  std::map<std::size_t, Channel> dest;
  for (const auto& m : moves) {
    if (!calib.shape().contains(m.device)) {
      throw InvalidArgument("no device channel " + to_string(m.device));
    }
    std::vector<std::size_t> live;
    for (std::size_t k : m.entries) {
      const auto& e = entry_at(s, k);
      if ((e.channel().kind == ChannelKind::acquire) != (m.device.kind == ChannelKind::acquire)) {
        throw InvalidArgument("cannot move entry " + std::to_string(k) + " onto " +
                              to_string(m.device));
      }
      if (effective_binding(op, e.channel(), calib) != m.device) live.push_back(k);
    }
    if (live.empty()) continue;
    const Channel slot = fresh_slot(op, m.device.kind);
    op.binding_override[slot] = m.device;
    for (std::size_t k : live) dest[k] = slot;
  }
  if (dest.empty()) return false;
  Schedule out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    auto it = dest.find(k);
    if (it == dest.end()) {
      out.insert(s[k]);
    } else {
      out.insert(s[k].start_time, with_channel(s[k].instruction, it->second));
    }
  }
  op.custom->schedule = std::move(out);
  return true;
}

json moves_json(const std::vector<EntryMove>& moves) {
  json a = json::array();
  for (const auto& m : moves) a.push_back({{"entries", m.entries}, {"channel", to_string(m.device)}});
  return a;
}

json channel_map_json(const std::map<Channel, Channel>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[to_string(k)] = to_string(v);
  return o;
}

void flag_overlap(TamperRecord& r, const GateCircuit& c, const CalibrationSnapshot& calib) {
  try {
    lower::lower_circuit(c, calib, lower::LoweringMode::permissive);
  } catch (const lower::OverlapError&) {
    r.flags.push_back("overlap");
  }
}

Tampered<GateCircuit> finish(const GateCircuit& c, std::size_t op, GateOp edited, AttackKind kind,
                             json parameters) {
  Tampered<GateCircuit> t{c, {}};
  t.record.kind = kind;
  t.record.artifact = Artifact::circuit;
  t.record.target.op = op;
  t.record.before = to_json(c.ops[op]);
  t.record.after = to_json(edited);
  t.record.parameters = std::move(parameters);
  t.artifact.ops[op] = std::move(edited);
  return t;
}

Tampered<Schedule> finish(const Schedule& before, Schedule after, AttackKind kind,
                          std::size_t entry, json parameters) {
  Tampered<Schedule> t{std::move(after), {}};
  t.record.kind = kind;
  t.record.artifact = Artifact::schedule;
  t.record.target.entry = entry;
  t.record.target.channel = before[entry].channel();
  t.record.before = to_json(before);
  t.record.after = to_json(t.artifact);
  t.record.parameters = std::move(parameters);
  return t;
}

// Runs a schedule attack on the gate's schedule and rewraps the record.
template <class F>
Tampered<GateCircuit> in_gate(const GateCircuit& c, std::size_t op, F&& f) {
  GateOp edited = custom_op(c, op);
  Tampered<Schedule> inner = f(edited.custom->schedule);
  edited.custom->schedule = std::move(inner.artifact);
  auto t = finish(c, op, std::move(edited), inner.record.kind, inner.record.parameters);
  t.record.target.entry = inner.record.target.entry;
  t.record.target.channel = inner.record.target.channel;
  t.record.flags = inner.record.flags;
  return t;
}

std::map<Channel, Channel> parse_channel_map(const json& j) {
  std::map<Channel, Channel> m;
  for (const auto& [k, v] : j.items()) m[parse_channel(k)] = parse_channel(v.get<std::string>());
  return m;
}

std::vector<EntryMove> parse_moves(const json& j) {
  std::vector<EntryMove> out;
  for (const auto& m : j) {
    out.push_back({m.at("entries").get<std::vector<std::size_t>>(),
                   parse_channel(m.at("channel").get<std::string>())});
  }
  return out;
}

Waveform waveform_param(const json& p, const Schedule& s, std::size_t entry) {
  if (p.contains("waveform")) return from_json<Waveform>(p["waveform"], "/parameters/waveform");
  const auto* play = std::get_if<Play>(&entry_at(s, entry).instruction);
  if (!play) throw InvalidArgument("waveform attack needs a Play entry");
  return play->waveform.scaled(p.at("amp_scale").get<double>());
}

Tampered<Schedule> apply_pulse(const Schedule& s, AttackKind kind, std::size_t entry,
                               const json& p) {
  switch (kind) {
    case AttackKind::timing:
      return timing_mismatch(s, entry, p.at("offset").get<std::int64_t>());
    case AttackKind::frequency:
      return frequency_mismatch(s, entry, p.at("frequency").get<double>());
    case AttackKind::phase:
      return phase_mismatch(s, entry, p.at("phase").get<double>());
    case AttackKind::waveform:
      return waveform_mismatch(s, entry, waveform_param(p, s, entry));
    default:
      throw InvalidArgument(std::string(to_string(kind)) + " is not a pulse attack");
  }
}

}  // namespace

Tampered<GateCircuit> qubit_plunder(const GateCircuit& c, std::size_t op,
                                    const ChannelRemap& remap, const CalibrationSnapshot& calib) {
  GateOp edited = custom_op(c, op);
  for (const auto& [slot, dev] : remap.slots) {
    if (!calib.shape().contains(dev)) throw InvalidArgument("no device channel " + to_string(dev));
    if (effective_binding(edited, slot, calib) == dev) continue;
    if (lower::default_slot_binding(slot, edited.qubits, calib) == dev) {
      edited.binding_override.erase(slot);
    } else {
      edited.binding_override[slot] = dev;
    }
  }
  apply_moves(edited, remap.moves, calib);
  auto t = finish(c, op, std::move(edited), AttackKind::plunder,
                  {{"remap", channel_map_json(remap.slots)}, {"moves", moves_json(remap.moves)}});
  flag_overlap(t.record, t.artifact, calib);
  return t;
}

Tampered<GateCircuit> qubit_block(const GateCircuit& c, std::size_t op, std::int64_t delay,
                                  const CalibrationSnapshot& calib,
                                  const std::vector<Channel>& slots) {
  GateOp edited = custom_op(c, op);
  if (delay < 0) throw InvalidArgument("block delay must be non-negative");
  if (delay % calib.timing.granularity != 0) {
    throw InvalidArgument("block delay must be a multiple of the granularity");
  }
  const int n = static_cast<int>(edited.qubits.size());
  std::vector<Channel> use = slots;
  if (use.empty()) {
    for (int i = 0; i < n; ++i) use.push_back(drive(i));
  }
  Schedule s;
  json names = json::array();
  for (Channel slot : use) {
    if (slot.kind != ChannelKind::drive || slot.index < 0 || slot.index >= n) {
      throw InvalidArgument("block slots must be declared drive slots");
    }
    if (delay > 0) s.insert(0, Delay{slot, delay});
    names.push_back(to_string(slot));
  }
  edited.custom->schedule = std::move(s);
  return finish(c, op, std::move(edited), AttackKind::block, {{"delay", delay}, {"slots", names}});
}

Tampered<GateCircuit> qubit_reorder(const GateCircuit& c, std::size_t op,
                                    const std::map<Channel, Channel>& permutation,
                                    const CalibrationSnapshot& calib) {
  GateOp edited = custom_op(c, op);
  std::set<Channel> from, to;
  for (const auto& [a, b] : permutation) {
    if (a.kind != b.kind) {
      throw InvalidArgument("reorder must preserve channel kind: " + to_string(a) + "->" +
                            to_string(b));
    }
    from.insert(a);
    to.insert(b);
  }
  if (from != to) throw InvalidArgument("reorder map is not a permutation");
  const auto bound = lower::bind_op(edited, calib);
  std::set<Channel> devices;
  for (const auto& [slot, dev] : bound.binding) devices.insert(dev);
  for (Channel a : from) {
    if (!devices.count(a)) {
      throw InvalidArgument("reorder names " + to_string(a) + ", which the gate does not bind");
    }
  }
  for (const auto& [slot, dev] : bound.binding) {
    auto it = permutation.find(dev);
    if (it == permutation.end() || it->second == dev) continue;
    if (lower::default_slot_binding(slot, edited.qubits, calib) == it->second) {
      edited.binding_override.erase(slot);
    } else {
      edited.binding_override[slot] = it->second;
    }
  }
  auto t = finish(c, op, std::move(edited), AttackKind::reorder,
                  {{"permutation", channel_map_json(permutation)}});
  flag_overlap(t.record, t.artifact, calib);
  return t;
}

Tampered<GateCircuit> qubit_reorder(const GateCircuit& c, std::size_t op,
                                    const std::vector<EntryMove>& moves,
                                    const CalibrationSnapshot& calib) {
  GateOp edited = custom_op(c, op);
  const auto bound = lower::bind_op(edited, calib);
  std::set<Channel> devices;
  for (const auto& [slot, dev] : bound.binding) devices.insert(dev);
  for (const auto& m : moves) {
    if (!devices.count(m.device)) {
      throw InvalidArgument("reorder target " + to_string(m.device) +
                            " is not bound by the gate");
    }
    for (std::size_t k : m.entries) {
      const Channel cur = effective_binding(edited, entry_at(edited.custom->schedule, k).channel(),
                                            calib);
      if (cur.kind != m.device.kind) {
        throw InvalidArgument("reorder must preserve channel kind");
      }
    }
  }
  apply_moves(edited, moves, calib);
  auto t = finish(c, op, std::move(edited), AttackKind::reorder, {{"moves", moves_json(moves)}});
  flag_overlap(t.record, t.artifact, calib);
  return t;
}

Tampered<Schedule> timing_mismatch(const Schedule& s, std::size_t entry, std::int64_t offset) {
  const auto& e = entry_at(s, entry);
  if (offset == 0) throw InvalidArgument("timing offset must be non-zero");
  if (e.start_time + offset < 0) throw InvalidArgument("timing offset gives a negative start");
  Schedule out = s;
  out.replace(entry, {e.start_time + offset, e.instruction});
  return finish(s, std::move(out), AttackKind::timing, entry, {{"offset", offset}});
}

Tampered<Schedule> frequency_mismatch(const Schedule& s, std::size_t entry, double frequency) {
  const auto& e = entry_at(s, entry);
  if (!std::holds_alternative<Play>(e.instruction)) {
    throw InvalidArgument("frequency attack needs a Play entry");
  }
  if (!(frequency > 0.0)) throw InvalidArgument("frequency must be positive");
  const Channel ch = e.channel();
  Schedule out = s;
  std::optional<double> old;
  bool inserted = false;
  std::size_t k = entry;
  while (k-- > 0) {
    const auto& p = s[k];
    if (p.channel() != ch) continue;
    if (const auto* f = std::get_if<SetFrequency>(&p.instruction)) {
      old = f->frequency;
      out.replace(k, {p.start_time, SetFrequency{ch, frequency}});
      break;
    }
    if (is_occupying(p.instruction) || std::holds_alternative<ShiftFrequency>(p.instruction)) break;
  }
  if (!old) {
    out.insert_at(entry, {e.start_time, SetFrequency{ch, frequency}});
    inserted = true;
  }
  json params = {{"frequency", frequency}};
  if (old) params["previous"] = *old;
  auto t = finish(s, std::move(out), AttackKind::frequency, entry, std::move(params));
  if (inserted) t.record.flags.push_back("inserted-instruction");
  return t;
}

Tampered<Schedule> phase_mismatch(const Schedule& s, std::size_t entry, double phase) {
  const auto& e = entry_at(s, entry);
  Schedule out = s;
  double old = 0.0;
  if (const auto* p = std::get_if<ShiftPhase>(&e.instruction)) {
    old = p->delta;
    out.replace(entry, {e.start_time, ShiftPhase{p->channel, phase}});
  } else if (const auto* q = std::get_if<SetPhase>(&e.instruction)) {
    old = q->phase;
    out.replace(entry, {e.start_time, SetPhase{q->channel, phase}});
  } else {
    throw InvalidArgument("phase attack needs a SetPhase or ShiftPhase entry");
  }
  return finish(s, std::move(out), AttackKind::phase, entry, {{"phase", phase}, {"previous", old}});
}

Tampered<Schedule> waveform_mismatch(const Schedule& s, std::size_t entry,
                                     const Waveform& waveform) {
  const auto& e = entry_at(s, entry);
  const auto* p = std::get_if<Play>(&e.instruction);
  if (!p) throw InvalidArgument("waveform attack needs a Play entry");
  validate(waveform);
  Schedule out = s;
  out.replace(entry, {e.start_time, Play{p->channel, waveform}});
  return finish(s, std::move(out), AttackKind::waveform, entry, {{"waveform", to_json(waveform)}});
}

Tampered<GateCircuit> timing_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                      std::int64_t offset) {
  return in_gate(c, op, [&](const Schedule& s) { return timing_mismatch(s, entry, offset); });
}

Tampered<GateCircuit> frequency_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                         double frequency) {
  return in_gate(c, op,
                 [&](const Schedule& s) { return frequency_mismatch(s, entry, frequency); });
}

Tampered<GateCircuit> phase_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                     double phase) {
  return in_gate(c, op, [&](const Schedule& s) { return phase_mismatch(s, entry, phase); });
}

Tampered<GateCircuit> waveform_mismatch(const GateCircuit& c, std::size_t op, std::size_t entry,
                                        const Waveform& waveform) {
  return in_gate(c, op, [&](const Schedule& s) { return waveform_mismatch(s, entry, waveform); });
}

namespace {

AttackKind spec_kind(const json& spec) {
  const auto name = spec.at("kind").get<std::string>();
  try {
    return parse_attack_kind(name);
  } catch (const InvalidArgument& e) {
    throw SchemaError("kind", e.what());
  }
}

}  // namespace

Tampered<GateCircuit> apply_attack(const GateCircuit& c, const json& spec,
                                   const CalibrationSnapshot& calib) {
  try {
    const AttackKind kind = spec_kind(spec);
    const json& target = spec.at("target");
    const json p = spec.value("parameters", json::object());
    const auto op = target.at("op").get<std::size_t>();
    switch (kind) {
      case AttackKind::plunder: {
        ChannelRemap r;
        if (p.contains("remap")) r.slots = parse_channel_map(p["remap"]);
        if (p.contains("moves")) r.moves = parse_moves(p["moves"]);
        return qubit_plunder(c, op, r, calib);
      }
      case AttackKind::block: {
        std::vector<Channel> slots;
        for (const auto& s : p.value("slots", json::array())) {
          slots.push_back(parse_channel(s.get<std::string>()));
        }
        return qubit_block(c, op, p.value("delay", std::int64_t{0}), calib, slots);
      }
      case AttackKind::reorder:
        if (p.contains("moves")) return qubit_reorder(c, op, parse_moves(p["moves"]), calib);
        return qubit_reorder(c, op, parse_channel_map(p.at("permutation")), calib);
      default: {
        const auto entry = target.at("entry").get<std::size_t>();
        return in_gate(c, op, [&](const Schedule& s) { return apply_pulse(s, kind, entry, p); });
      }
    }
  } catch (const json::exception& e) {
    throw SchemaError("", std::string("bad attack spec: ") + e.what());
  }
}

Tampered<Schedule> apply_attack(const Schedule& s, const json& spec) {
  try {
    const AttackKind kind = spec_kind(spec);
    const auto entry = spec.at("target").at("entry").get<std::size_t>();
    return apply_pulse(s, kind, entry, spec.value("parameters", json::object()));
  } catch (const json::exception& e) {
    throw SchemaError("", std::string("bad attack spec: ") + e.what());
  }
}

}  // namespace pulsegate::attack
