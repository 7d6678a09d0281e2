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

#include <algorithm>
#include <numbers>
#include <set>
#include <sstream>

namespace pulsegate::lower {

namespace {

constexpr double kPi = std::numbers::pi;

std::string join_qubits(const std::vector<int>& qs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? ", " : "") << qs[i];
  os << ']';
  return os.str();
}

std::string join_channels(const std::vector<Channel>& cs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? ", " : "") << to_string(cs[i]);
  os << ']';
  return os.str();
}

std::string summarize_overlaps(const std::vector<OverlapViolation>& v) {
  std::string s = "pulse overlap";
  if (!v.empty()) s += ": " + v.front().message;
  if (v.size() > 1) s += " (+" + std::to_string(v.size() - 1) + " more)";
  return s;
}

std::string summarize_timing(const std::vector<TimingViolation>& v) {
  std::string s = "timing violation";
  if (!v.empty()) s += ": " + v.front().message;
  if (v.size() > 1) s += " (+" + std::to_string(v.size() - 1) + " more)";
  return s;
}

std::int64_t round_up(std::int64_t t, std::int64_t grid) {
  if (grid <= 1) return t;
  return (t + grid - 1) / grid * grid;
}

void require_qubit(const CalibrationSnapshot& calib, int q) {
  if (q < 0 || q >= calib.num_qubits()) {
    throw InvalidArgument("qubit " + std::to_string(q) + " is not on the device");
  }
  if (static_cast<std::size_t>(q) >= calib.templates.size()) {
    throw MissingTemplateError("no native templates for qubit " + std::to_string(q));
  }
}

const Waveform& require_template(const Waveform& w, const char* what, int q) {
  if (w.duration() <= 0) {
    throw MissingTemplateError(std::string("missing ") + what + " template for qubit " +
                               std::to_string(q));
  }
  return w;
}

void emit_rz(Schedule& s, std::int64_t t, int q, double theta, const CalibrationSnapshot& calib) {
  s.insert(t, ShiftPhase{drive(q), -theta});
  for (int p = 0; p < calib.num_pairs(); ++p) {
    if (calib.pairs[p].target == q) s.insert(t, ShiftPhase{control(p), -theta});
  }
}

void emit_sx(Schedule& s, std::int64_t t, int q, const CalibrationSnapshot& calib) {
  s.insert(t, Play{drive(q), require_template(calib.templates[q].sx, "sx", q)});
}

// Frame-change/SX sandwich, 320 samples.
void emit_u3(Schedule& s, int q, double theta, double phi, double lambda,
             const CalibrationSnapshot& calib) {
  const std::int64_t d = calib.templates[q].sx.duration();
  emit_rz(s, 0, q, lambda, calib);
  emit_sx(s, 0, q, calib);
  emit_rz(s, d, q, theta + kPi, calib);
  emit_sx(s, d, q, calib);
  emit_rz(s, 2 * d, q, phi + kPi, calib);
}

void emit_h(Schedule& s, std::int64_t t, int q, const CalibrationSnapshot& calib) {
  emit_rz(s, t, q, kPi / 2, calib);
  emit_sx(s, t, q, calib);
  emit_rz(s, t + calib.templates[q].sx.duration(), q, kPi / 2, calib);
}

// Cross-resonance CX on a calibrated (c, t) pair.
Schedule cx_forward(int c, int t, int p, const CalibrationSnapshot& calib) {
  Schedule s;
  const Waveform& cr = calib.pairs[p].cr;
  if (cr.duration() <= 0) {
    throw MissingTemplateError("missing cross-resonance template for pair u" + std::to_string(p));
  }
  emit_rz(s, 0, c, kPi / 2, calib);
  s.insert(0, Play{control(p), cr});
  emit_sx(s, cr.duration(), t, calib);
  return s;
}

// Per-qubit and per-channel frontiers for ASAP placement.
class Frontier {
 public:
  explicit Frontier(std::int64_t grid) : grid_(grid) {}

  std::int64_t start_for(const std::vector<int>& qubits, const std::set<Channel>& channels) const {
    std::int64_t t = 0;
    for (int q : qubits) {
      auto it = qubit_.find(q);
      if (it != qubit_.end()) t = std::max(t, it->second);
    }
    for (Channel c : channels) {
      auto it = channel_.find(c);
      if (it != channel_.end()) t = std::max(t, it->second);
    }
    return round_up(t, grid_);
  }

  void advance(const std::vector<int>& qubits, const Schedule& frag, std::int64_t start) {
    const std::int64_t end = start + frag.duration();
    for (int q : qubits) bump(qubit_[q], end);
    for (const auto& e : frag.entries()) bump(channel_[e.channel()], start + e.end_time());
  }

 private:
  static void bump(std::int64_t& slot, std::int64_t v) { slot = std::max(slot, v); }
  std::int64_t grid_;
  std::map<int, std::int64_t> qubit_;
  std::map<Channel, std::int64_t> channel_;
};

// Qubits the device channels of a fragment act on.
std::vector<int> touched_qubits(const Schedule& frag, const CalibrationSnapshot& calib) {
  std::set<int> qs;
  for (Channel c : frag.channels()) {
    for (int q : calib.channel_qubits(c)) qs.insert(q);
  }
  return {qs.begin(), qs.end()};
}

// Lowers a list of native ops ASAP from time 0.
Schedule lower_sequence(const std::vector<GateOp>& ops, const CalibrationSnapshot& calib) {
  Frontier front(calib.timing.start_grid());
  Schedule out;
  for (const auto& op : ops) {
    Schedule frag = lower_gate(op, calib);
    std::vector<int> qs = op.qubits;
    for (int q : touched_qubits(frag, calib)) qs.push_back(q);
    std::int64_t start = front.start_for(qs, frag.channels());
    out.append(frag, start);
    front.advance(qs, frag, start);
  }
  return out;
}

}  // namespace

std::string to_string(LoweringMode m) {
  return m == LoweringMode::strict ? "strict" : "permissive";
}

std::string to_string(BindingIssueKind k) {
  switch (k) {
    case BindingIssueKind::undeclared_channel:
      return "undeclared-channel";
    case BindingIssueKind::unused_qubit:
      return "unused-qubit";
    case BindingIssueKind::clbit_mismatch:
      return "clbit-mismatch";
  }
  return "unknown";
}

BindingMismatchError::BindingMismatchError(std::string gate, std::vector<int> declared,
                                           std::vector<Channel> bound, const std::string& detail)
    : LoweringError("binding mismatch in custom gate '" + gate + "': declared qubits " +
                    join_qubits(declared) + ", bound channels " + join_channels(bound) + ": " +
                    detail),
      gate_(std::move(gate)),
      declared_(std::move(declared)),
      bound_(std::move(bound)) {}

OverlapError::OverlapError(std::vector<OverlapViolation> v)
    : LoweringError(summarize_overlaps(v)), violations_(std::move(v)) {}

TimingError::TimingError(std::vector<TimingViolation> v)
    : LoweringError(summarize_timing(v)), violations_(std::move(v)) {}

Schedule lower_gate(const GateOp& op, const CalibrationSnapshot& calib) {
  if (op.kind == GateKind::custom) {
    throw UnknownGateError("custom gate '" + (op.custom ? op.custom->name : std::string("?")) +
                           "' must be bound, not lowered natively");
  }
  if (static_cast<int>(op.qubits.size()) != gate_arity(op.kind) ||
      static_cast<int>(op.params.size()) != gate_param_count(op.kind)) {
    throw InvalidArgument("malformed " + std::string(to_string(op.kind)) + " op");
  }
  for (int q : op.qubits) require_qubit(calib, q);
  const int q = op.qubits[0];
  Schedule s;
  switch (op.kind) {
    case GateKind::X:
      s.insert(0, Play{drive(q), require_template(calib.templates[q].x, "x", q)});
      break;
    case GateKind::SX:
      emit_sx(s, 0, q, calib);
      break;
    case GateKind::RZ:
      emit_rz(s, 0, q, op.params[0], calib);
      break;
    case GateKind::Z:
      emit_rz(s, 0, q, kPi, calib);
      break;
    case GateKind::H:
      emit_h(s, 0, q, calib);
      break;
    case GateKind::RX:
      emit_u3(s, q, op.params[0], -kPi / 2, kPi / 2, calib);
      break;
    case GateKind::U3:
      emit_u3(s, q, op.params[0], op.params[1], op.params[2], calib);
      break;
    case GateKind::CX: {
      const int c = op.qubits[0];
      const int t = op.qubits[1];
      if (auto p = calib.pair_index(c, t)) return cx_forward(c, t, *p, calib);
      auto r = calib.pair_index(t, c);
      if (!r) {
        throw MissingTemplateError("no cross-resonance calibration between qubits " +
                                   std::to_string(c) + " and " + std::to_string(t));
      }
      // Reverse orientation: H on both sides of the calibrated direction.
      return lower_sequence({make_op(GateKind::H, {c}), make_op(GateKind::H, {t}),
                             make_op(GateKind::CX, {t, c}), make_op(GateKind::H, {c}),
                             make_op(GateKind::H, {t})},
                            calib);
    }
    case GateKind::measure: {
      if (op.clbits.size() != 1) throw InvalidArgument("measure needs one clbit");
      const auto& tpl = calib.templates[q];
      s.insert(0, Play{measure(q), require_template(tpl.measure, "measure", q)});
      if (tpl.acquire_duration <= 0) {
        throw MissingTemplateError("missing acquire duration for qubit " + std::to_string(q));
      }
      s.insert(0, Acquire{q, tpl.acquire_duration, op.clbits[0]});
      break;
    }
    case GateKind::custom:
      break;
  }
  return s;
}

Channel default_slot_binding(Channel slot, const std::vector<int>& placement,
                             const CalibrationSnapshot& calib) {
  const int n = static_cast<int>(placement.size());
  Channel out = slot;
  if (slot.kind == ChannelKind::control) {
    if (n >= 2 && slot.index >= 0 && slot.index < n * (n - 1)) {
      auto [i, k] = template_pair(slot.index, n);
      auto p = calib.pair_index(placement[i], placement[k]);
      if (!p) {
        throw BindingError("slot " + to_string(slot) + " names qubits " +
                           std::to_string(placement[i]) + "->" + std::to_string(placement[k]) +
                           ", which are not coupled");
      }
      out = control(*p);
    }
  } else if (slot.index >= 0 && slot.index < n) {
    out.index = placement[slot.index];
  }
  // Anything past the declared range resolves by absolute index.
  if (!calib.shape().contains(out)) {
    throw BindingError("slot " + to_string(slot) + " has no device channel");
  }
  return out;
}

BoundGate bind_custom_gate(const CustomGate& gate, const std::vector<int>& placement,
                           const CalibrationSnapshot& calib, const ChannelBinding& binding_override,
                           std::optional<std::vector<int>> clbits) {
  if (placement.size() != gate.qubits.size()) {
    throw InvalidArgument("custom gate '" + gate.name + "' declares " +
                          std::to_string(gate.qubits.size()) + " qubits, placed on " +
                          std::to_string(placement.size()));
  }
  for (const auto& [slot, dev] : binding_override) {
    if (!calib.shape().contains(dev)) {
      throw BindingError("override " + to_string(slot) + "->" + to_string(dev) +
                         " names no device channel");
    }
    if ((slot.kind == ChannelKind::acquire) != (dev.kind == ChannelKind::acquire)) {
      throw BindingError("override " + to_string(slot) + "->" + to_string(dev) +
                         " mixes acquire and pulse channels");
    }
  }
  BoundGate g;
  g.name = gate.name;
  g.placement = placement;
  g.clbits = clbits ? *clbits : gate.clbits;
  for (Channel slot : gate.schedule.channels()) {
    auto it = binding_override.find(slot);
    g.binding[slot] =
        it != binding_override.end() ? it->second : default_slot_binding(slot, placement, calib);
  }
  for (const auto& e : gate.schedule.entries()) {
    Instruction ins = with_channel(e.instruction, g.binding.at(e.channel()));
    if (auto* a = std::get_if<Acquire>(&ins)) {
      const int j = a->memory_slot;
      if (j >= 0 && static_cast<std::size_t>(j) < g.clbits.size()) a->memory_slot = g.clbits[j];
    }
    g.schedule.insert(e.start_time, std::move(ins));
  }
  return g;
}

BoundGate bind_op(const GateOp& op, const CalibrationSnapshot& calib) {
  if (op.kind != GateKind::custom || !op.custom) {
    throw InvalidArgument("bind_op needs a custom op");
  }
  return bind_custom_gate(*op.custom, op.qubits, calib, op.binding_override, op.clbits);
}

std::vector<BindingIssue> check_binding(const BoundGate& g, const CalibrationSnapshot& calib) {
  std::vector<BindingIssue> issues;
  const std::set<int> declared(g.placement.begin(), g.placement.end());
  const std::set<int> clbits(g.clbits.begin(), g.clbits.end());
  std::set<int> active;
  const auto& es = g.schedule.entries();
  for (std::size_t k = 0; k < es.size(); ++k) {
    const Channel c = es[k].channel();
    const auto qs = calib.channel_qubits(c);
    for (int q : qs) {
      if (!declared.count(q)) {
        issues.push_back({BindingIssueKind::undeclared_channel, k, c, q,
                          "instruction on " + to_string(c) + " reaches undeclared qubit " +
                              std::to_string(q)});
        break;
      }
    }
    const auto& ins = es[k].instruction;
    if (std::holds_alternative<Play>(ins) || std::holds_alternative<Acquire>(ins)) {
      active.insert(qs.begin(), qs.end());
    }
    if (const auto* a = std::get_if<Acquire>(&ins); a && !clbits.count(a->memory_slot)) {
      issues.push_back({BindingIssueKind::clbit_mismatch, k, c, a->qubit,
                        "acquire writes undeclared clbit " + std::to_string(a->memory_slot)});
    }
  }
  for (int q : g.placement) {
    if (!active.count(q)) {
      issues.push_back({BindingIssueKind::unused_qubit, 0, drive(q), q,
                        "declared qubit " + std::to_string(q) + " receives no pulse"});
    }
  }
  return issues;
}

LoweredCircuit lower_circuit_traced(const GateCircuit& c, const CalibrationSnapshot& calib,
                                    LoweringMode mode) {
  validate(c);
  if (c.num_qubits > calib.num_qubits()) {
    throw InvalidArgument("circuit has " + std::to_string(c.num_qubits) +
                          " qubits, device has " + std::to_string(calib.num_qubits()));
  }
  LoweredCircuit out;
  Frontier front(calib.timing.start_grid());
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const GateOp& op = c.ops[i];
    Schedule frag;
    std::vector<int> sync = op.qubits;
    std::vector<int> touched;
    if (op.kind == GateKind::custom) {
      if (!op.custom) throw UnknownGateError("custom op without a gate definition");
      BoundGate g = bind_op(op, calib);
      if (mode == LoweringMode::strict) {
        auto issues = check_binding(g, calib);
        if (!issues.empty()) {
          std::vector<Channel> bound;
          for (const auto& [slot, dev] : g.binding) bound.push_back(dev);
          throw BindingMismatchError(g.name, g.placement, bound, issues.front().message);
        }
      }
      frag = std::move(g.schedule);
      touched = touched_qubits(frag, calib);
    } else {
      frag = lower_gate(op, calib);
      touched = touched_qubits(frag, calib);
    }
    // A permissive custom gate waits only on what it declares.
    std::set<Channel> sync_channels;
    if (op.kind != GateKind::custom || mode == LoweringMode::strict) {
      sync_channels = frag.channels();
      sync.insert(sync.end(), touched.begin(), touched.end());
    }
    const std::int64_t start = front.start_for(sync, sync_channels);
    out.schedule.append(frag, start);
    std::vector<int> adv = op.qubits;
    adv.insert(adv.end(), touched.begin(), touched.end());
    front.advance(adv, frag, start);
    out.placements.push_back({i, start, start + frag.duration()});
  }
  if (auto ov = check_overlap(out.schedule); !ov.empty()) throw OverlapError(std::move(ov));
  if (mode == LoweringMode::strict) {
    if (auto tv = validate_timing(out.schedule, calib.timing, calib.shape()); !tv.empty()) {
      throw TimingError(std::move(tv));
    }
  }
  return out;
}

Schedule lower_circuit(const GateCircuit& c, const CalibrationSnapshot& calib,
                       LoweringMode mode) {
  return lower_circuit_traced(c, calib, mode).schedule;
}

CustomGate make_custom_gate(const std::string& name, const std::vector<int>& qubits,
                            const std::vector<GateOp>& ops, const CalibrationSnapshot& calib,
                            std::optional<Matrix> unitary, const std::vector<int>& clbits) {
  const int n = static_cast<int>(qubits.size());
  auto pos = [&](int q) -> int {
    auto it = std::find(qubits.begin(), qubits.end(), q);
    return it == qubits.end() ? -1 : static_cast<int>(it - qubits.begin());
  };
  for (const auto& op : ops) {
    if (op.kind == GateKind::custom) throw InvalidArgument("nested custom gates are unsupported");
    for (int q : op.qubits) {
      if (pos(q) < 0) {
        throw InvalidArgument("op on qubit " + std::to_string(q) + " outside custom gate '" +
                              name + "'");
      }
    }
  }
  const Schedule device = lower_sequence(ops, calib);
  CustomGate g;
  g.name = name;
  g.qubits = qubits;
  g.clbits = clbits;
  g.unitary = std::move(unitary);
  for (const auto& e : device.entries()) {
    const Channel c = e.channel();
    const auto qs = calib.channel_qubits(c);
    const bool inside = std::all_of(qs.begin(), qs.end(), [&](int q) { return pos(q) >= 0; });
    if (!inside) {
      if (is_frame(e.instruction)) continue;
      throw InvalidArgument("custom gate '" + name + "' needs channel " + to_string(c));
    }
    Channel slot = c;
    if (c.kind == ChannelKind::control) {
      const auto& pr = calib.pairs[c.index];
      slot.index = template_pair_slot(pos(pr.control), pos(pr.target), n);
    } else {
      slot.index = pos(c.index);
    }
    Instruction ins = with_channel(e.instruction, slot);
    if (auto* a = std::get_if<Acquire>(&ins)) {
      auto it = std::find(clbits.begin(), clbits.end(), a->memory_slot);
      if (it == clbits.end()) {
        throw InvalidArgument("custom gate '" + name + "' measures into undeclared clbit " +
                              std::to_string(a->memory_slot));
      }
      a->memory_slot = static_cast<int>(it - clbits.begin());
    }
    g.schedule.insert(e.start_time, std::move(ins));
  }
  return g;
}

}  // namespace pulsegate::lower
