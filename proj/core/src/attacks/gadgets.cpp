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

#include "pulsegate/attacks/gadgets.hpp"

#include <cmath>
#include <numbers>

#include "pulsegate/lowering/lowering.hpp"

namespace pulsegate::attack {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix identity(int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  return Matrix::Identity(d, d);
}

CustomGate gate_on(const std::string& name, std::vector<int> qubits, Schedule s) {
  CustomGate g;
  g.name = name;
  g.unitary = identity(static_cast<int>(qubits.size()));
  g.qubits = std::move(qubits);
  g.schedule = std::move(s);
  return g;
}

std::size_t find_entry(const Schedule& s, auto&& pred) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (pred(s[k])) return k;
  }
  throw Error("gadget entry not found");
}

}  // namespace

CalibrationSnapshot gadget_device(std::uint64_t seed) {
  auto c = synthesize_snapshot(2, {{0, 1}, {1, 0}}, seed);
  // One drive scale for both qubits, so a pulse moved between drive
  // channels keeps its rotation angle.
  c.qubits[1].rabi_scale = c.qubits[0].rabi_scale;
  c.templates[1].x = c.templates[0].x;
  c.templates[1].sx = c.templates[0].sx;
  return c;
}

std::int64_t t1_samples(const CalibrationSnapshot& calib, int qubit) {
  const double samples = calib.qubits.at(qubit).t1 * 1e-6 / calib.timing.dt;
  const std::int64_t g = calib.timing.granularity;
  const auto n = static_cast<std::int64_t>(std::ceil(samples - 1e-9));
  return (n + g - 1) / g * g;
}

std::int64_t timing_offset(const CalibrationSnapshot& calib, int qubit) {
  const double f = calib.qubits.at(qubit).frequency;
  std::int64_t best = 1;
  double best_v = -1.0;
  for (std::int64_t d = 1; d < calib.timing.start_grid(); ++d) {
    const double v = std::pow(std::sin(kPi * f * static_cast<double>(d) * calib.timing.dt_ns()), 2);
    if (v > best_v) {
      best_v = v;
      best = d;
    }
  }
  return best;
}

FlipGadget build_flip_gadget(AttackKind kind, bool armed, std::uint64_t seed,
                             int block_t1_multiple) {
  FlipGadget g;
  g.kind = kind;
  g.armed = armed;
  g.calib = gadget_device(seed);
  const auto& cal = g.calib;
  const Waveform& x = cal.templates[0].x;
  const Waveform& sx = cal.templates[0].sx;
  const std::int64_t d = x.duration();

  CustomGate gate;
  switch (kind) {
    case AttackKind::plunder:
    case AttackKind::block: {
      Schedule s;
      s.insert(0, Play{drive(0), x});
      s.insert(d, Play{drive(0), x});
      gate = gate_on(std::string("flip_") + std::string(to_string(kind)), {0}, s);
      break;
    }
    case AttackKind::reorder: {
      Schedule s;
      s.insert(0, Play{drive(0), x});
      s.insert(d, Play{drive(0), x});
      s.insert(0, Play{drive(1), cal.templates[1].x});
      s.insert(2 * d, Play{drive(1), cal.templates[1].x});
      gate = gate_on("flip_reorder", {0, 1}, s);
      break;
    }
    case AttackKind::timing: {
      Schedule s;
      s.insert(0, Play{drive(0), sx});
      s.insert(sx.duration(), Play{drive(0), sx.scaled(-1.0)});
      gate = gate_on("flip_timing", {0}, s);
      break;
    }
    case AttackKind::frequency: {
      const double f = cal.qubits[0].frequency;
      Schedule s;
      s.insert(0, Play{drive(0), x});
      s.insert(d, SetFrequency{drive(0), f});
      s.insert(d, Play{drive(0), x});
      s.insert(2 * d, SetFrequency{drive(0), f});
      gate = gate_on("flip_frequency", {0}, s);
      break;
    }
    case AttackKind::phase:
      gate = lower::make_custom_gate(
          "flip_phase", {0},
          {make_op(GateKind::H, {0}), make_op(GateKind::RZ, {0}, {0.0}), make_op(GateKind::H, {0})},
          cal, identity(1));
      break;
    case AttackKind::waveform: {
      const auto& p = x.parametric();
      Schedule s;
      s.insert(0, Play{drive(0), Waveform::drag(p.duration, 0.0, p.sigma, p.beta)});
      gate = gate_on("flip_waveform", {0}, s);
      break;
    }
  }

  if (kind == AttackKind::block && armed) g.circuit = GateCircuit{2, 2, {make_op(GateKind::X, {0})}};
  else g.circuit = GateCircuit{2, 2, {}};
  g.gate_op = g.circuit.ops.size();
  g.circuit.add(make_custom_op(gate));
  g.circuit.add(make_measure(0, 0));
  g.circuit.add(make_measure(1, 1));

  if (armed) {
    const std::size_t op = g.gate_op;
    const Schedule& s = gate.schedule;
    std::optional<Tampered<GateCircuit>> t;
    switch (kind) {
      case AttackKind::plunder:
        t = qubit_plunder(g.circuit, op, ChannelRemap{{}, {EntryMove{{1}, drive(1)}}}, cal);
        break;
      case AttackKind::reorder: {
        const auto k = find_entry(s, [&](const ScheduleEntry& e) {
          return e.start_time == d && e.channel() == drive(0);
        });
        t = qubit_reorder(g.circuit, op, std::vector<EntryMove>{{{k}, drive(1)}}, cal);
        break;
      }
      case AttackKind::block:
        t = qubit_block(g.circuit, op, block_t1_multiple * t1_samples(cal, 0), cal);
        break;
      case AttackKind::timing:
        t = timing_mismatch(g.circuit, op, 1, timing_offset(cal, 0));
        break;
      case AttackKind::frequency:
        t = frequency_mismatch(g.circuit, op, 2, 0.5 * (cal.forbidden_lo + cal.forbidden_hi));
        break;
      case AttackKind::phase: {
        const auto k = find_entry(s, [](const ScheduleEntry& e) {
          const auto* p = std::get_if<ShiftPhase>(&e.instruction);
          return p && p->delta == 0.0;
        });
        t = phase_mismatch(g.circuit, op, k, kPi);
        break;
      }
      case AttackKind::waveform:
        t = waveform_mismatch(g.circuit, op, 0, x);
        break;
    }
    g.circuit = std::move(t->artifact);
    g.record = std::move(t->record);
  }
  g.gate = *g.circuit.ops[g.gate_op].custom;
  return g;
}

}  // namespace pulsegate::attack
