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

#include <cmath>
#include <numbers>

#include "pulsegate/attacks/attacks.hpp"
#include "pulsegate/core/hash.hpp"
#include "pulsegate/core/random.hpp"
#include "pulsegate/demo/demo.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/matrices.hpp"
#include "pulsegate/sim/simulator.hpp"

namespace pulsegate::demo {

namespace {

constexpr int kEve = 1;
constexpr int kAlice = 2;
constexpr int kBob = 3;

constexpr std::string_view kVariants[] = {"benchmark", "coupling_eve", "decoupling", "del_h"};

std::size_t find_play(const Schedule& s, Channel slot) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (std::holds_alternative<Play>(s[k].instruction) && s[k].channel() == slot) return k;
  }
  throw Error("no Play on slot " + to_string(slot));
}

CustomGate couple_gate(const CalibrationSnapshot& calib, bool extra_h) {
  std::vector<GateOp> ops = {make_op(GateKind::CX, {kAlice, kBob})};
  if (extra_h) ops.push_back(make_op(GateKind::H, {kAlice}));
  return lower::make_custom_gate("couple", {kAlice, kBob}, ops, calib,
                                 sim::native_unitary(GateKind::CX));
}

}  // namespace

std::string_view to_string(TeleportVariant v) { return kVariants[static_cast<int>(v)]; }

TeleportVariant parse_teleport_variant(std::string_view s) {
  for (int i = 0; i < 4; ++i) {
    if (kVariants[i] == s) return static_cast<TeleportVariant>(i);
  }
  throw InvalidArgument("unknown teleport variant '" + std::string(s) + "'");
}

CalibrationSnapshot teleport_device(std::uint64_t seed) {
  return synthesize_snapshot(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}}, seed);
}

TeleportCircuit teleport_circuit(double theta, TeleportVariant v,
                                 const CalibrationSnapshot& calib, bool measure) {
  TeleportCircuit t;
  GateCircuit& c = t.circuit;
  c.num_qubits = calib.num_qubits();
  c.num_clbits = 3;
  c.add(make_op(GateKind::RX, {kAlice}, {theta}));
  c.add(make_op(GateKind::Z, {kAlice}));
  t.couple_op = c.ops.size();
  c.add(make_custom_op(couple_gate(calib, false)));
  c.add(make_op(GateKind::H, {kAlice}));
  // Deferred correction: CZ(Alice, Bob).
  c.add(make_op(GateKind::H, {kBob}));
  c.add(make_op(GateKind::CX, {kAlice, kBob}));
  c.add(make_op(GateKind::H, {kBob}));
  if (measure) {
    c.add(make_measure(kAlice, 0));
    c.add(make_measure(kEve, 1));
    c.add(make_measure(kBob, 2));
  }

  switch (v) {
    case TeleportVariant::benchmark:
      break;
    case TeleportVariant::coupling_eve: {
      // Re-aim the coupling at Eve: the CR drive goes to the (Alice, Eve)
      // pair and the target correction to Eve's drive line.
      const int pair = *calib.pair_index(kAlice, kEve);
      attack::ChannelRemap remap;
      remap.slots = {{control(0), control(pair)}, {drive(1), drive(kEve)}};
      auto p = attack::qubit_plunder(c, t.couple_op, remap, calib);
      const Schedule& s = p.artifact.ops[t.couple_op].custom->schedule;
      const std::size_t cr = find_play(s, control(0));
      const std::size_t sx = find_play(s, drive(1));
      auto w1 = attack::waveform_mismatch(p.artifact, t.couple_op, cr, calib.pairs[pair].cr);
      auto w2 = attack::waveform_mismatch(w1.artifact, t.couple_op, sx, calib.templates[kEve].sx);
      c = std::move(w2.artifact);
      t.records = {p.record, w1.record, w2.record};
      break;
    }
    case TeleportVariant::decoupling: {
      auto b = attack::qubit_block(c, t.couple_op, 0, calib);
      c = std::move(b.artifact);
      t.records = {b.record};
      break;
    }
    case TeleportVariant::del_h: {
      // An extra H inside the coupling gate cancels Alice's H.
      attack::TamperRecord r;
      r.kind = attack::AttackKind::waveform;
      r.artifact = attack::Artifact::circuit;
      r.target.op = t.couple_op;
      r.before = to_json(c.ops[t.couple_op]);
      c.ops[t.couple_op] = make_custom_op(couple_gate(calib, true));
      r.after = to_json(c.ops[t.couple_op]);
      r.parameters = {{"appended", "h"}, {"slot", "d0"}};
      r.flags = {"inserted-instruction"};
      t.records = {r};
      break;
    }
  }
  return t;
}

std::vector<double> theta_grid(int points) {
  if (points < 2) return {0.0};
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(std::numbers::pi * i / (points - 1));
  return out;
}

TeleportResult run_teleport(TeleportVariant v, const CalibrationSnapshot& calib,
                            const TeleportOptions& options) {
  TeleportResult r;
  r.variant = v;
  r.calibration_hash = content_hash(calib);
  r.options = options;
  for (std::size_t i = 0; i < options.thetas.size(); ++i) {
    const double theta = options.thetas[i];
    sim::SimOptions so;
    so.noise = options.noise;
    so.shots = options.shots;
    so.seed = derive_seed(options.seed, i);

    const auto measured = teleport_circuit(theta, v, calib, true);
    const Schedule s = lower::lower_circuit(measured.circuit, calib, lower::LoweringMode::permissive);
    const auto shots = sim::simulate_shots(s, calib, so);

    const auto bare = teleport_circuit(theta, v, calib, false);
    const Schedule sb = lower::lower_circuit(bare.circuit, calib, lower::LoweringMode::permissive);
    const auto state = sim::simulate_density(sb, calib, so);

    TeleportRow row;
    row.theta = theta;
    if (options.shots > 0) {
      row.p1_bob = sim::marginal_one(shots.counts, 2);
      row.p1_eve = sim::marginal_one(shots.counts, 1);
      row.stderr_bob = std::sqrt(row.p1_bob * (1.0 - row.p1_bob) / static_cast<double>(options.shots));
    } else {
      row.p1_bob = sim::marginal_one(shots.probabilities, 2);
      row.p1_eve = sim::marginal_one(shots.probabilities, 1);
    }
    row.purity_bob = sim::purity(state, {kBob});
    row.theory = std::pow(std::sin(theta / 2.0), 2);
    r.rows.push_back(row);
  }
  return r;
}

void write_csv(std::ostream& os, const TeleportResult& r) {
  os << "# pulsegate " << version() << "\n";
  os << "# calibration " << r.calibration_hash << "\n";
  os << "# variant " << to_string(r.variant) << " shots " << r.options.shots << " seed "
     << r.options.seed << " noise " << (r.options.noise ? 1 : 0) << "\n";
  os << "theta,p1_bob,p1_eve,purity_bob,stderr,theory\n";
  os.precision(10);
  for (const auto& row : r.rows) {
    os << row.theta << ',' << row.p1_bob << ',' << row.p1_eve << ',' << row.purity_bob << ','
       << row.stderr_bob << ',' << row.theory << "\n";
  }
}

}  // namespace pulsegate::demo
