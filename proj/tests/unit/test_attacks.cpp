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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "pulsegate/attacks/gadgets.hpp"
#include "pulsegate/core/hash.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/simulator.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate {
namespace {

using attack::AttackKind;

Matrix gate_unitary(const attack::FlipGadget& g) {
  return sim::simulate_unitary(lower::bind_op(g.circuit.ops[g.gate_op], g.calib).schedule, g.calib);
}

std::map<Channel, int> per_channel_counts(const Schedule& s) {
  std::map<Channel, int> n;
  for (const auto& e : s.entries()) ++n[e.channel()];
  return n;
}

// Two X pulses back to back on qubit 0.
Schedule double_x(const CalibrationSnapshot& calib) {
  Schedule s;
  s.insert(0, Play{drive(0), calib.templates[0].x});
  s.insert(160, Play{drive(0), calib.templates[0].x});
  return s;
}

std::size_t play_at(const Schedule& s, std::int64_t t) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].start_time == t && std::holds_alternative<Play>(s[i].instruction)) return i;
  }
  throw std::runtime_error("no play");
}

// Custom gate on q0 whose body is H, X, H (= Z).
GateCircuit hxh_circuit(const CalibrationSnapshot& calib) {
  GateCircuit c;
  c.num_qubits = calib.num_qubits();
  c.num_clbits = 1;
  c.add(make_custom_op(lower::make_custom_gate(
      "hxh", {0}, {make_op(GateKind::H, {0}), make_op(GateKind::X, {0}), make_op(GateKind::H, {0})},
      calib, oracle::pauli_z())));
  c.add(make_measure(0, 0));
  return c;
}

double p1_q0(const GateCircuit& c, const CalibrationSnapshot& calib) {
  return sim::marginal_one(
      sim::simulate_shots(lower::lower_circuit(c, calib, lower::LoweringMode::permissive), calib, {})
          .probabilities,
      0);
}

TEST(Plunder, IdentityRemapChangesNothing) {
  const auto& calib = gen::chain_device(2);
  const auto c = hxh_circuit(calib);
  const auto t = attack::qubit_plunder(c, 0, {{{drive(0), drive(0)}}, {}}, calib);
  EXPECT_EQ(t.artifact, c);
}

TEST(Plunder, FlipGadgetMovesOneXToTheIdleQubit) {
  const auto g = attack::build_flip_gadget(AttackKind::plunder, true);
  EXPECT_GE(oracle::gate_fidelity(gate_unitary(g), oracle::on_qubit(oracle::pauli_x(), 0, 2) *
                                                       oracle::on_qubit(oracle::pauli_x(), 1, 2)),
            1 - 1e-6);
}

TEST(Plunder, ReadoutChannelTamperChangesStatistics) {
  const auto& calib = gen::chain_device(2);
  const auto c = hxh_circuit(calib);
  EXPECT_NEAR(p1_q0(c, calib), 0.0, 1e-6);
  const auto& sched = c.ops[0].custom->schedule;
  std::size_t x = 0;
  for (std::size_t i = 0; i < sched.size(); ++i) {
    if (std::holds_alternative<Play>(sched[i].instruction) && sched[i].start_time == 160) x = i;
  }
  ASSERT_GT(x, 0u);
  const auto t = attack::qubit_plunder(c, 0, {{}, {{{x}, measure(0)}}}, calib);
  EXPECT_NEAR(p1_q0(t.artifact, calib), 0.5, 1e-6);
}

TEST(Plunder, UnknownDeviceChannelRejected) {
  const auto& calib = gen::chain_device(2);
  EXPECT_THROW(attack::qubit_plunder(hxh_circuit(calib), 0, {{{drive(0), drive(7)}}, {}}, calib),
               InvalidArgument);
}

TEST(Plunder, OverlapIsFlaggedNotRejected) {
  const auto& calib = gen::chain_device(2);
  CustomGate g;
  g.name = "pair";
  g.qubits = {0, 1};
  g.schedule.insert(0, Play{drive(0), calib.templates[0].x});
  g.schedule.insert(0, Play{drive(1), calib.templates[1].x});
  GateCircuit c;
  c.num_qubits = 2;
  c.add(make_custom_op(g));
  const auto t = attack::qubit_plunder(c, 0, {{}, {{{1}, drive(0)}}}, calib);
  EXPECT_NE(std::find(t.record.flags.begin(), t.record.flags.end(), "overlap"), t.record.flags.end());
  EXPECT_THROW(lower::lower_circuit(t.artifact, calib, lower::LoweringMode::permissive),
               lower::OverlapError);
}

TEST(Block, ZeroDelayIsBaseline) {
  const auto g0 = attack::build_flip_gadget(AttackKind::block, false);
  auto t = attack::qubit_block(g0.circuit, g0.gate_op, 0, g0.calib);
  EXPECT_TRUE(t.artifact.ops[g0.gate_op].custom->schedule.empty());
  const auto base = sim::simulate_shots(lower::lower_circuit(g0.circuit, g0.calib, lower::LoweringMode::permissive), g0.calib, {});
  const auto after = sim::simulate_shots(lower::lower_circuit(t.artifact, g0.calib, lower::LoweringMode::permissive), g0.calib, {});
  for (int b : {0, 1}) {
    EXPECT_NEAR(sim::marginal_one(base.probabilities, b), sim::marginal_one(after.probabilities, b), 1e-12);
  }
}

TEST(Block, TenT1DrainsTheExcitedState) {
  const auto g = attack::build_flip_gadget(AttackKind::block, true);
  sim::SimOptions opt;
  opt.noise = true;
  const auto s = lower::lower_circuit(g.circuit, g.calib, lower::LoweringMode::permissive);
  const double p = sim::marginal_one(sim::simulate_shots(s, g.calib, opt).probabilities, 0);
  EXPECT_LE(p, 0.01);
  EXPECT_NEAR(p, std::exp(-10.0), 1e-6);
}

TEST(Block, OffGridDelayRejected) {
  const auto g = attack::build_flip_gadget(AttackKind::block, false);
  EXPECT_THROW(attack::qubit_block(g.circuit, g.gate_op, 17, g.calib), InvalidArgument);
  EXPECT_THROW(attack::qubit_block(g.circuit, g.gate_op, -16, g.calib), InvalidArgument);
}

TEST(Reorder, GadgetFlipsBothQubits) {
  const auto off = attack::build_flip_gadget(AttackKind::reorder, false);
  const auto on = attack::build_flip_gadget(AttackKind::reorder, true);
  const auto run = [](const attack::FlipGadget& g) {
    return sim::simulate_shots(lower::lower_circuit(g.circuit, g.calib, lower::LoweringMode::permissive), g.calib, {}).counts;
  };
  EXPECT_EQ(run(off).at("00"), 1024);
  EXPECT_EQ(run(on).at("11"), 1024);
}

TEST(Reorder, IdentityPermutationChangesNothing) {
  const auto g = attack::build_flip_gadget(AttackKind::reorder, false);
  const auto t = attack::qubit_reorder(g.circuit, g.gate_op,
                                       std::map<Channel, Channel>{{drive(0), drive(0)}}, g.calib);
  EXPECT_EQ(t.artifact, g.circuit);
}

TEST(Reorder, KindChangeRejected) {
  const auto g = attack::build_flip_gadget(AttackKind::reorder, false);
  EXPECT_THROW(attack::qubit_reorder(g.circuit, g.gate_op,
                                     std::map<Channel, Channel>{{drive(0), measure(0)}, {measure(0), drive(0)}},
                                     g.calib),
               InvalidArgument);
}

TEST(Timing, OnGridShiftIsHarmless) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  const auto s = double_x(calib);
  const auto t = attack::timing_mismatch(s, 1, 16);
  EXPECT_TRUE(validate_timing(t.artifact, calib.timing).empty());
  EXPECT_LE((sim::simulate_unitary(t.artifact, calib) - sim::simulate_unitary(s, calib)).norm(), 1e-9);
}

TEST(Timing, OneSampleIsOneViolation) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  const auto t = attack::timing_mismatch(double_x(calib), 1, 1);
  EXPECT_EQ(validate_timing(t.artifact, calib.timing).size(), 1u);
  EXPECT_EQ(t.artifact[1].start_time, 161);
}

TEST(Timing, BadOffsetsRejected) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  EXPECT_THROW(attack::timing_mismatch(double_x(calib), 0, -1), InvalidArgument);
  EXPECT_THROW(attack::timing_mismatch(double_x(calib), 1, 0), InvalidArgument);
}

TEST(Timing, GadgetFollowsPhaseSlipOracle) {
  const auto g = attack::build_flip_gadget(AttackKind::timing, true);
  const double f = g.calib.qubits[0].frequency;
  const double d = static_cast<double>(attack::timing_offset(g.calib, 0));
  const double want = std::pow(std::sin(oracle::kPi * f * d * g.calib.timing.dt_ns()), 2);
  const auto st = sim::simulate_density(lower::bind_op(g.circuit.ops[g.gate_op], g.calib).schedule, g.calib);
  EXPECT_NEAR(st.prob_one(0), want, 1e-6);
}

TEST(Frequency, ForbiddenBandBetweenTwoXFlips) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  const auto s = double_x(calib);
  EXPECT_NEAR(sim::simulate_density(s, calib).prob_one(0), 0.0, 1e-9);
  const auto t = attack::frequency_mismatch(s, play_at(s, 160), 2.5);
  EXPECT_NEAR(sim::simulate_density(t.artifact, calib).prob_one(0), 1.0, 1e-6);
  EXPECT_NE(std::find(t.record.flags.begin(), t.record.flags.end(), "inserted-instruction"),
            t.record.flags.end());
}

TEST(Frequency, CalibratedFrequencyIsHarmless) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  const auto s = double_x(calib);
  const auto t = attack::frequency_mismatch(s, play_at(s, 160), calib.qubits[0].frequency);
  EXPECT_LE((sim::simulate_unitary(t.artifact, calib) - sim::simulate_unitary(s, calib)).norm(), 1e-12);
}

TEST(Frequency, NonPlayEntryRejected) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  Schedule s;
  s.insert(0, ShiftPhase{drive(0), 0.1});
  EXPECT_THROW(attack::frequency_mismatch(s, 0, 4.0), InvalidArgument);
}

TEST(Phase, ZeroToPiFlipsTheGadget) {
  EXPECT_GE(oracle::gate_fidelity(gate_unitary(attack::build_flip_gadget(AttackKind::phase, false)),
                                  oracle::identity(4)),
            1 - 1e-6);
  EXPECT_GE(oracle::gate_fidelity(gate_unitary(attack::build_flip_gadget(AttackKind::phase, true)),
                                  oracle::on_qubit(oracle::pauli_x(), 0, 2)),
            1 - 1e-6);
}

TEST(Phase, SameValueIsHarmless) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  Schedule s;
  s.insert(0, ShiftPhase{drive(0), 0.4});
  s.append(double_x(calib), 0);
  const auto t = attack::phase_mismatch(s, 0, 0.4);
  EXPECT_EQ(t.artifact, s);
}

TEST(Phase, PlayEntryRejected) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  EXPECT_THROW(attack::phase_mismatch(double_x(calib), 0, 1.0), InvalidArgument);
}

TEST(Waveform, ZeroAmplitudeDisablesAndXEnables) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  const auto s = double_x(calib);
  const auto off = attack::waveform_mismatch(s, 0, calib.templates[0].x.scaled(0.0));
  EXPECT_NEAR(sim::simulate_density(off.artifact, calib).prob_one(0), 1.0, 1e-9);
  EXPECT_GE(oracle::gate_fidelity(gate_unitary(attack::build_flip_gadget(AttackKind::waveform, true)),
                                  oracle::on_qubit(oracle::pauli_x(), 0, 2)),
            1 - 1e-6);
}

TEST(Waveform, HalfAmplitudeGivesHalf) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  Schedule s;
  s.insert(0, Play{drive(0), calib.templates[0].x});
  const auto t = attack::waveform_mismatch(s, 0, calib.templates[0].x.scaled(0.5));
  EXPECT_NEAR(sim::simulate_density(t.artifact, calib).prob_one(0), 0.5, 1e-3);
}

TEST(Waveform, DurationMayChange) {
  const auto calib = synthesize_snapshot(1, {}, 7);
  Schedule s;
  s.insert(0, Play{drive(0), calib.templates[0].x});
  const auto t = attack::waveform_mismatch(s, 0, Waveform::constant(320, {0.0, 0.0}));
  EXPECT_EQ(t.artifact.duration(), 320);
}

TEST(Gadgets, DisarmedAreIdentityAndPassVerification) {
  for (AttackKind k : attack::kAllAttackKinds) {
    const auto g = attack::build_flip_gadget(k, false);
    if (k != AttackKind::block) {
      EXPECT_GE(oracle::gate_fidelity(gate_unitary(g), oracle::identity(4)), 1 - 1e-6) << to_string(k);
    }
    const auto trusted = verify::make_record(
        g.circuit, lower::lower_circuit(g.circuit, g.calib, lower::LoweringMode::strict), g.calib);
    const auto r = verify::verify_pipeline(g.circuit, trusted, g.calib);
    EXPECT_TRUE(r.passed()) << to_string(k);
    for (const auto& rep : r.reports) EXPECT_TRUE(rep.findings.empty()) << to_string(k);
  }
}

TEST(Gadgets, ArmedFrequencyFlips) {
  EXPECT_GE(oracle::gate_fidelity(gate_unitary(attack::build_flip_gadget(AttackKind::frequency, true)),
                                  oracle::on_qubit(oracle::pauli_x(), 0, 2)),
            1 - 1e-6);
}

TEST(Gadgets, ArmedReorderIsXOnBoth) {
  EXPECT_GE(oracle::gate_fidelity(gate_unitary(attack::build_flip_gadget(AttackKind::reorder, true)),
                                  oracle::on_qubit(oracle::pauli_x(), 0, 2) *
                                      oracle::on_qubit(oracle::pauli_x(), 1, 2)),
            1 - 1e-6);
}

TEST(Record, JsonRoundTrip) {
  for (AttackKind k : attack::kAllAttackKinds) {
    const auto g = attack::build_flip_gadget(k, true);
    ASSERT_TRUE(g.record.has_value());
    const auto back = attack::tamper_record_from_json(attack::to_json(*g.record));
    EXPECT_EQ(back, *g.record) << to_string(k);
  }
}

TEST(Record, RestoreRejectsForeignRecord) {
  const auto g = attack::build_flip_gadget(AttackKind::phase, true);
  GateCircuit empty;
  empty.num_qubits = 2;
  EXPECT_THROW(attack::restore(empty, *g.record), InvalidArgument);
}

TEST(AttackProperty, InvisibleAndReversible) {
  gen::Rng rng(31);
  for (AttackKind k : attack::kAllAttackKinds) {
    for (int i = 0; i < 40; ++i) {
      const auto a = gen::random_attack_case(rng, k);
      ASSERT_NE(canonical_serialize(a.tampered), canonical_serialize(a.clean)) << to_string(k);
      EXPECT_EQ(gate_level_hash(a.tampered), gate_level_hash(a.clean));
      EXPECT_EQ(canonical_serialize(attack::restore(a.tampered, a.record)), canonical_serialize(a.clean));
      if (!attack::is_channel_attack(k)) {
        const bool inserted = std::count(a.record.flags.begin(), a.record.flags.end(), "inserted-instruction") > 0;
        const auto before = per_channel_counts(a.clean.ops[a.victim_op].custom->schedule);
        const auto after = per_channel_counts(a.tampered.ops[a.victim_op].custom->schedule);
        if (!inserted) EXPECT_EQ(before, after) << to_string(k);
      }
    }
  }
}

TEST(AttackProperty, ScheduleEditsRestoreExactly) {
  gen::Rng rng(32);
  const auto calib = synthesize_snapshot(1, {}, 7);
  for (int i = 0; i < 100; ++i) {
    Schedule s;
    s.insert(0, ShiftPhase{drive(0), rng.uniform(-3, 3)});
    s.insert(0, Play{drive(0), calib.templates[0].sx});
    s.insert(160, Play{drive(0), calib.templates[0].x});
    const auto bytes = canonical_serialize(s);
    std::vector<attack::Tampered<Schedule>> ts;
    ts.push_back(attack::timing_mismatch(s, 2, rng.integer(1, 15)));
    ts.push_back(attack::frequency_mismatch(s, 1, rng.uniform(1.0, 6.0)));
    ts.push_back(attack::phase_mismatch(s, 0, rng.uniform(-3, 3)));
    ts.push_back(attack::waveform_mismatch(s, 2, calib.templates[0].x.scaled(rng.uniform(0.1, 2.0))));
    for (const auto& t : ts) EXPECT_EQ(canonical_serialize(attack::restore(t.artifact, t.record)), bytes);
  }
}

TEST(ApplyAttack, EveryKindFromJson) {
  const auto calib = attack::gadget_device();
  const std::map<AttackKind, json> params = {
      {AttackKind::plunder, {{"moves", {{{"entries", {1}}, {"channel", "d1"}}}}}},
      {AttackKind::block, {{"delay", 160}}},
      {AttackKind::reorder, {{"permutation", {{"d0", "d1"}, {"d1", "d0"}}}}},
      {AttackKind::timing, {{"offset", 3}}},
      {AttackKind::frequency, {{"frequency", 2.5}}},
      {AttackKind::phase, {{"phase", 1.0}}},
      {AttackKind::waveform, {{"amp_scale", 0.5}}},
  };
  for (const auto& [k, p] : params) {
    const auto g = attack::build_flip_gadget(k == AttackKind::reorder ? AttackKind::reorder
                                             : k == AttackKind::phase  ? AttackKind::phase
                                                                       : AttackKind::plunder,
                                             false);
    std::size_t entry = 1;
    if (k == AttackKind::phase) {
      const auto& s = g.gate.schedule;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::holds_alternative<ShiftPhase>(s[i].instruction)) entry = i;
      }
    }
    const json spec = {{"kind", to_string(k)},
                       {"target", {{"op", g.gate_op}, {"entry", entry}}},
                       {"parameters", p}};
    const auto t = attack::apply_attack(g.circuit, spec, g.calib);
    EXPECT_EQ(t.record.kind, k);
    EXPECT_NE(t.artifact, g.circuit) << to_string(k);
  }
  (void)calib;
}

TEST(ApplyAttack, MalformedSpecIsASchemaError) {
  const auto g = attack::build_flip_gadget(AttackKind::plunder, false);
  EXPECT_THROW(attack::apply_attack(g.circuit, json{{"kind", "plunder"}}, g.calib), SchemaError);
  EXPECT_THROW(attack::apply_attack(g.circuit, json{{"kind", "nope"}, {"target", {{"op", 0}}}}, g.calib),
               SchemaError);
  EXPECT_THROW(attack::apply_attack(double_x(g.calib), json{{"kind", "timing"}}), SchemaError);
}

}  // namespace
}  // namespace pulsegate
