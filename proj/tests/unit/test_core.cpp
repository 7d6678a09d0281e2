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

#include <cmath>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "pulsegate/core/calibration.hpp"
#include "pulsegate/core/hash.hpp"
#include "pulsegate/core/serialize.hpp"
#include "pulsegate/core/timing.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/simulator.hpp"

namespace pulsegate {
namespace {

Waveform x_like(std::int64_t d = 160) { return Waveform::gaussian(d, {0.2, 0.0}, 40.0); }

TEST(Channel, NamesRoundTrip) {
  for (auto c : {drive(0), control(12), measure(3), acquire(7)}) {
    EXPECT_EQ(parse_channel(to_string(c)), c);
  }
  EXPECT_EQ(to_string(control(3)), "u3");
  EXPECT_THROW(parse_channel("x1"), InvalidArgument);
  EXPECT_THROW(parse_channel("d"), InvalidArgument);
  EXPECT_THROW(parse_channel("d-1"), InvalidArgument);
}

TEST(Channel, TotalOrderUsableAsKey) {
  std::set<Channel> s{drive(1), drive(0), control(0), drive(1)};
  EXPECT_EQ(s.size(), 3u);
}

TEST(Waveform, ParametricMaterializesExactDuration) {
  for (auto w : {Waveform::gaussian(160, {0.3, 0.1}, 40), Waveform::drag(96, {0.5, 0}, 24, 0.3),
                 Waveform::gaussian_square(320, {0.2, 0}, 16, 256), Waveform::constant(17, {1, 0})}) {
    EXPECT_EQ(static_cast<std::int64_t>(w.materialize().size()), w.duration());
    for (auto s : w.materialize()) EXPECT_LE(std::abs(s), 1.0 + 1e-12);
  }
}

TEST(Waveform, InvariantsEnforced) {
  EXPECT_THROW(validate(Waveform::constant(0, {0.1, 0})), InvalidArgument);
  EXPECT_THROW(validate(Waveform::constant(16, {1.1, 0})), InvalidArgument);
  EXPECT_THROW(validate(Waveform::sampled({{2.0, 0.0}})), InvalidArgument);
  EXPECT_NO_THROW(validate(Waveform::sampled({{0.5, 0.5}})));
}

TEST(Waveform, ScaledAndPeak) {
  const auto w = Waveform::constant(32, {0.4, 0});
  EXPECT_NEAR(std::abs(w.scaled(0.5).peak_amp() - cplx(0.2, 0)), 0.0, 1e-15);
  const auto s = Waveform::sampled({{0.1, 0}, {-0.7, 0}, {0.3, 0}});
  EXPECT_NEAR(std::abs(s.peak_amp() - cplx(-0.7, 0)), 0.0, 1e-15);
}

TEST(Schedule, KeepsSortOrderAndInsertionOrderOnTies) {
  Schedule s;
  s.insert(160, Play{drive(0), x_like()});
  s.insert(0, Play{drive(1), x_like()});
  s.insert(0, ShiftPhase{drive(0), 1.0});
  s.insert(0, Play{drive(0), x_like()});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].channel(), drive(0));
  EXPECT_TRUE(std::holds_alternative<ShiftPhase>(s[0].instruction));
  EXPECT_TRUE(std::holds_alternative<Play>(s[1].instruction));
  EXPECT_EQ(s[2].channel(), drive(1));
  EXPECT_EQ(s[3].start_time, 160);
  EXPECT_EQ(s.duration(), 320);
  EXPECT_EQ(s.channels(), (std::set<Channel>{drive(0), drive(1)}));
}

TEST(Schedule, InsertAtRejectsOutOfOrder) {
  Schedule s;
  s.insert(0, Play{drive(0), x_like()});
  s.insert(160, Play{drive(0), x_like()});
  EXPECT_THROW(s.insert_at(0, {320, Delay{drive(0), 16}}), InvalidArgument);
  EXPECT_NO_THROW(s.insert_at(1, {0, ShiftPhase{drive(0), 0.5}}));
}

TEST(Schedule, ReplaceAndErase) {
  Schedule s;
  s.insert(0, Play{drive(0), x_like()});
  s.insert(160, Play{drive(0), x_like()});
  const auto pos = s.replace(0, {400, Delay{drive(0), 16}});
  EXPECT_EQ(pos, 1u);
  EXPECT_EQ(s[1].start_time, 400);
  const auto gone = s.erase(0);
  EXPECT_EQ(gone.start_time, 160);
  EXPECT_EQ(s.size(), 1u);
}

TEST(Timing, AlignedStartIsClean) {
  Schedule s;
  s.insert(32, Play{drive(0), x_like()});
  EXPECT_TRUE(validate_timing(s, {}).empty());
}

TEST(Timing, OffGridStartIsOneViolation) {
  Schedule s;
  s.insert(17, Play{drive(0), x_like()});
  const auto v = validate_timing(s, {});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, TimingRule::start_alignment);
}

TEST(Timing, OffGranularityDurationIsOneViolation) {
  Schedule s;
  s.insert(0, Play{drive(0), Waveform::constant(30, {0.1, 0})});
  const auto v = validate_timing(s, {});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, TimingRule::duration_granularity);
}

TEST(Timing, StartGridIsLcm) {
  TimingConstraints tc;
  tc.pulse_alignment = 16;
  tc.acquire_alignment = 24;
  EXPECT_EQ(tc.start_grid(), 48);
}

TEST(Timing, UnknownChannelReportedNotThrown) {
  Schedule s;
  s.insert(0, Play{drive(5), x_like()});
  const auto v = validate_timing(s, {}, DeviceShape{2, 1});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, TimingRule::invalid_channel);
}

TEST(Overlap, AbuttingIsFine) {
  Schedule s;
  s.insert(0, Play{drive(0), x_like()});
  s.insert(160, Play{drive(0), x_like()});
  EXPECT_TRUE(check_overlap(s).empty());
}

TEST(Overlap, IntersectionReportedOnce) {
  Schedule s;
  s.insert(0, Play{drive(0), x_like()});
  s.insert(100, Play{drive(0), x_like()});
  const auto v = check_overlap(s);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].channel, drive(0));
}

TEST(Overlap, DifferentChannelsDoNotCollide) {
  Schedule s;
  s.insert(0, Play{drive(0), x_like()});
  s.insert(100, Play{drive(1), x_like()});
  EXPECT_TRUE(check_overlap(s).empty());
}

TEST(Overlap, ChecksArePure) {
  Schedule s;
  s.insert(0, Play{drive(0), x_like()});
  s.insert(100, Play{drive(0), x_like()});
  s.insert(17, Delay{drive(1), 30});
  const Schedule before = s;
  const auto a = check_overlap(s);
  const auto b = validate_timing(s, {});
  EXPECT_EQ(s, before);
  EXPECT_EQ(check_overlap(s).size(), a.size());
  EXPECT_EQ(validate_timing(s, {}).size(), b.size());
}

TEST(Serialize, SnapshotRoundTrip) {
  const auto c = synthesize_snapshot(3, {{0, 1}, {1, 2}, {2, 1}}, 42);
  const auto back = deserialize<CalibrationSnapshot>(canonical_serialize(c));
  EXPECT_EQ(back, c);
  EXPECT_EQ(canonical_serialize(back), canonical_serialize(c));
}

TEST(Serialize, EqualSchedulesBuiltInDifferentOrderHashEqual) {
  Schedule a, b;
  a.insert(0, Play{drive(0), x_like()});
  a.insert(0, Play{drive(1), x_like()});
  a.insert(160, Delay{drive(0), 32});
  b.insert(160, Delay{drive(0), 32});
  b.insert(0, Play{drive(1), x_like()});
  b.insert(0, Play{drive(0), x_like()});
  EXPECT_EQ(content_hash(a), content_hash(b));
}

TEST(Serialize, TinyAmplitudeChangeChangesDigest) {
  Schedule a, b;
  a.insert(0, Play{drive(0), Waveform::constant(16, {0.3, 0})});
  b.insert(0, Play{drive(0), Waveform::constant(16, {0.3 + 1e-9, 0})});
  EXPECT_NE(content_hash(a), content_hash(b));
  EXPECT_EQ(content_hash(a).size(), 64u);
}

TEST(Serialize, NegativeZeroCanonicalized) {
  Schedule a, b;
  a.insert(0, ShiftPhase{drive(0), 0.0});
  b.insert(0, ShiftPhase{drive(0), -0.0});
  EXPECT_EQ(canonical_serialize(a), canonical_serialize(b));
}

TEST(Serialize, SchemaErrorsCarryPath) {
  const std::string bad =
      R"({"entries":[{"start":0,"kind":"play","channel":"d0","waveform":{"shape":"constant","duration":"x","amp":[0.1,0],"sigma":0,"beta":0,"width":0}}]})";
  try {
    (void)deserialize<Schedule>(bad);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/entries/0/waveform/duration");
  }
  EXPECT_THROW((void)deserialize<Schedule>("{not json"), SchemaError);
  try {
    (void)deserialize<GateCircuit>(R"({"num_qubits":1,"num_clbits":0,"ops":[{"gate":"q"}]})");
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/ops/0/gate");
  }
}

TEST(Serialize, OmittedClbitsAndParamsDefaultToEmpty) {
  const auto c = deserialize<GateCircuit>(
      R"({"num_qubits":2,"num_clbits":0,"ops":[{"gate":"h","qubits":[0]},{"gate":"cx","qubits":[0,1]}]})");
  ASSERT_EQ(c.ops.size(), 2u);
  EXPECT_TRUE(c.ops[0].clbits.empty());
  EXPECT_TRUE(c.ops[1].params.empty());
  EXPECT_EQ(deserialize<GateCircuit>(canonical_serialize(c)), c);
}

TEST(SerializeProperty, RoundTripOnGeneratedCircuitsAndSchedules) {
  gen::Rng rng(1);
  for (int i = 0; i < 150; ++i) {
    const auto c = gen::random_clean_case(rng);
    const auto s = lower::lower_circuit(c.circuit, *c.calib, lower::LoweringMode::strict);
    EXPECT_EQ(deserialize<GateCircuit>(canonical_serialize(c.circuit)), c.circuit);
    EXPECT_EQ(deserialize<Schedule>(canonical_serialize(s)), s);
  }
}

TEST(HashProperty, NoCollisionsOverTenThousandValues) {
  std::set<std::string> seen;
  for (int i = 0; i < 10000; ++i) {
    Schedule s;
    s.insert(16 * (i % 7), ShiftPhase{drive(i % 3), 1e-4 * i});
    s.insert(0, Delay{drive(0), 16 + i});
    seen.insert(content_hash(s));
  }
  EXPECT_EQ(seen.size(), 10000u);
}

TEST(Circuit, ValidateRejectsBadOps) {
  GateCircuit c;
  c.num_qubits = 2;
  c.num_clbits = 1;
  c.ops = {make_op(GateKind::X, {2})};
  EXPECT_THROW(validate(c), InvalidArgument);
  c.ops = {make_op(GateKind::CX, {1, 1})};
  EXPECT_THROW(validate(c), InvalidArgument);
  c.ops = {make_op(GateKind::RZ, {0}, {std::nan("")})};
  EXPECT_THROW(validate(c), InvalidArgument);
  c.ops = {make_measure(0, 0), make_measure(1, 0)};
  EXPECT_THROW(validate(c), InvalidArgument);
  c.ops = {make_op(GateKind::RZ, {0}, {0.3}), make_measure(1, 0)};
  EXPECT_NO_THROW(validate(c));
}

TEST(Circuit, TemplatePairSlotsAreABijection) {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::pair<int, int>> seen;
    for (int j = 0; j < n * (n - 1); ++j) {
      const auto [i, k] = template_pair(j, n);
      EXPECT_NE(i, k);
      EXPECT_EQ(template_pair_slot(i, k, n), j);
      seen.insert({i, k});
    }
    EXPECT_EQ(static_cast<int>(seen.size()), n * (n - 1));
  }
}

TEST(Hash, GateLevelViewIgnoresPulsesAndBindings) {
  const auto& calib = gen::chain_device(2);
  const auto g = lower::make_custom_gate("g", {0}, {make_op(GateKind::X, {0})}, calib,
                                         oracle::pauli_x());
  GateCircuit a;
  a.num_qubits = 2;
  a.add(make_custom_op(g));
  GateCircuit b = a;
  b.ops[0].binding_override[drive(0)] = drive(1);
  b.ops[0].custom->schedule.insert(320, Delay{drive(0), 16});
  EXPECT_EQ(gate_level_hash(a), gate_level_hash(b));
  EXPECT_NE(content_hash(a), content_hash(b));
  GateCircuit c = a;
  c.ops[0].custom->unitary = oracle::identity(2);
  EXPECT_NE(gate_level_hash(a), gate_level_hash(c));
}

TEST(Calibration, SynthesisIsDeterministic) {
  EXPECT_EQ(synthesize_snapshot(1, {}, 7), synthesize_snapshot(1, {}, 7));
  EXPECT_NE(synthesize_snapshot(1, {}, 7), synthesize_snapshot(1, {}, 8));
}

TEST(Calibration, SynthesisRejectsBadShapes) {
  EXPECT_THROW(synthesize_snapshot(0, {}, 1), InvalidArgument);
  EXPECT_THROW(synthesize_snapshot(2, {}, 1), InvalidArgument);
  EXPECT_THROW(synthesize_snapshot(2, {{0, 2}}, 1), InvalidArgument);
}

TEST(Calibration, FrequenciesInBandAndSeparated) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = synthesize_snapshot(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, seed);
    for (int i = 0; i < c.num_qubits(); ++i) {
      EXPECT_GE(c.qubits[i].frequency, 4.5);
      EXPECT_LE(c.qubits[i].frequency, 5.5);
      EXPECT_LE(c.qubits[i].t2, 2 * c.qubits[i].t1);
      for (int k = 0; k < i; ++k)
        EXPECT_GE(std::abs(c.qubits[i].frequency - c.qubits[k].frequency), 0.05 - 1e-12);
    }
    EXPECT_NO_THROW(validate(c));
  }
}

double x_template_p1(const CalibrationSnapshot& c, int q) {
  Schedule s;
  s.insert(0, Play{drive(q), c.templates[q].x});
  return std::norm(sim::simulate_unitary_on(s, c, {q})(1, 0));
}

TEST(Calibration, XTemplateClosesTheLoop) {
  const auto c = synthesize_snapshot(3, {{0, 1}, {1, 2}}, 7);
  for (int q = 0; q < 3; ++q) EXPECT_GE(x_template_p1(c, q), 1 - 1e-9);
}

TEST(Calibration, TwoSxEqualX) {
  const auto c = synthesize_snapshot(1, {}, 7);
  Schedule two, one;
  two.insert(0, Play{drive(0), c.templates[0].sx});
  two.insert(160, Play{drive(0), c.templates[0].sx});
  one.insert(0, Play{drive(0), c.templates[0].x});
  EXPECT_GE(oracle::gate_fidelity(sim::simulate_unitary(two, c), sim::simulate_unitary(one, c)),
            1 - 1e-6);
}

TEST(Drift, ZeroElapsedOnlyTouchesTimestamp) {
  const auto c = synthesize_snapshot(2, {{0, 1}}, 3);
  auto d = drift_snapshot(c, 0.0, 11);
  EXPECT_EQ(d.timestamp, c.timestamp);
  d.timestamp = c.timestamp;
  EXPECT_EQ(d, c);
  const auto later = drift_snapshot(c, 1.0, 11);
  EXPECT_EQ(later.timestamp, c.timestamp + 3600);
}

TEST(Drift, Deterministic) {
  const auto c = synthesize_snapshot(2, {{0, 1}}, 3);
  EXPECT_EQ(drift_snapshot(c, 72, 5), drift_snapshot(c, 72, 5));
  EXPECT_NE(drift_snapshot(c, 72, 5), drift_snapshot(c, 72, 6));
  EXPECT_THROW(drift_snapshot(c, -1, 5), InvalidArgument);
}

TEST(Drift, FrequencyWalkStatistics) {
  const auto c = synthesize_snapshot(1, {}, 3);
  const double expect = 20e-6 * std::sqrt(720.0);  // GHz
  double sum = 0, sum2 = 0;
  const int n = 1000;
  for (int s = 0; s < n; ++s) {
    const double d = drift_snapshot(c, 720.0, static_cast<std::uint64_t>(s)).qubits[0].frequency -
                     c.qubits[0].frequency;
    sum += d;
    sum2 += d * d;
  }
  const double sd = std::sqrt(sum2 / n - (sum / n) * (sum / n));
  EXPECT_GT(sd, expect / 3);
  EXPECT_LT(sd, expect * 3);
}

TEST(DriftProperty, InvariantsHoldAndXStaysPi) {
  gen::Rng rng(17);
  const auto c = synthesize_snapshot(3, {{0, 1}, {1, 2}}, 4);
  for (int i = 0; i < 60; ++i) {
    const double hours = rng.uniform(0, 1e4);
    const auto d = drift_snapshot(c, hours, static_cast<std::uint64_t>(i));
    EXPECT_NO_THROW(validate(d));
    for (int q = 0; q < 3; ++q) {
      EXPECT_GT(d.qubits[q].frequency, 0);
      EXPECT_LE(d.qubits[q].t2, 2 * d.qubits[q].t1);
      EXPECT_GE(x_template_p1(d, q), 1 - 1e-9);
    }
  }
}

}  // namespace
}  // namespace pulsegate
