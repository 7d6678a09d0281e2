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

// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "pulsegate/attacks/gadgets.hpp"
#include "pulsegate/demo/demo.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/simulator.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pg = pulsegate;
using pg::attack::AttackKind;
namespace oracle = pg::oracle;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Verdict u3_lowering() {
  const auto t0 = Clock::now();
  const auto calib = pg::synthesize_snapshot(1, {}, 7);
  pg::gen::Rng rng(2026);
  double worst = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(0, oracle::kPi), p = rng.uniform(-oracle::kPi, oracle::kPi),
                 l = rng.uniform(-oracle::kPi, oracle::kPi);
    const auto s = pg::lower::lower_gate(pg::make_op(pg::GateKind::U3, {0}, {t, p, l}), calib);
    worst = std::min(worst, oracle::gate_fidelity(pg::sim::simulate_unitary_on(s, calib, {0}),
                                                  oracle::u3(t, p, l)));
  }
  const double secs = seconds_since(t0);
  return {worst >= 1 - 1e-6 && secs < 10.0,
          fmt("100 draws, worst 1-F = %.2e, %.2f s", 1 - worst, secs)};
}

Verdict cx_lowering() {
  double worst = 1.0;
  for (bool one_way : {false, true}) {
    const auto& calib = pg::gen::chain_device(2, one_way);
    for (auto [c, t] : {std::pair{0, 1}, std::pair{1, 0}}) {
      pg::GateCircuit circ;
      circ.num_qubits = 2;
      circ.add(pg::make_op(pg::GateKind::CX, {c, t}));
      const auto s = pg::lower::lower_circuit(circ, calib, pg::lower::LoweringMode::strict);
      worst = std::min(worst, oracle::gate_fidelity(pg::sim::simulate_unitary(s, calib),
                                                    oracle::cx_on(c, t, 2)));
    }
  }
  return {worst >= 1 - 1e-6, fmt("both orientations, both coupling maps, worst 1-F = %.2e", 1 - worst)};
}

// Max over pulse length of P(|1>) for a constant drive detuned by `ratio`
// Rabi frequencies.
double detuned_max(const pg::CalibrationSnapshot& calib, double ratio, double amp) {
  const double dt = calib.timing.dt_ns();
  const double omega = calib.qubits[0].rabi_scale * amp;  // rad/ns
  const double delta_ghz = ratio * omega / (2 * oracle::kPi);
  const double omega_eff = std::sqrt(1 + ratio * ratio) * omega;
  const auto horizon = static_cast<std::int64_t>(std::ceil(1.5 * oracle::kPi / (omega_eff * dt)));
  double best = 0.0;
  for (std::int64_t len = 1; len <= horizon; ++len) {
    pg::Schedule s;
    s.insert(0, pg::SetFrequency{pg::drive(0), calib.qubits[0].frequency + delta_ghz});
    s.insert(0, pg::Play{pg::drive(0), pg::Waveform::constant(len, {amp, 0.0})});
    const auto u = pg::sim::simulate_unitary_on(s, calib, {0});
    best = std::max(best, std::norm(u(1, 0)));
  }
  return best;
}

Verdict detuned_rabi() {
  const auto calib = pg::synthesize_snapshot(1, {}, 7);
  const double amp = 0.01 / (calib.qubits[0].rabi_scale * calib.timing.dt_ns());
  double worst = 0.0;
  for (double ratio : {0.0, 0.5, 1.0, 2.0}) {
    const double got = detuned_max(calib, ratio, amp);
    worst = std::max(worst, std::abs(got - oracle::rabi_max_excitation(1.0, ratio)));
  }
  return {worst <= 1e-3, fmt("delta/omega in {0,0.5,1,2}, worst |err| = %.2e", worst)};
}

// Calibration whose T1 is a whole number of granularity-aligned samples.
pg::CalibrationSnapshot grid_t1_device() {
  auto calib = pg::synthesize_snapshot(1, {}, 7);
  const double dt_us = calib.timing.dt * 1e6;
  const auto n = static_cast<std::int64_t>(calib.qubits[0].t1 / dt_us) / 16 * 16;
  calib.qubits[0].t1 = static_cast<double>(n) * dt_us;
  calib.qubits[0].t2 = std::min(calib.qubits[0].t2, 2 * calib.qubits[0].t1);
  return calib;
}

Verdict decoherence() {
  const auto calib = grid_t1_device();
  const std::int64_t t1 = pg::attack::t1_samples(calib, 0);
  pg::Schedule s = pg::lower::lower_gate(pg::make_op(pg::GateKind::X, {0}), calib);
  s.insert(160, pg::Delay{pg::drive(0), t1});
  pg::sim::SimOptions opt;
  opt.noise = true;
  const double p_density = pg::sim::simulate_density(s, calib, opt).prob_one(0);

  s.append(pg::lower::lower_gate(pg::make_measure(0, 0), calib), 160 + t1);
  opt.shots = 100000;
  opt.seed = 99;
  const auto shots = pg::sim::simulate_shots(s, calib, opt);
  const double p_shots = pg::sim::marginal_one(shots.counts, 0);
  const double e1 = std::exp(-1.0);
  return {std::abs(p_density - e1) <= 1e-6 && std::abs(p_shots - e1) <= 0.02,
          fmt("density P1 = %.9f, 1e5 shots P1 = %.4f, e^-1 = %.9f", p_density, p_shots, e1)};
}

Verdict flip_matrix() {
  const auto m = pg::demo::run_flip_matrix(7);
  bool ok = m.rows.size() == 7;
  std::ostringstream why;
  for (const auto& r : m.rows) {
    const bool flipper = r.kind != AttackKind::block && r.kind != AttackKind::timing;
    if (r.p1_disarmed > 0.01 || !r.disarmed_passes) {
      ok = false;
      why << " disarmed " << to_string(r.kind) << " bad;";
    }
    if (flipper && r.p1_armed < 0.99) {
      ok = false;
      why << " armed " << to_string(r.kind) << " P1 " << r.p1_armed << ";";
    }
    if (r.detected_by != pg::gen::designated_stage(r.kind)) {
      ok = false;
      why << " " << to_string(r.kind) << " missed;";
    }
  }
  // Block: 10 T1 from |1>.
  const auto block = std::find_if(m.rows.begin(), m.rows.end(),
                                  [](const auto& r) { return r.kind == AttackKind::block; });
  const double decay = std::exp(-10.0);
  if (block == m.rows.end() || block->p1_armed > 0.01 || std::abs(block->p1_armed - decay) > 1e-6) {
    ok = false;
    why << " block off its decay oracle;";
  }

  // Timing: sweep the second pulse's offset. Two opposite SX pulses leave
  // P1 = sin^2(slip / 2) with slip = 2 pi f delta dt.
  const auto g = pg::attack::build_flip_gadget(AttackKind::timing, false);
  const double f = g.calib.qubits[0].frequency, dt = g.calib.timing.dt_ns();
  double lo = 1.0, hi = 0.0, oracle_err = 0.0;
  std::vector<double> ps;
  for (int d = 0; d <= 15; ++d) {
    const auto c = d == 0 ? g.circuit
                          : pg::attack::timing_mismatch(g.circuit, g.gate_op, 1, d).artifact;
    const auto s = pg::lower::lower_circuit(c, g.calib, pg::lower::LoweringMode::permissive);
    const double p = pg::sim::marginal_one(pg::sim::simulate_shots(s, g.calib, {}).probabilities, 0);
    const double want = std::pow(std::sin(oracle::kPi * f * d * dt), 2);
    oracle_err = std::max(oracle_err, std::abs(p - want));
    lo = std::min(lo, p);
    hi = std::max(hi, p);
    ps.push_back(p);
  }
  bool rises = false, falls = false;
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (ps[i] > ps[i - 1] + 1e-9) rises = true;
    if (ps[i] < ps[i - 1] - 1e-9) falls = true;
  }
  if (hi - lo < 0.1 || !(rises && falls) || oracle_err > 1e-6) {
    ok = false;
    why << " timing sweep range " << hi - lo << " oracle err " << oracle_err << ";";
  }
  std::ostringstream d;
  d << "7 gadgets; block armed P1 = " << (block != m.rows.end() ? block->p1_armed : -1)
    << "; timing sweep range = " << hi - lo << why.str();
  return {ok, d.str()};
}

Verdict teleportation() {
  const auto t0 = Clock::now();
  const auto calib = pg::demo::teleport_device();
  pg::demo::TeleportOptions opt;
  opt.seed = 5;
  const auto bench = pg::demo::run_teleport(pg::demo::TeleportVariant::benchmark, calib, opt);
  const auto eve = pg::demo::run_teleport(pg::demo::TeleportVariant::coupling_eve, calib, opt);
  const auto delh = pg::demo::run_teleport(pg::demo::TeleportVariant::del_h, calib, opt);
  const double shots = static_cast<double>(opt.shots);

  bool bench_ok = bench.rows.size() == 11, eve_ok = true, delh_ok = true;
  double bob_dev = 0.0;
  for (std::size_t i = 0; i < bench.rows.size(); ++i) {
    const double th = std::pow(std::sin(bench.rows[i].theta / 2), 2);
    bench_ok = bench_ok && oracle::within_sigma(bench.rows[i].p1_bob, th, shots);
    eve_ok = eve_ok && oracle::within_sigma(eve.rows[i].p1_eve, th, shots);
    bob_dev = std::max(bob_dev, std::abs(eve.rows[i].p1_bob - th));
    delh_ok = delh_ok && oracle::within_sigma(delh.rows[i].p1_bob, th, shots);
  }
  const std::size_t mid = 5;  // theta = pi/2
  const double pur_delh = delh.rows[mid].purity_bob, pur_bench = bench.rows[mid].purity_bob;
  delh_ok = delh_ok && std::abs(pur_delh - 0.5) <= 0.01 && std::abs(pur_bench - 1.0) <= 0.01;
  eve_ok = eve_ok && bob_dev >= 0.2;
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "benchmark " << (bench_ok ? "ok" : "off") << "; coupling_eve Eve "
    << (eve_ok ? "tracks" : "off") << ", Bob max dev " << bob_dev << "; del_h purity "
    << pur_delh << " vs benchmark " << pur_bench << "; " << secs << " s";
  return {bench_ok && eve_ok && delh_ok && secs < 60.0, d.str()};
}

Verdict grover() {
  const auto calib = pg::demo::grover_device();
  bool ok = true;
  double worst_base = 1.0, worst_attack = 1.0;
  for (int m = 0; m < 4; ++m) {
    const auto marked = pg::demo::basis_state(m);
    const auto attacked = pg::demo::basis_state(3 - m);
    const auto r = pg::demo::run_grover(marked, attacked, calib, 4096, 3);
    worst_base = std::min(worst_base, r.baseline.at(marked));
    worst_attack = std::min(worst_attack, r.tampered.count(attacked) ? r.tampered.at(attacked) : 0.0);
    ok = ok && r.edited_gates == 4 && r.edited_instructions == 8;
  }
  ok = ok && worst_base >= 0.999 && worst_attack >= 0.95;
  return {ok, fmt("min baseline P(marked) = %.6f, min attacked P(target) = %.6f, 4 gates / 8 "
                  "frame changes edited",
                  worst_base, worst_attack)};
}

Verdict soundness() {
  const auto t0 = Clock::now();
  pg::gen::Rng rng(8);
  const int n = 250;
  int false_positives = 0;
  for (int i = 0; i < n; ++i) {
    const auto c = pg::gen::random_clean_case(rng);
    const auto s = pg::lower::lower_circuit(c.circuit, *c.calib, pg::lower::LoweringMode::strict);
    const auto rec = pg::verify::make_record(c.circuit, s, *c.calib);
    if (!pg::verify::verify_pipeline(c.circuit, rec, *c.calib).passed()) ++false_positives;
  }
  const double secs = seconds_since(t0);
  return {false_positives == 0 && secs < 300.0,
          fmt("%g clean circuits, %g false positives, %.1f s", n, false_positives, secs)};
}

Verdict completeness() {
  pg::gen::Rng rng(9);
  const int per_kind = 120;
  std::ostringstream d;
  bool ok = true;
  for (auto kind : pg::attack::kAllAttackKinds) {
    int hit = 0;
    for (int i = 0; i < per_kind; ++i) {
      const auto a = pg::gen::random_attack_case(rng, kind);
      const auto r = pg::verify::verify_pipeline(a.tampered, a.trusted, *a.calib);
      if (pg::gen::detected_as_designated(r, kind)) ++hit;
    }
    ok = ok && hit == per_kind;
    d << to_string(kind) << " " << hit << "/" << per_kind << " ";
  }
  return {ok, d.str() + "at the designated stage"};
}

Verdict drift_robustness() {
  pg::gen::Rng rng(10);
  int total = 0, passed = 0;
  auto check = [&](const pg::GateCircuit& clean, const pg::GateCircuit& rescaled,
                   const pg::CalibrationSnapshot& calib, const pg::CalibrationSnapshot& drifted) {
    const auto rec = pg::verify::make_record(
        clean, pg::lower::lower_circuit(clean, calib, pg::lower::LoweringMode::strict), calib);
    ++total;
    if (pg::verify::verify_pipeline(rescaled, rec, drifted).passed()) ++passed;
  };
  for (int i = 0; i < 60; ++i) {
    const auto c = pg::gen::random_clean_case(rng);
    const auto drifted = pg::drift_snapshot(*c.calib, 72.0, 1000 + static_cast<std::uint64_t>(i));
    check(c.circuit, pg::gen::build(c.recipe, drifted), *c.calib, drifted);
  }
  const auto tcal = pg::demo::teleport_device();
  const auto tdrift = pg::drift_snapshot(tcal, 72.0, 7);
  for (auto v : {pg::demo::TeleportVariant::benchmark}) {
    check(pg::demo::teleport_circuit(1.0, v, tcal).circuit,
          pg::demo::teleport_circuit(1.0, v, tdrift).circuit, tcal, tdrift);
  }
  const auto gcal = pg::demo::grover_device();
  const auto gdrift = pg::drift_snapshot(gcal, 72.0, 8);
  check(pg::demo::grover_circuit("10", gcal), pg::demo::grover_circuit("10", gdrift), gcal, gdrift);
  return {passed == total, fmt("%g of %g records re-verified clean after 72 h drift", passed, total)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"U3 lowering", u3_lowering},
      {"CX lowering", cx_lowering},
      {"detuned Rabi", detuned_rabi},
      {"decoherence", decoherence},
      {"flip matrix", flip_matrix},
      {"teleportation", teleportation},
      {"Grover phase attack", grover},
      {"defense soundness", soundness},
      {"defense completeness", completeness},
      {"drift robustness", drift_robustness},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& [name, fn] : criteria) {
    ++idx;
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("AC%02d %s %s: %s\n", idx, v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
