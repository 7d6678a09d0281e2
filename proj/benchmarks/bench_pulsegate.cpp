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

#include <benchmark/benchmark.h>

#include "pulsegate/attacks/gadgets.hpp"
#include "pulsegate/demo/demo.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/simulator.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pg = pulsegate;

namespace {

pg::GateCircuit ladder(int n) {
  pg::GateCircuit c;
  c.num_qubits = n;
  c.num_clbits = n;
  c.add(pg::make_op(pg::GateKind::H, {0}));
  for (int q = 0; q + 1 < n; ++q) {
    c.add(pg::make_op(pg::GateKind::CX, {q, q + 1}));
    c.add(pg::make_op(pg::GateKind::U3, {q}, {0.3, 0.2, 0.1}));
  }
  for (int q = 0; q < n; ++q) c.add(pg::make_measure(q, q));
  return c;
}

std::vector<std::pair<int, int>> chain(int n) {
  std::vector<std::pair<int, int>> out;
  for (int q = 0; q + 1 < n; ++q) {
    out.emplace_back(q, q + 1);
    out.emplace_back(q + 1, q);
  }
  return out;
}

void BM_PlayPropagator(benchmark::State& state) {
  const auto calib = pg::synthesize_snapshot(1, {}, 7);
  const auto samples = calib.templates[0].x.materialize();
  const pg::sim::FrameState frame = pg::sim::initial_frame(calib, pg::drive(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pg::sim::play_propagator(samples, frame, calib.qubits[0].frequency,
                                                      calib.qubits[0].rabi_scale, 1.0, calib,
                                                      static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PlayPropagator)->Arg(1)->Arg(4);

void BM_Lower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto calib = pg::synthesize_snapshot(n, chain(n), 7);
  const auto c = ladder(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pg::lower::lower_circuit(c, calib, pg::lower::LoweringMode::strict));
  }
}
BENCHMARK(BM_Lower)->DenseRange(2, 6, 2);

void BM_SimulateUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto calib = pg::synthesize_snapshot(n, chain(n), 7);
  auto c = ladder(n);
  c.ops.resize(c.ops.size() - static_cast<std::size_t>(n));
  c.num_clbits = 0;
  const auto s = pg::lower::lower_circuit(c, calib, pg::lower::LoweringMode::strict);
  for (auto _ : state) benchmark::DoNotOptimize(pg::sim::simulate_unitary(s, calib));
}
BENCHMARK(BM_SimulateUnitary)->DenseRange(2, 5, 1);

void BM_SimulateShotsNoisy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto calib = pg::synthesize_snapshot(n, chain(n), 7);
  const auto s = pg::lower::lower_circuit(ladder(n), calib, pg::lower::LoweringMode::strict);
  pg::sim::SimOptions opt;
  opt.noise = true;
  opt.shots = 4096;
  for (auto _ : state) benchmark::DoNotOptimize(pg::sim::simulate_shots(s, calib, opt));
}
BENCHMARK(BM_SimulateShotsNoisy)->DenseRange(2, 4, 1);

void BM_VerifyPipeline(benchmark::State& state) {
  const auto calib = pg::demo::grover_device();
  const auto c = pg::demo::grover_circuit("11", calib);
  const auto rec = pg::verify::make_record(
      c, pg::lower::lower_circuit(c, calib, pg::lower::LoweringMode::strict), calib);
  for (auto _ : state) benchmark::DoNotOptimize(pg::verify::verify_pipeline(c, rec, calib));
}
BENCHMARK(BM_VerifyPipeline);

void BM_FlipGadget(benchmark::State& state) {
  for (auto _ : state) {
    for (auto k : pg::attack::kAllAttackKinds) {
      benchmark::DoNotOptimize(pg::attack::build_flip_gadget(k, true));
    }
  }
}
BENCHMARK(BM_FlipGadget);

}  // namespace

BENCHMARK_MAIN();
