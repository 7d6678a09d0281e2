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

#include "pulsegate/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace pulsegate::sim {

using Eigen::Index;

namespace {

constexpr double kPi = std::numbers::pi;

// exp(-i (hx sx + hy sy + hz sz)).
Mat2 su2_exp(double hx, double hy, double hz) {
  const double a = std::sqrt(hx * hx + hy * hy + hz * hz);
  Mat2 m;
  if (a == 0.0) return Mat2::Identity();
  const double c = std::cos(a);
  const double s = std::sin(a) / a;
  const cplx i(0.0, 1.0);
  m(0, 0) = c - i * s * hz;
  m(0, 1) = -i * s * hx - s * hy;
  m(1, 0) = -i * s * hx + s * hy;
  m(1, 1) = c + i * s * hz;
  return m;
}

double microseconds(std::int64_t samples, const TimingConstraints& tc) {
  return static_cast<double>(samples) * tc.dt * 1e6;
}

void decay(Matrix& rho, int local, const QubitCalibration& q, double t_us) {
  if (t_us <= 0.0) return;
  amplitude_damping(rho, local, 1.0 - std::exp(-t_us / q.t1));
  const double inv_tphi = 1.0 / q.t2 - 1.0 / (2.0 * q.t1);
  if (inv_tphi > 0.0) phase_damping(rho, local, 1.0 - std::exp(-t_us * inv_tphi));
}

struct AcquireInfo {
  std::int64_t start;
  std::int64_t end;
  int qubit;
  int slot;
};

class Engine {
 public:
  Engine(const CalibrationSnapshot& calib, const SimOptions& opt, bool unitary,
         std::vector<int> qubits)
      : calib_(calib), opt_(opt), unitary_(unitary), qubits_(std::move(qubits)), frames_(calib) {
    if (opt_.substep < 1) throw SimulationError("substep must be >= 1");
    if (qubits_.size() > 8) throw SimulationError("simulator is limited to 8 qubits");
    local_.assign(static_cast<std::size_t>(calib.num_qubits()), -1);
    for (std::size_t i = 0; i < qubits_.size(); ++i) {
      const int q = qubits_[i];
      if (q < 0 || q >= calib.num_qubits()) throw SimulationError("qubit outside the device");
      local_[static_cast<std::size_t>(q)] = static_cast<int>(i);
    }
    n_ = static_cast<int>(qubits_.size());
    clock_.assign(qubits_.size(), 0);
    const Index dim = Index{1} << n_;
    if (unitary_) {
      branches_[0] = Matrix::Identity(dim, dim);
    } else {
      branches_[0] = DensityState::ground(n_).rho;
    }
  }

  void run(const Schedule& s) {
    collect_acquires(s);
    for (const auto& e : s.entries()) step(e);
    if (!unitary_) {
      const auto end = s.duration();
      for (int l = 0; l < n_; ++l) idle(l, end);
    }
    // Report in each qubit's drive frame: a frame change of -theta shows up
    // as the RZ(theta) it implements.
    for (int l = 0; l < n_; ++l) {
      const Channel d = drive(qubits_[static_cast<std::size_t>(l)]);
      auto it = frames_.frames().find(d);
      if (it == frames_.frames().end() || it->second.phase == 0.0) continue;
      apply1(l, rz(-it->second.phase));
    }
  }

  std::map<std::uint64_t, Matrix>& branches() { return branches_; }
  int max_slot() const { return max_slot_; }

 private:
  int local_of(int device_q) const {
    if (device_q < 0 || device_q >= calib_.num_qubits()) {
      throw SimulationError("qubit " + std::to_string(device_q) + " outside the device");
    }
    int l = local_[static_cast<std::size_t>(device_q)];
    if (l < 0) {
      throw SimulationError("qubit " + std::to_string(device_q) +
                            " is not part of the simulated register");
    }
    return l;
  }

  void check_channel(Channel c) const {
    if (!calib_.shape().contains(c)) {
      throw SimulationError("unknown channel " + to_string(c));
    }
  }

  void collect_acquires(const Schedule& s) {
    std::vector<AcquireInfo> acq;
    for (const auto& e : s.entries()) {
      if (const auto* a = std::get_if<Acquire>(&e.instruction)) {
        if (unitary_) throw SimulationError("Acquire has no unitary action");
        if (a->memory_slot < 0 || a->memory_slot >= 64) {
          throw SimulationError("memory slot out of range");
        }
        acq.push_back({e.start_time, e.end_time(), a->qubit, a->memory_slot});
        acquire_starts_.insert({a->qubit, e.start_time});
        max_slot_ = std::max(max_slot_, a->memory_slot);
      }
    }
    for (std::size_t i = 0; i < acq.size(); ++i) {
      for (std::size_t j = i + 1; j < acq.size(); ++j) {
        if (acq[i].slot != acq[j].slot) continue;
        const bool overlap = acq[i].start < acq[j].end && acq[j].start < acq[i].end;
        if (overlap || acq[i].start == acq[j].start) {
          throw SimulationError("memory slot collision on slot " + std::to_string(acq[i].slot));
        }
      }
    }
  }

  void apply1(int l, const Mat2& u) {
    for (auto& [key, m] : branches_) {
      left_1q(m, l, u);
      if (!unitary_) right_1q_adjoint(m, l, u);
    }
  }

  void applyc(int c, int t, const Mat2& b0, const Mat2& b1) {
    for (auto& [key, m] : branches_) {
      left_controlled(m, c, t, b0, b1);
      if (!unitary_) right_controlled_adjoint(m, c, t, b0, b1);
    }
  }

  void idle(int l, std::int64_t t) {
    auto& clk = clock_[static_cast<std::size_t>(l)];
    if (t <= clk) return;
    if (opt_.noise && !unitary_) {
      const auto& qc = calib_.qubits[static_cast<std::size_t>(qubits_[static_cast<std::size_t>(l)])];
      for (auto& [key, m] : branches_) decay(m, l, qc, microseconds(t - clk, calib_.timing));
    }
    clk = t;
  }

  void busy(int l, std::int64_t start, std::int64_t end) {
    idle(l, start);
    if (opt_.noise_during_play) {
      idle(l, end);
    } else {
      auto& clk = clock_[static_cast<std::size_t>(l)];
      clk = std::max(clk, end);
    }
  }

  void step(const ScheduleEntry& e) {
    const Channel ch = e.channel();
    check_channel(ch);
    if (is_frame(e.instruction)) {
      auto& f = frames_[ch];
      f = apply_frame_instruction(f, e.instruction);
      return;
    }
    if (const auto* p = std::get_if<Play>(&e.instruction)) {
      play(e.start_time, *p);
    } else if (const auto* a = std::get_if<Acquire>(&e.instruction)) {
      const int l = local_of(a->qubit);
      idle(l, e.start_time);
      std::map<std::uint64_t, Matrix> next;
      const std::uint64_t bit = std::uint64_t{1} << a->memory_slot;
      for (auto& [key, m] : branches_) {
        for (int outcome = 0; outcome < 2; ++outcome) {
          Matrix pm = m;
          project(pm, l, outcome);
          if (pm.trace().real() <= 0.0) continue;
          const std::uint64_t k = outcome ? (key | bit) : (key & ~bit);
          auto it = next.find(k);
          if (it == next.end()) {
            next.emplace(k, std::move(pm));
          } else {
            it->second += pm;
          }
        }
      }
      branches_ = std::move(next);
      busy(l, e.start_time, e.end_time());
    }
    // Delay: idle time is charged when the qubit is next touched.
  }

  void play(std::int64_t start, const Play& p) {
    const Channel ch = p.channel;
    const auto samples = p.waveform.materialize();
    const std::int64_t end = start + static_cast<std::int64_t>(samples.size());
    const FrameState frame = frames_[ch];
    const double extra =
        opt_.misalignment_model ? misalignment_phase(frame, start, calib_.timing) : 0.0;
    switch (ch.kind) {
      case ChannelKind::drive: {
        const int l = local_of(ch.index);
        const auto& qc = calib_.qubits[static_cast<std::size_t>(ch.index)];
        const Mat2 u = play_propagator(samples, frame, qc.frequency, qc.rabi_scale, 1.0, calib_,
                                       opt_.substep, extra);
        idle(l, start);
        apply1(l, u);
        busy(l, start, end);
        return;
      }
      case ChannelKind::control: {
        const auto& pc = calib_.pairs[static_cast<std::size_t>(ch.index)];
        const int c = local_of(pc.control);
        const int t = local_of(pc.target);
        const double ft = calib_.qubits[static_cast<std::size_t>(pc.target)].frequency;
        const Mat2 b0 =
            play_propagator(samples, frame, ft, pc.cr_scale, 1.0, calib_, opt_.substep, extra);
        const Mat2 b1 =
            play_propagator(samples, frame, ft, pc.cr_scale, -1.0, calib_, opt_.substep, extra);
        idle(c, start);
        idle(t, start);
        applyc(c, t, b0, b1);
        busy(c, start, end);
        busy(t, start, end);
        return;
      }
      case ChannelKind::measure: {
        if (unitary_) throw SimulationError("measure-channel Play has no unitary action");
        const int l = local_of(ch.index);
        idle(l, start);
        // A readout tone with nothing recording it still collapses the qubit.
        if (!acquire_starts_.count({ch.index, start})) {
          for (auto& [key, m] : branches_) dephase(m, l);
        }
        busy(l, start, end);
        return;
      }
      case ChannelKind::acquire:
        break;
    }
    throw SimulationError("Play on " + to_string(ch) + " is not supported");
  }

  const CalibrationSnapshot& calib_;
  SimOptions opt_;
  bool unitary_;
  std::vector<int> qubits_;
  std::vector<int> local_;
  int n_ = 0;
  FrameTable frames_;
  std::vector<std::int64_t> clock_;
  std::map<std::uint64_t, Matrix> branches_;
  std::set<std::pair<int, std::int64_t>> acquire_starts_;
  int max_slot_ = -1;
};

std::vector<int> all_qubits(const CalibrationSnapshot& calib) {
  std::vector<int> q(static_cast<std::size_t>(calib.num_qubits()));
  for (int i = 0; i < calib.num_qubits(); ++i) q[static_cast<std::size_t>(i)] = i;
  return q;
}

std::string bitstring(std::uint64_t key, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int b = 0; b < width; ++b) {
    if (key & (std::uint64_t{1} << b)) s[static_cast<std::size_t>(width - 1 - b)] = '1';
  }
  return s;
}

}  // namespace

Mat2 play_propagator(const std::vector<cplx>& samples, const FrameState& frame,
                     double qubit_frequency, double scale, double sign,
                     const CalibrationSnapshot& calib, int substep, double extra_phase) {
  if (substep < 1) throw SimulationError("substep must be >= 1");
  const double dt = calib.timing.dt_ns();
  const double detuning = frame.frequency - qubit_frequency;
  const bool coupled = !calib.in_forbidden_band(frame.frequency);
  Mat2 u = Mat2::Identity();
  const std::size_t n = samples.size();
  for (std::size_t k = 0; k < n; k += static_cast<std::size_t>(substep)) {
    const std::size_t m = std::min(n - k, static_cast<std::size_t>(substep));
    cplx mean{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) mean += samples[k + j];
    mean /= static_cast<double>(m);
    const double span = dt * static_cast<double>(m);
    double hx = 0.0;
    double hy = 0.0;
    if (coupled && mean != cplx{0.0, 0.0}) {
      const double half = 0.5 * sign * scale * std::abs(mean) * span;
      const double phi = frame.phase + extra_phase + std::arg(mean);
      hx = half * std::cos(phi);
      hy = half * std::sin(phi);
    }
    const double hz = kPi * detuning * span;
    u = su2_exp(hx, hy, hz) * u;
  }
  if (detuning != 0.0) {
    u = su2_exp(0.0, 0.0, -kPi * detuning * dt * static_cast<double>(n)) * u;
  }
  return u;
}

double misalignment_phase(const FrameState& frame, std::int64_t start,
                          const TimingConstraints& tc) {
  const std::int64_t grid = tc.start_grid();
  if (grid <= 0) return 0.0;
  std::int64_t delta = start % grid;
  if (delta < 0) delta += grid;
  if (delta == 0) return 0.0;
  return 2.0 * kPi * frame.frequency * static_cast<double>(delta) * tc.dt_ns();
}

DensityState evolve_play(DensityState state, Channel channel, const Waveform& waveform,
                         const FrameState& frame, const CalibrationSnapshot& calib,
                         const SimOptions& options, std::int64_t start_time) {
  if (state.n != calib.num_qubits()) throw SimulationError("state does not match the device");
  if (!calib.shape().contains(channel)) throw SimulationError("unknown channel " + to_string(channel));
  const auto samples = waveform.materialize();
  const double extra =
      options.misalignment_model ? misalignment_phase(frame, start_time, calib.timing) : 0.0;
  if (channel.kind == ChannelKind::drive) {
    const auto& qc = calib.qubits[static_cast<std::size_t>(channel.index)];
    apply_unitary_1q(state, channel.index,
                     play_propagator(samples, frame, qc.frequency, qc.rabi_scale, 1.0, calib,
                                     options.substep, extra));
    return state;
  }
  if (channel.kind == ChannelKind::control) {
    const auto& pc = calib.pairs[static_cast<std::size_t>(channel.index)];
    const double ft = calib.qubits[static_cast<std::size_t>(pc.target)].frequency;
    apply_controlled(
        state, pc.control, pc.target,
        play_propagator(samples, frame, ft, pc.cr_scale, 1.0, calib, options.substep, extra),
        play_propagator(samples, frame, ft, pc.cr_scale, -1.0, calib, options.substep, extra));
    return state;
  }
  throw SimulationError("Play on " + to_string(channel) + " outside a measurement context");
}

DensityState evolve_delay(DensityState state, int qubit, std::int64_t duration,
                          const CalibrationSnapshot& calib, const SimOptions& options) {
  if (duration < 0) throw SimulationError("negative delay");
  if (qubit < 0 || qubit >= state.n) throw SimulationError("qubit out of range");
  if (!options.noise || duration == 0) return state;
  decay(state.rho, qubit, calib.qubits[static_cast<std::size_t>(qubit)],
        microseconds(duration, calib.timing));
  return state;
}

Matrix simulate_unitary(const Schedule& s, const CalibrationSnapshot& calib,
                        const SimOptions& options) {
  return simulate_unitary_on(s, calib, all_qubits(calib), options);
}

Matrix simulate_unitary_on(const Schedule& s, const CalibrationSnapshot& calib,
                           const std::vector<int>& qubits, const SimOptions& options) {
  SimOptions o = options;
  o.noise = false;
  o.noise_during_play = false;
  Engine eng(calib, o, true, qubits);
  eng.run(s);
  return eng.branches().at(0);
}

ShotResult simulate_shots(const Schedule& s, const CalibrationSnapshot& calib,
                          const SimOptions& options) {
  if (options.shots < 0) throw SimulationError("shots must be >= 0");
  Engine eng(calib, options, false, all_qubits(calib));
  eng.run(s);
  ShotResult r;
  r.num_clbits = options.num_clbits > 0 ? options.num_clbits : eng.max_slot() + 1;
  if (eng.max_slot() >= r.num_clbits) throw SimulationError("memory slot beyond num_clbits");
  r.state.n = calib.num_qubits();
  const Index dim = Index{1} << r.state.n;
  r.state.rho = Matrix::Zero(dim, dim);
  std::vector<std::string> keys;
  std::vector<double> weights;
  for (const auto& [key, m] : eng.branches()) {
    r.state.rho += m;
    const double p = std::max(0.0, m.trace().real());
    const auto bits = bitstring(key, r.num_clbits);
    r.probabilities[bits] += p;
    keys.push_back(bits);
    weights.push_back(p);
  }
  if (options.shots > 0 && !weights.empty()) {
    std::mt19937_64 rng(options.seed);
    std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
    for (std::int64_t i = 0; i < options.shots; ++i) ++r.counts[keys[dist(rng)]];
  }
  return r;
}

DensityState simulate_density(const Schedule& s, const CalibrationSnapshot& calib,
                              const SimOptions& options) {
  SimOptions o = options;
  o.shots = 0;
  return simulate_shots(s, calib, o).state;
}

double marginal_one(const std::map<std::string, std::int64_t>& counts, int bit) {
  std::int64_t total = 0;
  std::int64_t ones = 0;
  for (const auto& [k, v] : counts) {
    total += v;
    const auto pos = static_cast<std::ptrdiff_t>(k.size()) - 1 - bit;
    if (pos >= 0 && k[static_cast<std::size_t>(pos)] == '1') ones += v;
  }
  return total ? static_cast<double>(ones) / static_cast<double>(total) : 0.0;
}

double marginal_one(const std::map<std::string, double>& probabilities, int bit) {
  double ones = 0.0;
  for (const auto& [k, v] : probabilities) {
    const auto pos = static_cast<std::ptrdiff_t>(k.size()) - 1 - bit;
    if (pos >= 0 && k[static_cast<std::size_t>(pos)] == '1') ones += v;
  }
  return ones;
}

}  // namespace pulsegate::sim
