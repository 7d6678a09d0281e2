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

#include "pulsegate/core/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "pulsegate/core/errors.hpp"
#include "pulsegate/core/random.hpp"

namespace pulsegate {

namespace {

constexpr double kMinSeparation = 0.050;  // GHz
constexpr double kSigma = 40.0;
constexpr double kCrSigma = 32.0;
constexpr double kCrWidth = 192.0;
constexpr double kMeasureAmp = 0.1;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

std::optional<int> CalibrationSnapshot::pair_index(int c, int t) const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].control == c && pairs[i].target == t) return static_cast<int>(i);
  }
  return std::nullopt;
}

double CalibrationSnapshot::channel_frequency(Channel c) const {
  if (c.kind == ChannelKind::control) {
    return qubits.at(static_cast<std::size_t>(pairs.at(static_cast<std::size_t>(c.index)).target))
        .frequency;
  }
  return qubits.at(static_cast<std::size_t>(c.index)).frequency;
}

std::vector<int> CalibrationSnapshot::channel_qubits(Channel c) const {
  if (c.kind == ChannelKind::control) {
    const auto& p = pairs.at(static_cast<std::size_t>(c.index));
    return {p.control, p.target};
  }
  return {c.index};
}

double area_amplitude(const Waveform& unit_shape, double scale, double angle, double dt_ns) {
  double area = 0.0;
  for (const auto& s : unit_shape.materialize()) area += std::abs(s);
  return angle / (scale * area * dt_ns);
}

void validate(const CalibrationSnapshot& c) {
  if (c.qubits.empty()) throw InvalidArgument("calibration has no qubits");
  if (c.templates.size() != c.qubits.size()) {
    throw InvalidArgument("calibration needs one template set per qubit");
  }
  for (std::size_t i = 0; i < c.qubits.size(); ++i) {
    const auto& q = c.qubits[i];
    const std::string where = "qubit " + std::to_string(i) + ": ";
    if (!(q.frequency > 0.0)) throw InvalidArgument(where + "frequency must be positive");
    if (!(q.rabi_scale > 0.0)) throw InvalidArgument(where + "rabi_scale must be positive");
    if (!(q.t1 > 0.0) || !(q.t2 > 0.0)) throw InvalidArgument(where + "T1/T2 must be positive");
    if (q.t2 > 2.0 * q.t1) throw InvalidArgument(where + "t2 exceeds 2*t1");
    validate(c.templates[i].x);
    validate(c.templates[i].sx);
    validate(c.templates[i].measure);
  }
  for (const auto& p : c.pairs) {
    if (p.control < 0 || p.target < 0 || p.control >= c.num_qubits() ||
        p.target >= c.num_qubits() || p.control == p.target) {
      throw InvalidArgument("coupling pair out of range");
    }
    if (!(p.cr_scale > 0.0)) throw InvalidArgument("cr_scale must be positive");
    validate(p.cr);
  }
  if (c.timing.dt <= 0.0 || c.timing.granularity <= 0 || c.timing.pulse_alignment <= 0 ||
      c.timing.acquire_alignment <= 0) {
    throw InvalidArgument("timing constraints must be positive");
  }
}

CalibrationSnapshot synthesize_snapshot(int num_qubits,
                                        const std::vector<std::pair<int, int>>& coupling_map,
                                        std::uint64_t seed) {
  if (num_qubits < 1) throw InvalidArgument("num_qubits must be >= 1");
  if (num_qubits > 1 && coupling_map.empty()) {
    throw InvalidArgument("a multi-qubit device needs a non-empty coupling map");
  }
  std::mt19937_64 rng(splitmix64(seed));
  CalibrationSnapshot c;
  c.timestamp = kBaseTimestamp;
  const double dt_ns = c.timing.dt_ns();

  std::vector<double> freqs;
  for (int q = 0; q < num_qubits; ++q) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100000) throw InvalidArgument("cannot place qubit frequencies");
      double f = uniform(rng, 4.5, 5.5);
      bool ok = std::all_of(freqs.begin(), freqs.end(),
                            [&](double g) { return std::abs(f - g) >= kMinSeparation; });
      if (ok) {
        freqs.push_back(f);
        break;
      }
    }
  }

  for (int q = 0; q < num_qubits; ++q) {
    QubitCalibration qc;
    qc.frequency = freqs[static_cast<std::size_t>(q)];
    qc.anharmonicity = uniform(rng, -0.34, -0.30);
    qc.t1 = uniform(rng, 80.0, 200.0);
    qc.t2 = qc.t1 * uniform(rng, 0.5, 1.5);
    qc.rabi_scale = uniform(rng, 0.6, 0.9);
    c.qubits.push_back(qc);

    // Two-level model: no leakage level, so the DRAG correction is zero.
    const auto unit = Waveform::drag(kSingleQubitDuration, 1.0, kSigma, 0.0);
    const double amp = area_amplitude(unit, qc.rabi_scale, std::numbers::pi, dt_ns);
    NativeTemplates t;
    t.x = Waveform::drag(kSingleQubitDuration, amp, kSigma, 0.0);
    t.sx = Waveform::drag(kSingleQubitDuration, amp / 2.0, kSigma, 0.0);
    t.measure = Waveform::constant(kMeasureDuration, kMeasureAmp);
    t.acquire_duration = kMeasureDuration;
    c.templates.push_back(t);
  }

  for (const auto& [ctl, tgt] : coupling_map) {
    if (ctl < 0 || tgt < 0 || ctl >= num_qubits || tgt >= num_qubits || ctl == tgt) {
      throw InvalidArgument("coupling (" + std::to_string(ctl) + "," + std::to_string(tgt) +
                            ") out of range");
    }
    if (c.pair_index(ctl, tgt)) throw InvalidArgument("duplicate coupling pair");
    PairCalibration p;
    p.control = ctl;
    p.target = tgt;
    p.cr_scale = uniform(rng, 0.045, 0.065);
    const auto unit = Waveform::gaussian_square(kCrossResonanceDuration, 1.0, kCrSigma, kCrWidth);
    // Negative amplitude: the pulse implements exp(+i pi/4 Z(x)X).
    const double amp = area_amplitude(unit, p.cr_scale, std::numbers::pi / 2.0, dt_ns);
    p.cr = Waveform::gaussian_square(kCrossResonanceDuration, -amp, kCrSigma, kCrWidth);
    c.pairs.push_back(p);
  }
  validate(c);
  return c;
}

CalibrationSnapshot drift_snapshot(const CalibrationSnapshot& c, double elapsed_hours,
                                   std::uint64_t seed, const DriftModel& model) {
  if (!(elapsed_hours >= 0.0)) throw InvalidArgument("elapsed must be >= 0");
  std::mt19937_64 rng(derive_seed(seed, 0xd41f7));
  std::normal_distribution<double> normal(0.0, 1.0);
  const double days = std::sqrt(elapsed_hours / 24.0);
  auto jitter = [&](double rate) { return 1.0 + uniform(rng, -1.0, 1.0) * rate * days; };

  CalibrationSnapshot out = c;
  out.timestamp = c.timestamp + static_cast<std::int64_t>(std::llround(elapsed_hours * 3600.0));
  for (std::size_t q = 0; q < out.qubits.size(); ++q) {
    auto& qc = out.qubits[q];
    qc.frequency += normal(rng) * model.frequency_rate * std::sqrt(elapsed_hours);
    qc.t1 = std::max(qc.t1 * jitter(model.coherence_rate), 1e-3);
    qc.t2 = std::max(qc.t2 * jitter(model.coherence_rate), 1e-3);
    qc.t2 = std::min(qc.t2, 2.0 * qc.t1);
    const double f = std::clamp(jitter(model.scale_rate), 0.8, 1.25);
    const double old_scale = qc.rabi_scale;
    qc.rabi_scale = old_scale * f;
    const double rescale = old_scale / qc.rabi_scale;
    auto& t = out.templates[q];
    t.x = t.x.scaled(rescale);
    t.sx = t.sx.scaled(rescale);
  }
  for (auto& p : out.pairs) {
    const double f = std::clamp(jitter(model.scale_rate), 0.8, 1.25);
    const double old_scale = p.cr_scale;
    p.cr_scale = old_scale * f;
    p.cr = p.cr.scaled(old_scale / p.cr_scale);
  }
  return out;
}

}  // namespace pulsegate
