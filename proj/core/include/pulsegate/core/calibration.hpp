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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pulsegate/core/timing.hpp"
#include "pulsegate/core/waveform.hpp"

namespace pulsegate {

struct QubitCalibration {
  double frequency = 5.0;       // GHz
  double anharmonicity = -0.3;  // GHz
  double t1 = 100.0;            // us
  double t2 = 100.0;            // us
  double rabi_scale = 0.75;     // rad per ns at |s| = 1

  bool operator==(const QubitCalibration&) const = default;
};

// A directed coupling. Its position in CalibrationSnapshot::pairs is the
// index of its control channel.
struct PairCalibration {
  int control = 0;
  int target = 1;
  double cr_scale = 0.05;  // rad per ns of Z(x)X rotation at |s| = 1
  Waveform cr;             // cross-resonance template, exp(+i pi/4 ZX)

  bool operator==(const PairCalibration&) const = default;
};

struct NativeTemplates {
  Waveform x;
  Waveform sx;
  Waveform measure;
  std::int64_t acquire_duration = 1024;

  bool operator==(const NativeTemplates&) const = default;
};

struct CalibrationSnapshot {
  std::int64_t timestamp = 0;  // unix seconds
  std::vector<QubitCalibration> qubits;
  std::vector<NativeTemplates> templates;  // one per qubit
  std::vector<PairCalibration> pairs;
  TimingConstraints timing;
  double forbidden_lo = 2.0;  // GHz
  double forbidden_hi = 3.0;

  int num_qubits() const { return static_cast<int>(qubits.size()); }
  int num_pairs() const { return static_cast<int>(pairs.size()); }
  DeviceShape shape() const { return {num_qubits(), num_pairs()}; }

  std::optional<int> pair_index(int control, int target) const;
  bool in_forbidden_band(double f) const { return f >= forbidden_lo && f <= forbidden_hi; }

  // Calibrated frame frequency for a device channel: the qubit frequency for
  // drive/measure/acquire, the target qubit frequency for control.
  double channel_frequency(Channel c) const;
  // Qubits a device channel acts on (one, or two for control).
  std::vector<int> channel_qubits(Channel c) const;

  bool operator==(const CalibrationSnapshot&) const = default;
};

// Throws InvalidArgument if the snapshot breaks its invariants.
void validate(const CalibrationSnapshot& c);

inline constexpr std::int64_t kBaseTimestamp = 1700000000;
inline constexpr std::int64_t kSingleQubitDuration = 160;
inline constexpr std::int64_t kCrossResonanceDuration = 320;
inline constexpr std::int64_t kMeasureDuration = 1024;

// Deterministic synthetic device. Rejects num_qubits < 1 and multi-qubit
// devices without couplings.
CalibrationSnapshot synthesize_snapshot(int num_qubits,
                                        const std::vector<std::pair<int, int>>& coupling_map,
                                        std::uint64_t seed);

struct DriftModel {
  double frequency_rate = 2e-5;  // GHz per sqrt(hour)
  double coherence_rate = 0.10;  // relative, per sqrt(day)
  double scale_rate = 0.01;      // rabi/cr relative jitter, per sqrt(day)
};

// Frequencies random-walk, T1/T2 jitter, drive scales jitter and every
// template amplitude is rescaled so the rotation it implements is unchanged.
CalibrationSnapshot drift_snapshot(const CalibrationSnapshot& c, double elapsed_hours,
                                   std::uint64_t seed, const DriftModel& model = {});

// Amplitude giving rotation angle `angle` for a unit-amplitude envelope on a
// channel with the given scale (rad/ns).
double area_amplitude(const Waveform& unit_shape, double scale, double angle, double dt_ns);

}  // namespace pulsegate
