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

#include <complex>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace pulsegate {

using cplx = std::complex<double>;

enum class Shape { gaussian, drag, gaussian_square, constant };

std::string_view to_string(Shape s);
Shape parse_shape(std::string_view s);

struct ParametricPulse {
  Shape shape = Shape::constant;
  std::int64_t duration = 0;
  cplx amp{0.0, 0.0};
  double sigma = 0.0;
  double beta = 0.0;   // drag only
  double width = 0.0;  // gaussian_square only

  bool operator==(const ParametricPulse&) const = default;
};

struct SampledPulse {
  std::vector<cplx> samples;

  bool operator==(const SampledPulse&) const = default;
};

// Complex envelope s(t) of a Play. Samples are unitless with |s| <= 1.
class Waveform {
 public:
  Waveform() = default;
  explicit Waveform(ParametricPulse p);
  explicit Waveform(SampledPulse s);

  static Waveform gaussian(std::int64_t duration, cplx amp, double sigma);
  static Waveform drag(std::int64_t duration, cplx amp, double sigma, double beta);
  static Waveform gaussian_square(std::int64_t duration, cplx amp, double sigma, double width);
  static Waveform constant(std::int64_t duration, cplx amp);
  static Waveform sampled(std::vector<cplx> samples);

  bool is_parametric() const { return std::holds_alternative<ParametricPulse>(v_); }
  const ParametricPulse& parametric() const { return std::get<ParametricPulse>(v_); }
  const SampledPulse& samples() const { return std::get<SampledPulse>(v_); }

  std::int64_t duration() const;

  // Parametric amplitude, or the largest-magnitude sample.
  cplx peak_amp() const;

  // Exactly duration() samples.
  std::vector<cplx> materialize() const;

  // Returns a copy with every sample (or the parametric amp) multiplied by f.
  Waveform scaled(cplx f) const;

  bool operator==(const Waveform&) const = default;

 private:
  std::variant<ParametricPulse, SampledPulse> v_{ParametricPulse{}};
};

// Throws InvalidArgument if the waveform breaks its invariants.
void validate(const Waveform& w);

}  // namespace pulsegate
