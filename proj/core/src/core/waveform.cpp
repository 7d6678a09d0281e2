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

#include "pulsegate/core/waveform.hpp"

#include <cmath>
#include <string>

#include "pulsegate/core/errors.hpp"

namespace pulsegate {

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::gaussian:
      return "gaussian";
    case Shape::drag:
      return "drag";
    case Shape::gaussian_square:
      return "gaussian_square";
    case Shape::constant:
      return "constant";
  }
  return "?";
}

Shape parse_shape(std::string_view s) {
  if (s == "gaussian") return Shape::gaussian;
  if (s == "drag") return Shape::drag;
  if (s == "gaussian_square") return Shape::gaussian_square;
  if (s == "constant") return Shape::constant;
  throw InvalidArgument("unknown pulse shape '" + std::string(s) + "'");
}

Waveform::Waveform(ParametricPulse p) : v_(p) {}
Waveform::Waveform(SampledPulse s) : v_(std::move(s)) {}

Waveform Waveform::gaussian(std::int64_t duration, cplx amp, double sigma) {
  return Waveform(ParametricPulse{Shape::gaussian, duration, amp, sigma, 0.0, 0.0});
}

Waveform Waveform::drag(std::int64_t duration, cplx amp, double sigma, double beta) {
  return Waveform(ParametricPulse{Shape::drag, duration, amp, sigma, beta, 0.0});
}

Waveform Waveform::gaussian_square(std::int64_t duration, cplx amp, double sigma, double width) {
  return Waveform(ParametricPulse{Shape::gaussian_square, duration, amp, sigma, 0.0, width});
}

Waveform Waveform::constant(std::int64_t duration, cplx amp) {
  return Waveform(ParametricPulse{Shape::constant, duration, amp, 0.0, 0.0, 0.0});
}

Waveform Waveform::sampled(std::vector<cplx> samples) {
  return Waveform(SampledPulse{std::move(samples)});
}

std::int64_t Waveform::duration() const {
  if (is_parametric()) return parametric().duration;
  return static_cast<std::int64_t>(samples().samples.size());
}

cplx Waveform::peak_amp() const {
  if (is_parametric()) return parametric().amp;
  cplx best{0.0, 0.0};
  for (const auto& s : samples().samples) {
    if (std::abs(s) > std::abs(best)) best = s;
  }
  return best;
}

namespace {

// Lifted gaussian: zero at the (virtual) edges t = 0 and t = N, so the
// envelope starts and ends without a step.
void lifted_gaussian(const ParametricPulse& p, std::vector<cplx>& out) {
  const double n = static_cast<double>(p.duration);
  const double centre = n / 2.0;
  const double s2 = 2.0 * p.sigma * p.sigma;
  const double edge = std::exp(-(centre * centre) / s2);
  const double norm = 1.0 - edge;
  for (std::int64_t k = 0; k < p.duration; ++k) {
    const double x = static_cast<double>(k) + 0.5 - centre;
    const double g = std::exp(-(x * x) / s2);
    double env = (g - edge) / norm;
    cplx s = p.amp * env;
    if (p.shape == Shape::drag && p.beta != 0.0) {
      const double dg = -x / (p.sigma * p.sigma) * g / norm;
      s += p.amp * cplx(0.0, p.beta * dg);
    }
    out.push_back(s);
  }
}

void lifted_gaussian_square(const ParametricPulse& p, std::vector<cplx>& out) {
  const double n = static_cast<double>(p.duration);
  const double rise = (n - p.width) / 2.0;
  const double s2 = 2.0 * p.sigma * p.sigma;
  const double edge = std::exp(-(rise * rise) / s2);
  const double norm = 1.0 - edge;
  for (std::int64_t k = 0; k < p.duration; ++k) {
    const double t = static_cast<double>(k) + 0.5;
    double g = 1.0;
    if (t < rise) {
      const double x = t - rise;
      g = (std::exp(-(x * x) / s2) - edge) / norm;
    } else if (t > rise + p.width) {
      const double x = t - rise - p.width;
      g = (std::exp(-(x * x) / s2) - edge) / norm;
    }
    out.push_back(p.amp * g);
  }
}

}  // namespace

std::vector<cplx> Waveform::materialize() const {
  if (!is_parametric()) return samples().samples;
  const auto& p = parametric();
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(p.duration, 0)));
  switch (p.shape) {
    case Shape::gaussian:
    case Shape::drag:
      lifted_gaussian(p, out);
      break;
    case Shape::gaussian_square:
      lifted_gaussian_square(p, out);
      break;
    case Shape::constant:
      out.assign(static_cast<std::size_t>(p.duration), p.amp);
      break;
  }
  return out;
}

Waveform Waveform::scaled(cplx f) const {
  if (is_parametric()) {
    auto p = parametric();
    p.amp *= f;
    return Waveform(p);
  }
  auto s = samples();
  for (auto& x : s.samples) x *= f;
  return Waveform(std::move(s));
}

void validate(const Waveform& w) {
  constexpr double kSlack = 1e-12;
  if (w.duration() < 1) throw InvalidArgument("waveform duration must be >= 1");
  if (w.is_parametric()) {
    const auto& p = w.parametric();
    if (std::abs(p.amp) > 1.0 + kSlack) throw InvalidArgument("waveform |amp| exceeds 1");
    if (!std::isfinite(p.amp.real()) || !std::isfinite(p.amp.imag())) {
      throw InvalidArgument("waveform amp not finite");
    }
    if (p.shape != Shape::constant && !(p.sigma > 0.0)) {
      throw InvalidArgument("waveform sigma must be positive");
    }
    if (p.shape == Shape::gaussian_square &&
        (p.width < 0.0 || p.width > static_cast<double>(p.duration))) {
      throw InvalidArgument("gaussian_square width out of range");
    }
    return;
  }
  for (const auto& s : w.samples().samples) {
    if (!(std::abs(s) <= 1.0 + kSlack)) throw InvalidArgument("sample magnitude exceeds 1");
  }
}

}  // namespace pulsegate
