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

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "pulsegate/sim/frame.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate::verify {

namespace {

const Waveform* template_for(const CalibrationSnapshot& c, Channel ch) {
  switch (ch.kind) {
    case ChannelKind::drive:
      if (ch.index >= 0 && static_cast<std::size_t>(ch.index) < c.templates.size()) {
        return &c.templates[ch.index].x;
      }
      return nullptr;
    case ChannelKind::measure:
      if (ch.index >= 0 && static_cast<std::size_t>(ch.index) < c.templates.size()) {
        return &c.templates[ch.index].measure;
      }
      return nullptr;
    case ChannelKind::control:
      if (ch.index >= 0 && ch.index < c.num_pairs()) return &c.pairs[ch.index].cr;
      return nullptr;
    case ChannelKind::acquire:
      return nullptr;
  }
  return nullptr;
}

// current / trusted amplitude of the channel's calibrated template.
double drift_factor(const CalibrationSnapshot& trusted, const CalibrationSnapshot& current,
                    Channel ch) {
  const Waveform* t = template_for(trusted, ch);
  const Waveform* c = template_for(current, ch);
  if (!t || !c) throw InvalidArgument("no calibration for channel " + to_string(ch));
  const double ta = std::abs(t->peak_amp());
  if (ta == 0.0) return 1.0;
  return std::abs(c->peak_amp()) / ta;
}

double rel_dev(cplx obs, cplx want) {
  return std::abs(obs - want) / std::max(std::abs(want), 1e-3);
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

std::string where(const ScheduleEntry& e) {
  return to_string(e.channel()) + "@" + std::to_string(e.start_time);
}

class Checker {
 public:
  Checker(const TrustedRecord& t, const CalibrationSnapshot& c, const Tolerances& tol,
          VerificationReport& r)
      : trusted_(t), current_(c), tol_(tol), r_(r) {}

  void play(const ScheduleEntry& te, const ScheduleEntry& oe) {
    const auto& tw = std::get<Play>(te.instruction).waveform;
    const auto& ow = std::get<Play>(oe.instruction).waveform;
    const double f = drift_factor(trusted_.calibration, current_, oe.channel());
    if (std::abs(tw.duration() - ow.duration()) > tol_.duration_tol) {
      fail("waveform", oe, "pulse duration changed", tw.duration(), ow.duration());
      return;
    }
    if (tw.is_parametric() != ow.is_parametric()) {
      fail("waveform", oe, "envelope representation changed", to_json(tw), to_json(ow));
      return;
    }
    if (tw.is_parametric()) {
      const auto& a = tw.parametric();
      const auto& b = ow.parametric();
      if (a.shape != b.shape) {
        fail("waveform", oe, "envelope shape changed", to_string(a.shape), to_string(b.shape));
        return;
      }
      const cplx want = f * a.amp;
      if (rel_dev(b.amp, want) > tol_.amp_rel_tol) {
        fail("waveform", oe, "amplitude outside drift-rescaled tolerance", cjson(want),
             cjson(b.amp));
        return;
      }
      auto param = [&](double x, double y, const char* name) {
        if (std::abs(x - y) > tol_.amp_rel_tol * std::max(std::abs(x), 1.0)) {
          fail("waveform", oe, std::string(name) + " changed", x, y);
          return false;
        }
        return true;
      };
      param(a.sigma, b.sigma, "sigma") && param(a.beta, b.beta, "beta") &&
          param(a.width, b.width, "width");
      return;
    }
    const auto& ts = tw.samples().samples;
    const auto& os = ow.samples().samples;
    double peak = 0.0, dev = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      peak = std::max(peak, std::abs(f * ts[k]));
      dev = std::max(dev, std::abs(os[k] - f * ts[k]));
    }
    if (dev / std::max(peak, 1e-3) > tol_.amp_rel_tol) {
      fail("waveform", oe, "sampled envelope deviates from the drift-rescaled reference", 0.0,
           dev / std::max(peak, 1e-3));
    }
  }

  void occupying(const ScheduleEntry& te, const ScheduleEntry& oe) {
    if (kind_of(te.instruction) != kind_of(oe.instruction)) {
      fail("structure", oe, "instruction kind changed", std::string(to_string(kind_of(te.instruction))),
           std::string(to_string(kind_of(oe.instruction))));
      return;
    }
    if (std::holds_alternative<Play>(te.instruction)) {
      play(te, oe);
    } else if (const auto* td = std::get_if<Delay>(&te.instruction)) {
      const auto& od = std::get<Delay>(oe.instruction);
      if (std::abs(td->duration - od.duration) > tol_.duration_tol) {
        fail("structure", oe, "delay length changed", td->duration, od.duration);
      }
    } else {
      const auto& ta = std::get<Acquire>(te.instruction);
      const auto& oa = std::get<Acquire>(oe.instruction);
      if (ta.memory_slot != oa.memory_slot) {
        fail("clbit-mismatch", oe, "acquire writes another clbit", ta.memory_slot, oa.memory_slot);
      } else if (std::abs(ta.duration - oa.duration) > tol_.duration_tol) {
        fail("structure", oe, "acquire length changed", ta.duration, oa.duration);
      }
    }
  }

  // t or o may be null for an unmatched frame change.
  void frame(const ScheduleEntry* te, const ScheduleEntry* oe) {
    const ScheduleEntry& e = oe ? *oe : *te;
    const Channel ch = e.channel();
    const Instruction& ins = e.instruction;
    if (std::holds_alternative<SetFrequency>(ins)) {
      const double base = current_.channel_frequency(ch);
      if (!oe) {
        fail("frequency", e, "reference frequency change missing",
             std::get<SetFrequency>(te->instruction).frequency, nullptr);
        return;
      }
      const double obs = std::get<SetFrequency>(oe->instruction).frequency;
      double want = base;
      if (te) {
        want += std::get<SetFrequency>(te->instruction).frequency -
                trusted_.calibration.channel_frequency(ch);
      }
      if (current_.in_forbidden_band(obs)) {
        fail("frequency", e, "frequency inside the forbidden band", want, obs);
      } else if (std::abs(obs - want) > tol_.freq_tol) {
        fail("frequency", e, "frequency off the current calibration", want, obs);
      }
    } else if (std::holds_alternative<ShiftFrequency>(ins)) {
      const double want = te ? std::get<ShiftFrequency>(te->instruction).delta : 0.0;
      const double obs = oe ? std::get<ShiftFrequency>(oe->instruction).delta : 0.0;
      if (std::abs(obs - want) > tol_.freq_tol) {
        fail("frequency", e, "frequency shift differs from the reference", want, obs);
      }
    } else if (std::holds_alternative<SetPhase>(ins)) {
      if (!te || !oe) {
        fail("phase", e, te ? "reference phase set missing" : "unreferenced phase set",
             te ? json(std::get<SetPhase>(te->instruction).phase) : json(nullptr),
             oe ? json(std::get<SetPhase>(oe->instruction).phase) : json(nullptr));
        return;
      }
      compare_phase(e, std::get<SetPhase>(te->instruction).phase,
                    std::get<SetPhase>(oe->instruction).phase);
    } else {
      const double want = te ? std::get<ShiftPhase>(te->instruction).delta : 0.0;
      const double obs = oe ? std::get<ShiftPhase>(oe->instruction).delta : 0.0;
      compare_phase(e, want, obs);
    }
  }

 private:
  void compare_phase(const ScheduleEntry& e, double want, double obs) {
    if (std::abs(sim::wrap_phase(obs - want)) > tol_.phase_tol) {
      fail("phase", e, "phase differs from the reference", want + 0.0, obs + 0.0);
    }
  }

  void fail(const std::string& kind, const ScheduleEntry& e, const std::string& why, json exp,
            json obs) {
    r_.findings.push_back({Severity::error, kind, where(e), why, std::move(exp), std::move(obs)});
  }

  const TrustedRecord& trusted_;
  const CalibrationSnapshot& current_;
  const Tolerances& tol_;
  VerificationReport& r_;
};

using FrameKey = std::tuple<Channel, InstructionKind, std::int64_t, int>;

std::map<FrameKey, const ScheduleEntry*> frame_index(const Schedule& s) {
  std::map<FrameKey, const ScheduleEntry*> out;
  std::map<std::tuple<Channel, InstructionKind, std::int64_t>, int> rank;
  for (const auto& e : s.entries()) {
    if (!is_frame(e.instruction)) continue;
    const auto k = kind_of(e.instruction);
    const int n = rank[{e.channel(), k, e.start_time}]++;
    out[{e.channel(), k, e.start_time, n}] = &e;
  }
  return out;
}

std::map<Channel, std::vector<const ScheduleEntry*>> occupying_index(const Schedule& s) {
  std::map<Channel, std::vector<const ScheduleEntry*>> out;
  for (const auto& e : s.entries()) {
    if (is_occupying(e.instruction)) out[e.channel()].push_back(&e);
  }
  return out;
}

}  // namespace

VerificationReport verify_syntax(const Schedule& observed, const TrustedRecord& trusted,
                                 const CalibrationSnapshot& calib, const Tolerances& tol) {
  tol.validate();
  VerificationReport r;
  r.stage = Stage::syntax;
  r.tolerances = tol;
  Checker check(trusted, calib, tol, r);

  const auto want_occ = occupying_index(trusted.schedule);
  const auto got_occ = occupying_index(observed);
  for (const auto& [ch, got] : got_occ) {
    auto it = want_occ.find(ch);
    const std::size_t n = it == want_occ.end() ? 0 : it->second.size();
    if (n != got.size()) {
      r.findings.push_back({Severity::error, "structure", to_string(ch),
                            "instruction count differs from the reference", n, got.size()});
    }
    for (std::size_t k = 0; k < std::min(n, got.size()); ++k) check.occupying(*it->second[k], *got[k]);
  }
  for (const auto& [ch, want] : want_occ) {
    if (!got_occ.count(ch)) {
      r.findings.push_back({Severity::error, "structure", to_string(ch),
                            "reference instructions missing", want.size(), 0});
    }
  }

  const auto want_fr = frame_index(trusted.schedule);
  const auto got_fr = frame_index(observed);
  for (const auto& [key, e] : got_fr) {
    auto it = want_fr.find(key);
    check.frame(it == want_fr.end() ? nullptr : it->second, e);
  }
  for (const auto& [key, e] : want_fr) {
    if (!got_fr.count(key)) check.frame(e, nullptr);
  }
  return r;
}

}  // namespace pulsegate::verify
