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
#include <map>
#include <set>
#include <tuple>

#include "pulsegate/core/hash.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate::verify {

namespace {

struct Slot {
  InstructionKind kind;
  std::int64_t start;
  std::int64_t duration;
  auto operator<=>(const Slot&) const = default;
};

using Layout = std::map<Channel, std::vector<Slot>>;

Layout layout(const Schedule& s, bool frames) {
  Layout out;
  for (const auto& e : s.entries()) {
    if (is_frame(e.instruction) != frames) continue;
    // Frame changes carry no duration; occupying ones are compared on
    // (kind, start) here and on duration by the syntax stage.
    out[e.channel()].push_back({kind_of(e.instruction), e.start_time, 0});
  }
  return out;
}

std::vector<Slot> with_durations(const Schedule& s) {
  std::vector<Slot> out;
  for (const auto& e : s.entries()) {
    if (!is_occupying(e.instruction)) continue;
    out.push_back({kind_of(e.instruction), e.start_time, duration_of(e.instruction)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

json starts(const std::vector<Slot>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.start);
  return a;
}

std::set<Channel> channel_union(const Layout& a, const Layout& b) {
  std::set<Channel> out;
  for (const auto& [c, v] : a) out.insert(c);
  for (const auto& [c, v] : b) out.insert(c);
  return out;
}

const std::vector<Slot>& at(const Layout& l, Channel c) {
  static const std::vector<Slot> empty;
  auto it = l.find(c);
  return it == l.end() ? empty : it->second;
}

}  // namespace

VerificationReport verify_reference(const GateCircuit& c, const TrustedRecord& trusted,
                                    const CalibrationSnapshot& calib) {
  VerificationReport r;
  r.stage = Stage::reference;
  const std::string h = gate_level_hash(c);
  if (h != trusted.circuit_hash) {
    r.findings.push_back({Severity::error, "hash-mismatch", "circuit",
                          "gate-level circuit differs from the trusted record", trusted.circuit_hash,
                          h});
    return r;
  }
  Schedule observed;
  try {
    observed = lower::lower_circuit(c, calib, lower::LoweringMode::permissive);
  } catch (const Error& e) {
    r.findings.push_back({Severity::error, "structure", "circuit",
                          std::string("circuit does not lower: ") + e.what(), nullptr, nullptr});
    return r;
  }

  const Layout want = layout(trusted.schedule, false);
  const Layout got = layout(observed, false);
  if (want == got) {
    if (layout(trusted.schedule, true) != layout(observed, true)) {
      r.findings.push_back({Severity::warning, "frame-structure", "schedule",
                            "frame changes differ from the reference; values checked by syntax",
                            nullptr, nullptr});
    }
    return r;
  }

  const auto chans = channel_union(want, got);
  if (with_durations(trusted.schedule) == with_durations(observed)) {
    // Same pulses at the same times, on other channels.
    json exp = json::object();
    json obs = json::object();
    std::string names;
    for (Channel ch : chans) {
      if (at(want, ch) == at(got, ch)) continue;
      exp[to_string(ch)] = starts(at(want, ch));
      obs[to_string(ch)] = starts(at(got, ch));
      names += (names.empty() ? "" : ", ") + to_string(ch);
    }
    r.findings.push_back({Severity::error, "reorder", names,
                          "instructions moved between channels " + names, exp, obs});
    return r;
  }

  for (Channel ch : chans) {
    const auto& a = at(want, ch);
    const auto& b = at(got, ch);
    if (a == b) continue;
    const bool same_kinds =
        a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const Slot& x, const Slot& y) {
          return x.kind == y.kind;
        });
    if (same_kinds) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].start == b[k].start) continue;
        r.findings.push_back({Severity::error, "timing",
                              to_string(ch) + " #" + std::to_string(k),
                              std::string(to_string(a[k].kind)) + " starts off its reference time",
                              a[k].start, b[k].start});
      }
    } else {
      r.findings.push_back({Severity::error, "structure", to_string(ch),
                            "instruction sequence differs from the reference",
                            json{{"count", a.size()}, {"starts", starts(a)}},
                            json{{"count", b.size()}, {"starts", starts(b)}}});
    }
  }
  return r;
}

}  // namespace pulsegate::verify
