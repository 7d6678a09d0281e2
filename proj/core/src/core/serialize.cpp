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

#include "pulsegate/core/serialize.hpp"

#include <cmath>
#include <limits>

namespace pulsegate {

namespace {

double canon(double x) { return x == 0.0 ? 0.0 : x; }

json cjson(cplx z) { return json::array({canon(z.real()), canon(z.imag())}); }

std::string display(const std::string& path) { return path.empty() ? "/" : path; }

// Thin cursor over a JSON node that remembers where it is.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(display(path_), what); }

  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }

  Reader at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(path_ + "/" + key, "missing required field");
    return Reader(*it, path_ + "/" + key);
  }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Reader at(std::size_t i) const {
    if (!j_.is_array()) fail("expected an array");
    if (i >= j_.size()) fail("index out of range");
    return Reader(j_[i], path_ + "/" + std::to_string(i));
  }

  std::size_t array_size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  void expect_object() const {
    if (!j_.is_object()) fail("expected an object");
  }

  double number() const {
    if (!j_.is_number()) fail("expected a number");
    double v = j_.get<double>();
    if (!std::isfinite(v)) fail("number is not finite");
    return v;
  }

  std::int64_t integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<std::int64_t>();
  }

  int small_int() const {
    auto v = integer();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  int index() const {
    int v = small_int();
    if (v < 0) fail("expected a non-negative index");
    return v;
  }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  cplx complex() const {
    if (!j_.is_array() || j_.size() != 2) fail("expected a complex number [re, im]");
    return {at(std::size_t{0}).number(), at(std::size_t{1}).number()};
  }

  std::vector<int> int_list() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < array_size(); ++i) out.push_back(at(i).index());
    return out;
  }

  std::vector<double> number_list() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < array_size(); ++i) out.push_back(at(i).number());
    return out;
  }

 private:
  const json& j_;
  std::string path_;
};

Channel read_channel(const Reader& r) {
  try {
    return parse_channel(r.string());
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  }
}

Waveform read_waveform(const Reader& r) {
  r.expect_object();
  Waveform w;
  if (r.has("samples")) {
    auto s = r.at("samples");
    std::vector<cplx> samples;
    for (std::size_t i = 0; i < s.array_size(); ++i) samples.push_back(s.at(i).complex());
    w = Waveform::sampled(std::move(samples));
  } else {
    ParametricPulse p;
    try {
      p.shape = parse_shape(r.at("shape").string());
    } catch (const InvalidArgument& e) {
      r.at("shape").fail(e.what());
    }
    p.duration = r.at("duration").integer();
    p.amp = r.at("amp").complex();
    p.sigma = r.at("sigma").number();
    p.beta = r.at("beta").number();
    p.width = r.at("width").number();
    w = Waveform(p);
  }
  try {
    validate(w);
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  }
  return w;
}

ScheduleEntry read_entry(const Reader& r) {
  r.expect_object();
  ScheduleEntry e;
  e.start_time = r.at("start").integer();
  InstructionKind kind{};
  try {
    kind = parse_instruction_kind(r.at("kind").string());
  } catch (const InvalidArgument& ex) {
    r.at("kind").fail(ex.what());
  }
  auto nonneg = [](const Reader& x) {
    auto v = x.integer();
    if (v < 0) x.fail("duration must be >= 0");
    return v;
  };
  switch (kind) {
    case InstructionKind::play:
      e.instruction = Play{read_channel(r.at("channel")), read_waveform(r.at("waveform"))};
      break;
    case InstructionKind::set_frequency: {
      double f = r.at("frequency").number();
      if (!(f > 0.0)) r.at("frequency").fail("frequency must be positive");
      e.instruction = SetFrequency{read_channel(r.at("channel")), f};
      break;
    }
    case InstructionKind::shift_frequency:
      e.instruction = ShiftFrequency{read_channel(r.at("channel")), r.at("delta").number()};
      break;
    case InstructionKind::set_phase:
      e.instruction = SetPhase{read_channel(r.at("channel")), r.at("phase").number()};
      break;
    case InstructionKind::shift_phase:
      e.instruction = ShiftPhase{read_channel(r.at("channel")), r.at("delta").number()};
      break;
    case InstructionKind::delay:
      e.instruction = Delay{read_channel(r.at("channel")), nonneg(r.at("duration"))};
      break;
    case InstructionKind::acquire:
      e.instruction =
          Acquire{r.at("qubit").index(), nonneg(r.at("duration")), r.at("memory_slot").index()};
      break;
  }
  return e;
}

}  // namespace

std::string canonical_dump(const json& j) { return j.dump(); }

json to_json(Channel c) { return to_string(c); }

json to_json(const Waveform& w) {
  if (!w.is_parametric()) {
    json s = json::array();
    for (const auto& x : w.samples().samples) s.push_back(cjson(x));
    return json{{"samples", s}};
  }
  const auto& p = w.parametric();
  return json{{"shape", std::string(to_string(p.shape))},
              {"duration", p.duration},
              {"amp", cjson(p.amp)},
              {"sigma", canon(p.sigma)},
              {"beta", canon(p.beta)},
              {"width", canon(p.width)}};
}

json to_json(const ScheduleEntry& e) {
  json j{{"start", e.start_time}, {"kind", std::string(to_string(kind_of(e.instruction)))}};
  std::visit(
      [&](const auto& ins) {
        using T = std::decay_t<decltype(ins)>;
        if constexpr (std::is_same_v<T, Play>) {
          j["channel"] = to_json(ins.channel);
          j["waveform"] = to_json(ins.waveform);
        } else if constexpr (std::is_same_v<T, SetFrequency>) {
          j["channel"] = to_json(ins.channel);
          j["frequency"] = canon(ins.frequency);
        } else if constexpr (std::is_same_v<T, ShiftFrequency>) {
          j["channel"] = to_json(ins.channel);
          j["delta"] = canon(ins.delta);
        } else if constexpr (std::is_same_v<T, SetPhase>) {
          j["channel"] = to_json(ins.channel);
          j["phase"] = canon(ins.phase);
        } else if constexpr (std::is_same_v<T, ShiftPhase>) {
          j["channel"] = to_json(ins.channel);
          j["delta"] = canon(ins.delta);
        } else if constexpr (std::is_same_v<T, Delay>) {
          j["channel"] = to_json(ins.channel);
          j["duration"] = ins.duration;
        } else {
          j["qubit"] = ins.qubit;
          j["duration"] = ins.duration;
          j["memory_slot"] = ins.memory_slot;
        }
      },
      e.instruction);
  return j;
}

json to_json(const Schedule& s) {
  json entries = json::array();
  for (const auto& e : s.entries()) entries.push_back(to_json(e));
  return json{{"entries", entries}};
}

json to_json(const TimingConstraints& t) {
  return json{{"dt", t.dt},
              {"granularity", t.granularity},
              {"pulse_alignment", t.pulse_alignment},
              {"acquire_alignment", t.acquire_alignment}};
}

json to_json(const QubitCalibration& q) {
  return json{{"frequency", canon(q.frequency)},
              {"anharmonicity", canon(q.anharmonicity)},
              {"t1", canon(q.t1)},
              {"t2", canon(q.t2)},
              {"rabi_scale", canon(q.rabi_scale)}};
}

json to_json(const PairCalibration& p) {
  return json{{"control", p.control},
              {"target", p.target},
              {"cr_scale", canon(p.cr_scale)},
              {"cr", to_json(p.cr)}};
}

json to_json(const NativeTemplates& t) {
  return json{{"x", to_json(t.x)},
              {"sx", to_json(t.sx)},
              {"measure", to_json(t.measure)},
              {"acquire_duration", t.acquire_duration}};
}

json to_json(const CalibrationSnapshot& c) {
  json qubits = json::array();
  for (const auto& q : c.qubits) qubits.push_back(to_json(q));
  json templates = json::array();
  for (const auto& t : c.templates) templates.push_back(to_json(t));
  json pairs = json::array();
  for (const auto& p : c.pairs) pairs.push_back(to_json(p));
  return json{{"timestamp", c.timestamp},
              {"qubits", qubits},
              {"templates", templates},
              {"pairs", pairs},
              {"timing", to_json(c.timing)},
              {"forbidden_band", json::array({canon(c.forbidden_lo), canon(c.forbidden_hi)})}};
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(cjson(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const CustomGate& g) {
  json j{{"name", g.name},
         {"qubits", g.qubits},
         {"clbits", g.clbits},
         {"schedule", to_json(g.schedule)}};
  if (g.unitary) j["unitary"] = to_json(*g.unitary);
  return j;
}

json to_json(const GateOp& op) {
  json params = json::array();
  for (double p : op.params) params.push_back(canon(p));
  json j{{"gate", std::string(to_string(op.kind))},
         {"qubits", op.qubits},
         {"clbits", op.clbits},
         {"params", params}};
  if (op.custom) j["custom"] = to_json(*op.custom);
  if (!op.binding_override.empty()) {
    json b = json::object();
    for (const auto& [from, to] : op.binding_override) b[to_string(from)] = to_string(to);
    j["binding_override"] = b;
  }
  return j;
}

json to_json(const GateCircuit& c) {
  json ops = json::array();
  for (const auto& op : c.ops) ops.push_back(to_json(op));
  return json{{"num_qubits", c.num_qubits}, {"num_clbits", c.num_clbits}, {"ops", ops}};
}

template <>
Channel from_json<Channel>(const json& j, const std::string& path) {
  return read_channel(Reader(j, path));
}

template <>
Waveform from_json<Waveform>(const json& j, const std::string& path) {
  return read_waveform(Reader(j, path));
}

template <>
ScheduleEntry from_json<ScheduleEntry>(const json& j, const std::string& path) {
  return read_entry(Reader(j, path));
}

template <>
Schedule from_json<Schedule>(const json& j, const std::string& path) {
  Reader r(j, path);
  auto entries = r.at("entries");
  Schedule s;
  std::int64_t last_t = std::numeric_limits<std::int64_t>::min();
  Channel last_c{};
  for (std::size_t i = 0; i < entries.array_size(); ++i) {
    auto e = read_entry(entries.at(i));
    // Order is part of the canonical form: frame changes sharing a
    // (start, channel) key with a Play must stay where they were written.
    if (e.start_time < last_t || (e.start_time == last_t && e.channel() < last_c)) {
      entries.at(i).fail("entries not sorted by (start, channel)");
    }
    last_t = e.start_time;
    last_c = e.channel();
    s.insert(std::move(e));
  }
  return s;
}

template <>
TimingConstraints from_json<TimingConstraints>(const json& j, const std::string& path) {
  Reader r(j, path);
  TimingConstraints t;
  t.dt = r.at("dt").number();
  t.granularity = r.at("granularity").integer();
  t.pulse_alignment = r.at("pulse_alignment").integer();
  t.acquire_alignment = r.at("acquire_alignment").integer();
  if (!(t.dt > 0.0)) r.at("dt").fail("dt must be positive");
  if (t.granularity <= 0) r.at("granularity").fail("must be positive");
  if (t.pulse_alignment <= 0) r.at("pulse_alignment").fail("must be positive");
  if (t.acquire_alignment <= 0) r.at("acquire_alignment").fail("must be positive");
  return t;
}

template <>
QubitCalibration from_json<QubitCalibration>(const json& j, const std::string& path) {
  Reader r(j, path);
  QubitCalibration q;
  q.frequency = r.at("frequency").number();
  q.anharmonicity = r.at("anharmonicity").number();
  q.t1 = r.at("t1").number();
  q.t2 = r.at("t2").number();
  q.rabi_scale = r.at("rabi_scale").number();
  if (!(q.frequency > 0.0)) r.at("frequency").fail("must be positive");
  if (!(q.rabi_scale > 0.0)) r.at("rabi_scale").fail("must be positive");
  if (!(q.t1 > 0.0)) r.at("t1").fail("must be positive");
  if (!(q.t2 > 0.0)) r.at("t2").fail("must be positive");
  if (q.t2 > 2.0 * q.t1) r.at("t2").fail("t2 exceeds 2*t1");
  return q;
}

template <>
PairCalibration from_json<PairCalibration>(const json& j, const std::string& path) {
  Reader r(j, path);
  PairCalibration p;
  p.control = r.at("control").index();
  p.target = r.at("target").index();
  p.cr_scale = r.at("cr_scale").number();
  if (!(p.cr_scale > 0.0)) r.at("cr_scale").fail("must be positive");
  p.cr = read_waveform(r.at("cr"));
  return p;
}

template <>
NativeTemplates from_json<NativeTemplates>(const json& j, const std::string& path) {
  Reader r(j, path);
  NativeTemplates t;
  t.x = read_waveform(r.at("x"));
  t.sx = read_waveform(r.at("sx"));
  t.measure = read_waveform(r.at("measure"));
  t.acquire_duration = r.at("acquire_duration").integer();
  if (t.acquire_duration < 1) r.at("acquire_duration").fail("must be >= 1");
  return t;
}

template <>
CalibrationSnapshot from_json<CalibrationSnapshot>(const json& j, const std::string& path) {
  Reader r(j, path);
  CalibrationSnapshot c;
  c.timestamp = r.at("timestamp").integer();
  auto qubits = r.at("qubits");
  for (std::size_t i = 0; i < qubits.array_size(); ++i) {
    c.qubits.push_back(from_json<QubitCalibration>(qubits.at(i).raw(), qubits.at(i).path()));
  }
  auto templates = r.at("templates");
  for (std::size_t i = 0; i < templates.array_size(); ++i) {
    c.templates.push_back(
        from_json<NativeTemplates>(templates.at(i).raw(), templates.at(i).path()));
  }
  if (c.qubits.empty()) qubits.fail("at least one qubit required");
  if (c.templates.size() != c.qubits.size()) templates.fail("one template set per qubit required");
  auto pairs = r.at("pairs");
  for (std::size_t i = 0; i < pairs.array_size(); ++i) {
    auto p = from_json<PairCalibration>(pairs.at(i).raw(), pairs.at(i).path());
    if (p.control >= c.num_qubits() || p.target >= c.num_qubits() || p.control == p.target) {
      pairs.at(i).fail("pair references a qubit outside the device");
    }
    c.pairs.push_back(p);
  }
  c.timing = from_json<TimingConstraints>(r.at("timing").raw(), r.at("timing").path());
  auto band = r.at("forbidden_band");
  if (band.array_size() != 2) band.fail("expected [lo, hi]");
  c.forbidden_lo = band.at(std::size_t{0}).number();
  c.forbidden_hi = band.at(std::size_t{1}).number();
  if (c.forbidden_lo > c.forbidden_hi) band.fail("lo exceeds hi");
  return c;
}

template <>
Matrix from_json<Matrix>(const json& j, const std::string& path) {
  Reader r(j, path);
  const auto n = r.array_size();
  if (n == 0) r.fail("empty matrix");
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    auto row = r.at(i);
    if (row.array_size() != n) row.fail("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row.at(k).complex();
    }
  }
  return m;
}

template <>
CustomGate from_json<CustomGate>(const json& j, const std::string& path) {
  Reader r(j, path);
  CustomGate g;
  g.name = r.at("name").string();
  g.qubits = r.at("qubits").int_list();
  if (r.has("clbits")) g.clbits = r.at("clbits").int_list();
  if (g.qubits.empty()) r.at("qubits").fail("custom gate must declare at least one qubit");
  g.schedule = from_json<Schedule>(r.at("schedule").raw(), r.at("schedule").path());
  if (r.has("unitary")) {
    auto u = from_json<Matrix>(r.at("unitary").raw(), r.at("unitary").path());
    if (u.rows() != (Eigen::Index{1} << g.qubits.size())) {
      r.at("unitary").fail("unitary dimension does not match declared qubits");
    }
    g.unitary = std::move(u);
  }
  return g;
}

template <>
GateOp from_json<GateOp>(const json& j, const std::string& path) {
  Reader r(j, path);
  GateOp op;
  try {
    op.kind = parse_gate_kind(r.at("gate").string());
  } catch (const InvalidArgument& e) {
    r.at("gate").fail(e.what());
  }
  op.qubits = r.at("qubits").int_list();
  if (r.has("clbits")) op.clbits = r.at("clbits").int_list();
  if (r.has("params")) op.params = r.at("params").number_list();
  if (op.kind == GateKind::custom) {
    op.custom = from_json<CustomGate>(r.at("custom").raw(), r.at("custom").path());
  } else if (r.has("custom")) {
    r.at("custom").fail("only custom ops carry a gate definition");
  }
  if (r.has("binding_override")) {
    auto b = r.at("binding_override");
    b.expect_object();
    for (const auto& [k, v] : b.raw().items()) {
      Channel from{};
      try {
        from = parse_channel(k);
      } catch (const InvalidArgument& e) {
        throw SchemaError(b.path() + "/" + k, e.what());
      }
      op.binding_override[from] = read_channel(Reader(v, b.path() + "/" + k));
    }
  }
  return op;
}

template <>
GateCircuit from_json<GateCircuit>(const json& j, const std::string& path) {
  Reader r(j, path);
  GateCircuit c;
  c.num_qubits = r.at("num_qubits").index();
  c.num_clbits = r.at("num_clbits").index();
  auto ops = r.at("ops");
  for (std::size_t i = 0; i < ops.array_size(); ++i) {
    c.ops.push_back(from_json<GateOp>(ops.at(i).raw(), ops.at(i).path()));
  }
  try {
    validate(c);
  } catch (const InvalidArgument& e) {
    r.at("ops").fail(e.what());
  }
  return c;
}

}  // namespace pulsegate
