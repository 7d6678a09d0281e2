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

#include "pulsegate/core/hash.hpp"
#include "pulsegate/lowering/lowering.hpp"
#include "pulsegate/sim/density.hpp"
#include "pulsegate/sim/matrices.hpp"
#include "pulsegate/sim/simulator.hpp"
#include "pulsegate/verify/verify.hpp"

namespace pulsegate::verify {

namespace {

constexpr int kWlRounds = 3;

bool is_unitary(const Matrix& u) {
  if (u.rows() != u.cols()) return false;
  const Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() < 1e-8;
}

std::string sorted_join(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  std::string out;
  for (const auto& s : v) out += s + ",";
  return out;
}

}  // namespace

std::string dag_digest(const Schedule& s) {
  const auto& es = s.entries();
  const std::size_t n = es.size();
  std::vector<std::string> label(n);
  std::vector<std::vector<std::size_t>> pred(n), succ(n), sync(n);
  std::map<Channel, std::size_t> last;
  std::map<std::int64_t, std::vector<std::size_t>> by_start;
  for (std::size_t i = 0; i < n; ++i) {
    const Channel c = es[i].channel();
    label[i] = std::string(to_string(kind_of(es[i].instruction))) + ":" +
               std::string(kind_prefix(c.kind)) + ":" +
               std::to_string(duration_of(es[i].instruction));
    if (auto it = last.find(c); it != last.end()) {
      pred[i].push_back(it->second);
      succ[it->second].push_back(i);
    }
    last[c] = i;
    by_start[es[i].start_time].push_back(i);
  }
  for (const auto& [t, group] : by_start) {
    for (std::size_t a : group) {
      for (std::size_t b : group) {
        if (a != b && es[a].channel() != es[b].channel()) sync[a].push_back(b);
      }
    }
  }
  for (int round = 0; round < kWlRounds; ++round) {
    std::vector<std::string> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto gather = [&](const std::vector<std::size_t>& nb) {
        std::vector<std::string> v;
        for (std::size_t j : nb) v.push_back(label[j]);
        return sorted_join(std::move(v));
      };
      next[i] = sha256_hex(label[i] + "|" + gather(pred[i]) + "|" + gather(succ[i]) + "|" +
                           gather(sync[i]))
                    .substr(0, 16);
    }
    label = std::move(next);
  }
  return sha256_hex(sorted_join(label));
}

VerificationReport verify_semantics(const GateOp& op, const CalibrationSnapshot& calib,
                                    const Tolerances& tol, const GateOp* trusted) {
  tol.validate();
  VerificationReport r;
  r.stage = Stage::semantics;
  r.tolerances = tol;
  if (op.kind != GateKind::custom || !op.custom) return r;
  const CustomGate& gate = *op.custom;
  const std::string where = "gate '" + gate.name + "'";

  lower::BoundGate bound;
  try {
    bound = lower::bind_op(op, calib);
  } catch (const Error& e) {
    r.findings.push_back({Severity::error, "binding", where, e.what(), nullptr, nullptr});
    return r;
  }

  if (trusted && trusted->custom) {
    try {
      const auto ref = lower::bind_op(*trusted, calib);
      const auto a = dag_digest(ref.schedule);
      const auto b = dag_digest(bound.schedule);
      if (a != b) {
        r.findings.push_back({Severity::warning, "dag", where,
                              "instruction DAG is not isomorphic to the trusted gate", a, b});
      }
    } catch (const Error&) {
      // The trusted gate no longer binds on this device; nothing to compare.
    }
  }

  if (!gate.unitary) {
    r.findings.push_back({Severity::warning, "unverifiable-semantics", where,
                          "no declared unitary to compare against", nullptr, nullptr});
    return r;
  }
  const Matrix& declared = *gate.unitary;
  const int n = static_cast<int>(op.qubits.size());
  if (declared.rows() != (Eigen::Index{1} << n) || !is_unitary(declared)) {
    r.findings.push_back({Severity::error, "semantics", where,
                          "declared matrix is not a unitary on the declared qubits", nullptr,
                          nullptr});
    return r;
  }
  for (const auto& e : bound.schedule.entries()) {
    if (std::holds_alternative<Acquire>(e.instruction) || e.channel().kind == ChannelKind::measure) {
      r.findings.push_back({Severity::warning, "unverifiable-semantics", where,
                            "gate measures; no unitary to compare", nullptr, nullptr});
      return r;
    }
  }

  std::vector<int> qubits = op.qubits;
  std::set<int> extra;
  for (Channel c : bound.schedule.channels()) {
    for (int q : calib.channel_qubits(c)) {
      if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) extra.insert(q);
    }
  }
  qubits.insert(qubits.end(), extra.begin(), extra.end());
  try {
    const Matrix u = sim::simulate_unitary_on(bound.schedule, calib, qubits);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
    const Matrix want = sim::embed(declared, pos, static_cast<int>(qubits.size()));
    const double f = sim::fidelity(want, u);
    if (f < tol.fidelity_threshold) {
      r.findings.push_back({Severity::error, "semantics", where,
                            "pulse unitary does not implement the declared gate",
                            tol.fidelity_threshold, f});
    }
  } catch (const Error& e) {
    r.findings.push_back({Severity::warning, "unverifiable-semantics", where,
                          std::string("cannot simulate: ") + e.what(), nullptr, nullptr});
  }
  return r;
}

VerificationReport verify_semantics(const GateCircuit& c, const CalibrationSnapshot& calib,
                                    const Tolerances& tol, const GateCircuit* trusted) {
  VerificationReport r;
  r.stage = Stage::semantics;
  r.tolerances = tol;
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const GateOp* ref = nullptr;
    if (trusted && i < trusted->ops.size()) ref = &trusted->ops[i];
    auto one = verify_semantics(c.ops[i], calib, tol, ref);
    for (auto& f : one.findings) {
      f.location = "op " + std::to_string(i) + " " + f.location;
      r.findings.push_back(std::move(f));
    }
  }
  return r;
}

}  // namespace pulsegate::verify
