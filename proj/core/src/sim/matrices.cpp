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

#include "pulsegate/sim/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pulsegate/core/errors.hpp"

namespace pulsegate::sim {

using Eigen::Index;

namespace {

Matrix u3(double theta, double phi, double lambda) {
  Matrix m(2, 2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  m(0, 0) = c;
  m(0, 1) = -std::polar(1.0, lambda) * s;
  m(1, 0) = std::polar(1.0, phi) * s;
  m(1, 1) = std::polar(1.0, phi + lambda) * c;
  return m;
}

}  // namespace

Matrix native_unitary(GateKind kind, const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != gate_param_count(kind)) {
    throw InvalidArgument("wrong parameter count for " + std::string(to_string(kind)));
  }
  constexpr double pi = std::numbers::pi;
  const cplx i(0.0, 1.0);
  Matrix m(2, 2);
  switch (kind) {
    case GateKind::X:
      m << 0.0, 1.0, 1.0, 0.0;
      return m;
    case GateKind::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      return m;
    case GateKind::H:
      m << 1.0, 1.0, 1.0, -1.0;
      return m / std::sqrt(2.0);
    case GateKind::SX:
      m << 1.0 + i, 1.0 - i, 1.0 - i, 1.0 + i;
      return m / 2.0;
    case GateKind::RZ:
      m << std::polar(1.0, -params[0] / 2.0), 0.0, 0.0, std::polar(1.0, params[0] / 2.0);
      return m;
    case GateKind::RX:
      return u3(params[0], -pi / 2.0, pi / 2.0);
    case GateKind::U3:
      return u3(params[0], params[1], params[2]);
    case GateKind::CX: {
      Matrix cx = Matrix::Zero(4, 4);
      cx(0, 0) = 1.0;
      cx(3, 1) = 1.0;
      cx(2, 2) = 1.0;
      cx(1, 3) = 1.0;
      return cx;
    }
    case GateKind::measure:
    case GateKind::custom:
      break;
  }
  throw InvalidArgument(std::string(to_string(kind)) + " has no fixed unitary");
}

Matrix embed(const Matrix& u, const std::vector<int>& positions, int n) {
  const int k = static_cast<int>(positions.size());
  if (u.rows() != (Index{1} << k)) throw InvalidArgument("embed: dimension mismatch");
  const Index dim = Index{1} << n;
  Index mask = 0;
  for (int p : positions) {
    if (p < 0 || p >= n) throw InvalidArgument("embed: position out of range");
    mask |= Index{1} << p;
  }
  auto local = [&](Index i) {
    Index r = 0;
    for (int b = 0; b < k; ++b) {
      if (i & (Index{1} << positions[static_cast<std::size_t>(b)])) r |= Index{1} << b;
    }
    return r;
  };
  Matrix out = Matrix::Zero(dim, dim);
  for (Index row = 0; row < dim; ++row) {
    for (Index col = 0; col < dim; ++col) {
      if ((row & ~mask) != (col & ~mask)) continue;
      out(row, col) = u(local(row), local(col));
    }
  }
  return out;
}

Matrix circuit_unitary(const std::vector<GateOp>& ops, const std::vector<int>& qubits) {
  const int n = static_cast<int>(qubits.size());
  Matrix total = Matrix::Identity(Index{1} << n, Index{1} << n);
  for (const auto& op : ops) {
    std::vector<int> pos;
    for (int q : op.qubits) {
      auto it = std::find(qubits.begin(), qubits.end(), q);
      if (it == qubits.end()) throw InvalidArgument("op acts outside the requested qubits");
      pos.push_back(static_cast<int>(it - qubits.begin()));
    }
    Matrix u;
    if (op.kind == GateKind::custom) {
      if (!op.custom || !op.custom->unitary) {
        throw InvalidArgument("custom gate without a declared unitary");
      }
      u = *op.custom->unitary;
    } else {
      u = native_unitary(op.kind, op.params);
    }
    total = embed(u, pos, n) * total;
  }
  return total;
}

}  // namespace pulsegate::sim
