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

// Reference values computed from textbook definitions, independent of the
// simulator and of sim::native_unitary.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pulsegate/core/circuit.hpp"

namespace pulsegate::oracle {

using M = Eigen::MatrixXcd;
using C = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;
inline constexpr C kI{0.0, 1.0};

inline M mat2(C a, C b, C c, C d) {
  M m(2, 2);
  m << a, b, c, d;
  return m;
}

inline M identity(int dim) { return M::Identity(dim, dim); }
inline M pauli_x() { return mat2(0, 1, 1, 0); }
inline M pauli_z() { return mat2(1, 0, 0, -1); }
inline M hadamard() { return mat2(1, 1, 1, -1) / std::sqrt(2.0); }

// [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]]
inline M u3(double t, double p, double l) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  return mat2(c, -std::exp(kI * l) * s, std::exp(kI * p) * s, std::exp(kI * (p + l)) * c);
}

inline M rz(double t) { return mat2(std::exp(-kI * t / 2.0), 0, 0, std::exp(kI * t / 2.0)); }

inline M rx(double t) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  return mat2(c, -kI * s, -kI * s, c);
}

inline M sx() { return mat2(C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5)); }

// Control on the low bit: |t c> with index c + 2t.
inline M cx_low_control() {
  M m = M::Zero(4, 4);
  m(0, 0) = m(2, 2) = 1;
  m(3, 1) = m(1, 3) = 1;
  return m;
}

// |Tr(U^dagger V)| / dim, by explicit summation.
inline double gate_fidelity(const M& u, const M& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("dims");
  C tr = 0;
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index k = 0; k < u.cols(); ++k) tr += std::conj(u(k, i)) * v(k, i);
  return std::abs(tr) / static_cast<double>(u.rows());
}

// Acts with a 1-qubit `g` on bit `q` of an n-qubit space by explicit index
// arithmetic.
inline M on_qubit(const M& g, int q, int n) {
  const int dim = 1 << n;
  M out = M::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int b = (col >> q) & 1;
    for (int r = 0; r < 2; ++r) out(((col & ~(1 << q)) | (r << q)), col) += g(r, b);
  }
  return out;
}

inline M cx_on(int control, int target, int n) {
  const int dim = 1 << n;
  M out = M::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int row = ((col >> control) & 1) ? col ^ (1 << target) : col;
    out(row, col) = 1;
  }
  return out;
}

inline M gate_matrix(const GateOp& op) {
  const auto& p = op.params;
  switch (op.kind) {
    case GateKind::X:
      return pauli_x();
    case GateKind::SX:
      return sx();
    case GateKind::H:
      return hadamard();
    case GateKind::Z:
      return pauli_z();
    case GateKind::RX:
      return rx(p.at(0));
    case GateKind::RZ:
      return rz(p.at(0));
    case GateKind::U3:
      return u3(p.at(0), p.at(1), p.at(2));
    default:
      throw std::invalid_argument("no single-qubit matrix");
  }
}

// Product of native ops over `qubits` (qubits[0] = low bit).
inline M ops_unitary(const std::vector<GateOp>& ops, const std::vector<int>& qubits) {
  const int n = static_cast<int>(qubits.size());
  auto pos = [&](int q) {
    for (int i = 0; i < n; ++i)
      if (qubits[i] == q) return i;
    throw std::invalid_argument("qubit outside the register");
  };
  M u = identity(1 << n);
  for (const auto& op : ops) {
    if (op.kind == GateKind::CX) {
      u = cx_on(pos(op.qubits[0]), pos(op.qubits[1]), n) * u;
    } else {
      u = on_qubit(gate_matrix(op), pos(op.qubits[0]), n) * u;
    }
  }
  return u;
}

// Makhlin local invariants (G1, G2) of a two-qubit unitary; equal exactly
// when the gates agree up to single-qubit operations on each side.
inline std::pair<C, C> makhlin(const M& u) {
  const double r = 1.0 / std::sqrt(2.0);
  M q(4, 4);
  q << C(r, 0), 0, 0, C(0, r),  //
      0, C(0, r), C(r, 0), 0,   //
      0, C(0, r), C(-r, 0), 0,  //
      C(r, 0), 0, 0, C(0, -r);
  const M m = q.adjoint() * u * q;
  const M mm = m.transpose() * m;
  const C det = u.determinant();
  const C tr = mm.trace();
  return {tr * tr / (16.0 * det), (tr * tr - (mm * mm).trace()) / (4.0 * det)};
}

// Rabi: Omega and Delta in angular units of the same scale.
inline double rabi_max_excitation(double omega, double delta) {
  return omega * omega / (omega * omega + delta * delta);
}

inline double rabi_p1(double omega, double delta, double t) {
  const double w = std::sqrt(omega * omega + delta * delta);
  const double s = std::sin(w * t / 2.0);
  return rabi_max_excitation(omega, delta) * s * s;
}

inline double binomial_sigma(double p, double shots) { return std::sqrt(p * (1.0 - p) / shots); }

// |within k sigma| plus a float slack for the deterministic endpoints.
inline bool within_sigma(double observed, double expected, double shots, double k = 4.0) {
  return std::abs(observed - expected) <= k * binomial_sigma(expected, shots) + 1e-9;
}

}  // namespace pulsegate::oracle
