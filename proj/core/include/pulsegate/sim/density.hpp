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

#include <Eigen/Dense>
#include <vector>

#include "pulsegate/core/circuit.hpp"

namespace pulsegate::sim {

using Matrix = pulsegate::Matrix;
using Mat2 = Eigen::Matrix2cd;

// Qubit q is bit q of a basis index (little-endian).
struct DensityState {
  int n = 0;
  Matrix rho;

  static DensityState ground(int n);
  static DensityState from_pure(const Eigen::VectorXcd& psi);

  double trace() const;
  double purity() const;
  // P(qubit q reads 1).
  double prob_one(int q) const;
};

// In-place operator application on a 2^n x 2^n matrix. "left" acts on the
// row index, "right_adjoint" multiplies by the adjoint on the column index.
void left_1q(Matrix& m, int q, const Mat2& u);
void right_1q_adjoint(Matrix& m, int q, const Mat2& u);
// Block-controlled operator |0><0|_c (x) b0 + |1><1|_c (x) b1 on target t.
void left_controlled(Matrix& m, int c, int t, const Mat2& b0, const Mat2& b1);
void right_controlled_adjoint(Matrix& m, int c, int t, const Mat2& b0, const Mat2& b1);

void apply_unitary_1q(DensityState& s, int q, const Mat2& u);
void apply_controlled(DensityState& s, int c, int t, const Mat2& b0, const Mat2& b1);

// gamma = 1 - exp(-t/T1).
void amplitude_damping(Matrix& rho, int q, double gamma);
// Off-diagonal elements in qubit q scaled by (1 - lambda).
void phase_damping(Matrix& rho, int q, double lambda);
// Removes all coherence in qubit q (unrecorded readout).
void dephase(Matrix& rho, int q);
// Zeroes rows and columns where bit q != outcome. Unnormalized.
void project(Matrix& rho, int q, int outcome);

// Reduced state on `keep`, in the order given (keep[0] becomes bit 0).
DensityState partial_trace(const DensityState& s, const std::vector<int>& keep);
// Tr(rho_sub^2).
double purity(const DensityState& s, const std::vector<int>& subset);

// |Tr(U^dagger V)| / dim.
double fidelity(const Matrix& u, const Matrix& v);

// a (x) b with b on the low bits.
Matrix kron(const Matrix& a, const Matrix& b);

Mat2 rz(double theta);

}  // namespace pulsegate::sim
