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

#include "pulsegate/sim/density.hpp"

#include <cmath>

#include "pulsegate/core/errors.hpp"

namespace pulsegate::sim {

using Eigen::Index;

DensityState DensityState::ground(int n) {
  DensityState s;
  s.n = n;
  const Index dim = Index{1} << n;
  s.rho = Matrix::Zero(dim, dim);
  s.rho(0, 0) = 1.0;
  return s;
}

DensityState DensityState::from_pure(const Eigen::VectorXcd& psi) {
  DensityState s;
  const Index dim = psi.size();
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  if ((Index{1} << n) != dim) throw InvalidArgument("state length is not a power of two");
  s.n = n;
  const Eigen::VectorXcd v = psi / psi.norm();
  s.rho = v * v.adjoint();
  return s;
}

double DensityState::trace() const { return rho.trace().real(); }

double DensityState::purity() const { return (rho * rho).trace().real(); }

double DensityState::prob_one(int q) const {
  double p = 0.0;
  const Index bit = Index{1} << q;
  for (Index i = 0; i < rho.rows(); ++i) {
    if (i & bit) p += rho(i, i).real();
  }
  return p;
}

void left_1q(Matrix& m, int q, const Mat2& u) {
  const Index bit = Index{1} << q;
  for (Index i = 0; i < m.rows(); ++i) {
    if (i & bit) continue;
    for (Index c = 0; c < m.cols(); ++c) {
      const cplx a = m(i, c);
      const cplx b = m(i | bit, c);
      m(i, c) = u(0, 0) * a + u(0, 1) * b;
      m(i | bit, c) = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

void right_1q_adjoint(Matrix& m, int q, const Mat2& u) {
  const Index bit = Index{1} << q;
  for (Index j = 0; j < m.cols(); ++j) {
    if (j & bit) continue;
    for (Index r = 0; r < m.rows(); ++r) {
      const cplx a = m(r, j);
      const cplx b = m(r, j | bit);
      m(r, j) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
      m(r, j | bit) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
    }
  }
}

void left_controlled(Matrix& m, int c, int t, const Mat2& b0, const Mat2& b1) {
  const Index cbit = Index{1} << c;
  const Index tbit = Index{1} << t;
  for (Index i = 0; i < m.rows(); ++i) {
    if (i & tbit) continue;
    const Mat2& u = (i & cbit) ? b1 : b0;
    for (Index col = 0; col < m.cols(); ++col) {
      const cplx a = m(i, col);
      const cplx b = m(i | tbit, col);
      m(i, col) = u(0, 0) * a + u(0, 1) * b;
      m(i | tbit, col) = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

void right_controlled_adjoint(Matrix& m, int c, int t, const Mat2& b0, const Mat2& b1) {
  const Index cbit = Index{1} << c;
  const Index tbit = Index{1} << t;
  for (Index j = 0; j < m.cols(); ++j) {
    if (j & tbit) continue;
    const Mat2& u = (j & cbit) ? b1 : b0;
    for (Index r = 0; r < m.rows(); ++r) {
      const cplx a = m(r, j);
      const cplx b = m(r, j | tbit);
      m(r, j) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
      m(r, j | tbit) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
    }
  }
}

void apply_unitary_1q(DensityState& s, int q, const Mat2& u) {
  left_1q(s.rho, q, u);
  right_1q_adjoint(s.rho, q, u);
}

void apply_controlled(DensityState& s, int c, int t, const Mat2& b0, const Mat2& b1) {
  left_controlled(s.rho, c, t, b0, b1);
  right_controlled_adjoint(s.rho, c, t, b0, b1);
}

void amplitude_damping(Matrix& rho, int q, double gamma) {
  if (gamma <= 0.0) return;
  Mat2 k0;
  k0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
  Mat2 k1;
  k1 << 0.0, std::sqrt(gamma), 0.0, 0.0;
  Matrix a = rho;
  left_1q(a, q, k0);
  right_1q_adjoint(a, q, k0);
  Matrix b = rho;
  left_1q(b, q, k1);
  right_1q_adjoint(b, q, k1);
  rho = a + b;
}

void phase_damping(Matrix& rho, int q, double lambda) {
  if (lambda <= 0.0) return;
  const Index bit = Index{1} << q;
  const double f = 1.0 - lambda;
  for (Index i = 0; i < rho.rows(); ++i) {
    for (Index j = 0; j < rho.cols(); ++j) {
      if ((i & bit) != (j & bit)) rho(i, j) *= f;
    }
  }
}

void dephase(Matrix& rho, int q) { phase_damping(rho, q, 1.0); }

void project(Matrix& rho, int q, int outcome) {
  const Index bit = Index{1} << q;
  for (Index i = 0; i < rho.rows(); ++i) {
    const bool keep_i = ((i & bit) != 0) == (outcome != 0);
    for (Index j = 0; j < rho.cols(); ++j) {
      const bool keep_j = ((j & bit) != 0) == (outcome != 0);
      if (!keep_i || !keep_j) rho(i, j) = 0.0;
    }
  }
}

DensityState partial_trace(const DensityState& s, const std::vector<int>& keep) {
  for (int q : keep) {
    if (q < 0 || q >= s.n) throw InvalidArgument("partial_trace qubit out of range");
  }
  const int k = static_cast<int>(keep.size());
  DensityState out;
  out.n = k;
  const Index sub = Index{1} << k;
  out.rho = Matrix::Zero(sub, sub);
  Index keep_mask = 0;
  for (int q : keep) keep_mask |= Index{1} << q;
  auto compress = [&](Index i) {
    Index r = 0;
    for (int p = 0; p < k; ++p) {
      if (i & (Index{1} << keep[static_cast<std::size_t>(p)])) r |= Index{1} << p;
    }
    return r;
  };
  const Index dim = s.rho.rows();
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      if ((i & ~keep_mask) != (j & ~keep_mask)) continue;
      out.rho(compress(i), compress(j)) += s.rho(i, j);
    }
  }
  return out;
}

double purity(const DensityState& s, const std::vector<int>& subset) {
  if (subset.empty()) throw InvalidArgument("purity needs a non-empty subset");
  return partial_trace(s, subset).purity();
}

double fidelity(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw InvalidArgument("fidelity: dimension mismatch");
  }
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat2 rz(double theta) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::polar(1.0, -theta / 2.0);
  m(1, 1) = std::polar(1.0, theta / 2.0);
  return m;
}

}  // namespace pulsegate::sim
