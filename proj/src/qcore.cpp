// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qgame/qcore.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qgame/angles.hpp"
#include "qgame/errors.hpp"

namespace qgame::qcore {
namespace {

void check_qubit_count(int n) {
  if (n < kMinQubits || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) +
                         " outside [" + std::to_string(kMinQubits) + ", " +
                         std::to_string(kMaxQubits) + "]");
  }
}

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("state of " + std::to_string(n_qubits) +
                         " qubits needs " +
                         std::to_string(std::size_t{1} << n_qubits) +
                         " amplitudes, got " + std::to_string(amps_.size()));
  }
  for (const auto& a : amps_) {
    if (!finite(a)) throw ValidationError("non-finite amplitude");
  }
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
  check_qubit_count(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw IndexError("basis index " + std::to_string(index) +
                     " out of range for " + std::to_string(n_qubits) +
                     " qubits");
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

double StateVector::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

LocalOperator LocalOperator::identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

LocalOperator LocalOperator::i_sigma_x() {
  const Complex i{0.0, 1.0};
  return {{0.0, i, i, 0.0}};
}

LocalOperator LocalOperator::i_sigma_y() { return {{0.0, 1.0, -1.0, 0.0}}; }

LocalOperator LocalOperator::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
           std::conj(m[3])}};
}

Complex LocalOperator::determinant() const { return m[0] * m[3] - m[1] * m[2]; }

bool LocalOperator::is_unitary(double tol) const {
  for (const auto& z : m) {
    if (!finite(z)) return false;
  }
  const LocalOperator p = adjoint() * *this;
  return std::abs(p.m[0] - 1.0) <= tol && std::abs(p.m[1]) <= tol &&
         std::abs(p.m[2]) <= tol && std::abs(p.m[3] - 1.0) <= tol;
}

LocalOperator operator*(const LocalOperator& a, const LocalOperator& b) {
  return {{a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
           a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
           a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
           a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)}};
}

StateVector tensor_apply(const StateVector& state,
                         std::span<const LocalOperator> ops) {
  const int n = state.n_qubits();
  if (ops.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("expected " + std::to_string(n) +
                         " local operators, got " + std::to_string(ops.size()));
  }
  for (std::size_t q = 0; q < ops.size(); ++q) {
    if (!ops[q].is_unitary()) {
      throw ValidationError("operator for qubit " + std::to_string(q) +
                            " is not unitary");
    }
  }

  auto amps = std::vector<Complex>(state.amplitudes().begin(),
                                   state.amplitudes().end());
  const std::size_t dim = amps.size();
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    const LocalOperator& op = ops[q];
    for (std::size_t k = 0; k < dim; ++k) {
      if (k & stride) continue;
      const Complex a0 = amps[k];
      const Complex a1 = amps[k | stride];
      amps[k] = op(0, 0) * a0 + op(0, 1) * a1;
      amps[k | stride] = op(1, 0) * a0 + op(1, 1) * a1;
    }
  }
  return StateVector(n, std::move(amps));
}

StateVector entangling_gate_apply(const StateVector& state, double gamma,
                                  bool dagger) {
  if (!(gamma >= 0.0 && gamma <= kHalfPi)) {
    throw DomainError("gamma " + std::to_string(gamma) +
                      " outside [0, pi/2]");
  }
  const double c = std::cos(gamma / 2);
  const Complex is{0.0, (dagger ? -1.0 : 1.0) * std::sin(gamma / 2)};
  const auto in = state.amplitudes();
  const std::size_t mask = in.size() - 1;  // X^(x)n maps index k to ~k
  std::vector<Complex> out(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    out[k] = c * in[k] + is * in[k ^ mask];
  }
  return StateVector(state.n_qubits(), std::move(out));
}

ProbabilityDistribution probabilities(const StateVector& state) {
  ProbabilityDistribution p(state.dim());
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = std::norm(state[k]);
    total += p[k];
  }
  if (std::abs(total - 1.0) > kBoundaryTol) {
    throw NormalizationError("state norm^2 " + std::to_string(total) +
                             " deviates from 1");
  }
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace qgame::qcore
