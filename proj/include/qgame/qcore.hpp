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


#ifndef QGAME_QCORE_HPP_
#define QGAME_QCORE_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qgame::qcore {

using Complex = std::complex<double>;

inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 12;

// Tolerance applied to results produced inside the library.
inline constexpr double kInternalTol = 1e-12;
// Tolerance applied to states handed in by callers.
inline constexpr double kBoundaryTol = 1e-9;

// Joint state of n qubits. Amplitude index k encodes an outcome bitstring
// with qubit 0 as the most significant bit; bit value 0 is |0> (Cooperate)
// and 1 is |1> (Defect).
class StateVector {
 public:
  // |0...0> on n qubits.
  explicit StateVector(int n_qubits);
  // Takes ownership of `amplitudes`; size must be 2^n and every entry finite.
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t k) const { return amps_[k]; }

  double squared_norm() const;

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

// Row-major 2x2 matrix acting on one qubit.
struct LocalOperator {
  std::array<Complex, 4> m;

  const Complex& operator()(int row, int col) const { return m[2 * row + col]; }

  static LocalOperator identity();
  // i * sigma_x and i * sigma_y.
  static LocalOperator i_sigma_x();
  static LocalOperator i_sigma_y();

  LocalOperator adjoint() const;
  Complex determinant() const;
  bool is_unitary(double tol = kInternalTol) const;
};

LocalOperator operator*(const LocalOperator& a, const LocalOperator& b);

using ProbabilityDistribution = std::vector<double>;

// (ops[0] x ... x ops[n-1]) |state>. Throws DimensionError when the operator
// count differs from the qubit count and ValidationError for a non-unitary op.
StateVector tensor_apply(const StateVector& state,
                         std::span<const LocalOperator> ops);

// Applies exp(+-i gamma/2 X^(x)n) as cos(gamma/2) I +- i sin(gamma/2) X^(x)n,
// using (X^(x)n)^2 = I. The minus sign is the adjoint. gamma in [0, pi/2].
StateVector entangling_gate_apply(const StateVector& state, double gamma,
                                  bool dagger);

// Born-rule probabilities, renormalized to sum to one. Throws
// NormalizationError when the input norm is off by more than kBoundaryTol.
ProbabilityDistribution probabilities(const StateVector& state);

// Bit of `player` in outcome index `k` for an n-player register.
constexpr int outcome_bit(std::size_t k, int player, int n_players) {
  return static_cast<int>((k >> (n_players - 1 - player)) & 1u);
}

}  // namespace qgame::qcore

#endif  // QGAME_QCORE_HPP_
