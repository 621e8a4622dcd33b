// Copyright 2026 The groverlab Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qsim/channel.hpp"
#include "qsim/linalg.hpp"
#include "qsim/random.hpp"

namespace qsim {

enum class Backend { vector, density };

constexpr int kMaxVectorQubits = 14;
constexpr int kMaxDensityQubits = 10;

struct MeasurementRecord {
  std::vector<int> qubits;
  std::vector<int> bits; // bits[i] is the outcome of qubits[i]
  double probability = 1.0;
};

/// Quantum register over n qubits, stored either as a pure state vector of
/// length 2^n or as a row-major 2^n x 2^n density matrix. Qubit 0 is the
/// least significant bit of a basis index.
class QuantumState {
public:
  QuantumState(int n_qubits, Backend backend);

  static QuantumState from_amplitudes(std::vector<Complex> amplitudes);

  int n_qubits() const { return n_; }
  Backend backend() const { return backend_; }
  std::size_t dim() const { return std::size_t(1) << n_; }

  Complex amplitude(std::size_t index) const;
  Complex density_element(std::size_t row, std::size_t col) const;
  std::vector<Complex> statevector() const;
  Matrix density_matrix() const;

  /// Born-rule distribution over all 2^n basis states.
  std::vector<double> probabilities() const;

  double vector_norm() const;
  double trace() const;

  /// Applies a k-qubit unitary on the given (distinct) qubits. Validates
  /// unitarity within 1e-10 and index sanity.
  void apply_unitary(const Matrix &u, const std::vector<int> &qubits);

  // Unchecked fast paths used by the circuit executor.
  void apply_gate1(const Matrix &u, int qubit);
  void apply_phase1(Complex phase, int qubit); // diag(1, phase)
  void apply_cx(int control, int target);
  void apply_mct(const std::vector<int> &controls, int target);

  /// Applies a Kraus channel: exactly on the density backend, by sampling one
  /// branch with probability ||E_i psi||^2 on the vector backend (cumulative
  /// inversion, ties to the lowest branch index).
  void apply_kraus(const KrausChannel &channel, const std::vector<int> &qubits,
                   RandomStream *rng = nullptr);

  /// Samples an outcome by the Born rule and collapses the state.
  MeasurementRecord measure(const std::vector<int> &qubits, RandomStream &rng);

  /// Resets the listed qubits to |0>. Density backend: exact
  /// trace-out-and-replace; vector backend: measure-and-flip.
  void reset(const std::vector<int> &qubits, RandomStream &rng);

  /// Density backend only: projective dephasing in the computational basis of
  /// the listed qubits (measurement with the outcome left unread).
  void decohere(const std::vector<int> &qubits);

private:
  void check_qubits(const std::vector<int> &qubits, bool distinct = true) const;
  void apply_matrix_bits(const Matrix &u, const std::vector<int> &bits);
  void apply_channel_density(const KrausChannel &channel,
                             const std::vector<int> &qubits);
  void apply_channel_density_generic(const KrausChannel &channel,
                                     const std::vector<int> &qubits);
  void apply_channel_vector(const KrausChannel &channel,
                            const std::vector<int> &qubits, RandomStream &rng);

  int n_ = 0;
  Backend backend_ = Backend::vector;
  std::vector<Complex> data_;
};

/// |0...0> on the requested backend. Throws CapacityError outside
/// 1 <= n <= 14 (vector) or 1 <= n <= 10 (density).
QuantumState init_state(int n_qubits, Backend backend);

} // namespace qsim
