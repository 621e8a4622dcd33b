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

#include <string>
#include <vector>

#include "qsim/linalg.hpp"

namespace qsim {

enum class Kind { U1, U2, U3, CX, MCT, H, X, Z, Measure, Reset };

std::string to_string(Kind kind);

/// Wall-clock duration of one instruction. U1 is a virtual frame change and
/// takes no time; composite MCT carries no duration of its own.
double duration_ns_for(Kind kind);

/// Number of angle parameters a kind takes.
int param_count_for(Kind kind);

struct Instruction {
  Kind kind;
  std::vector<int> qubits; // CX: {control, target}; MCT: controls..., target
  std::vector<double> params;
  int cbit = -1; // Measure only
  double duration_ns = 0.0;
};

/// Ordered gate list over n qubits plus a classical register. Instances are
/// immutable once built and safe to share across workers.
class Circuit {
public:
  Circuit() = default;
  Circuit(int n_qubits, int classical_bits = 0);

  int n_qubits() const { return n_qubits_; }
  int classical_bits() const { return classical_bits_; }
  const std::vector<Instruction> &instructions() const { return instructions_; }
  std::size_t size() const { return instructions_.size(); }

  Circuit &u1(double lambda, int q);
  Circuit &u2(double phi, double lambda, int q);
  Circuit &u3(double theta, double phi, double lambda, int q);
  Circuit &h(int q);
  Circuit &x(int q);
  Circuit &z(int q);
  Circuit &cx(int control, int target);
  Circuit &mct(const std::vector<int> &controls, int target);
  Circuit &measure(int q, int cbit);
  Circuit &reset(int q);

  void add(Instruction instr);

  /// Appends `other`, mapping its wire i onto wires[i]. Classical bits are
  /// carried over unchanged.
  void append(const Circuit &other, const std::vector<int> &wires);
  void append(const Circuit &other);

private:
  void check_qubit(int q) const;

  int n_qubits_ = 0;
  int classical_bits_ = 0;
  std::vector<Instruction> instructions_;
};

/// Standard matrix of a fixed-arity gate kind. MCT is excluded (its dimension
/// depends on the control count; see mct_matrix).
Matrix gate_matrix(Kind kind, const std::vector<double> &params = {});

/// Permutation matrix of the n-controlled X over n_controls+1 qubits, target
/// = highest bit.
Matrix mct_matrix(int n_controls);

struct CircuitMetrics {
  long long total_gates = 0; // count_1q + count_2q
  long long depth = 0;
  long long count_1q = 0;
  long long count_2q = 0;
  long long count_measure = 0;
  long long count_reset = 0;
};

/// Gate counts and frontier-scheduled depth of a basis-form circuit
/// ({U1,U2,U3,CX,measure,reset} only; otherwise ValidationError). Measure and
/// reset occupy depth slots on their wires but are tallied separately.
CircuitMetrics circuit_metrics(const Circuit &circuit);

} // namespace qsim
