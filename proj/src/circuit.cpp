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

#include "qsim/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/error.hpp"

namespace qsim {

std::string to_string(Kind kind) {
  switch (kind) {
  case Kind::U1:
    return "u1";
  case Kind::U2:
    return "u2";
  case Kind::U3:
    return "u3";
  case Kind::CX:
    return "cx";
  case Kind::MCT:
    return "mct";
  case Kind::H:
    return "h";
  case Kind::X:
    return "x";
  case Kind::Z:
    return "z";
  case Kind::Measure:
    return "measure";
  case Kind::Reset:
    return "reset";
  }
  return "?";
}

double duration_ns_for(Kind kind) {
  switch (kind) {
  case Kind::U1:
  case Kind::Z:
    return 0.0;
  case Kind::U2:
  case Kind::H:
    return 50.0;
  case Kind::U3:
  case Kind::X:
    return 100.0;
  case Kind::CX:
    return 300.0;
  case Kind::Measure:
  case Kind::Reset:
    return 1000.0;
  case Kind::MCT:
    return 0.0;
  }
  return 0.0;
}

int param_count_for(Kind kind) {
  switch (kind) {
  case Kind::U1:
    return 1;
  case Kind::U2:
    return 2;
  case Kind::U3:
    return 3;
  default:
    return 0;
  }
}

Circuit::Circuit(int n_qubits, int classical_bits)
    : n_qubits_(n_qubits), classical_bits_(classical_bits) {
  if (n_qubits < 1)
    throw ValidationError("circuit needs at least one qubit");
  if (classical_bits < 0)
    throw ValidationError("negative classical register size");
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= n_qubits_)
    throw ValidationError("qubit index " + std::to_string(q) +
                          " out of range for " + std::to_string(n_qubits_) +
                          " qubits");
}

void Circuit::add(Instruction instr) {
  for (int q : instr.qubits)
    check_qubit(q);
  if (int(instr.params.size()) != param_count_for(instr.kind))
    throw ValidationError("wrong parameter count for " + to_string(instr.kind));
  if (instr.kind == Kind::Measure) {
    if (instr.cbit < 0 || instr.cbit >= classical_bits_)
      throw ValidationError("classical bit out of range");
    for (const Instruction &other : instructions_)
      if (other.kind == Kind::Measure && other.cbit == instr.cbit)
        throw ValidationError("classical bit " + std::to_string(instr.cbit) +
                              " measured twice");
  }
  if (instr.kind == Kind::MCT) {
    if (instr.qubits.size() < 2)
      throw ValidationError("mct needs at least one control");
    std::vector<int> s = instr.qubits;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("repeated qubit in mct");
  }
  instr.duration_ns = duration_ns_for(instr.kind);
  instructions_.push_back(std::move(instr));
}

Circuit &Circuit::u1(double lambda, int q) {
  add({Kind::U1, {q}, {lambda}});
  return *this;
}
Circuit &Circuit::u2(double phi, double lambda, int q) {
  add({Kind::U2, {q}, {phi, lambda}});
  return *this;
}
Circuit &Circuit::u3(double theta, double phi, double lambda, int q) {
  add({Kind::U3, {q}, {theta, phi, lambda}});
  return *this;
}
Circuit &Circuit::h(int q) {
  add({Kind::H, {q}, {}});
  return *this;
}
Circuit &Circuit::x(int q) {
  add({Kind::X, {q}, {}});
  return *this;
}
Circuit &Circuit::z(int q) {
  add({Kind::Z, {q}, {}});
  return *this;
}
Circuit &Circuit::cx(int control, int target) {
  if (control == target)
    throw ValidationError("cx control equals target");
  add({Kind::CX, {control, target}, {}});
  return *this;
}
Circuit &Circuit::mct(const std::vector<int> &controls, int target) {
  std::vector<int> qs = controls;
  qs.push_back(target);
  add({Kind::MCT, qs, {}});
  return *this;
}
Circuit &Circuit::measure(int q, int cbit) {
  Instruction i{Kind::Measure, {q}, {}};
  i.cbit = cbit;
  add(std::move(i));
  return *this;
}
Circuit &Circuit::reset(int q) {
  add({Kind::Reset, {q}, {}});
  return *this;
}

void Circuit::append(const Circuit &other, const std::vector<int> &wires) {
  if (int(wires.size()) != other.n_qubits())
    throw ValidationError("wire map size does not match appended circuit");
  for (const Instruction &instr : other.instructions()) {
    Instruction mapped = instr;
    for (int &q : mapped.qubits)
      q = wires.at(q);
    // re-validated (and duration refreshed) by add()
    add(std::move(mapped));
  }
}

void Circuit::append(const Circuit &other) {
  std::vector<int> identity(other.n_qubits());
  for (int i = 0; i < other.n_qubits(); ++i)
    identity[i] = i;
  append(other, identity);
}

Matrix gate_matrix(Kind kind, const std::vector<double> &params) {
  if (int(params.size()) != param_count_for(kind))
    throw ValidationError("wrong parameter count for " + to_string(kind));
  const Complex i(0.0, 1.0);
  switch (kind) {
  case Kind::U1: {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::exp(i * params[0]);
    return m;
  }
  case Kind::U2:
    return gate_matrix(Kind::U3, {M_PI / 2.0, params[0], params[1]});
  case Kind::U3: {
    const double theta = params[0], phi = params[1], lambda = params[2];
    Matrix m(2, 2);
    m(0, 0) = std::cos(theta / 2.0);
    m(0, 1) = -std::exp(i * lambda) * std::sin(theta / 2.0);
    m(1, 0) = std::exp(i * phi) * std::sin(theta / 2.0);
    m(1, 1) = std::exp(i * (phi + lambda)) * std::cos(theta / 2.0);
    return m;
  }
  case Kind::H: {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
  }
  case Kind::X: {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }
  case Kind::Z: {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }
  case Kind::CX: {
    // control = qubit 0 (low bit), target = qubit 1
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(2, 2) = 1;
    m(1, 3) = 1;
    m(3, 1) = 1;
    return m;
  }
  case Kind::MCT:
  case Kind::Measure:
  case Kind::Reset:
    break;
  }
  throw ValidationError("no fixed matrix for " + to_string(kind));
}

Matrix mct_matrix(int n_controls) {
  if (n_controls < 1)
    throw ValidationError("mct needs at least one control");
  const Eigen::Index d = Eigen::Index(1) << (n_controls + 1);
  Matrix m = Matrix::Identity(d, d);
  const Eigen::Index ones = (Eigen::Index(1) << n_controls) - 1;
  const Eigen::Index tmask = Eigen::Index(1) << n_controls;
  m(ones, ones) = 0;
  m(ones | tmask, ones | tmask) = 0;
  m(ones, ones | tmask) = 1;
  m(ones | tmask, ones) = 1;
  return m;
}

CircuitMetrics circuit_metrics(const Circuit &circuit) {
  CircuitMetrics m;
  std::vector<long long> frontier(circuit.n_qubits(), 0);
  for (const Instruction &instr : circuit.instructions()) {
    switch (instr.kind) {
    case Kind::U1:
    case Kind::U2:
    case Kind::U3:
      ++m.count_1q;
      break;
    case Kind::CX:
      ++m.count_2q;
      break;
    case Kind::Measure:
      ++m.count_measure;
      break;
    case Kind::Reset:
      ++m.count_reset;
      break;
    default:
      throw ValidationError("metrics need a basis-form circuit, found " +
                            to_string(instr.kind));
    }
    long long slot = 0;
    for (int q : instr.qubits)
      slot = std::max(slot, frontier[q]);
    ++slot;
    for (int q : instr.qubits)
      frontier[q] = slot;
    m.depth = std::max(m.depth, slot);
  }
  m.total_gates = m.count_1q + m.count_2q;
  return m;
}

} // namespace qsim
