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

#include "qsim/transpile.hpp"

#include <cmath>
#include <optional>

#include "qsim/error.hpp"
#include "qsim/mct.hpp"
#include "qsim/state.hpp"

namespace qsim {

namespace {

constexpr double kSnapTol = 1e-12;

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a > M_PI)
    a -= 2.0 * M_PI;
  if (a <= -M_PI)
    a += 2.0 * M_PI;
  return a;
}

// Emits a fused 2x2 unitary as the cheapest of U1/U2/U3 (or nothing when it
// is the identity up to phase).
void emit_fused(Circuit &out, const Matrix &m, int qubit) {
  const double s10 = std::abs(m(1, 0));
  const double s00 = std::abs(m(0, 0));
  const double theta = 2.0 * std::atan2(s10, s00);
  if (theta < kSnapTol) { // diagonal
    const double lambda =
        wrap_angle(std::arg(m(1, 1)) - std::arg(m(0, 0)));
    if (std::abs(lambda) > kSnapTol)
      out.u1(lambda, qubit);
    return;
  }
  if (theta > M_PI - kSnapTol) { // anti-diagonal
    out.u3(M_PI, wrap_angle(std::arg(m(1, 0))),
           wrap_angle(std::arg(-m(0, 1))), qubit);
    return;
  }
  const double alpha = std::arg(m(0, 0));
  const double phi = wrap_angle(std::arg(m(1, 0)) - alpha);
  const double lambda = wrap_angle(std::arg(-m(0, 1)) - alpha);
  if (std::abs(theta - M_PI / 2.0) < kSnapTol)
    out.u2(phi, lambda, qubit);
  else
    out.u3(theta, phi, lambda, qubit);
}

struct Fuser {
  explicit Fuser(Circuit &out, int n) : out(out), pending(n) {}

  void push_1q(const Matrix &m, int qubit) {
    if (pending[qubit])
      pending[qubit] = m * (*pending[qubit]);
    else
      pending[qubit] = m;
  }

  void flush(int qubit) {
    if (!pending[qubit])
      return;
    emit_fused(out, *pending[qubit], qubit);
    pending[qubit].reset();
  }

  void flush_all() {
    for (int q = 0; q < int(pending.size()); ++q)
      flush(q);
  }

  Circuit &out;
  std::vector<std::optional<Matrix>> pending;
};

void lower_into(const Instruction &instr, Fuser &fuser) {
  switch (instr.kind) {
  case Kind::U1:
  case Kind::U2:
  case Kind::U3:
    fuser.push_1q(gate_matrix(instr.kind, instr.params), instr.qubits[0]);
    return;
  case Kind::H:
    fuser.push_1q(gate_matrix(Kind::H), instr.qubits[0]);
    return;
  case Kind::X:
    fuser.push_1q(gate_matrix(Kind::X), instr.qubits[0]);
    return;
  case Kind::Z:
    fuser.push_1q(gate_matrix(Kind::Z), instr.qubits[0]);
    return;
  case Kind::CX:
    fuser.flush(instr.qubits[0]);
    fuser.flush(instr.qubits[1]);
    fuser.out.cx(instr.qubits[0], instr.qubits[1]);
    return;
  case Kind::MCT: {
    const int m = int(instr.qubits.size()) - 1;
    std::vector<int> controls(instr.qubits.begin(), instr.qubits.end() - 1);
    const Circuit sub = decompose_mct_noancilla(m);
    std::vector<int> wires = controls;
    wires.push_back(instr.qubits.back());
    for (const Instruction &low : sub.instructions()) {
      Instruction mapped = low;
      for (int &q : mapped.qubits)
        q = wires.at(q);
      lower_into(mapped, fuser);
    }
    return;
  }
  case Kind::Measure: {
    fuser.flush(instr.qubits[0]);
    Instruction copy = instr;
    fuser.out.add(std::move(copy));
    return;
  }
  case Kind::Reset:
    fuser.flush(instr.qubits[0]);
    fuser.out.reset(instr.qubits[0]);
    return;
  }
}

} // namespace

bool is_basis_kind(Kind kind) {
  switch (kind) {
  case Kind::U1:
  case Kind::U2:
  case Kind::U3:
  case Kind::CX:
  case Kind::Measure:
  case Kind::Reset:
    return true;
  default:
    return false;
  }
}

Circuit transpile_to_basis(const Circuit &circuit) {
  Circuit out(circuit.n_qubits(), circuit.classical_bits());
  Fuser fuser(out, circuit.n_qubits());
  for (const Instruction &instr : circuit.instructions())
    lower_into(instr, fuser);
  fuser.flush_all();
  return out;
}

Matrix circuit_unitary(const Circuit &circuit) {
  if (circuit.n_qubits() > 6)
    throw CapacityError("circuit_unitary supports at most 6 qubits");
  for (const Instruction &instr : circuit.instructions())
    if (instr.kind == Kind::Measure || instr.kind == Kind::Reset)
      throw ValidationError("circuit_unitary needs a measurement-free circuit");

  const std::size_t d = std::size_t(1) << circuit.n_qubits();
  Matrix u(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<Complex> amp(d, Complex(0.0, 0.0));
    amp[col] = Complex(1.0, 0.0);
    QuantumState state = QuantumState::from_amplitudes(std::move(amp));
    for (const Instruction &instr : circuit.instructions()) {
      switch (instr.kind) {
      case Kind::U1:
        state.apply_phase1(std::exp(Complex(0.0, instr.params[0])),
                           instr.qubits[0]);
        break;
      case Kind::U2:
      case Kind::U3:
      case Kind::H:
      case Kind::X:
      case Kind::Z:
        state.apply_gate1(gate_matrix(instr.kind, instr.params),
                          instr.qubits[0]);
        break;
      case Kind::CX:
        state.apply_cx(instr.qubits[0], instr.qubits[1]);
        break;
      case Kind::MCT: {
        std::vector<int> controls(instr.qubits.begin(),
                                  instr.qubits.end() - 1);
        state.apply_mct(controls, instr.qubits.back());
        break;
      }
      default:
        break;
      }
    }
    for (std::size_t row = 0; row < d; ++row)
      u(row, col) = state.amplitude(row);
  }
  return u;
}

} // namespace qsim
