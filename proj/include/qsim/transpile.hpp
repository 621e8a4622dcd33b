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

#include "qsim/circuit.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Rewrites a circuit into the {U1, U2, U3, CX} basis (plus measure/reset).
/// MCT instructions are lowered through the gray-code decomposition, and runs
/// of adjacent single-qubit gates on one wire are fused into a single U1, U2
/// or U3 (identity products are dropped). The unitary part is preserved up to
/// global phase.
Circuit transpile_to_basis(const Circuit &circuit);

/// Dense unitary of a measurement-free circuit, product of the embedded gate
/// matrices in order. Capacity-limited to n_qubits <= 6.
Matrix circuit_unitary(const Circuit &circuit);

/// Applies the unitary instructions of a circuit to a state in order.
/// Measure/reset instructions are rejected.
void apply_unitary_circuit(const Circuit &circuit, QuantumState &state);

/// Whether the instruction kind is in the {U1,U2,U3,CX} + measure/reset set.
bool is_basis_kind(Kind kind);

} // namespace qsim
